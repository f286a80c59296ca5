// dev probe: DV families for hand-built right-triangle R/r encodings
use prf_core::dv::{discriminant_variety, ParametricSystem};
use prf_core::groebner::Budget;
use prf_core::parser::parse_poly;
use prf_core::var::VarSet;

fn run(name: &str, vars: Vec<&str>, bound: Vec<&str>, eqs: Vec<&str>, pos: Vec<&str>) {
    let vs = VarSet::new(vars);
    let sys = ParametricSystem::new(
        "m",
        bound.into_iter().map(String::from).collect(),
        eqs.iter().map(|e| parse_poly(e, &vs).unwrap()).collect(),
        pos.iter().map(|g| parse_poly(g, &vs).unwrap()).collect(),
    )
    .unwrap();
    let t0 = std::time::Instant::now();
    match discriminant_variety(&sys, &Budget::default()) {
        Ok(dv) => {
            println!("== {name} ({:.2?})", t0.elapsed());
            println!("  crit: {:?}", dv.critical.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("  in:   {:?}", dv.inequality_boundary.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("  inf:  {:?}", dv.non_proper.iter().map(|p| p.to_string()).collect::<Vec<_>>());
        }
        Err(e) => println!("== {name}: error {e} ({:.2?})", t0.elapsed()),
    }
}

fn main() {
    // variant D: R eliminated through the ratio into the squared Thales relation
    run(
        "squared R after elimination",
        vec!["a", "b", "r", "m"],
        vec!["a", "b", "r"],
        vec![
            "a^2 + b^2 - 1",
            "4*r^2*(a+b+1)^2 - (2*a^2*b^2 + 2*a^2 + 2*b^2 - a^4 - b^4 - 1)",
            "4*m^2*r^2 - 1",
        ],
        vec!["a+b-1", "a-b+1", "-a+b+1", "a+b+1", "r", "m"],
    );
    // variant C: sign-symmetric circumradius (squared Thales relation)
    run(
        "squared R",
        vec!["a", "b", "r", "R", "m"],
        vec!["a", "b", "r", "R"],
        vec![
            "a^2 + b^2 - 1",
            "4*R^2 - 1",
            "4*r^2*(a+b+1)^2 - (2*a^2*b^2 + 2*a^2 + 2*b^2 - a^4 - b^4 - 1)",
            "R - m*r",
        ],
        vec!["a+b-1", "a-b+1", "-a+b+1", "a+b+1", "r", "R", "m"],
    );
    main2();
}

fn main2() {
    // variant A: keep R (ratio equation intact), eliminate p, s, area
    run(
        "keep R",
        vec!["a", "b", "r", "R", "m"],
        vec!["a", "b", "r", "R"],
        vec![
            "a^2 + b^2 - 1",
            "4*r^2*(a+b+1)^2 - (2*a^2*b^2 + 2*a^2 + 2*b^2 - a^4 - b^4 - 1)",
            "a*b - 2*R*r*(a+b+1)",
            "R - m*r",
        ],
        vec!["a+b-1", "a-b+1", "-a+b+1", "a+b+1", "r", "R", "m"],
    );
    // variant B: keep area and R
    run(
        "keep area and R",
        vec!["a", "b", "area", "r", "R", "m"],
        vec!["a", "b", "area", "r", "R"],
        vec![
            "a^2 + b^2 - 1",
            "16*area^2 - (2*a^2*b^2 + 2*a^2 + 2*b^2 - a^4 - b^4 - 1)",
            "2*area - r*(a+b+1)",
            "a*b - 4*R*area",
            "R - m*r",
        ],
        vec!["a+b-1", "a-b+1", "-a+b+1", "a+b+1", "area", "r", "R", "m"],
    );
}
