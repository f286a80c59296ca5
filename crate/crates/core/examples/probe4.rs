// dev probe: single SAT verdict on the reduced circumradius system
use prf_core::dv::ParametricSystem;
use prf_core::groebner::{buchberger, Budget, Ideal};
use prf_core::monomial::MonomialOrder;
use prf_core::parser::parse_poly;
use prf_core::rat::rat;
use prf_core::var::VarSet;
use prf_core::zdsat::{sat_at_rational, ZdConfig};

fn main() {
    let vs = VarSet::new(vec!["a", "b", "r", "m"]);
    let eqs = vec![
        "a^4-2*a^2*b^2+b^4+4*a^2*r^2+8*a*b*r^2+4*b^2*r^2+8*a*r^2+8*b*r^2-2*a^2-2*b^2+4*r^2+1",
        "4*r^2*m^2-1",
        "a^2+b^2-1",
    ];
    let pos = vec!["a+b-1", "a-b+1", "-a+b+1", "a+b+1", "r", "m"];
    let sys = ParametricSystem::new(
        "m",
        vec!["a".into(), "b".into(), "r".into()],
        eqs.iter().map(|e| parse_poly(e, &vs).unwrap()).collect(),
        pos.iter().map(|g| parse_poly(g, &vs).unwrap()).collect(),
    )
    .unwrap();

    // time the raw lex basis of the specialization first
    let m0 = rat(1, 5);
    let svs = VarSet::new(vec!["a", "b", "r"]);
    let mi = vs.index_of("m").unwrap();
    let specialized: Vec<_> = sys
        .equations
        .iter()
        .map(|e| e.substitute_rational(mi, &m0).embed(&svs))
        .collect();
    let t = std::time::Instant::now();
    let gb = buchberger(&Ideal::new(specialized, svs), &MonomialOrder::Lex, &Budget::default());
    match &gb {
        Ok(gb) => {
            println!("lex basis: {} elements in {:.2?}", gb.basis.len(), t.elapsed());
            for g in &gb.basis {
                println!("  lm-degree {:?}", g.total_degree());
            }
        }
        Err(e) => println!("lex basis error: {e} in {:.2?}", t.elapsed()),
    }

    let t = std::time::Instant::now();
    match sat_at_rational(&sys, &m0, &ZdConfig::default()) {
        Ok(v) => println!("verdict {:?} ({}) in {:.2?}", v.status, v.real_solution_count, t.elapsed()),
        Err(e) => println!("verdict error {e} in {:.2?}", t.elapsed()),
    }
}
