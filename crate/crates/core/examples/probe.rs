// dev probe: run the builtin problems end to end with timing
use prf_core::explore::{solve, SolveConfig};
use prf_core::geometry::{builtin, generate};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "rt-circum-inradius".into());
    let problem = builtin(&name).unwrap();
    let gen = generate(&problem).unwrap();
    println!("bound vars: {:?}", gen.system.bound_vars);
    for e in &gen.system.equations {
        println!("eq: {e}");
    }
    for g in &gen.system.positives {
        println!("pos: {g}");
    }
    let t0 = std::time::Instant::now();
    match solve(&gen.system, &SolveConfig::default()) {
        Ok(report) => {
            println!("critical: {:?}", report.dv.critical.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("boundary: {:?}", report.dv.inequality_boundary.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("non-proper: {:?}", report.dv.non_proper.iter().map(|p| p.to_string()).collect::<Vec<_>>());
            println!("cells: {}", report.decomposition.cells.len());
            for (s, v) in report.samples.iter().zip(&report.verdicts) {
                println!("  {} @ {} -> {:?} ({})", s.cell.describe(), s.at, v.status, v.real_solution_count);
            }
            println!("solution: {}", report.solution.render());
        }
        Err(e) => println!("error: {e}"),
    }
    println!("elapsed: {:.2?}", t0.elapsed());
}
