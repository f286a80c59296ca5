// dev probe: step-by-step timing of the exploration pipeline
use prf_core::dv::discriminant_variety;
use prf_core::explore::{decompose, sample_plan};
use prf_core::geometry::{builtin, generate};
use prf_core::groebner::Budget;
use prf_core::zdsat::{sat_at_point, ZdConfig};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "rt-circum-inradius".into());
    let problem = builtin(&name).unwrap();
    let gen = generate(&problem).unwrap();
    println!("bound: {:?}", gen.system.bound_vars);
    for e in &gen.system.equations {
        println!("eq:  {e}");
    }
    for g in &gen.system.positives {
        println!("pos: {g}");
    }
    let t = std::time::Instant::now();
    let dv = discriminant_variety(&gen.system, &Budget::default()).unwrap();
    println!("dv in {:.2?}", t.elapsed());
    println!("  crit: {:?}", dv.critical.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("  in:   {:?}", dv.inequality_boundary.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    println!("  inf:  {:?}", dv.non_proper.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    let dec = decompose(&dv, &gen.system).unwrap();
    println!("cells: {}", dec.cells.len());
    let plan = sample_plan(&dec);
    for s in &plan {
        let t = std::time::Instant::now();
        let v = sat_at_point(&gen.system, &s.at, &ZdConfig::default());
        match v {
            Ok(v) => println!(
                "  {} @ {} -> {:?} ({}) in {:.2?}",
                s.cell.describe(),
                s.at,
                v.status,
                v.real_solution_count,
                t.elapsed()
            ),
            Err(e) => println!("  {} @ {} -> error {e} in {:.2?}", s.cell.describe(), s.at, t.elapsed()),
        }
    }
}
