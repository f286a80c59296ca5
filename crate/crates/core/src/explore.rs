//! The exploration orchestrator: discriminant variety, one-dimensional cell
//! decomposition of the parameter line, sample plan, one SAT verdict per
//! sample, and a merged quantifier-free answer.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dv::{discriminant_variety, DiscriminantVariety, ParametricSystem};
use crate::error::Result;
use crate::groebner::Budget;
use crate::rat::{int, rat_to_f64, render_rat, Rat};
use crate::realalg::{
    isolate_roots, merge_sorted_roots, rational_between, sign_at, RealAlgebraicNumber,
};
use crate::unipoly::UniPoly;
use crate::zdsat::{sat_at_point, SatVerdict, ZdConfig};

/// One cell of the decomposition: a boundary point or an open interval
/// between consecutive boundaries (`None` endpoint = unbounded side).
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Point(RealAlgebraicNumber),
    Open { lo: Option<RealAlgebraicNumber>, hi: Option<RealAlgebraicNumber> },
}

impl Cell {
    pub fn describe(&self) -> String {
        match self {
            Cell::Point(p) => format!("{{{p}}}"),
            Cell::Open { lo, hi } => {
                let l = lo.as_ref().map_or("-inf".to_string(), |v| v.to_string());
                let h = hi.as_ref().map_or("inf".to_string(), |v| v.to_string());
                format!("({l}, {h})")
            }
        }
    }
}

/// Ordered boundary roots and the cells that survive parameter-only
/// sign-condition pruning.
#[derive(Debug, Clone)]
pub struct CellDecomposition {
    pub boundary: Vec<RealAlgebraicNumber>,
    pub cells: Vec<Cell>,
    /// parameter-only strict conditions used for pruning (the hypotheses)
    pub hypotheses: Vec<UniPoly>,
}

/// Decompose the parameter line along the discriminant variety roots, then
/// prune cells on which some parameter-only condition fails. Roots of the
/// parameter-only conditions are added to the boundary set so every pruning
/// test is decided by a sign that is constant on the cell.
pub fn decompose(dv: &DiscriminantVariety, sys: &ParametricSystem) -> Result<CellDecomposition> {
    let hypotheses = sys.parameter_only_positives();
    let mut boundary: Vec<RealAlgebraicNumber> = if dv.combined.is_constant() {
        Vec::new()
    } else {
        isolate_roots(&dv.combined)?
    };
    for h in &hypotheses {
        if !h.is_constant() {
            boundary = merge_sorted_roots(boundary, isolate_roots(h)?);
        }
    }

    let mut cells: Vec<Cell> = Vec::new();
    if boundary.is_empty() {
        cells.push(Cell::Open { lo: None, hi: None });
    } else {
        cells.push(Cell::Open { lo: None, hi: Some(boundary[0].clone()) });
        for i in 0..boundary.len() {
            cells.push(Cell::Point(boundary[i].clone()));
            let hi = boundary.get(i + 1).cloned();
            cells.push(Cell::Open { lo: Some(boundary[i].clone()), hi });
        }
    }

    // pruning: every hypothesis sign is constant per cell by construction
    let kept: Vec<Cell> = cells
        .into_iter()
        .filter(|cell| {
            hypotheses.iter().all(|h| match cell {
                Cell::Point(p) => sign_at(h, p).is_positive(),
                Cell::Open { lo, hi } => {
                    let probe = open_cell_sample(lo.as_ref(), hi.as_ref());
                    h.sign_at(&probe) > 0
                }
            })
        })
        .collect();
    Ok(CellDecomposition { boundary, cells: kept, hypotheses })
}

/// Midpoint-style rational strictly inside an open cell; unbounded cells
/// sample one unit beyond the boundary, and the whole line samples 0.
fn open_cell_sample(lo: Option<&RealAlgebraicNumber>, hi: Option<&RealAlgebraicNumber>) -> Rat {
    match (lo, hi) {
        (Some(a), Some(b)) => rational_between(a, b),
        (Some(a), None) => a.upper_rational() + int(1),
        (None, Some(b)) => b.lower_rational() - int(1),
        (None, None) => Rat::from_integer(0.into()),
    }
}

/// A cell together with its chosen sample point.
#[derive(Debug, Clone)]
pub struct SamplePoint {
    pub cell: Cell,
    pub at: RealAlgebraicNumber,
}

/// Boundary cells sample at themselves; open cells at a verified interior
/// rational.
pub fn sample_plan(dec: &CellDecomposition) -> Vec<SamplePoint> {
    dec.cells
        .iter()
        .map(|cell| {
            let at = match cell {
                Cell::Point(p) => p.clone(),
                Cell::Open { lo, hi } => {
                    RealAlgebraicNumber::from_rat(open_cell_sample(lo.as_ref(), hi.as_ref()))
                }
            };
            SamplePoint { cell: cell.clone(), at }
        })
        .collect()
}

/// One maximal piece of the solution set.
#[derive(Debug, Clone, PartialEq)]
pub enum Piece {
    Point(RealAlgebraicNumber),
    Interval {
        lo: Option<RealAlgebraicNumber>,
        hi: Option<RealAlgebraicNumber>,
        lo_closed: bool,
        hi_closed: bool,
    },
}

/// Ordered, disjoint, maximally merged pieces of parameter values for which
/// the system has a real solution.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    pub parameter: String,
    pub pieces: Vec<Piece>,
}

impl SolutionSet {
    pub fn contains(&self, q: &Rat) -> bool {
        let v = RealAlgebraicNumber::from_rat(q.clone());
        self.pieces.iter().any(|piece| match piece {
            Piece::Point(p) => *p == v,
            Piece::Interval { lo, hi, lo_closed, hi_closed } => {
                let above = match lo {
                    None => true,
                    Some(l) => {
                        if *lo_closed {
                            *l <= v
                        } else {
                            *l < v
                        }
                    }
                };
                let below = match hi {
                    None => true,
                    Some(h) => {
                        if *hi_closed {
                            v <= *h
                        } else {
                            v < *h
                        }
                    }
                };
                above && below
            }
        })
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Quantifier-free rendering, e.g. `1 <= m < 2` or `m >= 1+sqrt(2)`.
    pub fn render(&self) -> String {
        if self.pieces.is_empty() {
            return "false".to_string();
        }
        let m = &self.parameter;
        let parts: Vec<String> = self
            .pieces
            .iter()
            .map(|piece| match piece {
                Piece::Point(p) => format!("{m} = {p}"),
                Piece::Interval { lo: None, hi: None, .. } => "true".to_string(),
                Piece::Interval { lo: Some(l), hi: None, lo_closed, .. } => {
                    format!("{m} {} {l}", if *lo_closed { ">=" } else { ">" })
                }
                Piece::Interval { lo: None, hi: Some(h), hi_closed, .. } => {
                    format!("{m} {} {h}", if *hi_closed { "<=" } else { "<" })
                }
                Piece::Interval { lo: Some(l), hi: Some(h), lo_closed, hi_closed } => format!(
                    "{l} {} {m} {} {h}",
                    if *lo_closed { "<=" } else { "<" },
                    if *hi_closed { "<=" } else { "<" }
                ),
            })
            .collect();
        parts.join(" or ")
    }
}

/// Full audit trail of one exploration run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solution: SolutionSet,
    pub dv: DiscriminantVariety,
    pub decomposition: CellDecomposition,
    pub samples: Vec<SamplePoint>,
    pub verdicts: Vec<SatVerdict>,
}

#[derive(Debug, Clone, Default)]
pub struct SolveConfig {
    pub budget: Budget,
    pub seed: u64,
}

/// End-to-end: discriminant variety, decomposition, plan, one verdict per
/// sample (in parallel), and the merged quantifier-free answer.
pub fn solve(sys: &ParametricSystem, cfg: &SolveConfig) -> Result<SolveReport> {
    sys.require_square()?;
    let dv = discriminant_variety(sys, &cfg.budget)?;
    let decomposition = decompose(&dv, sys)?;
    let samples = sample_plan(&decomposition);
    let verdicts: Vec<Result<SatVerdict>> = samples
        .par_iter()
        .enumerate()
        .map(|(i, s)| {
            let zcfg = ZdConfig {
                budget: cfg.budget.clone(),
                seed: cfg.seed.wrapping_add(i as u64),
            };
            sat_at_point(sys, &s.at, &zcfg)
        })
        .collect();
    let mut flat = Vec::with_capacity(verdicts.len());
    for v in verdicts {
        flat.push(v?);
    }
    let solution = merge_cells(&sys.parameter, &samples, &flat);
    Ok(SolveReport { solution, dv, decomposition, samples, verdicts: flat })
}

/// Fold the per-cell truth values into maximal pieces. Adjacent true cells
/// merge exactly when they share a boundary value that is itself a kept cell
/// (a closed point fuses with neighbouring open intervals).
fn merge_cells(parameter: &str, samples: &[SamplePoint], verdicts: &[SatVerdict]) -> SolutionSet {
    #[derive(Clone)]
    struct Run {
        lo: Option<RealAlgebraicNumber>,
        hi: Option<RealAlgebraicNumber>,
        lo_closed: bool,
        hi_closed: bool,
        point_only: Option<RealAlgebraicNumber>,
    }
    let mut pieces: Vec<Piece> = Vec::new();
    let mut run: Option<Run> = None;

    let mut flush = |run: &mut Option<Run>| {
        if let Some(r) = run.take() {
            if let Some(p) = r.point_only {
                pieces.push(Piece::Point(p));
            } else {
                pieces.push(Piece::Interval {
                    lo: r.lo,
                    hi: r.hi,
                    lo_closed: r.lo_closed,
                    hi_closed: r.hi_closed,
                });
            }
        }
    };

    for (sample, verdict) in samples.iter().zip(verdicts) {
        if !verdict.is_sat() {
            flush(&mut run);
            continue;
        }
        match (&sample.cell, run.as_mut()) {
            (Cell::Point(p), None) => {
                run = Some(Run {
                    lo: Some(p.clone()),
                    hi: Some(p.clone()),
                    lo_closed: true,
                    hi_closed: true,
                    point_only: Some(p.clone()),
                });
            }
            (Cell::Point(p), Some(r)) => {
                // adjacent iff the previous run's open end reaches p
                if r.hi.as_ref() == Some(p) && !r.hi_closed {
                    r.hi_closed = true;
                    r.point_only = None;
                } else {
                    flush(&mut run);
                    run = Some(Run {
                        lo: Some(p.clone()),
                        hi: Some(p.clone()),
                        lo_closed: true,
                        hi_closed: true,
                        point_only: Some(p.clone()),
                    });
                }
            }
            (Cell::Open { lo, hi }, None) => {
                run = Some(Run {
                    lo: lo.clone(),
                    hi: hi.clone(),
                    lo_closed: false,
                    hi_closed: false,
                    point_only: None,
                });
            }
            (Cell::Open { lo, hi }, Some(r)) => {
                let adjacent = match (lo, &r.hi) {
                    (Some(l), Some(rh)) => l == rh && r.hi_closed,
                    _ => false,
                };
                if adjacent {
                    r.hi = hi.clone();
                    r.hi_closed = false;
                    r.point_only = None;
                } else {
                    flush(&mut run);
                    run = Some(Run {
                        lo: lo.clone(),
                        hi: hi.clone(),
                        lo_closed: false,
                        hi_closed: false,
                        point_only: None,
                    });
                }
            }
        }
    }
    flush(&mut run);
    SolutionSet { parameter: parameter.to_string(), pieces }
}

// ---- JSON shapes ---------------------------------------------------------

/// Endpoint as serialized: defining polynomial text, 1-based real-root index,
/// decimal approximation, and exact radical text when available.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct EndpointJson {
    pub poly: String,
    pub index: usize,
    pub approx: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PieceJson {
    Point { at: EndpointJson },
    Interval {
        #[serde(skip_serializing_if = "Option::is_none")]
        left: Option<EndpointJson>,
        #[serde(skip_serializing_if = "Option::is_none")]
        right: Option<EndpointJson>,
        left_closed: bool,
        right_closed: bool,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SolutionJson {
    pub parameter: String,
    pub hypotheses: Vec<String>,
    pub formula: String,
    pub pieces: Vec<PieceJson>,
}

fn endpoint_json(v: &RealAlgebraicNumber, parameter: &str) -> EndpointJson {
    EndpointJson {
        poly: v.defining_poly(parameter).to_string(),
        index: v.root_index(),
        approx: round6(v.approx(8)),
        exact: v.exact_string(),
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

impl SolutionSet {
    pub fn to_json(&self, hypotheses: &[UniPoly]) -> SolutionJson {
        let pieces = self
            .pieces
            .iter()
            .map(|p| match p {
                Piece::Point(v) => PieceJson::Point { at: endpoint_json(v, &self.parameter) },
                Piece::Interval { lo, hi, lo_closed, hi_closed } => PieceJson::Interval {
                    left: lo.as_ref().map(|v| endpoint_json(v, &self.parameter)),
                    right: hi.as_ref().map(|v| endpoint_json(v, &self.parameter)),
                    left_closed: *lo_closed,
                    right_closed: *hi_closed,
                },
            })
            .collect();
        SolutionJson {
            parameter: self.parameter.clone(),
            hypotheses: hypotheses.iter().map(|h| format!("{h} > 0")).collect(),
            formula: self.render(),
            pieces,
        }
    }

    /// Reconstruct the exact solution set from its JSON form.
    pub fn from_json(json: &SolutionJson) -> Result<SolutionSet> {
        let parameter = json.parameter.clone();
        let vs = crate::var::VarSet::new(vec![parameter.clone()]);
        let endpoint = |e: &EndpointJson| -> Result<RealAlgebraicNumber> {
            let poly = crate::parser::parse_poly(&e.poly, &vs)
                .map_err(|err| crate::error::Error::Invalid(err.to_string()))?
                .to_unipoly(&parameter)
                .ok_or_else(|| crate::error::Error::Invalid("endpoint poly not univariate".into()))?;
            let roots = isolate_roots(&poly)?;
            roots
                .get(e.index - 1)
                .cloned()
                .ok_or_else(|| crate::error::Error::Invalid("root index out of range".into()))
        };
        let mut pieces = Vec::new();
        for p in &json.pieces {
            pieces.push(match p {
                PieceJson::Point { at } => Piece::Point(endpoint(at)?),
                PieceJson::Interval { left, right, left_closed, right_closed } => Piece::Interval {
                    lo: left.as_ref().map(&endpoint).transpose()?,
                    hi: right.as_ref().map(&endpoint).transpose()?,
                    lo_closed: *left_closed,
                    hi_closed: *right_closed,
                },
            });
        }
        Ok(SolutionSet { parameter, pieces })
    }
}

/// JSON form of the full report (solution + families + audit trail).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub solution: SolutionJson,
    pub dv: DvJson,
    pub cells: Vec<CellJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DvJson {
    pub critical: Vec<String>,
    pub inequality_boundary: Vec<String>,
    pub non_properness: Vec<String>,
    pub combined: String,
    pub combined_roots: Vec<EndpointJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellJson {
    pub cell: String,
    pub sample: String,
    pub status: String,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<WitnessJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub var: String,
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl SolveReport {
    pub fn to_json(&self) -> Result<ReportJson> {
        let combined_roots = if self.dv.combined.is_constant() {
            Vec::new()
        } else {
            isolate_roots(&self.dv.combined)?
                .iter()
                .map(|r| endpoint_json(r, &self.solution.parameter))
                .collect()
        };
        let dv = DvJson {
            critical: self.dv.critical.iter().map(|p| p.to_string()).collect(),
            inequality_boundary: self
                .dv
                .inequality_boundary
                .iter()
                .map(|p| p.to_string())
                .collect(),
            non_properness: self.dv.non_proper.iter().map(|p| p.to_string()).collect(),
            combined: self.dv.combined.to_string(),
            combined_roots,
        };
        let cells = self
            .samples
            .iter()
            .zip(&self.verdicts)
            .map(|(s, v)| CellJson {
                cell: s.cell.describe(),
                sample: s.at.to_string(),
                status: if v.is_sat() { "sat" } else { "unsat" }.to_string(),
                count: v.real_solution_count,
                witness: v.witness_box.as_ref().map(|b| {
                    b.iter()
                        .map(|(var, lo, hi)| WitnessJson {
                            var: var.clone(),
                            lo: render_rat(lo),
                            hi: render_rat(hi),
                            approx: round6(rat_to_f64(&((lo + hi) / int(2)))),
                        })
                        .collect()
                }),
            })
            .collect();
        Ok(ReportJson {
            solution: self.solution.to_json(&self.decomposition.hypotheses),
            dv,
            cells,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use crate::rat::rat;
    use crate::var::VarSet;

    fn example1() -> ParametricSystem {
        let vs = VarSet::new(vec!["b", "m"]);
        ParametricSystem::new(
            "m",
            vec!["b".into()],
            vec![parse_poly("(1 + 2*b^2) - m*(b^2 + 2*b)", &vs).unwrap()],
            vec![
                parse_poly("2*b - 1", &vs).unwrap(),
                parse_poly("m", &vs).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example1_decomposition_cells() {
        let cfg = SolveConfig::default();
        let dv = discriminant_variety(&example1(), &cfg.budget).unwrap();
        let dec = decompose(&dv, &example1()).unwrap();
        // boundaries {-2, 0, 1, 6/5, 2}; after m > 0 pruning:
        // (0,1), {1}, (1,6/5), {6/5}, (6/5,2), {2}, (2,inf)
        let shown: Vec<String> = dec.cells.iter().map(Cell::describe).collect();
        assert_eq!(
            shown,
            vec!["(0, 1)", "{1}", "(1, 6/5)", "{6/5}", "(6/5, 2)", "{2}", "(2, inf)"]
        );
    }

    #[test]
    fn example1_sample_plan_matches_paper_shape() {
        let cfg = SolveConfig::default();
        let sys = example1();
        let dv = discriminant_variety(&sys, &cfg.budget).unwrap();
        let dec = decompose(&dv, &sys).unwrap();
        let plan = sample_plan(&dec);
        assert_eq!(plan.len(), 7);
        // boundary samples are exactly 1, 6/5, 2
        let boundary: Vec<&RealAlgebraicNumber> = plan
            .iter()
            .filter(|s| matches!(s.cell, Cell::Point(_)))
            .map(|s| &s.at)
            .collect();
        assert_eq!(boundary.len(), 3);
        assert_eq!(boundary[0].as_rational(), Some(&int(1)));
        assert_eq!(boundary[1].as_rational(), Some(&rat(6, 5)));
        assert_eq!(boundary[2].as_rational(), Some(&int(2)));
        // open-cell samples lie strictly inside their cells
        for s in plan.iter() {
            if let Cell::Open { lo, hi } = &s.cell {
                if let Some(l) = lo {
                    assert!(l < &s.at);
                }
                if let Some(h) = hi {
                    assert!(&s.at < h);
                }
            }
        }
    }

    #[test]
    fn example1_end_to_end() {
        let report = solve(&example1(), &SolveConfig::default()).unwrap();
        assert_eq!(report.solution.render(), "1 <= m < 2");
    }

    #[test]
    fn no_boundaries_single_cell() {
        // x - m = 0 has one solution for every m: solution set is all of R
        let vs = VarSet::new(vec!["x", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["x".into()],
            vec![parse_poly("x - m", &vs).unwrap()],
            vec![],
        )
        .unwrap();
        let report = solve(&sys, &SolveConfig::default()).unwrap();
        assert_eq!(report.solution.render(), "true");
        assert_eq!(report.decomposition.cells.len(), 1);
        assert_eq!(report.samples[0].at.as_rational(), Some(&int(0)));
    }

    #[test]
    fn unsat_everywhere_is_empty_solution() {
        // x^2 + 1 + m^2 = 0 never holds over R
        let vs = VarSet::new(vec!["x", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["x".into()],
            vec![parse_poly("x^2 + 1 + m^2", &vs).unwrap()],
            vec![],
        )
        .unwrap();
        let report = solve(&sys, &SolveConfig::default()).unwrap();
        assert!(report.solution.is_empty());
        assert_eq!(report.solution.render(), "false");
    }

    #[test]
    fn merging_fuses_closed_points() {
        // built by hand: {1} true, (1,2) true, {2} false -> [1, 2)
        let one = RealAlgebraicNumber::from_int(1);
        let two = RealAlgebraicNumber::from_int(2);
        let samples = vec![
            SamplePoint { cell: Cell::Point(one.clone()), at: one.clone() },
            SamplePoint {
                cell: Cell::Open { lo: Some(one.clone()), hi: Some(two.clone()) },
                at: RealAlgebraicNumber::from_rat(rat(3, 2)),
            },
            SamplePoint { cell: Cell::Point(two.clone()), at: two.clone() },
        ];
        let sat = SatVerdict { status: crate::zdsat::SatStatus::Sat, real_solution_count: 1, witness_box: None };
        let unsat = SatVerdict { status: crate::zdsat::SatStatus::Unsat, real_solution_count: 0, witness_box: None };
        let sol = merge_cells("m", &samples, &[sat.clone(), sat, unsat]);
        assert_eq!(sol.pieces.len(), 1);
        assert_eq!(sol.render(), "1 <= m < 2");
    }

    #[test]
    fn membership_oracle_agreement() {
        let sys = example1();
        let cfg = SolveConfig::default();
        let report = solve(&sys, &cfg).unwrap();
        let zcfg = ZdConfig::default();
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let num: i64 = rng.gen_range(-300..400);
            let den: i64 = rng.gen_range(1..100);
            let q = rat(num, den);
            let in_set = report.solution.contains(&q);
            let sat = crate::zdsat::sat_at_rational(&sys, &q, &zcfg).unwrap().is_sat();
            assert_eq!(in_set, sat, "membership mismatch at {q}");
        }
    }

    #[test]
    fn seed_does_not_change_solution() {
        let sys = example1();
        let a = solve(&sys, &SolveConfig { seed: 0, ..Default::default() }).unwrap();
        let b = solve(&sys, &SolveConfig { seed: 12345, ..Default::default() }).unwrap();
        assert_eq!(a.solution, b.solution);
    }

    #[test]
    fn json_round_trip() {
        let report = solve(&example1(), &SolveConfig::default()).unwrap();
        let json = report.solution.to_json(&report.decomposition.hypotheses);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: SolutionJson = serde_json::from_str(&text).unwrap();
        let rebuilt = SolutionSet::from_json(&parsed).unwrap();
        assert_eq!(rebuilt, report.solution);
    }

    use crate::rat::int;
}
