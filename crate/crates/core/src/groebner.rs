//! Buchberger's algorithm with elimination (block) orders, elimination
//! ideals, saturation via an inverse-variable trick, and specialization.
//!
//! Pair selection is the normal strategy (smallest lcm under the active
//! order, ties by input index), with the coprimality and chain criteria.
//! The final basis is reduced: monic, tails in normal form, deterministic
//! order. Budgets cap pair reductions, total degree, and wall-clock time.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::multipoly::MultiPoly;
use crate::rat::Rat;
use crate::var::VarSet;

#[derive(Debug, Clone)]
pub struct Ideal {
    pub gens: Vec<MultiPoly>,
    pub vars: VarSet,
}

impl Ideal {
    pub fn new(gens: Vec<MultiPoly>, vars: VarSet) -> Self {
        let gens = gens
            .into_iter()
            .map(|g| g.embed(&vars))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { gens, vars }
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub vars: VarSet,
}

impl GroebnerBasis {
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        p.embed(&self.vars).reduce(&self.basis, &self.order)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }
}

/// Resource caps for a single Buchberger run.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_pair_reductions: usize,
    pub max_total_degree: u32,
    pub soft_wall: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pair_reductions: 100_000, max_total_degree: 60, soft_wall: None }
    }
}

struct Entry {
    poly: MultiPoly,
    lm: Monomial,
}

/// The S-polynomial of `f` and `g` under `order`.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: &MonomialOrder) -> MultiPoly {
    let (flm, flc) = f.leading_term(order).expect("nonzero");
    let (glm, glc) = g.leading_term(order).expect("nonzero");
    let lcm = flm.lcm(glm);
    let mf = lcm.try_div(flm).unwrap();
    let mg = lcm.try_div(glm).unwrap();
    let a = f.mul_monomial(&mf, &flc.recip());
    let b = g.mul_monomial(&mg, &glc.recip());
    a.sub(&b)
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis> {
    let vars = ideal.vars.clone();
    let n = vars.len();
    let start = Instant::now();
    let check_wall = |stage: &'static str| -> Result<()> {
        if let Some(wall) = budget.soft_wall {
            if start.elapsed() > wall {
                return Err(Error::ResourceBudgetExceeded {
                    stage,
                    detail: format!("soft wall of {:.0?} elapsed", wall),
                });
            }
        }
        Ok(())
    };

    let mut basis: Vec<Entry> = Vec::new();
    let push_poly = |basis: &mut Vec<Entry>, p: MultiPoly| -> Result<usize> {
        if p.total_degree() > budget.max_total_degree {
            return Err(Error::ResourceBudgetExceeded {
                stage: "buchberger",
                detail: format!(
                    "total degree {} exceeds cap {}",
                    p.total_degree(),
                    budget.max_total_degree
                ),
            });
        }
        let (_, prim) = p.content_and_primitive();
        let lm = prim.leading_term(order).expect("nonzero").0.clone();
        basis.push(Entry { poly: prim, lm });
        Ok(basis.len() - 1)
    };

    for g in &ideal.gens {
        if !g.is_zero() {
            push_poly(&mut basis, g.clone())?;
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis { basis: Vec::new(), order: order.clone(), vars });
    }

    // pair queue: smallest lcm total degree first (normal strategy), ties
    // broken by the order key of the lcm, then input indices
    let mut queue: BTreeSet<(u32, Vec<i64>, usize, usize)> = BTreeSet::new();
    let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();
    let enqueue = |queue: &mut BTreeSet<(u32, Vec<i64>, usize, usize)>, basis: &[Entry], i: usize, j: usize| {
        let lcm = basis[i].lm.lcm(&basis[j].lm);
        queue.insert((lcm.total_degree(), order.key(&lcm, n), i, j));
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            enqueue(&mut queue, &basis, i, j);
        }
    }

    let mut reductions = 0usize;
    while let Some(item) = queue.iter().next().cloned() {
        queue.remove(&item);
        let (_, _, i, j) = item;
        treated.insert((i, j));
        check_wall("buchberger")?;

        let lcm = basis[i].lm.lcm(&basis[j].lm);
        // coprime leading monomials: S-polynomial reduces to zero
        if basis[i].lm.coprime(&basis[j].lm) {
            continue;
        }
        // chain criterion: some k with lm_k | lcm and both (i,k), (j,k) done
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if basis[k].lm.divides(&lcm) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if treated.contains(&p1) && treated.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        reductions += 1;
        if reductions > budget.max_pair_reductions {
            return Err(Error::ResourceBudgetExceeded {
                stage: "buchberger",
                detail: format!("more than {} pair reductions", budget.max_pair_reductions),
            });
        }
        let s = s_polynomial(&basis[i].poly, &basis[j].poly, order);
        if s.total_degree() > budget.max_total_degree {
            return Err(Error::ResourceBudgetExceeded {
                stage: "buchberger",
                detail: format!(
                    "S-polynomial degree {} exceeds cap {}",
                    s.total_degree(),
                    budget.max_total_degree
                ),
            });
        }
        let polys: Vec<MultiPoly> = basis.iter().map(|e| e.poly.clone()).collect();
        let r = s.reduce(&polys, order);
        if r.is_zero() {
            continue;
        }
        let new_idx = push_poly(&mut basis, r)?;
        for k in 0..new_idx {
            enqueue(&mut queue, &basis, k, new_idx);
        }
    }

    // minimalize: drop entries whose leading monomial another one divides
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].lm.divides(&basis[i].lm) && (basis[j].lm != basis[i].lm || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, k)| **k)
        .map(|(e, _)| e.poly.clone())
        .collect();

    // inter-reduce tails, normalize to monic, sort by leading monomial
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        check_wall("inter-reduction")?;
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = minimal[i].reduce(&others, order);
        if r.is_zero() {
            continue;
        }
        let lc = r.leading_term(order).unwrap().1.clone();
        reduced.push(r.scale(&lc.recip()));
    }
    reduced.sort_by(|a, b| {
        let ka = order.key(a.leading_term(order).unwrap().0, n);
        let kb = order.key(b.leading_term(order).unwrap().0, n);
        ka.cmp(&kb)
    });
    Ok(GroebnerBasis { basis: reduced, order: order.clone(), vars })
}

/// Generators of `I ∩ Q[keep]`, from a block-elimination basis.
pub fn elimination_ideal(ideal: &Ideal, keep: &[&str], budget: &Budget) -> Result<Vec<MultiPoly>> {
    let keep_idx: BTreeSet<usize> = keep
        .iter()
        .map(|k| {
            ideal
                .vars
                .index_of(k)
                .ok_or_else(|| Error::Invalid(format!("keep variable `{k}` not in universe")))
        })
        .collect::<Result<_>>()?;
    let eliminate: BTreeSet<usize> =
        (0..ideal.vars.len()).filter(|i| !keep_idx.contains(i)).collect();
    let order = MonomialOrder::elimination(eliminate);
    let gb = buchberger(ideal, &order, budget)?;
    Ok(gb
        .basis
        .into_iter()
        .filter(|p| p.support().iter().all(|i| keep_idx.contains(i)))
        .collect())
}

/// Saturation `I : h^inf` via a fresh inverse variable: eliminate `t` from
/// `⟨I, t*h - 1⟩`.
pub fn saturate(ideal: &Ideal, h: &MultiPoly, budget: &Budget) -> Result<Ideal> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial("saturation"));
    }
    let base = ideal.vars.union(h.vars());
    let t = base.fresh_name("t");
    let ext = base.extended(&[t.as_str()]);
    let t_poly = MultiPoly::var_named(&ext, &t).unwrap();
    let one = MultiPoly::constant(ext.clone(), Rat::from_integer(1.into()));
    let mut gens: Vec<MultiPoly> = ideal.gens.iter().map(|g| g.embed(&ext)).collect();
    gens.push(t_poly.mul(&h.embed(&ext)).sub(&one));
    let extended = Ideal::new(gens, ext);
    let keep: Vec<&str> = ideal.vars.iter().collect();
    let result = elimination_ideal(&extended, &keep, budget)?;
    Ok(Ideal::new(
        result.into_iter().map(|p| p.embed(&ideal.vars)).collect(),
        ideal.vars.clone(),
    ))
}

/// Substitute `var = 0` in every generator, dropping zero results.
pub fn specialize_to_zero(gens: &[MultiPoly], var: &str) -> Vec<MultiPoly> {
    gens.iter()
        .filter_map(|g| {
            let idx = g.vars().index_of(var)?;
            let s = g.substitute_rational(idx, &Rat::from_integer(0.into()));
            if s.is_zero() {
                None
            } else {
                Some(s)
            }
        })
        .collect()
}

/// Every S-polynomial of basis pairs reduces to zero (the Groebner property).
pub fn is_groebner(gb: &GroebnerBasis) -> bool {
    for i in 0..gb.basis.len() {
        for j in i + 1..gb.basis.len() {
            let s = s_polynomial(&gb.basis[i], &gb.basis[j], &gb.order);
            if !s.reduce(&gb.basis, &gb.order).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use crate::rat::{int, rat, Rat};

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
        let vs = VarSet::new(vars.to_vec());
        let gens = gens.iter().map(|g| parse_poly(g, &vs).unwrap()).collect();
        Ideal::new(gens, vs)
    }

    #[test]
    fn buchberger_collapses_to_smaller_basis() {
        let i = ideal(&["x"], &["x^2 - 1", "x - 1"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(gb.basis.len(), 1);
        assert_eq!(gb.basis[0], parse_poly("x - 1", &i.vars).unwrap());
    }

    #[test]
    fn buchberger_identity_on_single_generator() {
        let i = ideal(&["x"], &["x"]);
        let gb = buchberger(&i, &MonomialOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(gb.basis, vec![parse_poly("x", &i.vars).unwrap()]);
    }

    #[test]
    fn elimination_ideal_paper_example_1_critical() {
        // <f, J, t*g1*g2 - 1> ∩ Q[m]  =  <m^2 + m - 2>
        let i = ideal(
            &["b", "t", "m"],
            &[
                "(1 + 2*b^2) - m*(b^2 + 2*b)",
                "b*(4 - 2*m) - 2*m",
                "t*(2*b - 1)*m - 1",
            ],
        );
        let out = elimination_ideal(&i, &["m"], &Budget::default()).unwrap();
        assert_eq!(out.len(), 1);
        let expect = parse_poly("m^2 + m - 2", &i.vars).unwrap();
        let monic = {
            let lc = out[0]
                .leading_term(&MonomialOrder::Lex)
                .unwrap()
                .1
                .clone();
            out[0].scale(&lc.recip())
        };
        assert_eq!(monic, expect);
    }

    #[test]
    fn elimination_no_constraint() {
        let i = ideal(&["x", "y"], &["x - y"]);
        let out = elimination_ideal(&i, &["y"], &Budget::default()).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn elimination_u_trick_boundary() {
        // <f, g1*g2 - u, u*t - 1> ∩ Q[m,u], then u = 0: square-free roots {0, 6/5}
        let i = ideal(
            &["b", "t", "m", "u"],
            &[
                "(1 + 2*b^2) - m*(b^2 + 2*b)",
                "(2*b - 1)*m - u",
                "u*t - 1",
            ],
        );
        let out = elimination_ideal(&i, &["m", "u"], &Budget::default()).unwrap();
        assert!(!out.is_empty());
        let at_zero = specialize_to_zero(&out, "u");
        assert!(!at_zero.is_empty());
        // specialized generators vanish exactly at {0, 6/5}
        let mut roots: Vec<Rat> = Vec::new();
        for g in &at_zero {
            let u = g.to_unipoly("m").expect("univariate in m");
            let sf = u.square_free_part().unwrap();
            let (rs, rest) = sf.rational_roots_of_square_free();
            assert!(rest.is_constant(), "only rational roots expected");
            roots.extend(rs);
        }
        roots.sort();
        roots.dedup();
        assert_eq!(roots, vec![int(0), rat(6, 5)]);
    }

    #[test]
    fn saturate_examples() {
        // <x*y> : y = <x>
        let i = ideal(&["x", "y"], &["x*y"]);
        let y = parse_poly("y", &i.vars).unwrap();
        let s = saturate(&i, &y, &Budget::default()).unwrap();
        assert_eq!(s.gens.len(), 1);
        let (_, prim) = s.gens[0].content_and_primitive();
        assert_eq!(prim, parse_poly("x", &i.vars).unwrap());

        // <x^2> : x = <1>
        let i = ideal(&["x"], &["x^2"]);
        let x = parse_poly("x", &i.vars).unwrap();
        let s = saturate(&i, &x, &Budget::default()).unwrap();
        assert_eq!(s.gens.len(), 1);
        assert!(s.gens[0].is_constant());
    }

    #[test]
    fn saturate_example_1_pipeline() {
        // <f, J> saturated by g1*g2, then ∩ Q[m] has roots {-2, 1}
        let i = ideal(
            &["b", "m"],
            &["(1 + 2*b^2) - m*(b^2 + 2*b)", "b*(4 - 2*m) - 2*m"],
        );
        let h = parse_poly("(2*b - 1)*m", &i.vars).unwrap();
        let s = saturate(&i, &h, &Budget::default()).unwrap();
        let out = elimination_ideal(&s, &["m"], &Budget::default()).unwrap();
        assert_eq!(out.len(), 1);
        let u = out[0].to_unipoly("m").unwrap();
        let sf = u.square_free_part().unwrap();
        let (roots, rest) = sf.rational_roots_of_square_free();
        assert!(rest.is_constant());
        assert_eq!(roots, vec![int(-2), int(1)]);
    }

    #[test]
    fn specialize_examples() {
        let vs = VarSet::new(vec!["m", "u"]);
        let gens = vec![
            parse_poly("u + m", &vs).unwrap(),
            parse_poly("m*u + 5*m - 6*u", &vs).unwrap(),
        ];
        let out = specialize_to_zero(&gens, "u");
        assert_eq!(out.len(), 2);
        assert_eq!(out[0], parse_poly("m", &vs).unwrap());
        assert_eq!(out[1], parse_poly("5*m", &vs).unwrap());

        let c = MultiPoly::constant(vs.clone(), int(3));
        let out = specialize_to_zero(&[c.clone()], "u");
        assert_eq!(out, vec![c]);
    }

    #[test]
    fn groebner_property_and_ideal_containment() {
        let i = ideal(
            &["x", "y", "z"],
            &["x^2 + y - z", "x*y - z^2 + 1", "y^2 - x*z"],
        );
        let gb = buchberger(&i, &MonomialOrder::GrevLex, &Budget::default()).unwrap();
        assert!(is_groebner(&gb));
        for g in &i.gens {
            assert!(gb.contains(g), "input generator must reduce to zero");
        }
    }

    #[test]
    fn determinism_across_runs() {
        let i = ideal(
            &["x", "y", "z"],
            &["x^2 + y - z", "x*y - z^2 + 1", "y^2 - x*z"],
        );
        let a = buchberger(&i, &MonomialOrder::GrevLex, &Budget::default()).unwrap();
        let b = buchberger(&i, &MonomialOrder::GrevLex, &Budget::default()).unwrap();
        assert_eq!(a.basis, b.basis);
    }

    #[test]
    fn budget_trips() {
        let i = ideal(&["x", "y"], &["x^3*y - 1", "x*y^3 - x - 1"]);
        let tight = Budget { max_pair_reductions: 0, max_total_degree: 60, soft_wall: None };
        assert!(matches!(
            buchberger(&i, &MonomialOrder::Lex, &tight),
            Err(Error::ResourceBudgetExceeded { .. })
        ));
    }
}
