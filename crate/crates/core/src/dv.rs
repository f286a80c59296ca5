//! Discriminant variety of a one-parameter square system: parameter values
//! where the finite real solution count can change. Three families:
//! critical/singular fibers, inequality-boundary fibers, and non-properness
//! (solutions escaping to infinity). Supersets are sound; every family is
//! reduced to square-free primitive univariate polynomials in the parameter.

use std::collections::BTreeSet;

use num_traits::One;

use rayon::join;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, elimination_ideal, specialize_to_zero, Budget, Ideal};
use crate::monomial::MonomialOrder;
use crate::multipoly::{jacobian_det, MultiPoly};
use crate::rat::Rat;
use crate::unipoly::UniPoly;
use crate::var::VarSet;

/// Equations `f_i = 0`, strict conditions `g_j > 0`, one designated
/// parameter. The universe is the bound variables (in order) then the
/// parameter.
#[derive(Debug, Clone)]
pub struct ParametricSystem {
    pub parameter: String,
    pub bound_vars: Vec<String>,
    pub equations: Vec<MultiPoly>,
    pub positives: Vec<MultiPoly>,
    pub vars: VarSet,
}

impl ParametricSystem {
    pub fn new(
        parameter: &str,
        bound_vars: Vec<String>,
        equations: Vec<MultiPoly>,
        positives: Vec<MultiPoly>,
    ) -> Result<Self> {
        if bound_vars.iter().any(|v| v == parameter) {
            return Err(Error::Invalid(format!(
                "parameter `{parameter}` cannot also be a bound variable"
            )));
        }
        let mut names: Vec<String> = bound_vars.clone();
        names.push(parameter.to_string());
        let vars = VarSet::new(names);
        let mut sys = ParametricSystem {
            parameter: parameter.to_string(),
            bound_vars,
            equations: Vec::new(),
            positives: Vec::new(),
            vars: vars.clone(),
        };
        for e in equations {
            for name in e.support_names() {
                if !vars.contains(&name) {
                    return Err(Error::Invalid(format!(
                        "equation uses `{name}` which is neither bound nor the parameter"
                    )));
                }
            }
            sys.equations.push(e.embed(&vars));
        }
        for g in positives {
            for name in g.support_names() {
                if !vars.contains(&name) {
                    return Err(Error::Invalid(format!(
                        "positivity condition uses `{name}` which is neither bound nor the parameter"
                    )));
                }
            }
            sys.positives.push(g.embed(&vars));
        }
        Ok(sys)
    }

    pub fn is_square(&self) -> bool {
        self.equations.len() == self.bound_vars.len()
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquareSystem {
                equations: self.equations.len(),
                variables: self.bound_vars.len(),
            })
        }
    }

    fn parameter_index(&self) -> usize {
        self.vars.index_of(&self.parameter).unwrap()
    }

    fn bound_indices(&self) -> BTreeSet<usize> {
        self.bound_vars.iter().map(|v| self.vars.index_of(v).unwrap()).collect()
    }

    /// Positivity conditions whose support is exactly the parameter.
    pub fn parameter_only_positives(&self) -> Vec<UniPoly> {
        self.positives
            .iter()
            .filter_map(|g| {
                let sup = g.support();
                if !sup.is_empty() && sup.iter().all(|&i| i == self.parameter_index()) {
                    g.to_unipoly(&self.parameter)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Specialize the parameter to a rational; returns equations and the
    /// positivity conditions that still involve bound variables.
    pub fn specialize(&self, value: &Rat) -> (Vec<MultiPoly>, Vec<MultiPoly>) {
        let pi = self.parameter_index();
        let eqs = self.equations.iter().map(|e| e.substitute_rational(pi, value)).collect();
        let pos = self
            .positives
            .iter()
            .filter(|g| g.support().iter().any(|&i| i != pi))
            .map(|g| g.substitute_rational(pi, value))
            .collect();
        (eqs, pos)
    }

    /// Product of the distinct positivity conditions (1 when none).
    fn positivity_product(&self) -> MultiPoly {
        let mut seen: Vec<&MultiPoly> = Vec::new();
        let mut prod = MultiPoly::constant(self.vars.clone(), Rat::one());
        for g in &self.positives {
            if seen.iter().any(|s| *s == g) {
                continue;
            }
            seen.push(g);
            prod = prod.mul(g);
        }
        prod
    }

    pub fn jacobian(&self) -> Result<MultiPoly> {
        let names: Vec<&str> = self.bound_vars.iter().map(String::as_str).collect();
        jacobian_det(&self.equations, &names)
    }
}

/// The three univariate families plus their square-free combined product.
#[derive(Debug, Clone)]
pub struct DiscriminantVariety {
    pub critical: Vec<UniPoly>,
    pub inequality_boundary: Vec<UniPoly>,
    pub non_proper: Vec<UniPoly>,
    pub combined: UniPoly,
}

impl DiscriminantVariety {
    pub fn families(&self) -> [(&'static str, &[UniPoly]); 3] {
        [
            ("critical", self.critical.as_slice()),
            ("inequality boundary", self.inequality_boundary.as_slice()),
            ("non-properness", self.non_proper.as_slice()),
        ]
    }

    pub fn all_members(&self) -> impl Iterator<Item = &UniPoly> {
        self.critical
            .iter()
            .chain(self.inequality_boundary.iter())
            .chain(self.non_proper.iter())
    }
}

/// Clean up a family: square-free primitive parts, no constants, no
/// duplicates, deterministic order.
fn tidy_family(polys: Vec<MultiPoly>, parameter: &str) -> Result<Vec<UniPoly>> {
    let mut out: Vec<UniPoly> = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let u = p.to_unipoly(parameter).ok_or_else(|| {
            Error::Invalid(format!(
                "discriminant-variety member `{p}` is not univariate in `{parameter}`"
            ))
        })?;
        if u.is_constant() {
            continue;
        }
        let sf = u.square_free_part()?.primitive_part();
        if sf.is_constant() {
            continue;
        }
        if !out.contains(&sf) {
            out.push(sf);
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.to_string().cmp(&b.to_string())));
    Ok(out)
}

/// Parameter values over which the specialized system has a critical or
/// singular solution compatible with the strict conditions:
/// generators of `⟨equations, J, t * Π g_j - 1⟩ ∩ Q[parameter]`.
pub fn critical_values(sys: &ParametricSystem, budget: &Budget) -> Result<Vec<UniPoly>> {
    sys.require_square()?;
    let jac = sys.jacobian()?;
    let mut gens = sys.equations.clone();
    if !jac.is_constant() || jac.is_zero() {
        gens.push(jac.clone());
    } else {
        // constant nonzero Jacobian: no critical fibers at all
        return Ok(Vec::new());
    }
    let mut vars = sys.vars.clone();
    if !sys.positives.is_empty() {
        let t = vars.fresh_name("t");
        vars = vars.extended(&[t.as_str()]);
        let t_poly = MultiPoly::var_named(&vars, &t).unwrap();
        let one = MultiPoly::constant(vars.clone(), Rat::one());
        gens = gens.into_iter().map(|g| g.embed(&vars)).collect();
        gens.push(t_poly.mul(&sys.positivity_product().embed(&vars)).sub(&one));
    }
    let ideal = Ideal::new(gens, vars);
    let elim = elimination_ideal(&ideal, &[&sys.parameter], budget)?;
    tidy_family(elim, &sys.parameter)
}

/// Parameter values where a solution can cross the boundary of some strict
/// condition: eliminate bound variables from `⟨equations, Π g_j - u, u*t - 1⟩`
/// keeping `{parameter, u}`, then set `u = 0`.
pub fn inequality_boundary_values(sys: &ParametricSystem, budget: &Budget) -> Result<Vec<UniPoly>> {
    sys.require_square()?;
    if sys.positives.is_empty() {
        return Ok(Vec::new());
    }
    let prod = sys.positivity_product();
    if prod.is_constant() {
        return Ok(Vec::new());
    }
    let u = sys.vars.fresh_name("u");
    let vars1 = sys.vars.extended(&[u.as_str()]);
    let t = vars1.fresh_name("t");
    let vars = vars1.extended(&[t.as_str()]);
    let u_poly = MultiPoly::var_named(&vars, &u).unwrap();
    let t_poly = MultiPoly::var_named(&vars, &t).unwrap();
    let one = MultiPoly::constant(vars.clone(), Rat::one());
    let mut gens: Vec<MultiPoly> = sys.equations.iter().map(|e| e.embed(&vars)).collect();
    gens.push(prod.embed(&vars).sub(&u_poly));
    gens.push(u_poly.mul(&t_poly).sub(&one));
    let ideal = Ideal::new(gens, vars);
    let elim = elimination_ideal(&ideal, &[&sys.parameter, &u], budget)?;
    let at_zero = specialize_to_zero(&elim, &u);
    tidy_family(at_zero, &sys.parameter)
}

/// A closed superset of the parameter values where the projection of the
/// solution set onto the parameter line is not proper (solutions escape to
/// infinity). From a block-order basis of `⟨equations⟩` (bound variables
/// before the parameter): for each bound variable, the basis elements whose
/// leading bound-monomial is a pure power of it contribute their leading
/// coefficients, polynomials in the parameter.
///
/// When the plain equation ideal has a positive-dimensional component on
/// which a strict condition vanishes identically (degenerate configurations),
/// the check is retried on the ideal saturated by the positivity product;
/// the strict conditions confine solutions to the saturated variety.
pub fn non_properness_values(sys: &ParametricSystem, budget: &Budget) -> Result<Vec<UniPoly>> {
    sys.require_square()?;
    match non_properness_of(&sys.equations, sys, budget) {
        Err(Error::NotZeroDimensionalFiber(_)) if !sys.positives.is_empty() => {
            let ideal = Ideal::new(sys.equations.clone(), sys.vars.clone());
            let saturated = crate::groebner::saturate(&ideal, &sys.positivity_product(), budget)?;
            non_properness_of(&saturated.gens, sys, budget)
        }
        other => other,
    }
}

fn non_properness_of(
    equations: &[MultiPoly],
    sys: &ParametricSystem,
    budget: &Budget,
) -> Result<Vec<UniPoly>> {
    let bound = sys.bound_indices();
    let order = MonomialOrder::elimination(bound.clone());
    let ideal = Ideal::new(equations.to_vec(), sys.vars.clone());
    let gb = buchberger(&ideal, &order, budget)?;

    let mut lead_coeffs: Vec<MultiPoly> = Vec::new();
    for v in &sys.bound_vars {
        let vi = sys.vars.index_of(v).unwrap();
        let mut found = false;
        for g in &gb.basis {
            // leading monomial in the bound block
            let Some((lm, _)) = g.leading_term(&order) else { continue };
            let bound_lm = lm.restrict(&bound);
            if bound_lm.is_one() {
                continue;
            }
            let pure = bound_lm.support().all(|i| i == vi);
            if !pure {
                continue;
            }
            found = true;
            // leading coefficient: sum of terms sharing the maximal bound part
            let mut lc = MultiPoly::zero(sys.vars.clone());
            for (m, c) in g.terms() {
                if m.restrict(&bound) == bound_lm {
                    let param_part = restrict_complement(m, &bound);
                    lc = lc.add(&MultiPoly::from_terms(
                        sys.vars.clone(),
                        [(param_part, c.clone())],
                    ));
                }
            }
            if !lc.is_constant() {
                lead_coeffs.push(lc);
            }
        }
        if !found {
            return Err(Error::NotZeroDimensionalFiber(v.clone()));
        }
    }
    tidy_family(lead_coeffs, &sys.parameter)
}

fn restrict_complement(
    m: &crate::monomial::Monomial,
    bound: &BTreeSet<usize>,
) -> crate::monomial::Monomial {
    crate::monomial::Monomial::from_pairs(
        m.pairs().iter().copied().filter(|(i, _)| !bound.contains(i)).collect(),
    )
}

/// Assemble the three families and the square-free combined polynomial.
/// The three computations run concurrently; results merge deterministically.
pub fn discriminant_variety(sys: &ParametricSystem, budget: &Budget) -> Result<DiscriminantVariety> {
    sys.require_square()?;
    let (crit_res, (in_res, inf_res)) = join(
        || critical_values(sys, budget),
        || {
            join(
                || inequality_boundary_values(sys, budget),
                || non_properness_values(sys, budget),
            )
        },
    );
    let critical = crit_res?;
    let inequality_boundary = in_res?;
    let non_proper = inf_res?;

    let mut combined = UniPoly::constant(&sys.parameter, Rat::one());
    let mut seen: Vec<&UniPoly> = Vec::new();
    for member in critical.iter().chain(&inequality_boundary).chain(&non_proper) {
        if seen.iter().any(|s| *s == member) {
            continue;
        }
        seen.push(member);
        combined = combined.mul(member);
    }
    let combined = if combined.is_constant() {
        combined
    } else {
        combined.square_free_part()?.primitive_part()
    };
    Ok(DiscriminantVariety { critical, inequality_boundary, non_proper, combined })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use crate::rat::{int, rat};
    use crate::realalg::{isolate_roots, RealAlgebraicNumber};

    pub(crate) fn example1() -> ParametricSystem {
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

    fn roots_of_family(fam: &[UniPoly]) -> Vec<RealAlgebraicNumber> {
        let mut out: Vec<RealAlgebraicNumber> = Vec::new();
        for p in fam {
            out.extend(isolate_roots(p).unwrap());
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn example1_critical() {
        let fam = critical_values(&example1(), &Budget::default()).unwrap();
        let roots = roots_of_family(&fam);
        let expect = [int(-2), int(1)];
        assert_eq!(roots.len(), 2);
        for (r, e) in roots.iter().zip(expect.iter()) {
            assert_eq!(r.as_rational(), Some(e));
        }
    }

    #[test]
    fn example1_inequality_boundary() {
        let fam = inequality_boundary_values(&example1(), &Budget::default()).unwrap();
        let roots = roots_of_family(&fam);
        let expect = [int(0), rat(6, 5)];
        assert_eq!(roots.len(), 2);
        for (r, e) in roots.iter().zip(expect.iter()) {
            assert_eq!(r.as_rational(), Some(e));
        }
    }

    #[test]
    fn example1_non_properness() {
        let fam = non_properness_values(&example1(), &Budget::default()).unwrap();
        let roots = roots_of_family(&fam);
        assert!(roots.iter().any(|r| r.as_rational() == Some(&int(2))));
    }

    #[test]
    fn example1_combined() {
        let dv = discriminant_variety(&example1(), &Budget::default()).unwrap();
        let roots = isolate_roots(&dv.combined).unwrap();
        let expect = [int(-2), int(0), int(1), rat(6, 5), int(2)];
        for e in &expect {
            assert!(
                roots.iter().any(|r| r.as_rational() == Some(e)),
                "combined roots must contain {e}"
            );
        }
    }

    #[test]
    fn linear_graph_has_empty_critical_family() {
        // b - m: Jacobian is the constant 1
        let vs = VarSet::new(vec!["b", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["b".into()],
            vec![parse_poly("b - m", &vs).unwrap()],
            vec![],
        )
        .unwrap();
        let fam = critical_values(&sys, &Budget::default()).unwrap();
        assert!(fam.is_empty());
        // no positivity conditions: boundary family empty
        assert!(inequality_boundary_values(&sys, &Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn constant_positivity_gives_empty_boundary() {
        let vs = VarSet::new(vec!["b", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["b".into()],
            vec![parse_poly("(1 + 2*b^2) - m*(b^2 + 2*b)", &vs).unwrap()],
            vec![MultiPoly::constant(vs.clone(), int(1))],
        )
        .unwrap();
        assert!(inequality_boundary_values(&sys, &Budget::default()).unwrap().is_empty());
    }

    #[test]
    fn hyperbola_non_properness() {
        // b*m - 1: fiber escapes to infinity as m -> 0
        let vs = VarSet::new(vec!["b", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["b".into()],
            vec![parse_poly("b*m - 1", &vs).unwrap()],
            vec![],
        )
        .unwrap();
        let fam = non_properness_values(&sys, &Budget::default()).unwrap();
        let roots = roots_of_family(&fam);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].as_rational(), Some(&int(0)));
    }

    #[test]
    fn unused_bound_variable_is_infinite_fiber() {
        let vs = VarSet::new(vec!["a", "b", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["a".into(), "b".into()],
            vec![
                parse_poly("a - m", &vs).unwrap(),
                parse_poly("a^2 - m^2", &vs).unwrap(),
            ],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            non_properness_values(&sys, &Budget::default()),
            Err(Error::NotZeroDimensionalFiber(v)) if v == "b"
        ));
    }

    #[test]
    fn non_square_rejected() {
        let vs = VarSet::new(vec!["a", "b", "m"]);
        let sys = ParametricSystem::new(
            "m",
            vec!["a".into(), "b".into()],
            vec![parse_poly("a - m", &vs).unwrap()],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            discriminant_variety(&sys, &Budget::default()),
            Err(Error::NonSquareSystem { equations: 1, variables: 2 })
        ));
    }
}
