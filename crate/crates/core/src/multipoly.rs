//! Sparse multivariate polynomials over exact rationals.
//!
//! The canonical form (sorted term map keyed by monomial, no zero
//! coefficients) is unique for a fixed variable universe, so structural
//! operations are deterministic. Arithmetic between polynomials over
//! different universes unifies the universes by name first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::rat::{int, render_rat, Rat, RatInterval};
use crate::var::VarSet;

#[derive(Debug, Clone)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: VarSet) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { vars, terms }
    }

    pub fn var(vars: VarSet, index: usize) -> Self {
        assert!(index < vars.len());
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(index), Rat::one());
        MultiPoly { vars, terms }
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Option<Self> {
        vars.index_of(name).map(|i| MultiPoly::var(vars.clone(), i))
    }

    pub fn from_terms(vars: VarSet, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(index)).max().unwrap_or(0)
    }

    /// Indices of variables actually occurring.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            s.extend(m.support());
        }
        s
    }

    pub fn support_names(&self) -> BTreeSet<String> {
        self.support().into_iter().map(|i| self.vars.name(i).to_string()).collect()
    }

    /// Embed into a universe that contains (by name) every variable in use.
    pub fn embed(&self, target: &VarSet) -> MultiPoly {
        if &self.vars == target {
            return self.clone();
        }
        let map: Vec<usize> = (0..self.vars.len())
            .map(|i| {
                target
                    .index_of(self.vars.name(i))
                    .unwrap_or(usize::MAX) // only hit if the variable is unused
            })
            .collect();
        let mut out = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            for i in m.support() {
                assert!(map[i] != usize::MAX, "target universe misses `{}`", self.vars.name(i));
            }
            out.add_term(m.remap(&map), c.clone());
        }
        out
    }

    fn unified(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            (self.clone(), other.clone())
        } else {
            let u = self.vars.union(&other.vars);
            (self.embed(&u), other.embed(&u))
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unified(other);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unified(other);
        let mut out = MultiPoly::zero(a.vars.clone());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.vars.clone(), Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rat)> {
        let n = self.vars.len();
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b, n))
    }

    pub fn derivative(&self, index: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.exp(index);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(usize, u32)> = m.pairs().to_vec();
            for p in pairs.iter_mut() {
                if p.0 == index {
                    p.1 -= 1;
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c * int(e as i64));
        }
        out
    }

    pub fn substitute_rational(&self, index: usize, value: &Rat) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.exp(index);
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff *= value;
            }
            if coeff.is_zero() {
                continue;
            }
            let pairs: Vec<(usize, u32)> =
                m.pairs().iter().copied().filter(|&(i, _)| i != index).collect();
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        out
    }

    pub fn substitute_poly(&self, index: usize, value: &MultiPoly) -> MultiPoly {
        let value = value.embed(&self.vars.union(value.vars()));
        let target = value.vars().clone();
        let max_e = self.degree_in(index);
        // powers of the replacement, computed once
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(MultiPoly::constant(target.clone(), Rat::one()));
        for k in 1..=max_e {
            powers.push(powers[(k - 1) as usize].mul(&value));
        }
        let mut out = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let e = m.exp(index);
            let rest = Monomial::from_pairs(
                m.pairs().iter().copied().filter(|&(i, _)| i != index).collect(),
            );
            let base = self_term_embed(&self.vars, &target, &rest);
            out = out.add(&powers[e as usize].mul_monomial(&base, c));
        }
        out
    }

    pub fn eval_f64(&self, env: &BTreeMap<String, f64>) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = crate::rat::rat_to_f64(c);
            for &(i, e) in m.pairs() {
                let v = env.get(self.vars.name(i)).copied().unwrap_or(f64::NAN);
                t *= v.powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Interval evaluation over per-variable rational boxes.
    pub fn eval_interval(&self, env: &BTreeMap<String, RatInterval>) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for (m, c) in &self.terms {
            let mut t = RatInterval::point(c.clone());
            for &(i, e) in m.pairs() {
                let v = env
                    .get(self.vars.name(i))
                    .unwrap_or_else(|| panic!("missing interval for `{}`", self.vars.name(i)));
                t = t.mul(&v.pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval_rational(&self, env: &BTreeMap<String, Rat>) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(i, e) in m.pairs() {
                let v = env
                    .get(self.vars.name(i))
                    .unwrap_or_else(|| panic!("missing value for `{}`", self.vars.name(i)));
                for _ in 0..e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Rational content and the primitive integer part with positive leading
    /// coefficient under grevlex. `p == content * primitive`.
    pub fn content_and_primitive(&self) -> (Rat, MultiPoly) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        let lead = self
            .leading_term(&MonomialOrder::GrevLex)
            .map(|(_, c)| c.clone())
            .unwrap();
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content.clone(), self.scale(&inv))
    }

    /// Exact division: `Some(q)` with `self == q * d`, else `None`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if self.is_zero() {
            return Some(MultiPoly::zero(self.vars.clone()));
        }
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::GrevLex;
        let (q, r) = self.div_rem(std::slice::from_ref(d), &order);
        if r.is_zero() {
            Some(q.into_iter().next().unwrap())
        } else {
            None
        }
    }

    /// Multivariate division: returns `(quotients, remainder)` with
    /// `self = sum_i q_i * divisors_i + remainder` and no remainder term
    /// divisible by any divisor's leading monomial.
    pub fn div_rem(&self, divisors: &[MultiPoly], order: &MonomialOrder) -> (Vec<MultiPoly>, MultiPoly) {
        let mut universe = self.vars.clone();
        for d in divisors {
            universe = universe.union(d.vars());
        }
        let p = self.embed(&universe);
        let ds: Vec<MultiPoly> = divisors.iter().map(|d| d.embed(&universe)).collect();
        let n = universe.len();

        struct Div {
            lm: Monomial,
            lc: Rat,
            tail: Vec<(Monomial, Rat)>,
        }
        let divs: Vec<Option<Div>> = ds
            .iter()
            .map(|d| {
                d.leading_term(order).map(|(lm, lc)| {
                    let tail = d
                        .terms
                        .iter()
                        .filter(|(m, _)| *m != lm)
                        .map(|(m, c)| (m.clone(), c.clone()))
                        .collect();
                    Div { lm: lm.clone(), lc: lc.clone(), tail }
                })
            })
            .collect();

        // working terms keyed by the active order
        let mut work: BTreeMap<Vec<i64>, (Monomial, Rat)> = BTreeMap::new();
        for (m, c) in &p.terms {
            work.insert(order.key(m, n), (m.clone(), c.clone()));
        }
        let add_into = |work: &mut BTreeMap<Vec<i64>, (Monomial, Rat)>, m: Monomial, c: Rat| {
            if c.is_zero() {
                return;
            }
            let k = order.key(&m, n);
            match work.entry(k) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert((m, c));
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = &e.get().1 + &c;
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.get_mut().1 = s;
                    }
                }
            }
        };

        let mut quotients = vec![MultiPoly::zero(universe.clone()); ds.len()];
        let mut remainder = MultiPoly::zero(universe.clone());

        while let Some((key, (mon, coef))) = work.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
            work.remove(&key);
            let mut reduced = false;
            for (di, d) in divs.iter().enumerate() {
                let Some(d) = d else { continue };
                if let Some(q) = mon.try_div(&d.lm) {
                    let factor = &coef / &d.lc;
                    quotients[di].add_term(q.clone(), factor.clone());
                    for (tm, tc) in &d.tail {
                        add_into(&mut work, q.mul(tm), -(tc * &factor));
                    }
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                remainder.add_term(mon, coef);
            }
        }
        (quotients, remainder)
    }

    /// Normal form of `self` modulo `divisors` under `order`.
    pub fn reduce(&self, divisors: &[MultiPoly], order: &MonomialOrder) -> MultiPoly {
        self.div_rem(divisors, order).1
    }

    /// Multiply each monomial by `fresh^(d - deg)` where `d` is the maximal
    /// degree in the `wrt` variables; substituting `fresh = 1` recovers `self`.
    pub fn homogenize(&self, fresh: &str, wrt: &BTreeSet<usize>) -> Result<MultiPoly> {
        if self.vars.contains(fresh) {
            return Err(Error::VariableClash(fresh.to_string()));
        }
        let target = self.vars.extended(&[fresh]);
        let fresh_idx = target.len() - 1;
        let d = self.terms.keys().map(|m| m.degree_in(wrt)).max().unwrap_or(0);
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let pad = d - m.degree_in(wrt);
            let mut pairs: Vec<(usize, u32)> = m.pairs().to_vec();
            if pad > 0 {
                pairs.push((fresh_idx, pad));
            }
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        Ok(out)
    }

    /// Convert to a dense univariate polynomial when supported on one variable.
    pub fn to_unipoly(&self, var: &str) -> Option<crate::unipoly::UniPoly> {
        let idx = self.vars.index_of(var)?;
        let sup = self.support();
        if !sup.iter().all(|&i| i == idx) {
            return None;
        }
        let deg = self.degree_in(idx) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.exp(idx) as usize] = c.clone();
        }
        Some(crate::unipoly::UniPoly::from_coeffs(var, coeffs))
    }

    pub fn from_unipoly(p: &crate::unipoly::UniPoly, vars: &VarSet) -> MultiPoly {
        let idx = vars
            .index_of(p.var())
            .unwrap_or_else(|| panic!("universe misses `{}`", p.var()));
        let mut out = MultiPoly::zero(vars.clone());
        for (e, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::var_pow(idx, e as u32), c.clone());
        }
        out
    }
}

fn self_term_embed(src: &VarSet, target: &VarSet, m: &Monomial) -> Monomial {
    if src == target {
        return m.clone();
    }
    let map: Vec<usize> = (0..src.len())
        .map(|i| target.index_of(src.name(i)).unwrap_or(usize::MAX))
        .collect();
    m.remap(&map)
}

/// Determinant of the matrix of partial derivatives d f_i / d var_j,
/// by fraction-free Bareiss elimination.
pub fn jacobian_det(fs: &[MultiPoly], var_names: &[&str]) -> Result<MultiPoly> {
    if fs.len() != var_names.len() {
        return Err(Error::NonSquareSystem { equations: fs.len(), variables: var_names.len() });
    }
    let mut universe = VarSet::empty();
    for f in fs {
        universe = universe.union(f.vars());
    }
    let n = fs.len();
    if n == 0 {
        return Ok(MultiPoly::constant(universe, Rat::one()));
    }
    let mut mat: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for f in fs {
        let f = f.embed(&universe);
        let mut row = Vec::with_capacity(n);
        for v in var_names {
            let idx = universe
                .index_of(v)
                .ok_or_else(|| Error::Invalid(format!("unknown variable `{v}` in Jacobian")))?;
            row.push(f.derivative(idx));
        }
        mat.push(row);
    }
    det_bareiss(mat, &universe)
}

/// Determinant of a square polynomial matrix (Bareiss, exact division).
pub fn det_bareiss(mut mat: Vec<Vec<MultiPoly>>, universe: &VarSet) -> Result<MultiPoly> {
    let n = mat.len();
    if n == 0 {
        return Ok(MultiPoly::constant(universe.clone(), Rat::one()));
    }
    let mut sign = 1i32;
    let mut prev = MultiPoly::constant(universe.clone(), Rat::one());
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !mat[r][k].is_zero()) else {
                return Ok(MultiPoly::zero(universe.clone()));
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = mat[k][k].mul(&mat[i][j]).sub(&mat[i][k].mul(&mat[k][j]));
                mat[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
        }
        for i in k + 1..n {
            mat[i][k] = MultiPoly::zero(universe.clone());
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    Ok(if sign < 0 { det.neg() } else { det })
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unified(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.vars.len();
        let order = MonomialOrder::GrevLex;
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a, n));
        let mut s = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(render_rat(&abs));
            }
            for &(vi, e) in m.pairs() {
                let name = self.vars.name(vi);
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            s.push_str(&factors.join("*"));
        }
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;

    fn uv() -> VarSet {
        VarSet::new(vec!["b", "m"])
    }

    fn p(src: &str) -> MultiPoly {
        parse_poly(src, &uv()).unwrap()
    }

    #[test]
    fn arithmetic_and_canonical_form() {
        let a = p("(1 + 2*b^2) - m*(b^2 + 2*b)");
        let b = p("2*b^2 - m*b^2 - 2*m*b + 1");
        assert_eq!(a, b);
        assert_eq!(a.sub(&b), MultiPoly::zero(uv()));
        assert_eq!(a.total_degree(), 3);
    }

    #[test]
    fn display_round_trip() {
        let a = p("2*b^2 - m*b^2 - 2*b*m + 1");
        let shown = a.to_string();
        let reparsed = parse_poly(&shown, &uv()).unwrap();
        assert_eq!(a, reparsed);
    }

    #[test]
    fn derivative_matches_hand_computation() {
        // d/db [(1+2b^2) - m(b^2+2b)] = 4b - 2mb - 2m = b(4-2m) - 2m
        let f = p("(1 + 2*b^2) - m*(b^2 + 2*b)");
        let j = f.derivative(0);
        assert_eq!(j, p("b*(4 - 2*m) - 2*m"));
    }

    #[test]
    fn jacobian_det_paper_example() {
        let f = p("(1 + 2*b^2) - m*(b^2 + 2*b)");
        let j = jacobian_det(&[f], &["b"]).unwrap();
        assert_eq!(j, p("b*(4 - 2*m) - 2*m"));
    }

    #[test]
    fn jacobian_det_identity() {
        let vs = VarSet::new(vec!["x", "y"]);
        let x = parse_poly("x", &vs).unwrap();
        let y = parse_poly("y", &vs).unwrap();
        let d = jacobian_det(&[x, y], &["x", "y"]).unwrap();
        assert_eq!(d.constant_value(), Some(Rat::one()));
    }

    #[test]
    fn jacobian_rejects_non_square() {
        let vs = VarSet::new(vec!["x", "y"]);
        let x = parse_poly("x", &vs).unwrap();
        assert!(matches!(
            jacobian_det(&[x], &["x", "y"]),
            Err(Error::NonSquareSystem { .. })
        ));
    }

    #[test]
    fn reduce_examples() {
        let vs = VarSet::new(vec!["x"]);
        let x2 = parse_poly("x^2", &vs).unwrap();
        let x = parse_poly("x", &vs).unwrap();
        assert!(x2.reduce(std::slice::from_ref(&x), &MonomialOrder::Lex).is_zero());

        let x2p1 = parse_poly("x^2 + 1", &vs).unwrap();
        let r = x2p1.reduce(std::slice::from_ref(&x), &MonomialOrder::Lex);
        assert_eq!(r.constant_value(), Some(Rat::one()));

        // J is already a normal form modulo f under lex b > m.
        let f = p("(1 + 2*b^2) - m*(b^2 + 2*b)");
        let j = p("b*(4 - 2*m) - 2*m");
        assert_eq!(j.reduce(std::slice::from_ref(&f), &MonomialOrder::Lex), j);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = p("b^3*m - 2*b*m + m^2 + 1");
        let g1 = p("b^2 - m");
        let g2 = p("b*m - 1");
        let order = MonomialOrder::Lex;
        let (qs, r) = f.div_rem(&[g1.clone(), g2.clone()], &order);
        let recon = qs[0].mul(&g1).add(&qs[1].mul(&g2)).add(&r);
        assert_eq!(recon, f);
    }

    #[test]
    fn homogenize_examples() {
        let f = p("b^2 - m");
        let h = f.homogenize("h", &[0usize].into_iter().collect()).unwrap();
        let hv = VarSet::new(vec!["b", "m", "h"]);
        assert_eq!(h, parse_poly("b^2 - m*h^2", &hv).unwrap());

        let c = MultiPoly::constant(uv(), int(5));
        let hc = c.homogenize("h", &[0usize].into_iter().collect()).unwrap();
        assert_eq!(hc.constant_value(), Some(int(5)));

        let f = p("(1 + 2*b^2) - m*(b^2 + 2*b)");
        let hf = f.homogenize("h", &[0usize].into_iter().collect()).unwrap();
        assert_eq!(hf, parse_poly("(2 - m)*b^2 - 2*m*b*h + h^2", &hv).unwrap());
        // clash
        assert!(matches!(f.homogenize("b", &[0usize].into_iter().collect()), Err(Error::VariableClash(_))));
    }

    #[test]
    fn exact_division() {
        let a = p("b^2 - m^2");
        let d = p("b - m");
        let q = a.div_exact(&d).unwrap();
        assert_eq!(q, p("b + m"));
        assert!(p("b^2 + 1").div_exact(&d).is_none());
    }
}
