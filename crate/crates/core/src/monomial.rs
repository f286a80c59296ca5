//! Sparse monomials and monomial orders.
//!
//! Exponents are stored against universe indices (see [`crate::var::VarSet`]),
//! sorted, with zero exponents never stored. Orders are total, multiplicative
//! well-orderings; the block order is the elimination order used throughout.

use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Sparse exponent vector, sorted by variable index, no zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn var(index: usize) -> Self {
        Monomial { exps: vec![(index, 1)] }
    }

    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(index, exp)] }
        }
    }

    pub fn from_pairs(mut pairs: Vec<(usize, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable_by_key(|&(i, _)| i);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "repeated variable in monomial");
        }
        Monomial { exps: pairs }
    }

    pub fn exp(&self, index: usize) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|p| self.exps[p].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, vars: &BTreeSet<usize>) -> u32 {
        self.exps.iter().filter(|(i, _)| vars.contains(i)).map(|&(_, e)| e).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().map(|&(i, _)| i)
    }

    pub fn supported_on(&self, vars: &BTreeSet<usize>) -> bool {
        self.exps.iter().all(|(i, _)| vars.contains(i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        let mut j = 0;
        for &(i, e) in &self.exps {
            let mut rem = e;
            while j < other.exps.len() && other.exps[j].0 < i {
                return None; // divisor has a variable self lacks
            }
            if j < other.exps.len() && other.exps[j].0 == i {
                if other.exps[j].1 > e {
                    return None;
                }
                rem = e - other.exps[j].1;
                j += 1;
            }
            if rem > 0 {
                out.push((i, rem));
            }
        }
        if j < other.exps.len() {
            return None;
        }
        Some(Monomial { exps: out })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.try_div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1.max(other.exps[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Re-index through `map` (old index -> new index).
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut pairs: Vec<(usize, u32)> =
            self.exps.iter().map(|&(i, e)| (map[i], e)).collect();
        pairs.sort_unstable_by_key(|&(i, _)| i);
        Monomial { exps: pairs }
    }

    /// Monomial restricted to a variable subset.
    pub fn restrict(&self, vars: &BTreeSet<usize>) -> Monomial {
        Monomial { exps: self.exps.iter().copied().filter(|(i, _)| vars.contains(i)).collect() }
    }
}

/// Total multiplicative well-orderings on monomials over a fixed universe.
///
/// `Block` compares the eliminated block first (graded reverse lexicographic
/// inside each block), which makes it an elimination order for that block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { eliminate: BTreeSet<usize> },
}

impl MonomialOrder {
    pub fn elimination(eliminate: BTreeSet<usize>) -> Self {
        MonomialOrder::Block { eliminate }
    }

    /// Sort key: comparing keys lexicographically realizes the order.
    /// Key layout is fixed for a given `(order, nvars)`.
    pub fn key(&self, m: &Monomial, nvars: usize) -> Vec<i64> {
        match self {
            MonomialOrder::Lex => {
                let mut k = vec![0i64; nvars];
                for &(i, e) in m.pairs() {
                    k[i] = e as i64;
                }
                k
            }
            MonomialOrder::GrevLex => {
                let all: Vec<usize> = (0..nvars).collect();
                grevlex_key(m, &all)
            }
            MonomialOrder::Block { eliminate } => {
                let first: Vec<usize> = (0..nvars).filter(|i| eliminate.contains(i)).collect();
                let second: Vec<usize> = (0..nvars).filter(|i| !eliminate.contains(i)).collect();
                let mut k = grevlex_key(m, &first);
                k.extend(grevlex_key(m, &second));
                k
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        self.key(a, nvars).cmp(&self.key(b, nvars))
    }
}

/// Grevlex key over the (ascending) index subset `vars`:
/// total degree first, then negated exponents from the least significant
/// variable backwards.
fn grevlex_key(m: &Monomial, vars: &[usize]) -> Vec<i64> {
    let mut k = Vec::with_capacity(vars.len() + 1);
    let deg: i64 = vars.iter().map(|&i| m.exp(i) as i64).sum();
    k.push(deg);
    for &i in vars.iter().rev() {
        k.push(-(m.exp(i) as i64));
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.to_vec())
    }

    #[test]
    fn mul_div_lcm() {
        let a = m(&[(0, 2), (2, 1)]);
        let b = m(&[(0, 1), (1, 3)]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[(0, 3), (1, 3), (2, 1)]));
        assert_eq!(p.try_div(&a), Some(b.clone()));
        assert_eq!(a.try_div(&b), None);
        assert_eq!(a.lcm(&b), m(&[(0, 2), (1, 3), (2, 1)]));
        assert!(!a.coprime(&b));
        assert!(m(&[(1, 1)]).coprime(&m(&[(2, 4)])));
    }

    #[test]
    fn lex_order() {
        // universe [x, y]: x > y^5
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[(0, 1)]), &m(&[(1, 5)]), 2), Ordering::Greater);
    }

    #[test]
    fn grevlex_degree_first_then_last_var_smallest() {
        let ord = MonomialOrder::GrevLex;
        // deg 2 beats deg 1
        assert_eq!(ord.cmp(&m(&[(1, 2)]), &m(&[(0, 1)]), 2), Ordering::Greater);
        // x*z vs y^2 in [x,y,z]: equal degree, z-exponent decides (smaller wins)
        assert_eq!(
            ord.cmp(&m(&[(0, 1), (2, 1)]), &m(&[(1, 2)]), 3),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates() {
        // universe [b, t, m], eliminate {b, t}: any monomial containing b or t
        // beats every pure-m monomial.
        let ord = MonomialOrder::elimination([0usize, 1].into_iter().collect());
        assert_eq!(ord.cmp(&m(&[(0, 1)]), &m(&[(2, 9)]), 3), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[(1, 1)]), &m(&[(2, 1)]), 3), Ordering::Greater);
    }
}
