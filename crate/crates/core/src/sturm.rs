//! Sturm sequences: signed remainder sequences whose sign variations count
//! real roots in an interval. The sequence is kept over the integers with
//! sign-faithful pseudo-remainders and content removal.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{int, Rat};
use crate::unipoly::{int_primitive, int_pseudo_rem, UniPoly};

#[derive(Debug, Clone)]
pub struct SturmSeq {
    seq: Vec<Vec<BigInt>>,
}

fn int_coeffs(p: &UniPoly) -> Vec<BigInt> {
    p.primitive_part()
        .coeffs()
        .iter()
        .map(|c| c.numer().clone())
        .collect()
}

fn eval_sign(p: &[BigInt], x: &Rat) -> i32 {
    // sign of q^d * p(n/q) = sum a_i n^i q^(d-i): pure integer arithmetic
    // (q > 0, so the sign is unchanged)
    if p.is_empty() {
        return 0;
    }
    let n = x.numer();
    let q = x.denom();
    let d = p.len() - 1;
    let mut qpow = vec![BigInt::from(1u32)];
    for _ in 0..d {
        qpow.push(qpow.last().unwrap() * q);
    }
    let mut acc = BigInt::zero();
    let mut npow = BigInt::from(1u32);
    for (i, c) in p.iter().enumerate() {
        acc += c * &npow * &qpow[d - i];
        if i < d {
            npow *= n;
        }
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl SturmSeq {
    /// Build the sequence for a square-free polynomial.
    pub fn new(p: &UniPoly) -> Self {
        let p0 = int_coeffs(p);
        let mut seq = vec![p0.clone()];
        if p0.len() <= 1 {
            return SturmSeq { seq };
        }
        let deriv = {
            let mut d: Vec<BigInt> = p0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect();
            while d.last().map_or(false, |c| c.is_zero()) {
                d.pop();
            }
            int_primitive(&d)
        };
        seq.push(deriv);
        loop {
            let n = seq.len();
            let prev = &seq[n - 2];
            let cur = &seq[n - 1];
            if cur.is_empty() || cur.len() == 1 {
                break;
            }
            let r = int_pseudo_rem(prev, cur);
            if r.is_empty() {
                break;
            }
            let mut r = int_primitive(&r);
            for c in r.iter_mut() {
                *c = -std::mem::take(c);
            }
            seq.push(r);
        }
        if std::env::var("PRF_TRACE").is_ok() {
            let bits: u64 = seq.iter().flat_map(|p| p.iter().map(|c| c.bits())).max().unwrap_or(0);
            eprintln!("    sturm seq: {} polys, max coeff bits {}", seq.len(), bits);
        }
        SturmSeq { seq }
    }

    pub fn sign_of_poly_at(&self, x: &Rat) -> i32 {
        eval_sign(&self.seq[0], x)
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0usize;
        let mut last = 0i32;
        for p in &self.seq {
            let s = eval_sign(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at_plus_inf(&self) -> usize {
        let mut count = 0usize;
        let mut last = 0i32;
        for p in &self.seq {
            let Some(lead) = p.last() else { continue };
            let s = if lead.is_positive() { 1 } else { -1 };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at_minus_inf(&self) -> usize {
        let mut count = 0usize;
        let mut last = 0i32;
        for p in &self.seq {
            let Some(lead) = p.last() else { continue };
            let deg = p.len() - 1;
            let mut s = if lead.is_positive() { 1 } else { -1 };
            if deg % 2 == 1 {
                s = -s;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of real roots in the open interval `(lo, hi)`.
    /// Errors with `EndpointIsRoot` if either endpoint is a root.
    pub fn count_open(&self, lo: &Rat, hi: &Rat) -> Result<usize> {
        assert!(lo < hi, "empty interval");
        if self.sign_of_poly_at(lo) == 0 {
            return Err(Error::EndpointIsRoot(crate::rat::render_rat(lo)));
        }
        if self.sign_of_poly_at(hi) == 0 {
            return Err(Error::EndpointIsRoot(crate::rat::render_rat(hi)));
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    /// Total number of real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_minus_inf() - self.variations_at_plus_inf()
    }

    /// Number of real roots in `(-inf, x)`, `x` not a root.
    pub fn count_below(&self, x: &Rat) -> Result<usize> {
        if self.sign_of_poly_at(x) == 0 {
            return Err(Error::EndpointIsRoot(crate::rat::render_rat(x)));
        }
        Ok(self.variations_at_minus_inf() - self.variations_at(x))
    }
}

/// Real-root count of a square-free `p` on the open interval `(lo, hi)`.
pub fn sturm_count(p: &UniPoly, lo: &Rat, hi: &Rat) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("Sturm count"));
    }
    if lo >= hi {
        return Err(Error::Invalid(format!(
            "empty interval ({}, {})",
            crate::rat::render_rat(lo),
            crate::rat::render_rat(hi)
        )));
    }
    SturmSeq::new(p).count_open(lo, hi)
}

/// Cauchy bound rounded up to a power of two, so bisection endpoints stay
/// dyadic with small numerators: every real root lies in `(-B, B)`.
pub fn cauchy_bound(p: &UniPoly) -> Rat {
    let lead = p.leading_coeff();
    let mut max = Rat::zero();
    if let Some(d) = p.degree() {
        for k in 0..d {
            let q = (p.coeff(k) / &lead).abs();
            if q > max {
                max = q;
            }
        }
    }
    let bound = max + int(1);
    let mut b = int(1);
    while b < bound {
        b = b * int(2);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn counts_quadratics() {
        // x^2 - 1 on (-2, 2) -> 2
        let p = UniPoly::from_i64("x", &[-1, 0, 1]);
        assert_eq!(sturm_count(&p, &int(-2), &int(2)).unwrap(), 2);

        // b^2 - 6b + 2 on (1/2, 100) -> 1 (roots 3 +- sqrt(7))
        let p = UniPoly::from_i64("b", &[2, -6, 1]);
        assert_eq!(sturm_count(&p, &rat(1, 2), &int(100)).unwrap(), 1);

        // m^2 + m - 2 on (0, 3) -> 1 (positive root 1)
        let p = UniPoly::from_i64("m", &[-2, 1, 1]);
        assert_eq!(sturm_count(&p, &int(0), &int(3)).unwrap(), 1);
    }

    #[test]
    fn endpoint_root_rejected() {
        let p = UniPoly::from_i64("x", &[-1, 0, 1]);
        assert!(matches!(
            sturm_count(&p, &int(1), &int(2)),
            Err(Error::EndpointIsRoot(_))
        ));
    }

    #[test]
    fn count_all_quartic() {
        // 4m^4 - 60m^2 + 25 has four real roots
        let p = UniPoly::from_i64("m", &[25, 0, -60, 0, 4]);
        assert_eq!(SturmSeq::new(&p).count_all(), 4);
        // x^2 + 1 has none
        let q = UniPoly::from_i64("x", &[1, 0, 1]);
        assert_eq!(SturmSeq::new(&q).count_all(), 0);
    }

    #[test]
    fn bound_contains_roots() {
        let p = UniPoly::from_i64("x", &[2, -6, 1]); // roots ~0.354, ~5.646
        let b = cauchy_bound(&p);
        assert_eq!(SturmSeq::new(&p).count_open(&-b.clone(), &b).unwrap(), 2);
    }
}
