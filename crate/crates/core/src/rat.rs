//! Exact rational scalars and rational interval arithmetic.
//!
//! `Rat` is the coefficient field everywhere in this crate. The interval type
//! is the workhorse behind exact sign determination at real algebraic points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_to_f64(q: &Rat) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Canonical text form: `2`, `-7`, `6/5`.
pub fn render_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn sign_of(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(q: Rat) -> Self {
        RatInterval { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn neg(&self) -> Self {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_negative() {
            RatInterval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            RatInterval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatInterval::point(Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / int(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_canonical_forms() {
        assert_eq!(render_rat(&rat(6, 5)), "6/5");
        assert_eq!(render_rat(&rat(-4, 2)), "-2");
        assert_eq!(render_rat(&int(0)), "0");
        assert_eq!(render_rat(&rat(3, -6)), "-1/2");
    }

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-1, 2), int(3));
        let b = RatInterval::new(int(-2), int(-1));
        let p = a.mul(&b);
        assert_eq!(p.lo, int(-6));
        assert_eq!(p.hi, int(1));
        assert!(p.contains_zero());
    }

    #[test]
    fn interval_pow_even() {
        let a = RatInterval::new(int(-2), int(1));
        let sq = a.pow(2);
        // interval square without refinement: [-2,1]*[-2,1] = [-2,4]
        assert_eq!(sq.hi, int(4));
    }
}
