//! Dense univariate polynomials over exact rationals, plus the integer
//! primitives (pseudo-remainders, contents) behind gcds and Sturm sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{int, render_rat, sign_of, Rat, RatInterval};

/// Coefficients ascending by degree; the top coefficient is nonzero.
/// The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero(var: &str) -> Self {
        UniPoly { var: var.to_string(), coeffs: Vec::new() }
    }

    pub fn constant(var: &str, c: Rat) -> Self {
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        UniPoly { var: var.to_string(), coeffs }
    }

    pub fn from_coeffs(var: &str, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var: var.to_string(), coeffs }
    }

    pub fn from_i64(var: &str, coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `x - q`
    pub fn linear_root(var: &str, q: &Rat) -> Self {
        UniPoly::from_coeffs(var, vec![-q.clone(), Rat::one()])
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(&self.var, out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(&self.var, out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(&self.var);
        }
        UniPoly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|k| k * c).collect() }
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.var);
        }
        let out: Vec<Rat> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        UniPoly::from_coeffs(&self.var, out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::rat::rat_to_f64(c);
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        sign_of(&self.eval(x))
    }

    /// Interval Horner evaluation over `[iv.lo, iv.hi]`.
    pub fn eval_interval(&self, iv: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(iv).add(&RatInterval::point(c.clone()));
        }
        acc
    }

    /// Quotient and remainder of rational polynomial division.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return (UniPoly::zero(&self.var), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let n = self.degree().unwrap();
        let mut quot = vec![Rat::zero(); n - dd + 1];
        let lead = d.leading_coeff();
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let v = dc * &c;
                rem[k + j] -= v;
            }
        }
        (UniPoly::from_coeffs(&self.var, quot), UniPoly::from_coeffs(&self.var, rem))
    }

    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Greatest common divisor, primitive with positive leading coefficient
    /// (a positive constant for coprime inputs). Uses the primitive PRS to
    /// keep integer coefficients small.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.primitive_int();
        let mut b = other.primitive_int();
        if a.is_empty() {
            return int_to_unipoly(&self.var, &b);
        }
        if b.is_empty() {
            return int_to_unipoly(&self.var, &a);
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_empty() {
                return int_to_unipoly(&self.var, &a);
            }
            if b.len() == 1 {
                return UniPoly::constant(&self.var, Rat::one());
            }
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(&r);
        }
    }

    /// `p / gcd(p, p')`, monic. Same real roots as `p`, each simple.
    pub fn square_free_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("square-free part"));
        }
        if self.is_constant() {
            return Ok(UniPoly::constant(&self.var, Rat::one()));
        }
        let g = self.gcd(&self.derivative());
        let q = self
            .div_exact(&g)
            .expect("gcd divides the polynomial");
        Ok(q.monic())
    }

    /// Content (integer-normalizing rational) and the primitive integer
    /// polynomial with positive leading coefficient.
    pub fn content_and_primitive(&self) -> (Rat, UniPoly) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let ints = self.primitive_int();
        let prim = int_to_unipoly(&self.var, &ints);
        let content = &self.leading_coeff() / &prim.leading_coeff();
        (content, prim)
    }

    pub fn primitive_part(&self) -> UniPoly {
        self.content_and_primitive().1
    }

    /// Integer coefficient list of the primitive part (positive lead).
    fn primitive_int(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().map_or(false, |c| c.is_negative()) {
            g = -g;
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        ints
    }

    /// All distinct rational roots, each divided out once from the square-free
    /// input. Best effort: gives up (returns what it found) if the constant or
    /// leading coefficient resists small-prime factoring.
    pub fn rational_roots_of_square_free(&self) -> (Vec<Rat>, UniPoly) {
        let mut p = self.primitive_part();
        let mut roots = Vec::new();
        if p.is_constant() {
            return (roots, p);
        }
        // x = 0 roots
        while p.coeff(0).is_zero() && !p.is_constant() {
            roots.push(Rat::zero());
            p = p
                .div_exact(&UniPoly::from_i64(&p.var.clone(), &[0, 1]))
                .unwrap();
        }
        if p.is_constant() {
            roots.sort();
            roots.dedup();
            return (roots, p);
        }
        let a0 = p.coeff(0).numer().abs();
        let an = p.leading_coeff().numer().abs();
        let (num_divs, den_divs) = match (divisors_capped(&a0), divisors_capped(&an)) {
            (Some(n), Some(d)) => (n, d),
            _ => return (roots, p), // factoring bailed; leave roots implicit
        };
        if num_divs.len().saturating_mul(den_divs.len()) > 10_000 {
            return (roots, p); // candidate set too large to be worth testing
        }
        let mut candidates: Vec<Rat> = Vec::new();
        for nu in &num_divs {
            for de in &den_divs {
                let q = Rat::new(nu.clone(), de.clone());
                candidates.push(q.clone());
                candidates.push(-q);
            }
        }
        candidates.sort();
        candidates.dedup();
        // integer-only zero test: q^d * p(n/q) = 0
        let is_root = |p: &UniPoly, cand: &Rat| -> bool {
            let d = p.degree().unwrap_or(0);
            let (n, q) = (cand.numer(), cand.denom());
            let mut acc = BigInt::zero();
            let mut npow = BigInt::one();
            let mut qpows = vec![BigInt::one()];
            for _ in 0..d {
                let last = qpows.last().unwrap() * q;
                qpows.push(last);
            }
            for (i, c) in p.coeffs.iter().enumerate() {
                debug_assert!(c.is_integer());
                acc += c.numer() * &npow * &qpows[d - i];
                if i < d {
                    npow *= n;
                }
            }
            acc.is_zero()
        };
        for cand in candidates {
            if p.is_constant() {
                break;
            }
            if is_root(&p, &cand) {
                roots.push(cand.clone());
                p = p.div_exact(&UniPoly::linear_root(&p.var.clone(), &cand)).unwrap();
            }
        }
        roots.sort();
        roots.dedup();
        (roots, p.primitive_part())
    }

    /// Best-effort display factorization: rational content, linear factors
    /// for rational roots (ascending, with multiplicity), then the residual.
    pub fn factor_for_display(&self) -> (Rat, Vec<(UniPoly, u32)>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let (mut content, prim) = self.content_and_primitive();
        let mut rest = prim;
        let mut linear: Vec<(Rat, u32)> = Vec::new();
        if let Ok(sf) = rest.square_free_part() {
            let (roots, _) = sf.rational_roots_of_square_free();
            for r in roots {
                let lin = UniPoly::linear_root(&rest.var.clone(), &r).primitive_part();
                let mut mult = 0u32;
                while let Some(q) = rest.div_exact(&lin) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    linear.push((r, mult));
                }
            }
        }
        linear.sort_by(|(a, _), (b, _)| a.cmp(b));
        let mut factors: Vec<(UniPoly, u32)> = linear
            .into_iter()
            .map(|(r, mult)| (UniPoly::linear_root(&self.var, &r).primitive_part(), mult))
            .collect();
        if !rest.is_constant() {
            let (c2, prim2) = rest.content_and_primitive();
            content *= c2;
            factors.push((prim2, 1));
        } else if let Some(c) = rest.constant_value_opt() {
            content *= c;
        }
        (content, factors)
    }

    fn constant_value_opt(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn rename(&self, var: &str) -> UniPoly {
        UniPoly { var: var.to_string(), coeffs: self.coeffs.clone() }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    s.push('-');
                }
                first = false;
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e == 0 {
                factors.push(render_rat(&abs));
            }
            if e == 1 {
                factors.push(self.var.clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", self.var, e));
            }
            s.push_str(&factors.join("*"));
        }
        write!(f, "{s}")
    }
}

// ---- integer-polynomial primitives ------------------------------------

fn int_to_unipoly(var: &str, coeffs: &[BigInt]) -> UniPoly {
    UniPoly::from_coeffs(var, coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

fn int_degree(p: &[BigInt]) -> usize {
    debug_assert!(p.last().map_or(true, |c| !c.is_zero()));
    p.len().saturating_sub(1)
}

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` scaled so the implicit multiplier is
/// positive: sign-faithful for signed remainder sequences.
pub(crate) fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (da, db) = (int_degree(a), int_degree(b));
    assert!(db <= da && !b.is_empty());
    let lead = b.last().unwrap().clone();
    let mut delta = (da - db + 1) as u32;
    // keep lead^delta positive so signs are preserved
    if lead.is_negative() && delta % 2 == 1 {
        delta += 1;
    }
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut scale_applied = 0u32;
    for k in (0..=da - db).rev() {
        // rem := lead * rem - rem[k+db] * x^k * b, one lead factor per step
        let top = rem[k + db].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
        scale_applied += 1;
        for (j, bc) in b.iter().enumerate() {
            rem[k + j] -= &top * bc;
        }
    }
    // apply the remaining scaling to keep exactly lead^delta
    for _ in scale_applied..delta {
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
    }
    int_trim(rem)
}

pub(crate) fn int_primitive(p: &[BigInt]) -> Vec<BigInt> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c / &g).collect()
}

/// Divisors of `|n|`, by trial division with a bail-out cap on the unfactored
/// cofactor. `None` when factoring gave up. Extraction is best effort: huge
/// coefficients are skipped, since isolation handles unrecognized rational
/// roots correctly anyway.
fn divisors_capped(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    // native arithmetic only; > 2^127 means no useful rational roots
    let mut m: u128 = u128::try_from(&n).ok()?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut d: u128 = 2;
    const CAP: u128 = 1_000_000;
    while d * d <= m && d <= CAP {
        let mut e = 0u32;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        if d * d > m {
            primes.push((m, 1)); // cofactor is prime
        } else {
            return None; // trial budget exhausted with a composite cofactor
        }
    }
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk: u128 = 1;
            for k in 0..=e {
                next.push(d.checked_mul(pk)?);
                if k < e {
                    pk = pk.checked_mul(p)?;
                }
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    divs.dedup();
    Some(divs.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn div_rem_and_gcd() {
        let a = UniPoly::from_i64("x", &[-1, 0, 1]); // x^2 - 1
        let b = UniPoly::from_i64("x", &[-1, 1]); // x - 1
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64("x", &[1, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, b);
    }

    #[test]
    fn square_free_examples() {
        // (m-1)^2 -> m-1
        let p = UniPoly::from_i64("m", &[1, -2, 1]);
        assert_eq!(p.square_free_part().unwrap(), UniPoly::from_i64("m", &[-1, 1]));

        // m^2+m-2 already square-free
        let p = UniPoly::from_i64("m", &[-2, 1, 1]);
        assert_eq!(p.square_free_part().unwrap(), p.monic());

        // 4m^4 - 60m^2 + 25: gcd with derivative is constant
        let p = UniPoly::from_i64("m", &[25, 0, -60, 0, 4]);
        let g = p.gcd(&p.derivative());
        assert!(g.is_constant());
        assert_eq!(p.square_free_part().unwrap(), p.monic());

        assert!(UniPoly::zero("m").square_free_part().is_err());
    }

    #[test]
    fn gcd_against_rational_euclid_oracle() {
        // independent oracle: plain rational Euclid
        fn euclid(a: &UniPoly, b: &UniPoly) -> UniPoly {
            let (mut a, mut b) = (a.clone(), b.clone());
            while !b.is_zero() {
                let r = a.div_rem(&b).1;
                a = b;
                b = r;
            }
            if a.is_zero() {
                a
            } else {
                a.primitive_part()
            }
        }
        let cases = [
            (vec![-6i64, 1, 1], vec![-2, 1]),         // (x+3)(x-2), x-2
            (vec![0, 0, 1], vec![0, 1]),              // x^2, x
            (vec![1, 2, 1], vec![1, 1]),              // (x+1)^2, x+1
            (vec![-1, 0, 0, 0, 1], vec![-1, 0, 1]),   // x^4-1, x^2-1
            (vec![3, 5], vec![7, 0, 2]),              // coprime
        ];
        for (ca, cb) in cases {
            let a = UniPoly::from_i64("x", &ca);
            let b = UniPoly::from_i64("x", &cb);
            let got = a.gcd(&b);
            let want = euclid(&a, &b);
            if want.is_constant() {
                assert!(got.is_constant(), "{a} vs {b}");
            } else {
                assert_eq!(got, want, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn rational_roots() {
        // (m-1)(m+2)(5m-6) = 5m^3 + ... build by multiplication
        let f = UniPoly::from_i64("m", &[-1, 1])
            .mul(&UniPoly::from_i64("m", &[2, 1]))
            .mul(&UniPoly::from_i64("m", &[-6, 5]));
        let (roots, rest) = f.rational_roots_of_square_free();
        assert_eq!(roots, vec![int(-2), int(1), rat(6, 5)]);
        assert!(rest.is_constant());
    }

    #[test]
    fn display_descending() {
        let p = UniPoly::from_i64("m", &[25, 0, -60, 0, 4]);
        assert_eq!(p.to_string(), "4*m^4-60*m^2+25");
        let q = UniPoly::from_i64("m", &[-1, -2, 1]);
        assert_eq!(q.to_string(), "m^2-2*m-1");
    }

    #[test]
    fn factor_display() {
        let f = UniPoly::from_i64("m", &[-2, 1, 1]); // (m+2)(m-1)
        let (c, factors) = f.factor_for_display();
        assert_eq!(c, Rat::one());
        let shown: Vec<String> = factors.iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(shown, vec!["m+2", "m-1"]);
    }
}
