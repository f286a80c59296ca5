//! Exact real algebraic numbers: a square-free defining polynomial plus an
//! isolating interval, with exact comparison, sign evaluation, refinement,
//! and readable display (radicals for degree <= 2 and biquadratics, else
//! `RootOf(poly, k)` with a decimal approximation).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{int, rat, rat_to_f64, render_rat, Rat, RatInterval};
use crate::sturm::{cauchy_bound, SturmSeq};
use crate::unipoly::UniPoly;

#[derive(Debug, Clone)]
pub struct RealAlgebraicNumber {
    repr: Repr,
}

#[derive(Debug, Clone)]
enum Repr {
    Rational(Rat),
    /// `poly` is square-free, integer-primitive, positive leading coefficient;
    /// exactly one real root lies in the open interval `(lo, hi)` and neither
    /// endpoint is a root.
    Irrational { poly: UniPoly, lo: Rat, hi: Rat },
}

/// Exact sign values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(v: i32) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl RealAlgebraicNumber {
    pub fn from_rat(q: Rat) -> Self {
        RealAlgebraicNumber { repr: Repr::Rational(q) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(int(n))
    }

    /// Construct from a defining polynomial and isolating interval; validates
    /// that the square-free part has exactly one root there.
    pub fn new_root(poly: &UniPoly, lo: Rat, hi: Rat) -> Result<Self> {
        let sf = poly.square_free_part()?.primitive_part();
        if lo >= hi {
            return Err(Error::Invalid("empty isolating interval".into()));
        }
        let seq = SturmSeq::new(&sf);
        let n = seq.count_open(&lo, &hi)?;
        if n != 1 {
            return Err(Error::Invalid(format!(
                "interval ({}, {}) isolates {} roots, expected 1",
                render_rat(&lo),
                render_rat(&hi),
                n
            )));
        }
        // collapse to an exact rational if the unique root is rational
        let (roots, rest) = sf.rational_roots_of_square_free();
        for r in &roots {
            if *r > lo && *r < hi {
                return Ok(Self::from_rat(r.clone()));
            }
        }
        let poly = if roots.is_empty() { sf } else { rest };
        Ok(RealAlgebraicNumber { repr: Repr::Irrational { poly, lo, hi } })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.repr, Repr::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Irrational { .. } => None,
        }
    }

    /// Square-free primitive integer defining polynomial (for rationals:
    /// `d*x - n` with positive `d`).
    pub fn defining_poly(&self, var: &str) -> UniPoly {
        match &self.repr {
            Repr::Rational(q) => UniPoly::from_coeffs(
                var,
                vec![
                    Rat::from_integer(-q.numer().clone()),
                    Rat::from_integer(q.denom().clone()),
                ],
            ),
            Repr::Irrational { poly, .. } => poly.rename(var),
        }
    }

    /// Rational bounds `lo <= value <= hi` (equal for rationals).
    pub fn bounds(&self) -> (Rat, Rat) {
        match &self.repr {
            Repr::Rational(q) => (q.clone(), q.clone()),
            Repr::Irrational { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    /// A rational strictly below the value.
    pub fn lower_rational(&self) -> Rat {
        match &self.repr {
            Repr::Rational(q) => q - int(1),
            Repr::Irrational { lo, .. } => lo.clone(),
        }
    }

    /// A rational strictly above the value.
    pub fn upper_rational(&self) -> Rat {
        match &self.repr {
            Repr::Rational(q) => q + int(1),
            Repr::Irrational { hi, .. } => hi.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.repr {
            Repr::Rational(q) => rat_to_f64(q),
            Repr::Irrational { .. } => {
                let r = self.refine(&rat(1, 1i64 << 40));
                let (lo, hi) = r.bounds();
                rat_to_f64(&((lo + hi) / int(2)))
            }
        }
    }

    /// Same number with isolating interval width at most `width`
    /// (bisection; sign changes are guaranteed by square-freeness).
    pub fn refine(&self, width: &Rat) -> Self {
        match &self.repr {
            Repr::Rational(_) => self.clone(),
            Repr::Irrational { poly, lo, hi } => {
                let (mut lo, mut hi) = (lo.clone(), hi.clone());
                let sign_lo = poly.sign_at(&lo);
                debug_assert!(sign_lo != 0);
                while &hi - &lo > *width {
                    let mid = (&lo + &hi) / int(2);
                    let s = poly.sign_at(&mid);
                    if s == 0 {
                        // landed exactly on the root
                        return Self::from_rat(mid);
                    }
                    if s == sign_lo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                RealAlgebraicNumber { repr: Repr::Irrational { poly: poly.clone(), lo, hi } }
            }
        }
    }

    /// Decimal approximation accurate to about `digits` places.
    pub fn approx(&self, digits: u32) -> f64 {
        let w = rat(1, 10i64.pow(digits.min(12) + 1));
        self.refine(&w).to_f64()
    }

    /// 1-based index among the increasing real roots of the defining poly.
    pub fn root_index(&self) -> usize {
        match &self.repr {
            Repr::Rational(_) => 1,
            Repr::Irrational { poly, lo, .. } => {
                let seq = SturmSeq::new(poly);
                let below = seq
                    .count_below(lo)
                    .expect("isolating endpoint is not a root");
                below + 1
            }
        }
    }

    /// Exact radical rendering when the defining polynomial has degree <= 2
    /// or is biquadratic; `None` otherwise.
    pub fn exact_string(&self) -> Option<String> {
        match &self.repr {
            Repr::Rational(q) => Some(render_rat(q)),
            Repr::Irrational { poly, .. } => radical_string(poly, self),
        }
    }
}

impl PartialEq for RealAlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraicNumber {}

impl PartialOrd for RealAlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => a.cmp(b),
            (Repr::Rational(q), Repr::Irrational { .. }) => {
                cmp_rat_irrational(q, other).reverse()
            }
            (Repr::Irrational { .. }, Repr::Rational(q)) => cmp_rat_irrational(q, self),
            (Repr::Irrational { poly: pa, lo: la, hi: ha }, Repr::Irrational { poly: pb, lo: lb, hi: hb }) => {
                cmp_irrational(pa, la, ha, pb, lb, hb)
            }
        }
    }
}

/// Ordering of the irrational `b` relative to rational `q` (returns how `b`
/// compares to `q`).
fn cmp_rat_irrational(q: &Rat, b: &RealAlgebraicNumber) -> Ordering {
    let Repr::Irrational { poly, lo, hi } = &b.repr else { unreachable!() };
    if q <= lo {
        return Ordering::Greater; // root > lo >= q
    }
    if q >= hi {
        return Ordering::Less;
    }
    let s = poly.sign_at(q);
    if s == 0 {
        return Ordering::Equal;
    }
    // unique simple root in (lo, hi): sign flips exactly at the root
    if s == poly.sign_at(lo) {
        Ordering::Greater // q still on the lo side, so root > q
    } else {
        Ordering::Less
    }
}

fn cmp_irrational(pa: &UniPoly, la: &Rat, ha: &Rat, pb: &UniPoly, lb: &Rat, hb: &Rat) -> Ordering {
    let (mut la, mut ha) = (la.clone(), ha.clone());
    let (mut lb, mut hb) = (lb.clone(), hb.clone());
    // equality is decided via the gcd having a root in the interval overlap
    let g = pa.gcd(pb);
    loop {
        if ha <= lb {
            return Ordering::Less;
        }
        if hb <= la {
            return Ordering::Greater;
        }
        let olo = if la > lb { la.clone() } else { lb.clone() };
        let ohi = if ha < hb { ha.clone() } else { hb.clone() };
        if !g.is_constant() && olo < ohi {
            let seq = SturmSeq::new(&g);
            if let Ok(n) = seq.count_open(&olo, &ohi) {
                if n > 0 {
                    return Ordering::Equal;
                }
            } else {
                // an overlap endpoint is a root of g; nudge by bisecting both
            }
        }
        bisect_step(pa, &mut la, &mut ha);
        bisect_step(pb, &mut lb, &mut hb);
    }
}

fn bisect_step(poly: &UniPoly, lo: &mut Rat, hi: &mut Rat) {
    let mid = (&*lo + &*hi) / int(2);
    let s = poly.sign_at(&mid);
    if s == 0 {
        // root hit exactly: collapse to a tiny interval around mid
        let w = (&*hi - &*lo) / int(1024);
        *lo = &mid - &w;
        *hi = &mid + &w;
        // keep invariants loose here; only used to converge comparisons
        return;
    }
    if s == poly.sign_at(lo) {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Exact sign of `p` at the algebraic point `a`.
pub fn sign_at(p: &UniPoly, a: &RealAlgebraicNumber) -> Sign {
    match &a.repr {
        Repr::Rational(q) => Sign::of(p.sign_at(q)),
        Repr::Irrational { poly, lo, hi } => {
            if p.is_zero() {
                return Sign::Zero;
            }
            let g = p.gcd(poly);
            if !g.is_constant() {
                let seq = SturmSeq::new(&g);
                if let Ok(n) = seq.count_open(lo, hi) {
                    if n > 0 {
                        return Sign::Zero;
                    }
                } else {
                    // endpoint of the isolating interval is a root of g; it cannot
                    // be `a` (poly(endpoints) != 0), so refine below decides
                }
            }
            // p(a) != 0: refine until the interval evaluation is sign-definite
            let (mut lo, mut hi) = (lo.clone(), hi.clone());
            loop {
                let iv = p.eval_interval(&RatInterval::new(lo.clone(), hi.clone()));
                if iv.is_positive() {
                    return Sign::Positive;
                }
                if iv.is_negative() {
                    return Sign::Negative;
                }
                bisect_step(poly, &mut lo, &mut hi);
            }
        }
    }
}

/// All real roots of `p`, exact rationals recognized, sorted increasingly
/// with pairwise disjoint isolating intervals.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<RealAlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation"));
    }
    let sf = p.square_free_part()?.primitive_part();
    if sf.is_constant() {
        return Ok(Vec::new());
    }
    let (mut rationals, mut rest) = sf.rational_roots_of_square_free();
    let mut irrationals: Vec<RealAlgebraicNumber> = Vec::new();
    'outer: loop {
        irrationals.clear();
        if rest.is_constant() {
            break;
        }
        let bound = cauchy_bound(&rest);
        let seq = SturmSeq::new(&rest);
        let (lo, hi) = (-bound.clone(), bound.clone());
        debug_assert!(rest.sign_at(&lo) != 0 && rest.sign_at(&hi) != 0);
        let total = seq.count_open(&lo, &hi).expect("Cauchy bound endpoints are not roots");
        let mut stack = vec![(lo, hi, total)];
        while let Some((lo, hi, n)) = stack.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                irrationals.push(RealAlgebraicNumber {
                    repr: Repr::Irrational { poly: rest.clone(), lo, hi },
                });
                continue;
            }
            let mid = (&lo + &hi) / int(2);
            if rest.sign_at(&mid) == 0 {
                // rational root discovered mid-bisection: factor out, restart
                rationals.push(mid.clone());
                rest = rest
                    .div_exact(&UniPoly::linear_root(rest.var(), &mid))
                    .unwrap()
                    .primitive_part();
                continue 'outer;
            }
            let left = seq.count_open(&lo, &mid).expect("mid checked");
            stack.push((lo, mid.clone(), left));
            stack.push((mid, hi, n - left));
        }
        break;
    }
    let mut all: Vec<RealAlgebraicNumber> = rationals
        .into_iter()
        .map(RealAlgebraicNumber::from_rat)
        .chain(irrationals)
        .collect();
    all.sort();
    Ok(disjointify(all))
}

/// Refine a sorted list of distinct values until isolating intervals are
/// pairwise disjoint (rationals count as degenerate point intervals).
pub fn disjointify(mut out: Vec<RealAlgebraicNumber>) -> Vec<RealAlgebraicNumber> {
    for i in 1..out.len() {
        loop {
            let a_hi = out[i - 1].bounds().1;
            let b_lo = out[i].bounds().0;
            if a_hi <= b_lo {
                break;
            }
            let wa = {
                let (l, h) = out[i - 1].bounds();
                &h - &l
            };
            let wb = {
                let (l, h) = out[i].bounds();
                &h - &l
            };
            let w = (if wa > wb { wa } else { wb }) / int(4);
            debug_assert!(!w.is_zero(), "distinct rationals are always disjoint");
            out[i - 1] = out[i - 1].refine(&w);
            out[i] = out[i].refine(&w);
        }
    }
    out
}

/// Merge sorted lists of algebraic numbers, removing exact duplicates and
/// keeping isolating intervals disjoint.
pub fn merge_sorted_roots(mut a: Vec<RealAlgebraicNumber>, b: Vec<RealAlgebraicNumber>) -> Vec<RealAlgebraicNumber> {
    a.extend(b);
    a.sort();
    a.dedup();
    disjointify(a)
}

/// An exact rational strictly between `a < b`: the midpoint of refined
/// bounds, verified strictly inside by exact comparison.
pub fn rational_between(a: &RealAlgebraicNumber, b: &RealAlgebraicNumber) -> Rat {
    assert!(a < b, "rational_between requires a < b");
    if let (Some(p), Some(q)) = (a.as_rational(), b.as_rational()) {
        return (p + q) / int(2);
    }
    let mut ra = a.clone();
    let mut rb = b.clone();
    loop {
        let a_hi = ra.bounds().1;
        let b_lo = rb.bounds().0;
        if a_hi <= b_lo {
            let cand = (&a_hi + &b_lo) / int(2);
            let c = RealAlgebraicNumber::from_rat(cand.clone());
            if *a < c && c < *b {
                return cand;
            }
        }
        let w = {
            let (l, h) = ra.bounds();
            let (l2, h2) = rb.bounds();
            let wa = &h - &l;
            let wb = &h2 - &l2;
            let m = if wa > wb { wa } else { wb };
            m / int(4)
        };
        let w = if w.is_zero() { rat(1, 16) } else { w };
        ra = ra.refine(&w);
        rb = rb.refine(&w);
    }
}

// ---- display ------------------------------------------------------------

/// `sqrt(n)` simplification: `disc = s^2 * d` with `d` square-free.
/// Gives up (returns `None`) on large unfactorable parts.
fn sqrt_decompose(n: &BigInt) -> Option<(BigInt, BigInt)> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let mut rest = n.clone();
    let mut outer = BigInt::one();
    let mut inner = BigInt::one();
    let mut d = BigInt::from(2u32);
    let cap = BigInt::from(1_000_000u64);
    while &d * &d <= rest && d <= cap {
        let mut e = 0u32;
        while (&rest % &d).is_zero() {
            rest = &rest / &d;
            e += 1;
        }
        if e > 0 {
            for _ in 0..e / 2 {
                outer *= &d;
            }
            if e % 2 == 1 {
                inner *= &d;
            }
        }
        d += 1;
    }
    if rest > BigInt::one() {
        if rest > cap {
            // maybe a perfect square anyway
            let s = rest.sqrt();
            if &s * &s == rest {
                outer *= s;
            } else {
                return None;
            }
        } else {
            inner *= rest;
        }
    }
    Some((outer, inner))
}

/// Render `p + q*sqrt(d)` with sign folding; `q != 0`.
fn quad_surd_string(p: &Rat, q: &Rat, d: &BigInt) -> String {
    let sqrt_part = if q.abs().is_one() {
        format!("sqrt({d})")
    } else {
        format!("{}*sqrt({})", render_rat(&q.abs()), d)
    };
    if p.is_zero() {
        if q.is_negative() {
            format!("-{sqrt_part}")
        } else {
            sqrt_part
        }
    } else if q.is_negative() {
        format!("{}-{}", render_rat(p), sqrt_part)
    } else {
        format!("{}+{}", render_rat(p), sqrt_part)
    }
}

/// Roots of an integer quadratic as `p +- q*sqrt(d)`; `(p, q, d)` with the
/// convention that root1 = p - q*sqrt(d) < root2 = p + q*sqrt(d), q > 0.
fn quadratic_surd(poly: &UniPoly) -> Option<(Rat, Rat, BigInt)> {
    if poly.degree() != Some(2) {
        return None;
    }
    let a = poly.coeff(2);
    let b = poly.coeff(1);
    let c = poly.coeff(0);
    // integer-primitive input: coefficients are integers
    let disc = &b * &b - int(4) * &a * &c;
    if !disc.is_positive() {
        return None;
    }
    let (s, d) = sqrt_decompose(disc.numer())?;
    if d.is_one() {
        return None; // rational roots; handled elsewhere
    }
    let p = -&b / (int(2) * &a);
    let q = Rat::from_integer(s) / (int(2) * &a).abs();
    Some((p, q, d))
}

fn radical_string(poly: &UniPoly, a: &RealAlgebraicNumber) -> Option<String> {
    let deg = poly.degree()?;
    if deg == 2 {
        let (p, q, d) = quadratic_surd(poly)?;
        // decide the branch exactly: root < p iff it is the minus branch
        let minus = a.root_index() == 1;
        let qq = if minus { -q } else { q };
        return Some(quad_surd_string(&p, &qq, &d));
    }
    if deg == 4 && poly.coeff(1).is_zero() && poly.coeff(3).is_zero() {
        // biquadratic: y = x^2 satisfies a*y^2 + b*y + c
        let quad = UniPoly::from_coeffs("y", vec![poly.coeff(0), poly.coeff(2), poly.coeff(4)]);
        let ys = isolate_roots(&quad).ok()?;
        let positive_ys: Vec<&RealAlgebraicNumber> = ys
            .iter()
            .filter(|y| sign_at(&UniPoly::from_i64("y", &[0, 1]), y).is_positive())
            .collect();
        if positive_ys.is_empty() {
            return None;
        }
        // find which y equals a^2 by refinement until the squares separate
        let negative = *a < RealAlgebraicNumber::from_rat(Rat::zero());
        let mut aa = a.clone();
        let mut width = rat(1, 1024);
        for _ in 0..64 {
            aa = aa.refine(&width);
            let (lo, hi) = aa.bounds();
            let sq = RatInterval::new(lo, hi).pow(2);
            let mut matches: Vec<&&RealAlgebraicNumber> = positive_ys
                .iter()
                .filter(|y| {
                    let (ylo, yhi) = y.refine(&width).bounds();
                    !(sq.hi < ylo || yhi < sq.lo)
                })
                .collect();
            if matches.len() == 1 {
                let y = *matches.remove(0);
                let inner = match y.as_rational() {
                    Some(q) => render_rat(q),
                    None => {
                        let ypoly = y.defining_poly("y").primitive_part();
                        let (p, q, d) = quadratic_surd(&ypoly)?;
                        let minus = y.root_index() == 1;
                        let qq = if minus { -q } else { q };
                        quad_surd_string(&p, &qq, &d)
                    }
                };
                let s = format!("sqrt({inner})");
                return Some(if negative { format!("-{s}") } else { s });
            }
            width = width / int(16);
        }
        return None;
    }
    None
}

impl std::fmt::Display for RealAlgebraicNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.exact_string() {
            Some(s) => write!(f, "{s}"),
            None => {
                let poly = match &self.repr {
                    Repr::Irrational { poly, .. } => poly.clone(),
                    Repr::Rational(_) => unreachable!("rationals render exactly"),
                };
                write!(f, "RootOf({}, {}) ~ {:.6}", poly, self.root_index(), self.approx(6))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic() -> UniPoly {
        UniPoly::from_i64("m", &[25, 0, -60, 0, 4])
    }

    #[test]
    fn isolates_paper_w_set() {
        // (m^2+m-2) * m * (5m-6) * (2-m): roots {-2, 0, 1, 6/5, 2}
        let f = UniPoly::from_i64("m", &[-2, 1, 1])
            .mul(&UniPoly::from_i64("m", &[0, 1]))
            .mul(&UniPoly::from_i64("m", &[-6, 5]))
            .mul(&UniPoly::from_i64("m", &[2, -1]));
        let roots = isolate_roots(&f).unwrap();
        let expect = vec![int(-2), int(0), int(1), rat(6, 5), int(2)];
        assert_eq!(roots.len(), expect.len());
        for (r, e) in roots.iter().zip(&expect) {
            assert_eq!(r.as_rational(), Some(e));
        }
    }

    #[test]
    fn no_real_roots() {
        let p = UniPoly::from_i64("x", &[1, 0, 1]);
        assert!(isolate_roots(&p).unwrap().is_empty());
        assert!(isolate_roots(&UniPoly::zero("x")).is_err());
    }

    #[test]
    fn quartic_root_near_0_655() {
        // oracle: the root in (0.65, 0.66) is sqrt((15 - 10*sqrt(2))/2)
        let expect = ((15.0 - 10.0 * 2.0f64.sqrt()) / 2.0).sqrt();
        let roots = isolate_roots(&quartic()).unwrap();
        assert_eq!(roots.len(), 4);
        let r = &roots[2]; // third of four: ~ -3.82, -0.65, 0.65, 3.82
        let v = r.approx(9);
        assert!((v - expect).abs() < 1e-9, "got {v}, want {expect}");
        assert!(0.65 < v && v < 0.66);
    }

    #[test]
    fn refine_sqrt2() {
        let a = RealAlgebraicNumber::new_root(&UniPoly::from_i64("x", &[-2, 0, 1]), int(1), int(2)).unwrap();
        let b = a.refine(&rat(1, 100));
        let (lo, hi) = b.bounds();
        assert!(&hi - &lo <= rat(1, 100));
        assert!(rat_to_f64(&lo) < std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 < rat_to_f64(&hi));
        let c = a.refine(&rat(1, 1000));
        let (lo, hi) = c.bounds();
        assert!(rat_to_f64(&lo) > 1.41 && rat_to_f64(&hi) < 1.42);
        // refinement never changes comparisons
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert_eq!(b.cmp(&c), Ordering::Equal);
    }

    #[test]
    fn refine_rational_fast_path() {
        let a = RealAlgebraicNumber::from_rat(rat(3, 2));
        let b = a.refine(&rat(1, 1000));
        assert_eq!(b.as_rational(), Some(&rat(3, 2)));
    }

    #[test]
    fn refine_silver_ratio_endpoint() {
        // root of m^2 - 2m - 1 in (2, 3) is 1 + sqrt(2) = 2.41421...
        let a = RealAlgebraicNumber::new_root(&UniPoly::from_i64("m", &[-1, -2, 1]), int(2), int(3)).unwrap();
        let b = a.refine(&rat(1, 1000));
        let (lo, hi) = b.bounds();
        assert!(rat_to_f64(&lo) <= 2.414_214 && 2.414_213 <= rat_to_f64(&hi));
    }

    #[test]
    fn compare_examples() {
        let one = RealAlgebraicNumber::from_int(1);
        let six_fifths = RealAlgebraicNumber::from_rat(rat(6, 5));
        assert!(one < six_fifths);

        let s1 = RealAlgebraicNumber::new_root(&UniPoly::from_i64("x", &[-2, 0, 1]), int(1), int(2)).unwrap();
        let s2 = RealAlgebraicNumber::new_root(&UniPoly::from_i64("x", &[-2, 0, 1]), int(0), rat(3, 2)).unwrap();
        assert_eq!(s1, s2);

        // quartic root near 0.655 < 3/4
        let roots = isolate_roots(&quartic()).unwrap();
        assert!(roots[2] < RealAlgebraicNumber::from_rat(rat(3, 4)));
    }

    #[test]
    fn sign_at_examples() {
        let two = RealAlgebraicNumber::from_int(2);
        assert_eq!(sign_at(&UniPoly::from_i64("m", &[-2, 1]), &two), Sign::Zero);

        let roots = isolate_roots(&quartic()).unwrap();
        let p = UniPoly::from_i64("m", &[-3, 4]); // 4m - 3
        assert_eq!(sign_at(&p, &roots[2]), Sign::Negative);

        // m^2 - 2m - 1 at 1 + sqrt(2) is zero
        let silver =
            RealAlgebraicNumber::new_root(&UniPoly::from_i64("m", &[-1, -2, 1]), int(2), int(3)).unwrap();
        assert_eq!(sign_at(&UniPoly::from_i64("m", &[-1, -2, 1]), &silver), Sign::Zero);
    }

    #[test]
    fn rational_between_examples() {
        let a = RealAlgebraicNumber::from_int(1);
        let b = RealAlgebraicNumber::from_rat(rat(6, 5));
        assert_eq!(rational_between(&a, &b), rat(11, 10));

        let z = RealAlgebraicNumber::from_int(0);
        assert_eq!(rational_between(&z, &a), rat(1, 2));

        // between the quartic root ~0.655 and 3/4, verified exactly
        let roots = isolate_roots(&quartic()).unwrap();
        let q = rational_between(&roots[2], &RealAlgebraicNumber::from_rat(rat(3, 4)));
        assert!(roots[2] < RealAlgebraicNumber::from_rat(q.clone()));
        assert!(q < rat(3, 4));
    }

    #[test]
    fn display_radicals() {
        let silver =
            RealAlgebraicNumber::new_root(&UniPoly::from_i64("m", &[-1, -2, 1]), int(2), int(3)).unwrap();
        assert_eq!(silver.to_string(), "1+sqrt(2)");

        let sqrt3_half =
            RealAlgebraicNumber::new_root(&UniPoly::from_i64("m", &[-3, 0, 4]), rat(1, 2), int(1)).unwrap();
        assert_eq!(sqrt3_half.to_string(), "1/2*sqrt(3)");

        let roots = isolate_roots(&quartic()).unwrap();
        assert_eq!(roots[2].to_string(), "sqrt(15/2-5*sqrt(2))");
        assert_eq!(roots[1].to_string(), "-sqrt(15/2-5*sqrt(2))");
    }

    #[test]
    fn root_index() {
        let roots = isolate_roots(&quartic()).unwrap();
        for (i, r) in roots.iter().enumerate() {
            assert_eq!(r.root_index(), i + 1);
        }
    }
}
