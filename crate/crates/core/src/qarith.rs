//! Exact arithmetic in Q(q): Laurent polynomials with arbitrary-precision
//! rational coefficients, canonical rational functions, q-integers,
//! q-factorials and q-binomials, plus evaluation at rational sample points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;
pub type Int = BigInt;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(Int::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("pole at q0 = {0}")]
    Pole(String),
    #[error("evaluation point {0} is not allowed (must avoid 0, 1, -1)")]
    DisallowedPoint(String),
    #[error("q-binomial index out of range: n = {n}, k = {k}")]
    BinomRange { n: i64, k: i64 },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

// ---------------------------------------------------------------------------
// Laurent polynomials
// ---------------------------------------------------------------------------

/// A Laurent polynomial in q over the rationals.
///
/// Invariant: no stored zero coefficients; the empty map is 0.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(0, Rational::one())
    }

    /// The monomial c * q^exp (dropped when c = 0).
    pub fn term(exp: i64, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// q^exp
    pub fn q_pow(exp: i64) -> Self {
        Self::term(exp, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(Rational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect() }
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q0: &Rational) -> Rational {
        assert!(!q0.is_zero(), "cannot evaluate Laurent polynomial at 0");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(q0, *e);
        }
        acc
    }

    /// Dense ordinary-polynomial view: (minimal exponent, coefficients from it).
    fn to_dense(&self) -> (i64, Vec<Rational>) {
        if self.is_zero() {
            return (0, vec![]);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(lo: i64, v: Vec<Rational>) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in v.into_iter().enumerate() {
            if !c.is_zero() {
                terms.insert(lo + i as i64, c);
            }
        }
        LaurentPoly { terms }
    }

    /// Exact division; error if the division leaves a remainder.
    pub fn div_exact(&self, other: &Self) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (la, va) = self.to_dense();
        let (lb, vb) = other.to_dense();
        let (q, r) = poly_divrem(&va, &vb);
        if !r.is_empty() {
            return Err(ArithError::InexactDivision);
        }
        Ok(Self::from_dense(la - lb, q))
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Canonical serialization: "exp:coeff,..." sorted by exponent, "" for 0.
    pub fn serialize(&self) -> String {
        self.terms
            .iter()
            .map(|(e, c)| format!("{}:{}", e, c))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for part in s.split(',') {
            let (e, c) = part
                .split_once(':')
                .ok_or_else(|| ArithError::Parse(format!("bad term `{part}`")))?;
            let exp: i64 = e.trim().parse().map_err(|_| ArithError::Parse(format!("bad exponent `{e}`")))?;
            let coeff = Rational::from_str(c.trim())
                .map_err(|_| ArithError::Parse(format!("bad coefficient `{c}`")))?;
            if !coeff.is_zero() {
                terms.insert(exp, coeff);
            }
        }
        Ok(LaurentPoly { terms })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !abs.is_one() || *e == 0;
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            if *e != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

fn pow_rat(x: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

// dense ordinary-polynomial helpers -----------------------------------------

fn poly_trim(v: &mut Vec<Rational>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// (quotient, remainder) with divisor nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = a.to_vec();
    poly_trim(&mut r);
    let mut b = b.to_vec();
    poly_trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let t = &b[i] * &c;
            r[dr - db + i] -= t;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
        if r.len() - 1 < db + 0 && r.len() <= db {
            break;
        }
    }
    (q, r)
}

/// Monic gcd over Q via the Euclidean algorithm, remainders normalized monic
/// at each step to keep coefficients small.
fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let (_, mut r) = poly_divrem(&x, &y);
        if let Some(lead) = r.last().cloned() {
            for c in r.iter_mut() {
                *c /= &lead;
            }
        }
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// A rational function in q in canonical form.
///
/// Invariants: den != 0; gcd(num, den) = 1 after shifting exponents;
/// den has minimal exponent 0 and its minimal-exponent coefficient is 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        let (ln, vn) = num.to_dense();
        let (ld, vd) = den.to_dense();
        let g = poly_gcd(&vn, &vd);
        let (vn, rn) = poly_divrem(&vn, &g);
        let (vd, rd) = poly_divrem(&vd, &g);
        debug_assert!(rn.is_empty() && rd.is_empty());
        let t = vd[0].clone();
        debug_assert!(!t.is_zero());
        let vn = vn.into_iter().map(|c| c / &t).collect::<Vec<_>>();
        let vd = vd.into_iter().map(|c| c / &t).collect::<Vec<_>>();
        RatFunc {
            num: LaurentPoly::from_dense(ln - ld, vn),
            den: LaurentPoly::from_dense(0, vd),
        }
    }

    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::int(n))
    }

    /// q^k
    pub fn q_pow(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_pow(k))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den == LaurentPoly::one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::normalize(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact evaluation at q0, which must avoid 0, 1, -1 and poles.
    pub fn eval(&self, q0: &Rational) -> Result<Rational, ArithError> {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(ArithError::DisallowedPoint(q0.to_string()));
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ArithError::Pole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Limit value at q = 1, well defined exactly when the canonical
    /// denominator does not vanish there (num and den share no factor).
    pub fn eval_at_one(&self) -> Option<Rational> {
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(&one) / d)
    }

    /// Canonical serialization "num|den".
    pub fn serialize(&self) -> String {
        format!("{}|{}", self.num.serialize(), self.den.serialize())
    }

    pub fn parse(s: &str) -> Result<Self, ArithError> {
        let (n, d) = s
            .split_once('|')
            .ok_or_else(|| ArithError::Parse(format!("missing `|` in `{s}`")))?;
        let num = LaurentPoly::parse(n)?;
        let den = LaurentPoly::parse(d)?;
        Self::new(num, den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// q-numbers
// ---------------------------------------------------------------------------

/// The q-integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.
pub fn qnum_poly(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return qnum_poly(-n).neg();
    }
    let mut terms = BTreeMap::new();
    for k in 0..n {
        terms.insert(n - 1 - 2 * k, Rational::one());
    }
    LaurentPoly { terms }
}

pub fn qnum(n: i64) -> RatFunc {
    RatFunc::from_poly(qnum_poly(n))
}

/// [n]! = [1][2]...[n]
pub fn qfact_poly(n: i64) -> LaurentPoly {
    assert!(n >= 0);
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = acc.mul(&qnum_poly(k));
    }
    acc
}

pub fn qfact(n: i64) -> RatFunc {
    RatFunc::from_poly(qfact_poly(n))
}

/// q-binomial coefficient; the division is exact, so the result is a
/// Laurent polynomial.
pub fn qbinom(n: i64, k: i64) -> Result<RatFunc, ArithError> {
    if k < 0 || k > n {
        return Err(ArithError::BinomRange { n, k });
    }
    let mut num = LaurentPoly::one();
    for j in 0..k {
        num = num.mul(&qnum_poly(n - j));
    }
    let den = qfact_poly(k);
    Ok(RatFunc::from_poly(num.div_exact(&den)?))
}

/// q^{s(s-1)/2} [s]!  — the pairing normalization of antisymmetrized vectors.
pub fn pairing_norm(s: i64) -> RatFunc {
    RatFunc::from_poly(qfact_poly(s).shift(s * (s - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn exponent_cancellation() {
        let p = LaurentPoly::q_pow(1).mul(&LaurentPoly::q_pow(-1));
        assert_eq!(p, LaurentPoly::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = lp("-1:-1,1:1"); // q - q^-1
        let b = lp("-1:1,1:1"); // q + q^-1
        assert_eq!(a.mul(&b), lp("-2:-1,2:1"));
    }

    #[test]
    fn q2_times_q3() {
        // [2][3] = q^3 + 2q + 2q^-1 + q^-3 = [4] + [2]
        let prod = qnum_poly(2).mul(&qnum_poly(3));
        assert_eq!(prod, lp("-3:1,-1:2,1:2,3:1"));
        assert_eq!(prod, qnum_poly(4).add(&qnum_poly(2)));
    }

    #[test]
    fn normalize_common_factor() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = lp("0:-1,2:1");
        let den = lp("0:-1,1:1");
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f, RatFunc::from_poly(lp("0:1,1:1")));
    }

    #[test]
    fn q4_over_q2() {
        let f = qnum(4).div(&qnum(2)).unwrap();
        assert_eq!(f, RatFunc::from_poly(lp("-2:1,2:1")));
    }

    #[test]
    fn zero_over_poly() {
        let f = RatFunc::new(LaurentPoly::zero(), qnum_poly(3)).unwrap();
        assert!(f.is_zero());
        assert_eq!(f, RatFunc::zero());
    }

    #[test]
    fn qnum_basics() {
        assert_eq!(qnum(1), RatFunc::one());
        assert_eq!(qnum(2), RatFunc::from_poly(lp("-1:1,1:1")));
        assert!(qnum(0).is_zero());
        assert_eq!(qnum(-3), qnum(3).neg());
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(5, 0).unwrap(), RatFunc::one());
        // (4 choose 2)_q = q^4 + q^2 + 2 + q^-2 + q^-4
        assert_eq!(qbinom(4, 2).unwrap(), RatFunc::from_poly(lp("-4:1,-2:1,0:2,2:1,4:1")));
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k).unwrap(), qbinom(n, n - k).unwrap());
            }
        }
        assert!(qbinom(3, 4).is_err());
        assert!(qbinom(3, -1).is_err());
    }

    #[test]
    fn qbinom_exponent_range() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let b = qbinom(n, k).unwrap();
                let p = b.num();
                if p.is_zero() {
                    continue;
                }
                assert_eq!(p.min_exp().unwrap(), -k * (n - k));
                assert_eq!(p.max_exp().unwrap(), k * (n - k));
            }
        }
    }

    #[test]
    fn eval_q2() {
        let q0 = rat(2, 1);
        assert_eq!(qnum(2).eval(&q0).unwrap(), rat(5, 2));
        // matches the Laurent expansion
        let b = qbinom(4, 2).unwrap();
        assert_eq!(b.eval(&q0).unwrap(), b.num().eval(&q0));
    }

    #[test]
    fn eval_disallowed() {
        assert!(qnum(3).eval(&rat_int(1)).is_err());
        assert!(qnum(3).eval(&rat_int(-1)).is_err());
        assert!(qnum(3).eval(&rat_int(0)).is_err());
    }

    #[test]
    fn qnum_nonzero_at_rational_points() {
        for q0 in [rat(7, 5), rat(9, 7), rat(11, 8), rat(2, 1), rat(-3, 2)] {
            for n in 1..=8 {
                assert!(!qnum(n).eval(&q0).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn qnum_addition_identity() {
        // [m+n] = q^n [m] + q^-m [n]
        for m in 0..=8i64 {
            for n in 0..=8i64 {
                let lhs = qnum(m + n);
                let rhs = qnum(m)
                    .mul(&RatFunc::q_pow(n))
                    .add(&qnum(n).mul(&RatFunc::q_pow(-m)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn serialization_roundtrip() {
        let f = qnum(4).div(&qnum(3)).unwrap();
        let s = f.serialize();
        assert_eq!(RatFunc::parse(&s).unwrap(), f);
        let p = lp("-2:1,0:2,2:1");
        assert_eq!(p.serialize(), "-2:1,0:2,2:1");
        assert_eq!(LaurentPoly::parse("").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn pairing_norm_value() {
        // q^{1} [2]! = q^2 + 1
        assert_eq!(pairing_norm(2), RatFunc::from_poly(lp("0:1,2:1")));
    }

    #[test]
    fn eval_at_one_limit() {
        assert_eq!(qnum(5).eval_at_one(), Some(rat_int(5)));
        assert_eq!(qbinom(4, 2).unwrap().eval_at_one(), Some(rat_int(6)));
        // 1/(q-1) has a pole at 1
        let f = RatFunc::new(LaurentPoly::one(), lp("0:-1,1:1")).unwrap();
        assert_eq!(f.eval_at_one(), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((-4i64..=4, -5i64..=5), 0..4).prop_map(|ts| {
                let mut p = LaurentPoly::zero();
                for (e, c) in ts {
                    p = p.add(&LaurentPoly::term(e, rat_int(c)));
                }
                p
            })
        }

        fn small_rf() -> impl Strategy<Value = RatFunc> {
            (small_poly(), small_poly()).prop_map(|(n, d)| {
                if d.is_zero() {
                    RatFunc::from_poly(n)
                } else {
                    RatFunc::new(n, d).unwrap()
                }
            })
        }

        proptest! {
            #[test]
            fn normalize_idempotent(f in small_rf()) {
                let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
                prop_assert_eq!(&again, &f);
            }

            #[test]
            fn mul_assoc_comm(a in small_rf(), b in small_rf(), c in small_rf()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }
        }
    }
}
