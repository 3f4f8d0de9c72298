//! The scalar field abstraction: all engines are generic over a field that
//! every rational-function constant embeds into.
//!
//! Two instances are used: `RatFunc` itself (SYMBOLIC mode, ctx `()`) and
//! plain rationals (SAMPLED mode, ctx = the sample point q0). Identity checks
//! in sampled mode run at several sample points and are reported as
//! "sampled-pass", not proofs.

use std::fmt::Debug;

use crate::qarith::{rat, ArithError, RatFunc, Rational};

pub trait QScalar: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Ctx: Clone + Debug + PartialEq + Send + Sync + 'static;

    fn embed(ctx: &Self::Ctx, rf: &RatFunc) -> Self;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None for zero.
    fn inv(&self) -> Option<Self>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = QScalar::add(self, rhs);
    }

    fn embed_qpow(ctx: &Self::Ctx, k: i64) -> Self {
        Self::embed(ctx, &RatFunc::q_pow(k))
    }
}

impl QScalar for RatFunc {
    type Ctx = ();

    fn embed(_ctx: &(), rf: &RatFunc) -> Self {
        rf.clone()
    }
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
}

impl QScalar for Rational {
    /// The sample point q0.
    type Ctx = Rational;

    fn embed(q0: &Rational, rf: &RatFunc) -> Self {
        rf.eval(q0).expect("sample point hits a pole or a disallowed value")
    }
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if num::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Verification mode for a suite run.
#[derive(Clone, Debug, PartialEq)]
pub enum Mode {
    Symbolic,
    /// Exact evaluation at each listed rational point.
    Sampled(Vec<Rational>),
}

impl Mode {
    pub fn sampled_default() -> Mode {
        Mode::Sampled(default_sample_points())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Mode::Symbolic)
    }

    pub fn label(&self) -> String {
        match self {
            Mode::Symbolic => "symbolic".into(),
            Mode::Sampled(pts) => format!(
                "sampled:{}",
                pts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(";")
            ),
        }
    }
}

/// The default sample points for SAMPLED mode.
pub fn default_sample_points() -> Vec<Rational> {
    vec![rat(7, 5), rat(9, 7), rat(11, 8)]
}

pub fn parse_sample_point(s: &str) -> Result<Rational, ArithError> {
    use std::str::FromStr;
    Rational::from_str(s.trim()).map_err(|_| ArithError::Parse(format!("bad rational `{s}`")))
}
