//! Exact symbolic computation for q-deformed Grassmannian coordinate
//! algebras: R-matrix constructions, the quantum matrix algebra, graded
//! quotient models, covariant first-order differential calculi and the
//! q-deformed Chern character, all machine-verified over the field of
//! rational functions in q (or over Q at rational sample points).

pub mod qarith;
pub mod scalar;

pub mod oracle;
pub mod tensornet;

pub mod rmat;

pub mod diagdsl;

pub mod frt;

pub mod words;

pub mod grassalg;

pub mod fodc;

pub mod chern;

pub mod report;

pub use qarith::{qbinom, qfact, qnum, LaurentPoly, RatFunc, Rational};
pub use scalar::{Mode, QScalar};
