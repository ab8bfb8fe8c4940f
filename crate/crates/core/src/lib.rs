//! Pointwise model of a rank three weakly self-dual manifold: the exterior algebra
//! on nine coframe vectors, its canonical operators, the highest-weight spaces of
//! the rotation action and the Lie superalgebra generated by the operators.

pub mod closure;
pub mod error;
pub mod exact_arith;
pub mod exterior;
pub mod hw_bases;
pub mod linalg;
pub mod operators;
pub mod rep_theory;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use exact_arith::{GaussRational, PrimeField, Rational};
pub use exterior::{BasisIndex, Form, Multidegree, Pos};
pub use operators::{Canonical, Operator, Parity};
