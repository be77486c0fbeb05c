//! Exact arithmetic toolkit for the generalized Narayana polynomials
//!
//! `N_{n,m}(x) = sum_k (C(n,k)C(m,k) - C(n,k+1)C(m,k-1)) x^k`.
//!
//! The crate is split in three layers:
//!
//! - [`exactcore`]: rationals, dense polynomials, Sturm chains and certified
//!   root isolation by exact bisection.
//! - [`narayana`]: the polynomial family, its classical reductions and the
//!   three-term recurrence in `m`.
//! - [`theorems`]: certified checks of the zero bounds, sign pattern,
//!   monotonicity, root census and interlacing of negative zeros.
//!
//! Nothing on the verification path touches floating point.

pub mod exactcore;
pub mod narayana;
pub mod theorems;

pub use narayana::{FamilyIndex, NarayanaError, RecurrenceCoeffs, Regime};
pub use theorems::{BoundPair, Check, TheoremError, Verdict, ZeroReport};

pub use exactcore::{
    binomial, count_real_roots, descartes_positive_count, isolate_unique_root, sturm_chain, Bound, ExactError, Poly,
    Rational, RootInterval, Sign,
};
