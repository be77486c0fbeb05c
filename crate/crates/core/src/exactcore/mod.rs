//! Exact rational and polynomial substrate.
//!
//! Every routine here is a pure function of immutable inputs. Roots are
//! counted with Sturm chains and isolated by bisection on rational
//! endpoints; infinite endpoints are handled through leading-term signs.

mod binomial;
mod isolate;
mod poly;
mod rational;
mod sturm;

pub use binomial::binomial;
pub use isolate::{cauchy_bound, isolate_all_real_roots, isolate_real_roots, isolate_unique_root, RootInterval};
pub use poly::Poly;
pub use rational::{cmp, int, midpoint, rat, Rational, Sign};
pub use sturm::{count_real_roots, descartes_positive_count, sturm_chain, Bound, SturmChain};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("binomial coefficient with negative upper index {0}")]
    NegativeBinomial(i64),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not squarefree: gcd(p, p') = {gcd}")]
    NotSquarefree { gcd: Poly },
    #[error("empty interval: lower endpoint {lo} is not below upper endpoint {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("polynomial vanishes at interval endpoint {0}")]
    RootAtEndpoint(Rational),
    #[error("polynomial has the same nonzero sign at {lo} and {hi}")]
    SameSign { lo: String, hi: String },
    #[error("{count} roots found in ({lo}, {hi}), expected exactly one")]
    MultipleRoots { lo: String, hi: String, count: usize },
}
