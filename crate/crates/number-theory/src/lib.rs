//! Number theory behind the synthesis pipelines.
//!
//! * [`is_prime`] — strong-pseudoprime test, deterministic below 2⁶⁴.
//! * [`factor_bounded`] — trial division plus rho under an effort budget;
//!   giving up is a value ([`Factorization::complete`]), not an error.
//! * [`sqrt_mod`] — Tonelli–Shanks square roots modulo a prime.
//! * [`gcd_ring`] — Euclidean gcd in `Z[i]`, `Z[√2]`, and `Z[ω]`.
//! * [`solve_norm_zi`] — witnesses for `α†α = m` over the Gaussian integers.
//! * [`solve_norm_zomega`] — witnesses for `t†t = ξ` over `Z[ω]`.
//!
//! Probabilistic routines draw only from an explicit [`RandomSource`], so
//! every result is reproducible from a 64-bit seed.

use std::fmt;

pub mod euclid;
pub mod factor;
pub mod modular;
pub mod norm_zi;
pub mod norm_zomega;
pub mod primality;
pub mod rng;

pub use euclid::{gcd_ring, Euclidean};
pub use factor::{factor_bounded, Factorization, DEFAULT_EFFORT};
pub use modular::{legendre, sqrt_mod};
pub use norm_zi::solve_norm_zi;
pub use norm_zomega::solve_norm_zomega;
pub use primality::is_prime;
pub use rng::RandomSource;

/// Errors from the norm-equation solvers. `Option::None` from a solver means
/// "provably no witness"; these mean the inputs were unusable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormSolveError {
    /// The factorization is flagged incomplete; the solvers need all primes.
    IncompleteFactorization,
    /// The factorization does not multiply back to the expected integer.
    MismatchedFactorization,
}

impl fmt::Display for NormSolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSolveError::IncompleteFactorization => {
                write!(f, "factorization is incomplete")
            }
            NormSolveError::MismatchedFactorization => {
                write!(f, "factorization does not match the input")
            }
        }
    }
}

impl std::error::Error for NormSolveError {}
