//! Exact arithmetic foundations for gate synthesis.
//!
//! This crate provides the number systems that the rest of the workspace is
//! built on:
//!
//! * [`GaussInt`] — the Gaussian integers `Z[i]`.
//! * [`ZRoot2`] — the real quadratic ring `Z[√2]`, with its conjugation
//!   `a + b√2 ↦ a − b√2`, the unit `λ = 1 + √2`, and exact sign computation.
//! * [`ZOmega`] — the cyclotomic ring `Z[ω]` with `ω = e^{iπ/8·2} = e^{iπ/4}`
//!   an eighth root of unity, together with its two conjugations (complex
//!   conjugation `†` and the `√2 ↦ −√2` automorphism `•`), divisibility by
//!   `√2 = ω − ω³`, and the decomposition `Z[ω] = Z[√2] + Z[√2]·i + {0,1}·ω`.
//! * [`Dyadic`] and [`DyadicRoot2`] — exact dyadic fractions and elements
//!   `(p + q√2)/2^e`, with exact floors, ceilings and comparisons. These are
//!   the endpoint types used by the grid solvers.
//! * [`Interval`] — arbitrary-precision dyadic interval arithmetic with
//!   outward rounding, including certified square roots and the
//!   transcendental functions (π, sin, cos, exp, ln, atan2) needed to talk
//!   about rotation angles and approximation regions.
//! * [`constants`] — frequently used exact elements (ω, i, √2, λ, δ = 1 + ω)
//!   and certified numeric enclosures of derived reals (|δ|, 2·sin(π/16), …),
//!   with the defining identities machine-checked.
//!
//! Everything here is exact or certified: ring elements use `BigInt`
//! coefficients, and intervals always round outward, so a comparison that
//! reports a definite answer is a proof of that answer. Floating point is
//! only ever used by callers as a heuristic (e.g. to pick a candidate which
//! is then verified exactly).

pub mod constants;
pub mod denom;
pub mod dyadic;
pub mod gauss;
pub mod interval;
pub mod transcendental;
pub mod util;
pub mod zomega;
pub mod zroot2;

pub use dyadic::{Dyadic, DyadicRoot2};
pub use gauss::GaussInt;
pub use interval::Interval;
pub use zomega::ZOmega;
pub use zroot2::ZRoot2;
