//! Exact braid group representations from tensor powers of the Steinberg
//! module of restricted quantum sl(2) at a root of unity.
//!
//! Everything is computed over the cyclotomic field Q(ζ_{4r}) with exact
//! rational coefficients (no floating point in the main path), or over the
//! Laurent ring Z\[q^{±1}, s^{±1}\]\[t\] for the generic three-variable families.
//! A complex-arithmetic oracle lives in [`floatcheck`] for cross-checking.
//!
//! The main objects, bottom up:
//!
//! * [`cyclo`] — arithmetic in Q(ζ_{4r}); q = ζ², s = q^{r−1}, quantum
//!   integers, factorials and binomials.
//! * [`laurent`] — the ring Z\[q^{±1}, s^{±1}\]\[t\] and its fraction field.
//! * [`weightspace`] — the strong weight spaces V_{n,ℓ} ⊂ V_{r−1}^{⊗n} and
//!   the quantum group operators E, F, K as exact matrices.
//! * [`braid`] — the R-matrix action, braid generators σ_i on V_{n,ℓ}, word
//!   evaluation, half and full twists.
//! * [`lawrence`] — the highest weight spaces W_{n,ℓ}, the Φ change of
//!   basis, the closed-form LKB family and the Burau family.
//! * [`dominant`] — the dominant spaces N_{n,ℓ,ℓ′}, their C/S/R structure,
//!   the full-twist formula and split/non-split certification.
//! * [`generic`] — the three-variable representations Ñ_{n,2,0}, Ñ_{n,2,1}
//!   and their splitting analysis.
//! * [`hecke`] — minimal polynomials, generator orders and the cubic Hecke
//!   quotient at r = 3, n = 4.
//!
//! The `rhorep` binary exposes the same functionality as JSON-emitting
//! subcommands; see [`cli`].
//!
//! ```
//! use rhorep::cyclo::make_field;
//! use rhorep::lawrence::braid_on_w;
//!
//! // W_{3,2} at r = 4 is three-dimensional and sigma_1 acts on w_{1,2}
//! // by the scalar s^{-4} q^2 = q^6
//! let field = make_field(4)?;
//! let sigma1 = braid_on_w(&field, 3, 2, 1)?;
//! assert_eq!(sigma1.rows(), 3);
//! assert_eq!(sigma1[(0, 0)], field.q_pow(6));
//! # Ok::<(), rhorep::Error>(())
//! ```

pub mod braid;
pub mod cli;
pub mod cyclo;
pub mod dominant;
pub mod floatcheck;
pub mod generic;
pub mod hecke;
pub mod json;
pub mod laurent;
pub mod lawrence;
pub mod linalg;
pub mod verify;
pub mod weightspace;

pub use cyclo::{CycField, CycNum};
pub use laurent::{LPoly3, LRat};
pub use linalg::Mat;

/// Errors surfaced by fallible public constructors and operations.
///
/// Internal invariant violations (a singular braid generator, an
/// inconsistent certified solve) panic instead: they cannot be produced by
/// any sequence of valid calls.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("r must be at least 2 (got {0})")]
    RankTooSmall(u32),
    #[error("operands belong to different cyclotomic fields (r = {0} vs r = {1})")]
    MixedFields(u32, u32),
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("quantum factorial/binomial requires 0 <= m <= n < r (n = {n}, m = {m}, r = {r})")]
    QRangeError { n: i64, m: i64, r: u32 },
    #[error("specialization hit a zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("modular condition violated: {0}")]
    ModularCondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
