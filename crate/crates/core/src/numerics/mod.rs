//! Deterministic high-accuracy summation.
//!
//! Everything in here works in double-word arithmetic ([`Dd`]) and carries an
//! absolute error bound alongside each value ([`ExtendedReal`]).

pub(crate) mod asymptotic;
mod dd;
mod extended;
mod extrapolate;
mod series;
mod sum;
mod tail;

pub use asymptotic::{digamma_succ_expansion, harmonic_expansion, LogSeries};
pub use dd::{Dd, DD_EPS};
pub use extended::ExtendedReal;
pub use extrapolate::{extrapolate, ExtrapolationModel};
pub use series::{
    sum_series, sum_series_with, SeriesKind, SeriesSpec, SumOptions, TailModel, TailPrimitive,
    TailTerm,
};
pub use sum::{compensated_sum, Accumulator};
pub use tail::{
    em_corrections, harmonic_power_tail, harmonic_tail, log_power_tail, log_zeta_tail, power_tail,
    zeta_tail, TailValue,
};
