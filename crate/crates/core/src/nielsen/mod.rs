//! Summation-by-parts representations and Nielsen's function `ξ`.
//!
//! These are implemented exactly as the series and integrals they are
//! written as, so that comparing them with the direct routes in
//! [`specfun`](crate::specfun) is a genuine check.

mod laurent;
mod sbp;
mod xi;

pub use laurent::{log_ratio_limit_difference, stieltjes_gamma1_limit};
pub use sbp::{sbp_direct, sbp_eval, SbpKind};
pub use xi::{
    xi_integral, xi_mean, xi_mean_closed_form, xi_mean_integral, xi_mean_series, xi_series, XiMean,
    XI_QUAD_EPS,
};
