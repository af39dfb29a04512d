//! Special functions and constants consumed by the identity corpus.
//!
//! Every function has its own evaluation route so that identities relating
//! them are checked non-circularly. Arguments outside the real domains of
//! the defining series are rejected rather than continued analytically.

mod arccot;
pub mod constants;
mod gamma;
mod polylog;
mod stieltjes;
mod zeta;

pub use arccot::arccot_series;
pub use constants::{ConstantEntry, ConstantsCache};
pub use gamma::{
    ein, harmonic_number, im_log_gamma_one_plus, im_log_gamma_one_plus_i, log_gamma, polygamma,
    upper_gamma0,
};
pub use polylog::{polylog_int, polylog_int_log};
pub use stieltjes::stieltjes_gamma1;
pub use zeta::{
    dirichlet_eta, dirichlet_eta_alternating, hurwitz_zeta, hurwitz_zeta_deriv, zeta,
    zeta_minus_one,
};

pub(crate) use gamma::digamma_dd;
