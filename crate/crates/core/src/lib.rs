//! High-accuracy evaluation of zeta, polygamma, Stieltjes and related
//! constants, together with a registry of identities among them that are
//! checked by computing both sides through independent routes.

// `!(x > 0.0)` and friends are used deliberately so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod corpus;
pub mod error;
pub mod nielsen;
pub mod numerics;
pub mod par;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use numerics::{Dd, ExtendedReal};
