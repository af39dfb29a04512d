//! Quadrature for integrals with logarithmic endpoint singularities,
//! semi-infinite ranges and `sin(ln t)` oscillation.
//!
//! Integrands are evaluated in double precision and accumulated in
//! double-word arithmetic. Each evaluation point carries its distances to
//! both endpoints, computed without cancellation, so integrands such as
//! `ln(1 − u)` can be formed accurately next to `u = 1`.

mod gauss_kronrod;
mod oscillatory;
mod tanh_sinh;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{Dd, ExtendedReal};

pub use oscillatory::integrate_log_oscillatory;

/// Default absolute tolerance.
pub const DEFAULT_EPS: f64 = 1e-12;

/// An abscissa together with its exact distances to the interval ends.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    /// `x − a`
    pub to_lo: f64,
    /// `b − x`; infinite on semi-infinite ranges.
    pub to_hi: f64,
}

impl Point {
    pub fn interior(x: f64, a: f64, b: f64) -> Point {
        Point {
            x,
            to_lo: x - a,
            to_hi: b - x,
        }
    }
}

pub type Integrand = Arc<dyn Fn(Point) -> f64 + Send + Sync>;

#[derive(Copy, Clone, Debug, PartialEq)]
pub enum Domain {
    Finite(f64, f64),
    SemiInfinite(f64),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularityFlags {
    pub log_at_0: bool,
    pub log_at_1: bool,
    pub removable_at_0: bool,
    pub oscillatory_log: bool,
}

#[derive(Clone)]
pub struct IntegralSpec {
    pub integrand: Integrand,
    pub domain: Domain,
    pub flags: SingularityFlags,
}

impl fmt::Debug for IntegralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegralSpec")
            .field("domain", &self.domain)
            .field("flags", &self.flags)
            .finish()
    }
}

impl IntegralSpec {
    pub fn finite(a: f64, b: f64, f: impl Fn(Point) -> f64 + Send + Sync + 'static) -> Self {
        IntegralSpec {
            integrand: Arc::new(f),
            domain: Domain::Finite(a, b),
            flags: SingularityFlags::default(),
        }
    }

    pub fn semi_infinite(a: f64, f: impl Fn(Point) -> f64 + Send + Sync + 'static) -> Self {
        IntegralSpec {
            integrand: Arc::new(f),
            domain: Domain::SemiInfinite(a),
            flags: SingularityFlags::default(),
        }
    }

    pub fn log_at_0(mut self) -> Self {
        self.flags.log_at_0 = true;
        self
    }

    pub fn log_at_1(mut self) -> Self {
        self.flags.log_at_1 = true;
        self
    }

    pub fn removable_at_0(mut self) -> Self {
        self.flags.removable_at_0 = true;
        self
    }

    pub fn oscillatory_log(mut self) -> Self {
        self.flags.oscillatory_log = true;
        self
    }

    fn endpoint_sensitive(&self) -> bool {
        self.flags.log_at_0 || self.flags.log_at_1 || self.flags.removable_at_0
    }
}

/// `∫_a^b f` for a finite domain.
///
/// Flagged endpoint behaviour selects the double-exponential rule; otherwise
/// adaptive Gauss–Kronrod subdivision is used.
pub fn integrate_finite(spec: &IntegralSpec, eps: f64) -> Result<ExtendedReal> {
    let Domain::Finite(a, b) = spec.domain else {
        return Err(Error::Configuration(
            "integrate_finite needs a finite domain".into(),
        ));
    };
    check_eps(eps)?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::Configuration(format!("bad interval [{a}, {b}]")));
    }
    let f = spec.integrand.as_ref();
    if spec.endpoint_sensitive() {
        tanh_sinh::integrate(f, a, b, eps)
    } else {
        gauss_kronrod::integrate(f, a, b, eps)
    }
}

/// `∫_a^∞ f` for integrands decaying at least exponentially.
///
/// The range is mapped to `(0, 1]` by `t = a − ln u` and integrated with the
/// double-exponential rule, which also absorbs a logarithmic singularity at
/// `t = a`.
pub fn integrate_semi_infinite(spec: &IntegralSpec, eps: f64) -> Result<ExtendedReal> {
    let Domain::SemiInfinite(a) = spec.domain else {
        return Err(Error::Configuration(
            "integrate_semi_infinite needs a semi-infinite domain".into(),
        ));
    };
    check_eps(eps)?;
    let f = spec.integrand.as_ref();
    let at = |s: f64| {
        f(Point {
            x: a + s,
            to_lo: s,
            to_hi: f64::INFINITY,
        })
    };
    let near = at(1.0).abs().max(at(2.0).abs()).max(1e-300);
    let far = at(400.0).abs();
    if !far.is_finite() || far > 1e-30 * near.max(1.0) {
        return Err(Error::Integrability(
            "integrand does not decay exponentially".into(),
        ));
    }
    let mapped = move |p: Point| {
        // s = −ln u, accurate both for u → 0 and u → 1
        let s = if p.to_hi < 0.5 {
            -(-Dd::from_f64(p.to_hi)).ln_1p().to_f64()
        } else {
            -p.x.ln()
        };
        if !(s.is_finite()) {
            return 0.0;
        }
        let v = f(Point {
            x: a + s,
            to_lo: s,
            to_hi: f64::INFINITY,
        });
        if v == 0.0 {
            0.0
        } else {
            v / p.x
        }
    };
    tanh_sinh::integrate(&mapped, 0.0, 1.0, eps)
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 {
        Ok(())
    } else {
        Err(Error::Configuration("eps must be positive".into()))
    }
}

pub(crate) fn non_finite(x: f64) -> Error {
    Error::Integrability(format!("integrand is not finite at {x}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> f64 {
        std::f64::consts::PI.powi(2) / 6.0
    }

    #[test]
    fn constant_and_polynomial() {
        let one = IntegralSpec::finite(0.0, 1.0, |_| 1.0);
        let v = integrate_finite(&one, 1e-14).unwrap();
        assert!((v.to_f64() - 1.0).abs() < 1e-15);
        let cubic = IntegralSpec::finite(-1.0, 2.0, |p| p.x.powi(3) - p.x);
        let v = integrate_finite(&cubic, 1e-14).unwrap();
        assert!((v.to_f64() - 2.25).abs() < 1e-14);
    }

    #[test]
    fn dilog_integral_with_log_endpoint() {
        // ∫₀¹ −ln(1−u)/u du = ζ(2)
        let spec = IntegralSpec::finite(0.0, 1.0, |p| {
            let l = if p.x < 0.5 {
                (-p.x).ln_1p()
            } else {
                p.to_hi.ln()
            };
            if p.x == 0.0 {
                1.0
            } else {
                -l / p.x
            }
        })
        .log_at_1();
        let v = integrate_finite(&spec, 1e-13).unwrap();
        assert!((v.to_f64() - z2()).abs() < 1e-13, "{v:?}");
        assert!(v.err < 1e-12);
    }

    #[test]
    fn semi_infinite_exponential() {
        let spec = IntegralSpec::semi_infinite(0.0, |p| (-p.x).exp());
        let v = integrate_semi_infinite(&spec, 1e-14).unwrap();
        assert!((v.to_f64() - 1.0).abs() < 1e-14);
        let spec = IntegralSpec::semi_infinite(0.0, |p| {
            if p.x == 0.0 {
                1.0
            } else {
                p.x.sin() / p.x * (-p.x).exp()
            }
        });
        let v = integrate_semi_infinite(&spec, 1e-13).unwrap();
        assert!((v.to_f64() - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
    }

    #[test]
    fn non_decaying_integrand_is_rejected() {
        let spec = IntegralSpec::semi_infinite(0.0, |p| 1.0 / (1.0 + p.x * p.x));
        assert!(matches!(
            integrate_semi_infinite(&spec, 1e-10),
            Err(Error::Integrability(_))
        ));
    }

    #[test]
    fn divergent_singularity_is_rejected() {
        let spec = IntegralSpec::finite(0.0, 1.0, |p| 1.0 / p.to_lo).log_at_0();
        assert!(matches!(
            integrate_finite(&spec, 1e-10),
            Err(Error::Integrability(_))
        ));
        let spec = IntegralSpec::finite(0.0, 1.0, |p| 1.0 / p.x);
        let r = integrate_finite(&spec, 1e-10);
        assert!(matches!(r, Err(Error::Integrability(_))), "{r:?}");
    }

    #[test]
    fn frullani_type_log_ratio() {
        // ∫₀¹ t^{n−1}(t−1)/ln t dt = ln((n+1)/n)
        for n in [1i32, 2, 5, 20] {
            let spec = IntegralSpec::finite(0.0, 1.0, move |p| {
                if p.to_lo == 0.0 {
                    return 0.0;
                }
                let l = (-p.to_hi).ln_1p();
                let ratio = if l == 0.0 { 1.0 } else { -p.to_hi / l };
                p.x.powi(n - 1) * ratio
            })
            .removable_at_0();
            let v = integrate_finite(&spec, 1e-14).unwrap();
            let want = ((n + 1) as f64 / n as f64).ln();
            assert!((v.to_f64() - want).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn linearity() {
        let f = |x: f64| (3.0 * x).cos() + x * x;
        let g = |x: f64| (x + 0.5).ln();
        let (alpha, beta) = (0.7, -2.5);
        let i = |h: Box<dyn Fn(f64) -> f64 + Send + Sync>| {
            integrate_finite(&IntegralSpec::finite(0.0, 2.0, move |p| h(p.x)), 1e-14).unwrap()
        };
        let a = i(Box::new(f));
        let b = i(Box::new(g));
        let c = i(Box::new(move |x| alpha * f(x) + beta * g(x)));
        let combined = a.value.mul_f64(alpha) + b.value.mul_f64(beta);
        assert!((c.value - combined).abs().to_f64() <= 3.0 * (a.err + b.err + c.err) + 1e-15);
    }
}
