//! Nielsen's function `ξ(x) = Σ_{n≥1} H_n [1/(x+n) − 1/(n+1)]` and its mean
//! over `[0, 1]`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::{
    harmonic_expansion, sum_series, Dd, ExtendedReal, LogSeries, SeriesKind, SeriesSpec, TailModel,
};
use crate::quad::{integrate_finite, IntegralSpec, Point};
use crate::specfun::constants::{euler_gamma, gamma1, zeta2};

use super::sbp::SERIES_EPS;

const ORDER: usize = 24;
/// Quadrature tolerance for the integral forms.
pub const XI_QUAD_EPS: f64 = 1e-13;

/// `ξ(x)` from its defining series, for `x` not a negative integer.
pub fn xi_series(x: f64) -> Result<ExtendedReal> {
    if !x.is_finite() || (x <= -1.0 && x.fract() == 0.0) {
        return domain(format!("xi has a pole at {x}"));
    }
    let xd = Dd::from_f64(x);
    let c = Dd::ONE - xd;
    // H_n (1 − x) / ((x + n)(n + 1)) = H_n (1 − x) t² / ((1 + x t)(1 + t)),  t = 1/n
    let t = LogSeries::x(ORDER);
    let g = t
        .clone()
        .scale(xd)
        .recip_1p()
        .mul(&t.recip_1p())
        .times_power(2.0)
        .scale(c);
    let expansion = harmonic_expansion(ORDER).mul(&g);
    let from = (4.0 * (x.abs() + 1.0)).ceil().max(16.0) as u64;
    let spec = SeriesSpec::new(1, SeriesKind::General, move |n, h| {
        let nd = Dd::from_f64(n as f64);
        h * c / ((xd + nd) * (nd + Dd::ONE))
    })
    .with_tail(TailModel::from_expansion(&expansion, 0.0, from));
    sum_series(&spec, SERIES_EPS)
}

/// `ln u` and `ln(1 − u)` at a quadrature point, each formed from the
/// endpoint distance that keeps it accurate.
fn logs(p: Point) -> (f64, f64) {
    if p.x < 0.5 {
        (p.to_lo.ln(), (-p.to_lo).ln_1p())
    } else {
        ((-p.to_hi).ln_1p(), p.to_hi.ln())
    }
}

/// `ξ(x) = ∫₀¹ (u^{x−1} − 1) ln(1 − u)/(u − 1) du` for `x > 0`.
pub fn xi_integral(x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("the integral form of xi requires x > 0, got {x}"));
    }
    let spec = IntegralSpec::finite(0.0, 1.0, move |p| {
        let (ln_u, ln_1mu) = logs(p);
        if p.x < 0.5 {
            // (u^x − u) · [ln(1 − u)/u] / (u − 1); bounded as u → 0
            let u = p.to_lo;
            if u == 0.0 {
                return 0.0;
            }
            ((x * ln_u).exp() - u) * (ln_1mu / u) / (u - 1.0)
        } else {
            ((x - 1.0) * ln_u).exp_m1() * ln_1mu / -p.to_hi
        }
    })
    .log_at_0()
    .log_at_1();
    integrate_finite(&spec, XI_QUAD_EPS)
}

/// `∫₀¹ ξ(x) dx` by three routes.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiMean {
    /// `½[ζ(2) − γ² − 2γ₁]`
    pub closed_form: ExtendedReal,
    /// `Σ_{n≥1} H_n [ln((n+1)/n) − 1/(n+1)]`
    pub series: ExtendedReal,
    /// `∫₀¹ [1/(u ln u) − 1/(u − 1)] ln(1 − u) du`
    pub integral: ExtendedReal,
}

impl XiMean {
    /// Pairwise residuals: closed/series, closed/integral, series/integral.
    pub fn residuals(&self) -> [f64; 3] {
        [
            self.closed_form.distance(self.series),
            self.closed_form.distance(self.integral),
            self.series.distance(self.integral),
        ]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals().into_iter().fold(0.0, f64::max)
    }
}

pub fn xi_mean() -> Result<XiMean> {
    Ok(XiMean {
        closed_form: xi_mean_closed_form(),
        series: xi_mean_series()?,
        integral: xi_mean_integral()?,
    })
}

pub fn xi_mean_closed_form() -> ExtendedReal {
    let g = euler_gamma();
    let v = (zeta2() - g.sqr() - gamma1().mul_f64(2.0)).mul_f64(0.5);
    ExtendedReal::rounded(v).with_extra_err(1e-33)
}

pub fn xi_mean_series() -> Result<ExtendedReal> {
    let t = LogSeries::x(ORDER);
    let g = t.ln_1p().sub(&t.mul(&t.recip_1p()));
    let expansion = harmonic_expansion(ORDER).mul(&g);
    let spec = SeriesSpec::new(1, SeriesKind::PositiveMonotone, |n, h| {
        let nd = Dd::from_f64(n as f64);
        h * (nd.recip().ln_1p() - (nd + Dd::ONE).recip())
    })
    .with_tail(TailModel::from_expansion(&expansion, 0.0, 16));
    sum_series(&spec, SERIES_EPS)
}

/// `1/(u ln u) + 1/ε` at `u = 1 − ε`, which tends to `−1/2`.
fn bracket_near_one(eps: f64) -> f64 {
    if eps < 1e-8 {
        return -0.5 - eps * (5.0 / 12.0 + eps * 0.375);
    }
    let e = Dd::from_f64(eps);
    let l = (-e).ln_1p();
    let ul = (Dd::ONE - e) * l;
    ((ul + e) / (e * ul)).to_f64()
}

pub fn xi_mean_integral() -> Result<ExtendedReal> {
    let spec = IntegralSpec::finite(0.0, 1.0, |p| {
        let (ln_u, ln_1mu) = logs(p);
        if p.x < 0.5 {
            let u = p.to_lo;
            if u == 0.0 {
                return 0.0;
            }
            (ln_1mu / u) / ln_u - ln_1mu / (u - 1.0)
        } else {
            bracket_near_one(p.to_hi) * ln_1mu
        }
    })
    .log_at_0()
    .log_at_1();
    integrate_finite(&spec, XI_QUAD_EPS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::polygamma;

    #[test]
    fn xi_special_values() {
        assert!(xi_series(1.0).unwrap().to_f64().abs() < 1e-30);
        let z = xi_series(0.0).unwrap();
        assert!((z.value - zeta2()).abs().to_f64() < 1e-16, "{z:?}");
        let half = xi_series(0.5).unwrap();
        let want = Dd::parse_decimal("0.6840280390118235871382101139926952457578").unwrap();
        assert!((half.value - want).abs().to_f64() < 1e-16);
        assert!(xi_series(-2.0).is_err());
        assert!(xi_series(-0.5).is_ok());
    }

    #[test]
    fn nielsen_relation() {
        for x in [0.25, 0.5, 1.0, 2.0, 5.0] {
            let psi = polygamma(0, x).unwrap() + ExtendedReal::rounded(euler_gamma());
            let lhs = psi * psi;
            let rhs = polygamma(1, x).unwrap()
                - ExtendedReal::rounded(zeta2())
                - xi_series(x).unwrap().mul_f64(2.0);
            assert!(lhs.distance(rhs) < 1e-15, "x={x}");
        }
    }

    #[test]
    fn integral_matches_series() {
        for x in [0.5, 1.0, 1.5, 2.0, 5.0] {
            let a = xi_series(x).unwrap();
            let b = xi_integral(x).unwrap();
            assert!(a.distance(b) < 1e-12, "x={x}: {a:?} {b:?}");
        }
        let near_zero = xi_integral(1e-4).unwrap();
        assert!((near_zero.value - zeta2()).abs().to_f64() < 3e-4);
        assert!(xi_integral(0.0).is_err());
    }

    #[test]
    fn mean_routes_agree() {
        let m = xi_mean().unwrap();
        assert!(m.max_residual() < 1e-12, "{m:?}");
    }

    #[test]
    fn bracket_branches_join() {
        let a = bracket_near_one(1.0000001e-8);
        let b = bracket_near_one(0.9999999e-8);
        assert!((a - b).abs() < 1e-14);
    }
}
