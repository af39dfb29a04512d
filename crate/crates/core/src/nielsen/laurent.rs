//! Laurent data of `ζ(s, a)` at `s = 1`.
//!
//! With `ζ(s+1, a) = 1/s − ψ(a) − γ₁(a) s + O(s²)`, the limits that combine
//! `ζ′(s+1, a)` with other terms singular at `s = 0` reduce to the
//! coefficients `γ₁(a)`. They are evaluated here from convergent sums rather
//! than by taking `s` small, which would cancel `1/s²` terms.

use crate::error::{domain, Result};
use crate::numerics::{
    extrapolate, sum_series, Dd, ExtendedReal, ExtrapolationModel, LogSeries, SeriesKind,
    SeriesSpec, TailModel,
};

use super::sbp::SERIES_EPS;

const ORDER: usize = 24;

fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        domain(format!("Laurent data requires a > 0, got {a}"))
    }
}

/// `ln(n + c)/(n + c)` expanded in `1/n`.
fn log_over(c: f64) -> LogSeries {
    let cx = LogSeries::x(ORDER).scale(Dd::from_f64(c));
    LogSeries::log(ORDER)
        .add(&cx.ln_1p())
        .mul(&cx.recip_1p())
        .times_power(1.0)
}

/// `lim_{s→0} [ζ′(s+1, a) − ζ′(s+1, b)] = −Σ_{n≥0} [ln(n+a)/(n+a) − ln(n+b)/(n+b)]`.
///
/// The differentiated Hurwitz series converge individually only for `s > 0`,
/// but their difference converges at `s = 0`, where it is summed directly.
pub fn log_ratio_limit_difference(a: f64, b: f64) -> Result<ExtendedReal> {
    check_a(a)?;
    check_a(b)?;
    let (ad, bd) = (Dd::from_f64(a), Dd::from_f64(b));
    let expansion = log_over(a).sub(&log_over(b));
    let from = (4.0 * (a.max(b) + 1.0)).ceil().max(16.0) as u64;
    let spec = SeriesSpec::new(0, SeriesKind::General, move |n, _| {
        let n = Dd::from_f64(n as f64);
        let (ma, mb) = (n + ad, n + bd);
        ma.ln() / ma - mb.ln() / mb
    })
    .with_tail(TailModel::from_expansion(&expansion, 0.0, from));
    Ok(-sum_series(&spec, SERIES_EPS)?)
}

/// `γ₁(a) = lim_{m→∞} [Σ_{k=0}^{m} ln(k+a)/(k+a) − ln²(m+a)/2]`, by
/// Richardson extrapolation of the defining sequence.
///
/// Independent of [`stieltjes_gamma1`](crate::specfun::stieltjes_gamma1),
/// which closes the same sum analytically.
pub fn stieltjes_gamma1_limit(a: f64) -> Result<ExtendedReal> {
    check_a(a)?;
    let ad = Dd::from_f64(a);
    let mut acc = Dd::ZERO;
    let mut abs_acc = 0.0;
    let mut ns = Vec::new();
    let mut partials = Vec::new();
    let mut k = 0u64;
    for e in 6..=16 {
        let m = 1u64 << e;
        while k <= m {
            let x = ad + Dd::from_f64(k as f64);
            let t = x.ln() / x;
            acc += t;
            abs_acc += t.hi.abs();
            k += 1;
        }
        let l = (ad + Dd::from_f64(m as f64)).ln();
        let v = acc - l.sqr().mul_f64(0.5);
        ns.push(m);
        partials.push(ExtendedReal::new(
            v,
            (abs_acc + l.hi * l.hi) * 8.0 * crate::numerics::DD_EPS,
        ));
    }
    extrapolate(&ns, &partials, ExtrapolationModel::LogOverN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::constants::{euler_gamma, gamma1, ln2};
    use crate::specfun::stieltjes_gamma1;

    #[test]
    fn limit_difference_gives_gamma1_difference() {
        // γ₁ − γ₁(1/2) = ln²2 + 2γ ln 2, and the limit equals γ₁(b) − γ₁(a)
        let v = log_ratio_limit_difference(0.5, 1.0).unwrap();
        let l = ln2();
        let want = l.sqr() + euler_gamma().mul_f64(2.0) * l;
        assert!((v.value - want).abs().to_f64() < 1e-16, "{v:?}");
        let w = log_ratio_limit_difference(2.0, 0.3).unwrap();
        let direct = stieltjes_gamma1(0.3).unwrap() - stieltjes_gamma1(2.0).unwrap();
        assert!(w.distance(direct) < 1e-16);
    }

    #[test]
    fn extrapolated_gamma1() {
        let v = stieltjes_gamma1_limit(1.0).unwrap();
        assert!((v.value - gamma1()).abs().to_f64() < 1e-12, "{v:?}");
        assert!(v.err < 1e-10);
        let h = stieltjes_gamma1_limit(0.5).unwrap();
        assert!(h.distance(stieltjes_gamma1(0.5).unwrap()) < 1e-12);
    }
}
