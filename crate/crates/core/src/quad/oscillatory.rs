//! `∫₀¹ sin(ln t)/(t ln t) · g(t) dt` in the variable `u = −ln t`:
//! `∫₀^∞ (sin u / u) · h(u) du` with `h(u) = g(e^{−u})`.
//!
//! The range is split at the zeros `u = mπ`; segment 0 carries the
//! endpoint behaviour of `h` and uses the double-exponential rule, later
//! segments use Gauss–Kronrod. Segments are evaluated in parallel batches.
//! Rapidly decaying segment sums are truncated with the alternating-series
//! bound; slowly decaying ones are accelerated by repeated averaging.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::{extrapolate, Accumulator, ExtendedReal, ExtrapolationModel};
use crate::par;

use super::{gauss_kronrod, tanh_sinh, Domain, IntegralSpec, Point};

const BATCH: usize = 64;
const MAX_SEGMENTS: usize = 512;

fn sinc(u: f64) -> f64 {
    if u.abs() < 1e-8 {
        1.0 - u * u / 6.0
    } else {
        u.sin() / u
    }
}

/// Integrates `sin(u)/u · h(u)` over `[0, ∞)`, where `spec.integrand` is `h`
/// in the `u` variable (its `Point::to_lo` is the distance to `u = 0`).
pub fn integrate_log_oscillatory(spec: &IntegralSpec, eps: f64) -> Result<ExtendedReal> {
    if !matches!(spec.domain, Domain::SemiInfinite(a) if a == 0.0) {
        return Err(Error::Configuration(
            "oscillatory integrals are posed on [0, ∞) in u = −ln t".into(),
        ));
    }
    if !(eps > 0.0) {
        return Err(Error::Configuration("eps must be positive".into()));
    }
    let h = spec.integrand.clone();
    let at = |u: f64| {
        h(Point {
            x: u,
            to_lo: u,
            to_hi: f64::INFINITY,
        })
    };
    let (mid, far) = (at(200.0), at(400.0));
    if !far.is_finite() || far.abs() > 2.0 * mid.abs() + 1.0 {
        return Err(Error::Integrability("g(t) is unbounded as t → 0".into()));
    }
    let seg_eps = (eps / 64.0).max(1e-15);
    let segment = |m: usize| -> Result<ExtendedReal> {
        let lo = m as f64 * PI;
        let hi = lo + PI;
        let f = |p: Point| {
            let v = h(Point {
                x: p.x,
                to_lo: p.x,
                to_hi: f64::INFINITY,
            });
            if v == 0.0 {
                0.0
            } else {
                sinc(p.x) * v
            }
        };
        if m == 0 {
            tanh_sinh::integrate(&f, lo, hi, seg_eps)
        } else {
            gauss_kronrod::integrate(&f, lo, hi, seg_eps)
        }
    };
    let mut segments: Vec<ExtendedReal> = Vec::new();
    while segments.len() < MAX_SEGMENTS {
        let start = segments.len();
        let batch = par::map_range(start..start + BATCH, segment);
        for s in batch {
            segments.push(s?);
        }
        let tail = &segments[segments.len() - 3..];
        if tail.iter().all(|s| s.value.abs().to_f64() <= eps * 1e-3) {
            // alternating and decreasing: the remainder is bounded by the
            // first omitted segment, itself below the last one
            let mut acc = Accumulator::new();
            for s in &segments {
                acc.add(*s);
            }
            let v = acc.finish()?;
            return Ok(v.with_extra_err(segments.last().unwrap().value.abs().to_f64()));
        }
    }
    let mut acc = Accumulator::new();
    let mut partials = Vec::with_capacity(segments.len());
    for s in &segments {
        acc.add(*s);
        partials.push(acc.finish()?);
    }
    let v = extrapolate(&[], &partials, ExtrapolationModel::Alternating)?;
    if v.err > eps {
        return Err(Error::Precision {
            requested: eps,
            reached: v.err,
        });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dirichlet_integral() {
        // I(0) = ∫₀^∞ sin u / u du = π/2
        let spec = IntegralSpec::semi_infinite(0.0, |_| 1.0).oscillatory_log();
        let v = integrate_log_oscillatory(&spec, 1e-12).unwrap();
        assert!(
            (v.to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-12,
            "{v:?}"
        );
    }

    #[test]
    fn damped_cases_are_arccot() {
        for k in [1.0f64, 2.0] {
            let spec = IntegralSpec::semi_infinite(0.0, move |p| (-k * p.x).exp());
            let v = integrate_log_oscillatory(&spec, 1e-13).unwrap();
            assert!((v.to_f64() - (1.0 / k).atan()).abs() < 1e-13, "k={k}");
        }
    }

    #[test]
    fn zero_weight_gives_zero() {
        let spec = IntegralSpec::semi_infinite(0.0, |_| 0.0);
        let v = integrate_log_oscillatory(&spec, 1e-12).unwrap();
        assert_eq!(v.to_f64(), 0.0);
    }

    #[test]
    fn growing_weight_is_rejected() {
        let spec = IntegralSpec::semi_infinite(0.0, |p| p.x.exp());
        assert!(matches!(
            integrate_log_oscillatory(&spec, 1e-12),
            Err(Error::Integrability(_))
        ));
    }
}
