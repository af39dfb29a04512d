//! Building blocks shared by the identity evaluators: the `ζ(j) − 1` table,
//! geometrically convergent sums over the zeta index, tail-closed series
//! over `n`, and the integrands of the integral representations.

use std::cell::Cell;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::numerics::{
    digamma_succ_expansion, harmonic_expansion, sum_series_with, Dd, ExtendedReal, LogSeries,
    SeriesKind, SeriesSpec, SumOptions, TailModel,
};
use crate::quad::Point;
use crate::specfun::constants::euler_gamma;
use crate::specfun::zeta_minus_one;

/// Terms retained in asymptotic expansions of summands.
pub(crate) const ORDER: usize = 24;
/// Accuracy requested from tail-closed series.
pub(crate) const SERIES_EPS: f64 = 1e-18;
/// Accuracy requested from quadrature routes.
pub(crate) const QUAD_EPS: f64 = 1e-13;

/// Largest zeta index tabulated.
const ZETA_TABLE: usize = 400;
/// Index sums stop once a term is below this.
const NEGLIGIBLE: f64 = 1e-30;

fn zeta_table() -> &'static [ExtendedReal] {
    static TABLE: OnceLock<Vec<ExtendedReal>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let idx: Vec<usize> = (0..=ZETA_TABLE).collect();
        crate::par::map(&idx, |&j| {
            if j < 2 {
                ExtendedReal::ZERO
            } else {
                zeta_minus_one(j as f64).expect("j >= 2")
            }
        })
    })
}

/// `ζ(j) − 1` for integers `j ≥ 2`.
pub(crate) fn zm1(j: usize) -> Result<ExtendedReal> {
    if j < 2 {
        return Err(Error::Domain(format!("zeta pole at {j}")));
    }
    zeta_table()
        .get(j)
        .copied()
        .ok_or_else(|| Error::Configuration(format!("zeta index {j} beyond the table")))
}

/// `Σ_{k≥start} term(k)` for terms that eventually decay at least
/// geometrically with ratio `q`; the neglected part is bounded by
/// `|last| q/(1−q)`.
pub(crate) fn index_sum(
    start: usize,
    q: f64,
    term: impl Fn(usize) -> Result<ExtendedReal>,
) -> Result<ExtendedReal> {
    let mut acc = ExtendedReal::ZERO;
    let mut small = 0;
    for k in start.. {
        let t = term(k)?;
        acc = acc + t;
        if t.to_f64().abs() <= NEGLIGIBLE {
            small += 1;
            if small >= 3 {
                return Ok(acc.with_extra_err(t.to_f64().abs() * q / (1.0 - q) + NEGLIGIBLE));
            }
        } else {
            small = 0;
        }
    }
    unreachable!()
}

/// `Σ_{m=1}^{k−2} ζ(k−m) ζ(m+1) − k`, formed from `ζ − 1` values so the
/// cancellation between the `k − 2` unit parts and `k` is exact.
pub(crate) fn zeta_product_bracket(k: usize) -> Result<ExtendedReal> {
    let mut acc = ExtendedReal::from_f64(-2.0);
    for m in 1..=k - 2 {
        let (a, b) = (zm1(k - m)?, zm1(m + 1)?);
        acc = acc + a + b + a * b;
    }
    Ok(acc)
}

/// `Σ_{ℓ=1}^{2r−1} (−1)^{ℓ+1} ζ(ℓ+1) ζ(2r−ℓ+1) − 2`.
pub(crate) fn alternating_product_bracket(r: usize) -> Result<ExtendedReal> {
    let mut acc = ExtendedReal::from_f64(-1.0);
    for l in 1..2 * r {
        let (a, b) = (zm1(l + 1)?, zm1(2 * r - l + 1)?);
        let t = a + b + a * b;
        acc = if l % 2 == 1 { acc + t } else { acc - t };
    }
    Ok(acc)
}

pub(crate) fn sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `x = 1/n`.
pub(crate) fn x() -> LogSeries {
    LogSeries::x(ORDER)
}

/// `Σ_{n≥n0} term(n)` closed with the tail of `expansion` (in `1/n`).
pub(crate) fn closed_sum(
    n0: u64,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> Result<ExtendedReal> {
    sum_series_with(&closed_spec(n0, expansion, term), SERIES_EPS, options())
}

pub(crate) fn closed_spec(
    n0: u64,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> SeriesSpec {
    SeriesSpec::new(n0, SeriesKind::General, move |n, _| {
        term(Dd::from_f64(n as f64))
    })
    .with_tail(TailModel::from_expansion(expansion, 0.0, 16))
}

/// `Σ_{n≥n0} H_{n−shift} · g(n)` where `expansion` is that of `g` and
/// `shift ∈ {0, 1}`.
pub(crate) fn harmonic_sum(
    n0: u64,
    shift: u32,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> Result<ExtendedReal> {
    sum_series_with(
        &harmonic_spec(n0, shift, expansion, term),
        SERIES_EPS,
        options(),
    )
}

pub(crate) fn harmonic_spec(
    n0: u64,
    shift: u32,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> SeriesSpec {
    let mut weight = harmonic_expansion(ORDER);
    if shift == 1 {
        weight = weight.sub(&x());
    }
    SeriesSpec::new(n0, SeriesKind::General, move |n, h| {
        let nd = Dd::from_f64(n as f64);
        let w = if shift == 1 { h - nd.recip() } else { h };
        w * term(nd)
    })
    .with_tail(TailModel::from_expansion(&weight.mul(expansion), 0.0, 16))
}

/// `Σ_{n≥n0} ψ(n) · g(n)` with `ψ(n) = H_{n−1} − γ`, where `expansion` is
/// that of `g`.
pub(crate) fn digamma_sum(
    n0: u64,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> Result<ExtendedReal> {
    sum_series_with(&digamma_spec(n0, expansion, term), SERIES_EPS, options())
}

pub(crate) fn digamma_spec(
    n0: u64,
    expansion: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> SeriesSpec {
    let g = euler_gamma();
    let weight = digamma_succ_expansion(ORDER).sub(&x());
    SeriesSpec::new(n0, SeriesKind::General, move |n, h| {
        let nd = Dd::from_f64(n as f64);
        (h - nd.recip() - g) * term(nd)
    })
    .with_tail(TailModel::from_expansion(&weight.mul(expansion), 0.0, 16))
}

/// Default cap on directly summed terms of a corpus series.
pub const DEFAULT_MAX_TERMS: u64 = 1 << 16;

thread_local! {
    static MAX_TERMS: Cell<u64> = const { Cell::new(DEFAULT_MAX_TERMS) };
}

/// Runs `f` with the series term cap set to `max_terms` on this thread.
pub(crate) fn with_max_terms<R>(max_terms: u64, f: impl FnOnce() -> R) -> R {
    let previous = MAX_TERMS.with(|m| m.replace(max_terms));
    let out = f();
    MAX_TERMS.with(|m| m.set(previous));
    out
}

fn options() -> SumOptions {
    SumOptions {
        max_terms: MAX_TERMS.with(Cell::get),
    }
}

/// `ln u` and `ln(1 − u)` on `(0, 1)`, each from the accurate endpoint
/// distance.
pub(crate) fn unit_logs(p: Point) -> (f64, f64) {
    if p.x < 0.5 {
        (p.to_lo.ln(), (-p.to_lo).ln_1p())
    } else {
        ((-p.to_hi).ln_1p(), p.to_hi.ln())
    }
}

/// `(t − 1)/ln t` on `(0, 1)`, tending to 1 at `t = 1`.
pub(crate) fn frullani_ratio(p: Point) -> f64 {
    let (ln_t, _) = unit_logs(p);
    if ln_t == 0.0 {
        1.0
    } else {
        -p.to_hi / ln_t
    }
}

/// `1/t − 1/(e^t − 1)`, tending to `1/2` at `t = 0`.
pub(crate) fn bose_bracket(t: f64) -> f64 {
    if t < 0.05 {
        bose_series(t)
    } else {
        1.0 / t - 1.0 / t.exp_m1()
    }
}

/// `½ − Σ_{k≥1} B_{2k} t^{2k−1}/(2k)!` through `t⁹`; the first omitted term
/// is below `1e-24` for `t < 0.05`.
fn bose_series(t: f64) -> f64 {
    let t2 = t * t;
    0.5 - t
        * (1.0 / 12.0
            - t2 * (1.0 / 720.0 - t2 * (1.0 / 30240.0 - t2 * (1.0 / 1209600.0 - t2 / 47900160.0))))
}

/// `ln(1 − e^{−t})` for `t > 0`.
pub(crate) fn log_one_minus_exp(t: f64) -> f64 {
    (-(-t).exp_m1()).ln()
}

/// `ln(1 − z e^{−u})` for `|z| ≤ 1`, `u > 0`.
pub(crate) fn log_one_minus_z_exp(z: f64, u: f64) -> f64 {
    if z == 1.0 {
        log_one_minus_exp(u)
    } else {
        (-z * (-u).exp()).ln_1p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::zeta;

    #[test]
    fn brackets_vanish_geometrically() {
        let b10 = zeta_product_bracket(10).unwrap().to_f64().abs();
        let b20 = zeta_product_bracket(20).unwrap().to_f64().abs();
        assert!(b20 < b10 * 2e-2);
        let c5 = alternating_product_bracket(5).unwrap().to_f64().abs();
        let c10 = alternating_product_bracket(10).unwrap().to_f64().abs();
        assert!(c10 < c5 * 1e-2);
    }

    #[test]
    fn bracket_matches_direct_products() {
        let k = 6;
        let mut direct = Dd::ZERO;
        for m in 1..=k - 2 {
            direct += zeta((k - m) as f64).unwrap().value * zeta((m + 1) as f64).unwrap().value;
        }
        direct -= Dd::from_f64(k as f64);
        let b = zeta_product_bracket(k).unwrap();
        assert!((b.value - direct).abs().to_f64() < 1e-29);
    }

    #[test]
    fn index_sum_of_geometric_terms() {
        let v = index_sum(0, 0.5, |k| {
            Ok(ExtendedReal::from_f64(0.5f64.powi(k as i32)))
        })
        .unwrap();
        assert!((v.to_f64() - 2.0).abs() < 1e-29);
    }

    #[test]
    fn bose_bracket_branches_join() {
        let t = 0.05f64;
        let direct = 1.0 / t - 1.0 / t.exp_m1();
        assert!((bose_series(t) - direct).abs() < 1e-14);
        assert_eq!(bose_bracket(0.0), 0.5);
    }
}
