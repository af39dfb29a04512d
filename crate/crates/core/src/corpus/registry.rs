//! The registered identities.
//!
//! Every record lists its routes from the left-hand side to the right-hand
//! side; further routes are the intermediate representations the text passes
//! through. Sums over the zeta index are formed from `ζ(j) − 1` so that the
//! unit parts cancel exactly.

use super::kit::{
    alternating_product_bracket, bose_bracket, closed_spec, closed_sum, digamma_spec, digamma_sum,
    frullani_ratio, harmonic_spec, harmonic_sum, index_sum, log_one_minus_exp, log_one_minus_z_exp,
    sign, unit_logs, x, zeta_product_bracket, zm1, QUAD_EPS,
};
use super::{CostClass, IdentityRecord, Reference, Route, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::nielsen::{
    log_ratio_limit_difference, sbp_direct, sbp_eval, stieltjes_gamma1_limit, xi_integral,
    xi_mean_closed_form, xi_mean_integral, xi_mean_series, xi_series, SbpKind,
};
use crate::numerics::{extrapolate, Dd, ExtendedReal, ExtrapolationModel, LogSeries, SeriesSpec};
use crate::quad::{
    integrate_finite, integrate_log_oscillatory, integrate_semi_infinite, IntegralSpec, Point,
};
use crate::specfun::constants::{euler_gamma, gamma1, ln2, pi, zeta2, zeta3};
use crate::specfun::dirichlet_eta_alternating;
use crate::specfun::{
    arccot_series, digamma_dd, ein, hurwitz_zeta_deriv, im_log_gamma_one_plus_i, log_gamma,
    polygamma, polylog_int, polylog_int_log, stieltjes_gamma1, zeta,
};

fn c(v: Dd) -> ExtendedReal {
    ExtendedReal::rounded(v)
}

/// `t^e` in double-double; the double result is inexact once `e` is large.
fn power(t: f64, e: i32) -> ExtendedReal {
    c(Dd::from_f64(t).powi(e))
}

fn k_of(p: &[f64]) -> usize {
    p[0] as usize
}

fn record(
    id: &'static str,
    statement: &'static str,
    param_names: &'static [&'static str],
    params: Vec<Vec<f64>>,
    routes: Vec<Route>,
) -> IdentityRecord {
    IdentityRecord {
        id,
        aliases: &[],
        statement,
        param_names,
        params,
        routes,
        tol: DEFAULT_TOL,
        cost_class: CostClass::Fast,
        reference: None,
        notes: "",
    }
}

impl IdentityRecord {
    fn alias(mut self, aliases: &'static [&'static str]) -> Self {
        self.aliases = aliases;
        self
    }

    fn slow(mut self) -> Self {
        self.cost_class = CostClass::Slow;
        self
    }

    fn quoted(mut self, value: &str, tol: f64) -> Self {
        self.reference = Some(Reference {
            value: value.to_string(),
            tol,
        });
        self
    }

    fn note(mut self, notes: &'static str) -> Self {
        self.notes = notes;
        self
    }
}

fn no_params() -> Vec<Vec<f64>> {
    vec![vec![]]
}

fn samples(values: &[f64]) -> Vec<Vec<f64>> {
    values.iter().map(|&v| vec![v]).collect()
}

// ---------------------------------------------------------------------------
// shared evaluators

/// `Σ_{n≥2} (1/n) ln(n/(n−1))`.
fn log_sum_backward() -> Result<ExtendedReal> {
    let e = x().mul(&x().scale(-Dd::ONE).ln_1p()).scale(-Dd::ONE);
    closed_sum(2, &e, |n| -(-n.recip()).ln_1p() / n)
}

/// `Σ_{n≥n0} (1/n) ln((n+1)/n)`.
fn log_sum_forward(n0: u64) -> Result<ExtendedReal> {
    closed_sum(n0, &x().mul(&x().ln_1p()), |n| n.recip().ln_1p() / n)
}

/// `atanh(1/n) = ½ ln((n+1)/(n−1))`.
fn atanh_recip(n: Dd) -> Dd {
    let r = n.recip();
    (r.ln_1p() - (-r).ln_1p()).mul_f64(0.5)
}

fn atan_recip(n: Dd) -> Dd {
    n.recip().atan()
}

/// `Σ_{ℓ≥2} cot⁻¹ℓ / ℓ`.
fn arccot_sum() -> Result<ExtendedReal> {
    closed_sum(2, &x().mul(&x().atan()), |l| atan_recip(l) / l)
}

/// `Σ_{n≥1} ψ(n) / n^k`.
fn digamma_moment(k: usize) -> Result<ExtendedReal> {
    let e = x().times_power(k as f64 - 1.0);
    digamma_sum(1, &e, move |n| n.powi(-(k as i32)))
}

/// `Σ_{m=1}^{k−2} ζ(k−m) ζ(m+1)` through the direct zeta route.
fn zeta_products(k: usize, alternating: bool) -> Result<ExtendedReal> {
    let mut acc = ExtendedReal::ZERO;
    for m in 1..=k.saturating_sub(2) {
        let t = zeta((k - m) as f64)? * zeta((m + 1) as f64)?;
        acc = if alternating && m % 2 == 0 {
            acc - t
        } else {
            acc + t
        };
    }
    Ok(acc)
}

/// `−∫₀¹ sin(ln t)/(t ln t) ln(1 − z t) dt` on `u = −ln t`.
fn arccot_integral(z: f64) -> Result<ExtendedReal> {
    let spec = IntegralSpec::semi_infinite(0.0, move |p| log_one_minus_z_exp(z, p.to_lo))
        .oscillatory_log();
    Ok(-integrate_log_oscillatory(&spec, QUAD_EPS)?)
}

/// `−∫₀^∞ ln(1 − e^{−t}) w(t) dt`.
fn bose_integral(w: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Result<ExtendedReal> {
    let spec = IntegralSpec::semi_infinite(0.0, move |p| {
        let t = p.to_lo;
        if t == 0.0 {
            return 0.0;
        }
        w(t) * log_one_minus_exp(t)
    })
    .log_at_0();
    Ok(-integrate_semi_infinite(&spec, QUAD_EPS)?)
}

fn dd_of(r: Result<ExtendedReal>) -> f64 {
    r.map(|v| v.to_f64()).unwrap_or(f64::NAN)
}

// ---------------------------------------------------------------------------
// zeta-product sums

fn e1_1() -> IdentityRecord {
    record(
        "E1.1",
        "Σ_{k≥3} (1/k)[Σ_{m=1}^{k−2} ζ(k−m)ζ(m+1) − k] = 3+γ²+2γ₁−π²/3",
        &[],
        no_params(),
        vec![
            Route::new("outer_k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zeta_product_bracket(k)?.div_f64(k as f64)))
            }),
            Route::new("closed_form", &["constants"], |_| {
                let g = euler_gamma();
                Ok(c(Dd::from_f64(3.0) + g.sqr() + gamma1().mul_f64(2.0)
                    - pi().sqr() / Dd::from_f64(3.0)))
            }),
        ],
    )
    .quoted("-0.102321900856", 1e-9)
    .note("The outer sum is truncated once three consecutive bracketed terms fall below 1e-30; the remainder is bounded geometrically with ratio 1/2.")
}

fn e1_2() -> IdentityRecord {
    record(
        "E1.2",
        "2Σ_{n≥1} ψ(n)/n^k = kζ(k+1) − 2γζ(k) − Σ_{ℓ=1}^{k−2} ζ(ℓ+1)ζ(k−ℓ)",
        &["k"],
        (2..=10).map(|k| vec![k as f64]).collect(),
        vec![
            Route::new("digamma_series", &["harmonic_series", "constants"], |p| {
                Ok(digamma_moment(k_of(p))?.mul_f64(2.0))
            }),
            Route::new("zeta_values", &["zeta", "constants"], |p| {
                let k = k_of(p);
                let kf = k as f64;
                Ok(zeta(kf + 1.0)?.mul_f64(kf)
                    - zeta(kf)? * c(euler_gamma().mul_f64(2.0))
                    - zeta_products(k, false)?)
            }),
        ],
    )
    .note("At k = 2 the product sum is empty.")
}

fn e1_4() -> IdentityRecord {
    record(
        "E1.4",
        "Σ_{k≥3} [ζ(k)−1]/k = Σ_{r≥2}[ln(r/(r−1)) − 1/(2r²) − 1/r] = 3/2 − γ − ζ(2)/2",
        &[],
        no_params(),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zm1(k)?.div_f64(k as f64)))
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(Dd::from_f64(1.5) - euler_gamma() - zeta2().mul_f64(0.5)))
            }),
            Route::new("r_series", &["log_series"], |_| {
                let xx = x();
                let e = x()
                    .scale(-Dd::ONE)
                    .ln_1p()
                    .scale(-Dd::ONE)
                    .sub(&xx.mul(&xx).scale(Dd::from_f64(0.5)))
                    .sub(&xx);
                closed_sum(2, &e, |r| {
                    let i = r.recip();
                    -(-i).ln_1p() - i.sqr().mul_f64(0.5) - i
                })
            }),
        ],
    )
}

fn e1_5() -> IdentityRecord {
    record(
        "E1.5",
        "Σ_{k≥3} [ζ(k+1)−1] = Σ_{r≥2} 1/((r−1)r³) = 3 − ζ(2) − ζ(3)",
        &[],
        no_params(),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| zm1(k + 1))
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(Dd::from_f64(3.0) - zeta2() - zeta3()))
            }),
            Route::new("r_series", &["rational_series"], |_| {
                let e = x().times_power(3.0).mul(&x().scale(-Dd::ONE).recip_1p());
                closed_sum(2, &e, |r| ((r - Dd::ONE) * r.powi(3)).recip())
            }),
        ],
    )
}

fn e1_8() -> IdentityRecord {
    record(
        "E1.8",
        "Σ_{n≥2} [ln(n/(n−1)) − 1/n] = 1 − γ",
        &[],
        no_params(),
        vec![
            Route::new("n_series", &["log_series"], |_| {
                let e = x().scale(-Dd::ONE).ln_1p().scale(-Dd::ONE).sub(&x());
                closed_sum(2, &e, |n| -(-n.recip()).ln_1p() - n.recip())
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(Dd::ONE - euler_gamma()))
            }),
        ],
    )
}

fn e1_10() -> IdentityRecord {
    record(
        "E1.10",
        "Σ_{n≥1} H_n [ln((n+1)/n) − 1/(n+1)] = ζ(2)/2 − γ²/2 − γ₁",
        &[],
        no_params(),
        vec![
            Route::new("harmonic_series", &["harmonic_series"], |_| {
                let e = x().ln_1p().sub(&x().mul(&x().recip_1p()));
                harmonic_sum(1, 0, &e, |n| n.recip().ln_1p() - (n + Dd::ONE).recip())
            }),
            Route::new("closed_form", &["constants"], |_| {
                let g = euler_gamma();
                Ok(c((zeta2() - g.sqr()).mul_f64(0.5) - gamma1()))
            }),
            Route::new(
                "shifted_series",
                &["harmonic_series", "shifted_index"],
                |_| {
                    let e = x().scale(-Dd::ONE).ln_1p().scale(-Dd::ONE).sub(&x());
                    harmonic_sum(2, 1, &e, |n| -(-n.recip()).ln_1p() - n.recip())
                },
            ),
        ],
    )
}

/// `2 [Li_k(t) − t ζ(k)] / (t (t − 1))` on `(0, 1)`.
fn polylog_integrand(k: u32, zk: Dd, p: Point) -> f64 {
    let v = if p.x < 0.5 {
        let t = p.to_lo;
        if t < 1e-200 {
            return 2.0 * (zk - Dd::ONE).to_f64();
        }
        let Ok(li) = polylog_int(k, t) else {
            return f64::NAN;
        };
        let td = Dd::from_f64(t);
        (li.value / td - zk) / (td - Dd::ONE)
    } else {
        let e = Dd::from_f64(p.to_hi);
        let t = Dd::ONE - e;
        let Ok(li) = polylog_int_log(k, (-e).ln_1p()) else {
            return f64::NAN;
        };
        (li.value - t * zk) / -(t * e)
    };
    2.0 * v.to_f64()
}

fn e1_12() -> IdentityRecord {
    record(
        "E1.12",
        "2∫₀¹ [Li_k(t) − tζ(k)]/(t(t−1)) dt = kζ(k+1) − Σ_{ℓ=1}^{k−2} ζ(ℓ+1)ζ(k−ℓ)",
        &["k"],
        samples(&[2.0, 3.0, 4.0]),
        vec![
            Route::new("polylog_integral", &["polylog", "quadrature"], |p| {
                let k = k_of(p) as u32;
                let zk = zeta(k as f64)?.value;
                let spec = IntegralSpec::finite(0.0, 1.0, move |pt| polylog_integrand(k, zk, pt))
                    .removable_at_0()
                    .log_at_1();
                integrate_finite(&spec, QUAD_EPS)
            }),
            Route::new("zeta_values", &["zeta"], |p| {
                let k = k_of(p);
                Ok(zeta(k as f64 + 1.0)?.mul_f64(k as f64) - zeta_products(k, false)?)
            }),
        ],
    )
}

fn p1() -> IdentityRecord {
    record(
        "P1",
        "Σ_{r≥1} [Σ_{ℓ=1}^{2r−1} (−1)^{ℓ+1}ζ(ℓ+1)ζ(2r−ℓ+1) − 2]/(2r+1) = Σ_{n≥2} (1/n)ln(n/(n−1)) + 2−ζ(2)−2γ₁−γ²−ln 2",
        &[],
        no_params(),
        vec![
            Route::new("outer_r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| {
                    Ok(alternating_product_bracket(r)?.div_f64((2 * r + 1) as f64))
                })
            }),
            Route::new("closed_form", &["log_series", "constants"], |_| {
                let g = euler_gamma();
                Ok(log_sum_backward()?
                    + c(Dd::from_f64(2.0) - zeta2() - gamma1().mul_f64(2.0) - g.sqr() - ln2()))
            }),
        ],
    )
    .alias(&["E1.13"])
    .quoted("0.262903", 5e-6)
    .note("The quoted value has six digits; the sum itself is computed to the default tolerance.")
}

fn e1_14() -> IdentityRecord {
    record(
        "E1.14",
        "Σ_{ℓ=1}^{k−2} (−1)^{ℓ+1}ζ(ℓ+1)ζ(k−ℓ) = 2Σ_{n≥1} ψ(n)/n^k + 2ζ(k+1) + 2γζ(k), k odd",
        &["k"],
        samples(&[3.0, 5.0, 7.0]),
        vec![
            Route::new("zeta_products", &["zeta"], |p| zeta_products(k_of(p), true)),
            Route::new(
                "digamma_series",
                &["harmonic_series", "zeta", "constants"],
                |p| {
                    let k = k_of(p);
                    let kf = k as f64;
                    Ok(digamma_moment(k)?.mul_f64(2.0)
                        + zeta(kf + 1.0)?.mul_f64(2.0)
                        + zeta(kf)? * c(euler_gamma().mul_f64(2.0)))
                },
            ),
        ],
    )
}

fn e1_17() -> IdentityRecord {
    record(
        "E1.17",
        "Σ_{r≥1} [ζ(2r+1)−1]/(2r+1) = Σ_{ℓ≥2} [½ln((ℓ+1)/(ℓ−1)) − 1/ℓ] = 1 − γ − ½ln 2",
        &[],
        no_params(),
        vec![
            Route::new("r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| Ok(zm1(2 * r + 1)?.div_f64((2 * r + 1) as f64)))
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(Dd::ONE - euler_gamma() - ln2().mul_f64(0.5)))
            }),
            Route::new("l_series", &["log_series"], |_| {
                closed_sum(2, &x().atanh().sub(&x()), |l| atanh_recip(l) - l.recip())
            }),
        ],
    )
}

/// `∫₀¹ [ψ(2+t) − ψ(2−t)]/t dt`.
fn digamma_difference_integral() -> Result<ExtendedReal> {
    let spec = IntegralSpec::finite(0.0, 1.0, |p| {
        let t = Dd::from_f64(p.x);
        let two = Dd::from_f64(2.0);
        ((digamma_dd(two + t).value - digamma_dd(two - t).value) / t).to_f64()
    });
    integrate_finite(&spec, QUAD_EPS)
}

fn e1_18() -> IdentityRecord {
    record(
        "E1.18",
        "Σ_{r≥1} [ζ(2r+2)−1]/(2r+1) = Σ_{ℓ≥2} (1/ℓ)[coth⁻¹ℓ − 1/ℓ] = ½Σ_{ℓ≥2} (1/ℓ)ln((ℓ+1)/(ℓ−1)) − ζ(2) + 1",
        &[],
        no_params(),
        vec![
            Route::new("r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| Ok(zm1(2 * r + 2)?.div_f64((2 * r + 1) as f64)))
            }),
            Route::new("digamma_integral", &["digamma", "quadrature", "constants"], |_| {
                Ok(digamma_difference_integral()?.mul_f64(0.5) + c(Dd::ONE - zeta2()))
            }),
            Route::new("l_series", &["log_series"], |_| {
                closed_sum(2, &x().mul(&x().atanh().sub(&x())), |l| (atanh_recip(l) - l.recip()) / l)
            }),
        ],
    )
    .note("The last form's logarithmic sum is evaluated through its integral representation.")
}

fn e1_20() -> IdentityRecord {
    record(
        "E1.20",
        "Σ_{n≥2} H_{n−1}[½ln((n+1)/(n−1)) − 1/n] = ζ(2)/2 − γ₁ − γ²/2 − ½Σ_{n≥2} (1/n)ln((n+1)/n) − ln2/2",
        &[],
        no_params(),
        vec![
            Route::new("harmonic_series", &["harmonic_series"], |_| {
                harmonic_sum(2, 1, &x().atanh().sub(&x()), |n| atanh_recip(n) - n.recip())
            }),
            Route::new("closed_form", &["log_series", "constants"], |_| {
                let g = euler_gamma();
                Ok(c(zeta2().mul_f64(0.5) - gamma1() - g.sqr().mul_f64(0.5) - ln2().mul_f64(0.5))
                    - log_sum_forward(2)?.mul_f64(0.5))
            }),
        ],
    )
}

fn e1_24() -> IdentityRecord {
    record(
        "E1.24",
        "Σ_{r≥1} [ζ(2r+1)−1] t^{2r+1}/(2r+1) = ½[ln Γ(2−t) − ln Γ(2+t)] + (1−γ)t, |t| < 2",
        &["t"],
        samples(&[0.5, 1.0, 1.5]),
        vec![
            Route::new("r_sum", &["zeta_minus_one"], |p| {
                let t = p[0];
                index_sum(1, (t / 2.0).powi(2), |r| {
                    let e = (2 * r + 1) as i32;
                    Ok((zm1(2 * r + 1)? * power(t, e)).div_f64(e as f64))
                })
            }),
            Route::new("log_gamma", &["log_gamma", "constants"], |p| {
                let t = p[0];
                Ok((log_gamma(2.0 - t)? - log_gamma(2.0 + t)?).mul_f64(0.5)
                    + c((Dd::ONE - euler_gamma()).mul_f64(t)))
            }),
        ],
    )
    .note("The power of t follows the summation index: t^{2r+1}.")
}

fn e1_25() -> IdentityRecord {
    record(
        "E1.25",
        "2Σ_{k≥0} [ζ(2k+2)−1]/(2k+1) = Σ_{ℓ≥2} (1/ℓ)ln((ℓ+1)/(ℓ−1)) = ∫₀¹ [ψ(2+t) − ψ(2−t)]/t dt",
        &[],
        no_params(),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                Ok(
                    index_sum(0, 0.25, |k| Ok(zm1(2 * k + 2)?.div_f64((2 * k + 1) as f64)))?
                        .mul_f64(2.0),
                )
            }),
            Route::new("digamma_integral", &["digamma", "quadrature"], |_| {
                digamma_difference_integral()
            }),
            Route::new("l_series", &["log_series"], |_| {
                closed_sum(2, &x().mul(&x().atanh()).scale(Dd::from_f64(2.0)), |l| {
                    atanh_recip(l).mul_f64(2.0) / l
                })
            }),
        ],
    )
}

fn e1_26() -> IdentityRecord {
    record(
        "E1.26",
        "Σ_{n≥2} (1/n)ln((n+1)/n) = Σ_{k≥1} (−1)^{k+1}[ζ(k+1)−1]/k = ∫₀^∞ [γ+Γ(0,t)+ln t] dt/(e^t−1) − ln 2 = ∫₀¹ (t−1)/ln t [−1 − ln(1−t)/t] dt",
        &[],
        no_params(),
        vec![
            Route::new("n_series", &["log_series"], |_| log_sum_forward(2)),
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.5, |k| Ok(zm1(k + 1)?.mul_f64(-sign(k)).div_f64(k as f64)))
            }),
            Route::new("ein_integral", &["incomplete_gamma", "quadrature", "constants"], |_| {
                let spec = IntegralSpec::semi_infinite(0.0, |p| {
                    let t = p.to_lo;
                    if t == 0.0 {
                        return 1.0;
                    }
                    dd_of(ein(t)) / t.exp_m1()
                });
                Ok(integrate_semi_infinite(&spec, QUAD_EPS)? - c(ln2()))
            }),
            Route::new("unit_integral", &["quadrature"], |_| {
                let spec = IntegralSpec::finite(0.0, 1.0, |p| {
                    let bracket = if p.x < 0.5 {
                        let t = Dd::from_f64(p.to_lo);
                        if p.to_lo == 0.0 {
                            return 0.0;
                        }
                        (-(-t).ln_1p() / t - Dd::ONE).to_f64()
                    } else {
                        let (_, ln_1mt) = unit_logs(p);
                        -1.0 - ln_1mt / (1.0 - p.to_hi)
                    };
                    frullani_ratio(p) * bracket
                })
                .log_at_0()
                .log_at_1();
                integrate_finite(&spec, QUAD_EPS)
            }),
        ],
    )
    .note("γ + Γ(0,t) + ln t is evaluated as the entire function Ein(t).")
}

fn e1_27() -> IdentityRecord {
    record(
        "E1.27",
        "ln((n+1)/n) = ∫₀¹ t^{n−1}(t−1)/ln t dt",
        &["n"],
        samples(&[1.0, 2.0, 5.0, 20.0]),
        vec![
            Route::new("logarithm", &["log"], |p| {
                Ok(c(Dd::from_f64(p[0]).recip().ln_1p()))
            }),
            Route::new("frullani_integral", &["quadrature"], |p| {
                let n = p[0];
                let spec = IntegralSpec::finite(0.0, 1.0, move |pt| {
                    let (ln_t, _) = unit_logs(pt);
                    if pt.x < 0.5 && pt.to_lo == 0.0 {
                        return 0.0;
                    }
                    ((n - 1.0) * ln_t).exp() * frullani_ratio(pt)
                })
                .log_at_0();
                integrate_finite(&spec, QUAD_EPS)
            }),
        ],
    )
}

fn p2() -> IdentityRecord {
    record(
        "P2",
        "Σ_{k≥3} (−1)^k/k [Σ_{m=1}^{k−2} ζ(k−m)ζ(m+1) − k] = 2ζ(2)−1/2−2γ₁−γ² − 2Σ_{n≥1} (1/n)ln((n+1)/n)",
        &[],
        no_params(),
        vec![
            Route::new("outer_k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zeta_product_bracket(k)?.mul_f64(sign(k)).div_f64(k as f64)))
            }),
            Route::new("closed_form", &["log_series", "constants"], |_| {
                let g = euler_gamma();
                Ok(c(zeta2().mul_f64(2.0) - Dd::from_f64(0.5) - gamma1().mul_f64(2.0) - g.sqr())
                    - log_sum_forward(1)?.mul_f64(2.0))
            }),
        ],
    )
    .alias(&["E1.29"])
    .quoted("0.0868281269673", 1e-10)
}

fn e1_31() -> IdentityRecord {
    record(
        "E1.31",
        "Σ_{k≥3} (−1)^k [ζ(k+1)−1] = ζ(2) − 1/2 − ζ(3)",
        &[],
        no_params(),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zm1(k + 1)?.mul_f64(sign(k))))
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(zeta2() - Dd::from_f64(0.5) - zeta3()))
            }),
            Route::new("r_series", &["rational_series"], |_| {
                let e = x().times_power(3.0).mul(&x().recip_1p()).scale(-Dd::ONE);
                closed_sum(2, &e, |r| -(r.powi(3) * (r + Dd::ONE)).recip())
            }),
        ],
    )
}

fn e1_32() -> IdentityRecord {
    record(
        "E1.32",
        "Σ_{k≥1} t^k [ζ(k+1)−1] = t/(t−1) − γ − ψ(1−t)",
        &["t"],
        samples(&[-1.0, -0.5, 0.5]),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |p| {
                let t = p[0];
                index_sum(1, t.abs() / 2.0, |k| Ok(zm1(k + 1)? * power(t, k as i32)))
            }),
            Route::new("digamma", &["digamma", "constants"], |p| {
                let t = Dd::from_f64(p[0]);
                Ok(c(t / (t - Dd::ONE) - euler_gamma()) - polygamma(0, 1.0 - p[0])?)
            }),
        ],
    )
}

fn e1_33() -> IdentityRecord {
    record(
        "E1.33",
        "Σ_{k≥3} (−1)^k [ζ(k)−1]/k = ln 2 − 1/2 + γ − ζ(2)/2",
        &[],
        no_params(),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zm1(k)?.mul_f64(sign(k)).div_f64(k as f64)))
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(
                    ln2() - Dd::from_f64(0.5) + euler_gamma() - zeta2().mul_f64(0.5)
                ))
            }),
        ],
    )
}

fn e1_34() -> IdentityRecord {
    record(
        "E1.34",
        "Σ_{k≥2} t^k [ζ(k)−1]/k = t(1−γ) + ln(1−t) + ln Γ(1−t)",
        &["t"],
        samples(&[-1.0, 0.5]),
        vec![
            Route::new("k_sum", &["zeta_minus_one"], |p| {
                let t = p[0];
                index_sum(2, t.abs() / 2.0, |k| Ok((zm1(k)? * power(t, k as i32)).div_f64(k as f64)))
            }),
            Route::new("log_gamma", &["log_gamma", "constants"], |p| {
                let t = Dd::from_f64(p[0]);
                Ok(c(t * (Dd::ONE - euler_gamma()) + (-t).ln_1p()) + log_gamma(1.0 - p[0])?)
            }),
        ],
    )
    .note("The sum carries t^k, matching the t-dependent right side; at t = −1 it is the alternating sum of E1.33 extended by its k = 2 term.")
}

fn e1_36() -> IdentityRecord {
    record(
        "E1.36",
        "Σ_{k≥3} (−1)^k/k Σ_{n≥2} n^{−k} = Σ_{n≥2} [ln(n/(n+1)) + 1/n − 1/(2n²)] = −1/2 + γ − ζ(2)/2 + ln 2",
        &[],
        no_params(),
        vec![
            Route::new("n_series", &["log_series"], |_| {
                let e = x()
                    .ln_1p()
                    .scale(-Dd::ONE)
                    .add(&x())
                    .sub(&x().mul(&x()).scale(Dd::from_f64(0.5)));
                closed_sum(2, &e, |n| {
                    let i = n.recip();
                    -i.ln_1p() + i - i.sqr().mul_f64(0.5)
                })
            }),
            Route::new("closed_form", &["constants"], |_| {
                Ok(c(euler_gamma() - Dd::from_f64(0.5) - zeta2().mul_f64(0.5) + ln2()))
            }),
            Route::new("k_sum", &["zeta_minus_one"], |_| {
                index_sum(3, 0.5, |k| Ok(zm1(k)?.mul_f64(sign(k)).div_f64(k as f64)))
            }),
        ],
    )
}

fn e1_37() -> IdentityRecord {
    record(
        "E1.37",
        "Σ_{n≥2} H_{n−1}[ln(n/(n+1)) + 1/n − 1/(2n²)] = −ζ(2)/2 + γ₁ + γ²/2 − ζ(3)/2 + Σ_{n≥1} (1/n)ln((n+1)/n)",
        &[],
        no_params(),
        vec![
            Route::new("harmonic_series", &["harmonic_series"], |_| {
                let e = x()
                    .ln_1p()
                    .scale(-Dd::ONE)
                    .add(&x())
                    .sub(&x().mul(&x()).scale(Dd::from_f64(0.5)));
                harmonic_sum(2, 1, &e, |n| {
                    let i = n.recip();
                    -i.ln_1p() + i - i.sqr().mul_f64(0.5)
                })
            }),
            Route::new("closed_form", &["log_series", "constants"], |_| {
                let g = euler_gamma();
                Ok(c(gamma1() + g.sqr().mul_f64(0.5) - (zeta2() + zeta3()).mul_f64(0.5))
                    + log_sum_forward(1)?)
            }),
        ],
    )
}

fn p3() -> IdentityRecord {
    record(
        "P3",
        "Σ_{r≥1} (−1)^r/(2r+1) [Σ_{ℓ=1}^{2r−1} (−1)^{ℓ+1}ζ(ℓ+1)ζ(2r−ℓ+1) − 2] = 2Σ_{ℓ≥2} cot⁻¹ℓ/ℓ − 2ζ(2) + 2 + 2Σ_{n≥2} H_{n−1}(cot⁻¹n − 1/n)",
        &[],
        no_params(),
        vec![
            Route::new("outer_r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| {
                    Ok(alternating_product_bracket(r)?.mul_f64(sign(r)).div_f64((2 * r + 1) as f64))
                })
            }),
            Route::new("arccot_sums", &["harmonic_series", "log_series", "constants"], |_| {
                let h = harmonic_sum(2, 1, &x().atan().sub(&x()), |n| atan_recip(n) - n.recip())?;
                Ok((arccot_sum()? + h).mul_f64(2.0) + c(Dd::from_f64(2.0) - zeta2().mul_f64(2.0)))
            }),
        ],
    )
    .alias(&["E1.38"])
    .quoted("-0.215191890953", 1e-9)
}

fn e1_40() -> IdentityRecord {
    record(
        "E1.40",
        "cot⁻¹x = Σ_{k≥0} (−1)^k/((2k+1) x^{2k+1}), x² ≥ 1",
        &["x"],
        samples(&[2.0, 5.0]),
        vec![
            Route::new("series", &["arccot_series"], |p| arccot_series(p[0], None)),
            Route::new("arctangent", &["atan"], |p| {
                Ok(c(Dd::from_f64(p[0]).recip().atan()))
            }),
        ],
    )
}

fn e1_41() -> IdentityRecord {
    record(
        "E1.41",
        "Σ_{r≥1} (−1)^r [ζ(2r+1)−1]/(2r+1) = 1 − γ − π/4 + (i/2)ln(Γ(1+i)/Γ(1−i))",
        &[],
        no_params(),
        vec![
            Route::new("r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| Ok(zm1(2 * r + 1)?.mul_f64(sign(r)).div_f64((2 * r + 1) as f64)))
            }),
            Route::new("log_gamma_imaginary", &["complex_log_gamma", "constants"], |_| {
                Ok(c(Dd::ONE - euler_gamma() - pi().mul_f64(0.25)) - im_log_gamma_one_plus_i())
            }),
            Route::new("l_series", &["atan"], |_| {
                closed_sum(2, &x().atan().sub(&x()), |l| atan_recip(l) - l.recip())
            }),
        ],
    )
    .note("(i/2) ln(Γ(1+i)/Γ(1−i)) = −Im ln Γ(1+i), computed by complex recurrence and Stirling's series.")
}

fn e1_42() -> IdentityRecord {
    record(
        "E1.42",
        "Σ_{r≥1} (−1)^r [ζ(2r+2)−1]/(2r+1) = Σ_{ℓ≥2} (1/ℓ)[cot⁻¹ℓ − 1/ℓ] = Σ_{ℓ≥2} cot⁻¹ℓ/ℓ − ζ(2) + 1",
        &[],
        no_params(),
        vec![
            Route::new("r_sum", &["zeta_minus_one"], |_| {
                index_sum(1, 0.25, |r| Ok(zm1(2 * r + 2)?.mul_f64(sign(r)).div_f64((2 * r + 1) as f64)))
            }),
            Route::new("arccot_integral", &["oscillatory_quadrature", "constants"], |_| {
                Ok(arccot_integral(1.0)? + c(Dd::ONE - zeta2() - pi().mul_f64(0.25)))
            }),
            Route::new("l_series", &["atan"], |_| {
                closed_sum(2, &x().mul(&x().atan().sub(&x())), |l| (atan_recip(l) - l.recip()) / l)
            }),
        ],
    )
    .note("Σ cot⁻¹ℓ/ℓ is taken from its integral representation at z = 1.")
}

/// `Σ_{ℓ≥2} z^ℓ cot⁻¹ℓ / ℓ` for `|z| ≤ 1`.
fn arccot_power_sum(z: f64) -> Result<ExtendedReal> {
    if z == 1.0 {
        arccot_sum()
    } else if z == -1.0 {
        // pairs (2m, 2m+1), m ≥ 1
        let h = x().scale(Dd::from_f64(0.5));
        let odd = h.mul(&h.recip_1p());
        let f = |u: &LogSeries| u.mul(&u.atan());
        let e = f(&h).sub(&f(&odd));
        closed_sum(1, &e, |m| {
            let a = m.mul_f64(2.0);
            let b = a + Dd::ONE;
            atan_recip(a) / a - atan_recip(b) / b
        })
    } else if z.abs() < 1.0 {
        index_sum(2, z.abs(), |l| {
            let ld = Dd::from_f64(l as f64);
            Ok(c(atan_recip(ld) / ld).mul_f64(z.powi(l as i32)))
        })
    } else {
        Err(Error::Domain(format!(
            "arccot power sum needs |z| <= 1, got {z}"
        )))
    }
}

fn l1() -> IdentityRecord {
    record(
        "L1",
        "Σ_{ℓ≥2} z^ℓ cot⁻¹ℓ/ℓ = −∫₀¹ sin(ln t)/(t ln t) ln(1−zt) dt − πz/4, |z| ≤ 1",
        &["z"],
        samples(&[1.0, 0.5, -1.0]),
        vec![
            Route::new("l_series", &["atan"], |p| arccot_power_sum(p[0])),
            Route::new("oscillatory_integral", &["oscillatory_quadrature", "constants"], |p| {
                Ok(arccot_integral(p[0])? - c(pi().mul_f64(0.25 * p[0])))
            }),
        ],
    )
    .alias(&["E1.45"])
    .note("At z = −1 the series is summed in consecutive pairs; the integral is taken in u = −ln t with the range split at the zeros of sin u.")
}

fn c1() -> IdentityRecord {
    record(
        "C1",
        "−∫₀¹ sin(ln t)/(t ln t) ln(1−t) dt = Σ_{ℓ≥1} H_ℓ [cot⁻¹ℓ − cot⁻¹(ℓ+1)]",
        &[],
        no_params(),
        vec![
            Route::new("oscillatory_integral", &["oscillatory_quadrature"], |_| {
                arccot_integral(1.0)
            }),
            Route::new("harmonic_series", &["harmonic_series", "atan"], |_| {
                let xx = x();
                let e = xx.atan().sub(&xx.mul(&xx.recip_1p()).atan());
                harmonic_sum(1, 0, &e, |l| (l * (l + Dd::ONE) + Dd::ONE).recip().atan())
            }),
        ],
    )
    .alias(&["E1.46"])
    .note("cot⁻¹ℓ − cot⁻¹(ℓ+1) is evaluated as tan⁻¹(1/(ℓ²+ℓ+1)).")
}

fn e1_47() -> IdentityRecord {
    fn sum(p: &[f64]) -> Result<ExtendedReal> {
        let (a, xv, y) = (p[0], p[1], p[2]);
        let term = move |k: Dd| {
            let i = k.recip();
            (i.mul_f64(xv).ln_1p() - i.mul_f64(y).ln_1p()) / k
        };
        if a == 1.0 {
            let e = x().mul(
                &x().scale(Dd::from_f64(xv))
                    .ln_1p()
                    .sub(&x().scale(Dd::from_f64(y)).ln_1p()),
            );
            closed_sum(1, &e, term)
        } else {
            index_sum(1, a.abs(), |k| {
                Ok(c(term(Dd::from_f64(k as f64))).mul_f64(a.powi(k as i32)))
            })
        }
    }
    fn integral(p: &[f64]) -> Result<ExtendedReal> {
        let (a, xv, y) = (p[0], p[1], p[2]);
        let spec = IntegralSpec::finite(0.0, 1.0, move |pt| {
            if pt.x < 0.5 && pt.to_lo < 1e-200 {
                return 0.0;
            }
            let (ln_t, ln_1mt) = unit_logs(pt);
            let t = if pt.x < 0.5 { pt.to_lo } else { 1.0 - pt.to_hi };
            // (t^x − t^y)/(t ln t) = t^{y−1} (e^{(x−y) ln t} − 1)/ln t
            let core = ((y - 1.0) * ln_t).exp() * ((xv - y) * ln_t).exp_m1() / ln_t;
            let log_term = if a == 1.0 { ln_1mt } else { (-a * t).ln_1p() };
            core * log_term
        })
        .log_at_0()
        .log_at_1();
        Ok(-integrate_finite(&spec, QUAD_EPS)?)
    }
    record(
        "E1.47",
        "Σ_{k≥1} (a^k/k) ln((x+k)/(y+k)) = −∫₀¹ (t^x − t^y)/(t ln t) ln(1−at) dt, |a| ≤ 1",
        &["a", "x", "y"],
        vec![
            vec![0.5, 1.0, 2.0],
            vec![1.0, 0.5, 1.5],
            vec![-0.5, 1.0, 3.0],
            vec![1.0, 0.0, 1.0],
        ],
        vec![
            Route::new("k_series", &["log_series"], sum),
            Route::new("integral", &["quadrature"], integral),
        ],
    )
}

fn e1_49() -> IdentityRecord {
    record(
        "E1.49",
        "∫₀^∞ (sin u/u) e^{−ku} du = cot⁻¹k",
        &["k"],
        samples(&[0.0, 1.0, 2.0]),
        vec![
            Route::new("integral", &["quadrature"], |p| {
                let k = p[0];
                if k == 0.0 {
                    let spec = IntegralSpec::semi_infinite(0.0, |_| 1.0).oscillatory_log();
                    integrate_log_oscillatory(&spec, QUAD_EPS)
                } else {
                    let spec = IntegralSpec::semi_infinite(0.0, move |pt| {
                        let u = pt.to_lo;
                        let sinc = if u < 1e-8 { 1.0 - u * u / 6.0 } else { u.sin() / u };
                        sinc * (-k * u).exp()
                    });
                    integrate_semi_infinite(&spec, QUAD_EPS)
                }
            }),
            Route::new("arccot", &["arccot_series", "constants"], |p| {
                if p[0] == 0.0 {
                    Ok(c(pi().mul_f64(0.5)))
                } else {
                    arccot_series(p[0], None)
                }
            }),
        ],
    )
    .note("At k = 0 the integral converges only conditionally and is summed over half-periods of sin u.")
}

// ---------------------------------------------------------------------------
// partial summation

fn sbp_record(
    id: &'static str,
    alias: &'static [&'static str],
    kind: SbpKind,
    statement: &'static str,
    param_names: &'static [&'static str],
    params: Vec<Vec<f64>>,
    direct_terminals: &'static [&'static str],
) -> IdentityRecord {
    record(
        id,
        statement,
        param_names,
        params,
        vec![
            Route::new(kind.tag(), &["partial_summation"], move |p| {
                sbp_eval(kind, p)
            }),
            Route::new("direct", direct_terminals, move |p| sbp_direct(kind, p)),
        ],
    )
    .alias(alias)
}

fn l2_family() -> Vec<IdentityRecord> {
    vec![
        sbp_record(
            "L2a",
            &["E2.1"],
            SbpKind::Zeta,
            "ζ(s+1) = Σ_{r≥1} H_r (r^{−s} − (r+1)^{−s})",
            &["s"],
            samples(&[0.5, 1.0, 2.0, 3.5]),
            &["zeta"],
        ),
        sbp_record(
            "L2b",
            &["E2.2"],
            SbpKind::Eta,
            "(1−2^{−s})ζ(s+1) = Σ_{r≥1} H_r [(−1)^{r+1} r^{−s} − (−1)^r (r+1)^{−s}]",
            &["s"],
            samples(&[0.5, 1.0, 2.0]),
            &["zeta"],
        )
        .note("The summand is indexed by r throughout."),
        sbp_record(
            "L2c",
            &["E2.3"],
            SbpKind::Hurwitz,
            "ζ(s+1,a) = Σ_{r≥0} [ψ(a+r+1) − ψ(a)] [(r+a)^{−s} − (r+a+1)^{−s}]",
            &["s", "a"],
            vec![vec![1.0, 0.5], vec![2.0, 1.5], vec![0.5, 3.0]],
            &["hurwitz_zeta"],
        ),
        sbp_record(
            "L2d",
            &["E2.4"],
            SbpKind::Digamma,
            "ψ(x) = −γ − 1/x + x Σ_{k≥1} H_k [1/(x+k) − 1/(x+k+1)]",
            &["x"],
            samples(&[0.5, 1.0, 2.5, 10.0]),
            &["digamma"],
        ),
        sbp_record(
            "L2e",
            &["E2.5"],
            SbpKind::Trigamma,
            "ψ′(x) = 1/x² + Σ_{k≥1} H_k [1/(x+k) − 1/(x+k+1)] + x Σ_{k≥1} H_k [1/(x+k+1)² − 1/(x+k)²]",
            &["x"],
            samples(&[0.5, 1.0, 3.0]),
            &["trigamma"],
        ),
        sbp_record(
            "L2f",
            &["E2.6"],
            SbpKind::Polygamma,
            "ψ^{(j)}(x) = (−1)^{j+1} j! {1/x^{j+1} + Σ_{k≥1} H_k [(x+k)^{−j} − (x+k+1)^{−j}] + x Σ_{k≥1} H_k [(x+k+1)^{−j−1} − (x+k)^{−j−1}]}",
            &["j", "x"],
            vec![vec![2.0, 1.0], vec![3.0, 0.5], vec![4.0, 2.0]],
            &["polygamma"],
        ),
        sbp_record(
            "L2g",
            &["E2.12"],
            SbpKind::HurwitzDeriv,
            "ζ′(s+1,a) = Σ_{r≥0} [ψ(a+r+1) − ψ(a)] [ln(r+a+1)/(r+a+1)^s − ln(r+a)/(r+a)^s]",
            &["s", "a"],
            vec![vec![1.0, 1.0], vec![1.5, 0.5], vec![0.5, 2.0]],
            &["hurwitz_zeta_derivative"],
        )
        .note("Registered with the partial-summation family; the direct route is the differentiated Euler–Maclaurin expansion."),
    ]
}

fn e2_8() -> IdentityRecord {
    record(
        "E2.8",
        "Σ_{r≥1} (−1)^{r+1} r^{−s} = (1−2^{1−s})ζ(s)",
        &["s"],
        samples(&[1.0, 1.5, 2.0, 3.0]),
        vec![
            Route::new("alternating_series", &["alternating_series"], |p| {
                dirichlet_eta_alternating(p[0])
            }),
            Route::new("zeta_factor", &["zeta", "constants"], |p| {
                let s = p[0];
                if s == 1.0 {
                    Ok(c(ln2()))
                } else {
                    Ok(zeta(s)? * c(Dd::ONE - Dd::from_f64(2.0).powf(1.0 - s)))
                }
            }),
        ],
    )
    .note("At s = 1 the right side is taken as its limit ln 2.")
}

fn e2_10() -> IdentityRecord {
    record(
        "E2.10",
        "lim_{s→0} [ζ′(s+1,a) − ζ′(s+1,b)] = γ₁(b) − γ₁(a); γ₁ − γ₁(1/2) = ln²2 + 2γ ln 2",
        &["a", "b"],
        vec![vec![0.5, 1.0], vec![2.0, 0.3]],
        vec![
            Route::new("derivative_limit", &["log_series"], |p| {
                log_ratio_limit_difference(p[0], p[1])
            }),
            Route::new("stieltjes", &["stieltjes_gamma1"], |p| {
                Ok(stieltjes_gamma1(p[1])? - stieltjes_gamma1(p[0])?)
            }),
            Route::new("stieltjes_limit", &["stieltjes_limit"], |p| {
                Ok(stieltjes_gamma1_limit(p[1])? - stieltjes_gamma1_limit(p[0])?)
            }),
            Route::new("closed_form", &["constants"], |_| {
                let l = ln2();
                Ok(c(l.sqr() + euler_gamma().mul_f64(2.0) * l))
            })
            .only_when(|p| p == [0.5, 1.0]),
        ],
    )
    .note("The limit is summed directly, since the difference of the two differentiated Hurwitz series converges at s = 0. The closed form applies to (a, b) = (1/2, 1).")
}

/// `lim_{s→0} [ζ′(s+1, a) + ψ′(s)]` by polynomial extrapolation in `s`.
fn derivative_trigamma_limit(a: f64) -> Result<ExtendedReal> {
    let ns: Vec<u64> = (5..=12).map(|e| 1u64 << e).collect();
    let mut values = Vec::with_capacity(ns.len());
    for &n in &ns {
        let s = 1.0 / n as f64;
        values.push(hurwitz_zeta_deriv(1.0 + s, a)? + polygamma(1, s)?);
    }
    extrapolate(&ns, &values, ExtrapolationModel::InverseN)
}

fn e2_11() -> IdentityRecord {
    record(
        "E2.11",
        "lim_{s→0} [ζ′(s+1,a) + ψ′(s)] = ζ(2) − γ₁(a)",
        &["a"],
        samples(&[1.0, 0.5]),
        vec![
            Route::new("extrapolated_limit", &["hurwitz_zeta_derivative", "trigamma"], |p| {
                derivative_trigamma_limit(p[0])
            }),
            Route::new("stieltjes", &["stieltjes_gamma1", "constants"], |p| {
                Ok(c(zeta2()) - stieltjes_gamma1(p[0])?)
            }),
            Route::new("stieltjes_limit", &["stieltjes_limit", "trigamma"], |p| {
                Ok(polygamma(1, 1.0)? - stieltjes_gamma1_limit(p[0])?)
            }),
        ],
    )
    .note("The left side is sampled at s = 2^{−5} … 2^{−12}, where the 1/s² terms cancel in double-double, and extrapolated to s = 0.")
}

// ---------------------------------------------------------------------------
// Nielsen's function

fn e3_1() -> IdentityRecord {
    record(
        "E3.1",
        "[ψ(x)+γ]² = ψ′(x) − ζ(2) − 2ξ(x)",
        &["x"],
        samples(&[0.25, 0.5, 1.0, 2.0, 5.0]),
        vec![
            Route::new("digamma_square", &["digamma", "constants"], |p| {
                let v = polygamma(0, p[0])? + c(euler_gamma());
                Ok(v * v)
            }),
            Route::new(
                "trigamma_xi",
                &["trigamma", "xi_series", "constants"],
                |p| Ok(polygamma(1, p[0])? - c(zeta2()) - xi_series(p[0])?.mul_f64(2.0)),
            ),
        ],
    )
}

fn e3_3() -> IdentityRecord {
    record(
        "E3.3",
        "∫₀¹ ξ(x) dx = Σ_{n≥1} H_n [ln((n+1)/n) − 1/(n+1)] = Σ_{n≥1} H_n [ln((n+1)/n) − 1/n] + ζ(2) = ½[ζ(2) − γ² − 2γ₁]",
        &[],
        no_params(),
        vec![
            Route::new("xi_quadrature", &["xi_series", "quadrature"], |_| {
                let spec = IntegralSpec::finite(0.0, 1.0, |p| dd_of(xi_series(p.x)));
                integrate_finite(&spec, QUAD_EPS)
            }),
            Route::new("closed_form", &["constants"], |_| Ok(xi_mean_closed_form())),
            Route::new("harmonic_series", &["xi_mean_series"], |_| xi_mean_series()),
            Route::new("shifted_weight_series", &["harmonic_series", "constants"], |_| {
                let e = x().ln_1p().sub(&x());
                Ok(harmonic_sum(1, 0, &e, |n| n.recip().ln_1p() - n.recip())? + c(zeta2()))
            }),
        ],
    )
    .slow()
    .note("The quadrature route evaluates the ξ series at every node.")
}

/// `ξ(x) = ∫₀^∞ [e^{(1−x)t} − 1] ln(1−e^{−t})/(1−e^t) dt`.
fn xi_exponential_integral(xv: f64) -> Result<ExtendedReal> {
    let spec = IntegralSpec::semi_infinite(0.0, move |p| {
        let t = p.to_lo;
        if t == 0.0 {
            return 0.0;
        }
        // [e^{(1−x)t} − 1] e^{−t}, accurate at both ends
        let num = if t < 1.0 {
            ((1.0 - xv) * t).exp_m1() * (-t).exp()
        } else {
            (-xv * t).exp() - (-t).exp()
        };
        num / (-t).exp_m1() * log_one_minus_exp(t)
    })
    .log_at_0();
    integrate_semi_infinite(&spec, QUAD_EPS)
}

fn e3_4() -> IdentityRecord {
    record(
        "E3.4",
        "ξ(x) = ∫₀^∞ [e^{(1−x)t} − 1] ln(1−e^{−t})/(1−e^t) dt = ∫₀¹ (u^{x−1} − 1) ln(1−u)/(u−1) du",
        &["x"],
        samples(&[0.5, 1.5, 2.0, 5.0]),
        vec![
            Route::new("series", &["xi_series"], |p| xi_series(p[0])),
            Route::new("exponential_integral", &["quadrature"], |p| {
                xi_exponential_integral(p[0])
            }),
            Route::new("unit_integral", &["xi_integral"], |p| xi_integral(p[0])),
        ],
    )
    .note("The integral forms converge for x > 0; samples stay in that range.")
}

fn e3_5() -> IdentityRecord {
    record(
        "E3.5",
        "∫₀¹ ξ(x) dx = ½[ζ(2)−γ²−2γ₁] = −∫₀^∞ [1/t + 1/(1−e^t)] ln(1−e^{−t}) dt = ∫₀¹ [1/(u ln u) − 1/(u−1)] ln(1−u) du",
        &[],
        no_params(),
        vec![
            Route::new("closed_form", &["constants"], |_| Ok(xi_mean_closed_form())),
            Route::new("exponential_integral", &["quadrature"], |_| bose_integral(bose_bracket)),
            Route::new("unit_integral", &["xi_integral"], |_| xi_mean_integral()),
        ],
    )
}

fn e3_7() -> IdentityRecord {
    record(
        "E3.7",
        "ξ(0) = −∫₀^∞ ln(1−e^{−t}) dt = −∫₀¹ ln(1−u)/u du = ζ(2)",
        &[],
        no_params(),
        vec![
            Route::new("xi_series", &["xi_series"], |_| xi_series(0.0)),
            Route::new("closed_form", &["constants"], |_| Ok(c(zeta2()))),
            Route::new("exponential_integral", &["quadrature"], |_| {
                bose_integral(|_| 1.0)
            }),
            Route::new("unit_integral", &["quadrature", "log"], |_| {
                let spec = IntegralSpec::finite(0.0, 1.0, |p| {
                    if p.x < 0.5 {
                        let u = p.to_lo;
                        if u == 0.0 {
                            return -1.0;
                        }
                        (-u).ln_1p() / u
                    } else {
                        let (_, ln_1mu) = unit_logs(p);
                        ln_1mu / (1.0 - p.to_hi)
                    }
                })
                .removable_at_0()
                .log_at_1();
                Ok(-integrate_finite(&spec, QUAD_EPS)?)
            }),
        ],
    )
}

/// Every registered identity, in no particular order.
pub(crate) fn build() -> Vec<IdentityRecord> {
    let mut out = vec![
        e1_1(),
        e1_2(),
        e1_4(),
        e1_5(),
        e1_8(),
        e1_10(),
        e1_12(),
        p1(),
        e1_14(),
        e1_17(),
        e1_18(),
        e1_20(),
        e1_24(),
        e1_25(),
        e1_26(),
        e1_27(),
        p2(),
        e1_31(),
        e1_32(),
        e1_33(),
        e1_34(),
        e1_36(),
        e1_37(),
        p3(),
        e1_40(),
        e1_41(),
        e1_42(),
        l1(),
        c1(),
        e1_47(),
        e1_49(),
    ];
    out.extend(l2_family());
    out.extend([
        e2_8(),
        e2_10(),
        e2_11(),
        e3_1(),
        e3_3(),
        e3_4(),
        e3_5(),
        e3_7(),
    ]);
    out
}

/// Series summed by corpus routes, for comparing the tail-closed route with
/// extrapolation.
pub(super) fn sample_series() -> Vec<(&'static str, &'static str, SeriesSpec)> {
    let xx = x();
    let neg_log = x().scale(-Dd::ONE).ln_1p().scale(-Dd::ONE);
    vec![
        (
            "E1.4",
            "Σ_{r≥2} [ln(r/(r−1)) − 1/(2r²) − 1/r]",
            closed_spec(
                2,
                &neg_log.sub(&xx.mul(&xx).scale(Dd::from_f64(0.5))).sub(&xx),
                |r| {
                    let i = r.recip();
                    -(-i).ln_1p() - i.sqr().mul_f64(0.5) - i
                },
            ),
        ),
        (
            "E1.5",
            "Σ_{r≥2} 1/((r−1)r³)",
            closed_spec(
                2,
                &x().times_power(3.0).mul(&x().scale(-Dd::ONE).recip_1p()),
                |r| ((r - Dd::ONE) * r.powi(3)).recip(),
            ),
        ),
        (
            "E1.8",
            "Σ_{n≥2} [ln(n/(n−1)) − 1/n]",
            closed_spec(2, &neg_log.sub(&x()), |n| -(-n.recip()).ln_1p() - n.recip()),
        ),
        (
            "E1.10",
            "Σ_{n≥1} H_n [ln((n+1)/n) − 1/(n+1)]",
            harmonic_spec(1, 0, &x().ln_1p().sub(&x().mul(&x().recip_1p())), |n| {
                n.recip().ln_1p() - (n + Dd::ONE).recip()
            }),
        ),
        (
            "E1.12",
            "Σ_{n≥1} ψ(n)/n²",
            digamma_spec(1, &x().times_power(1.0), |n| n.powi(-2)),
        ),
        (
            "E1.20",
            "Σ_{n≥2} H_{n−1} [atanh(1/n) − 1/n]",
            harmonic_spec(2, 1, &x().atanh().sub(&x()), |n| atanh_recip(n) - n.recip()),
        ),
    ]
}
