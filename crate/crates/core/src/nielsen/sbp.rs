//! Summation-by-parts representations of ζ, η, ζ(s, a), ψ and ψ^{(j)}.
//!
//! Each representation is summed exactly as written, with harmonic-number
//! (or digamma-difference) weights, and its tail is closed from the
//! asymptotic expansion of the summand.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{
    digamma_succ_expansion, harmonic_expansion, sum_series_with, Dd, ExtendedReal, LogSeries,
    SeriesKind, SeriesSpec, SumOptions, TailModel,
};
use crate::specfun::constants::{euler_gamma, ln2};
use crate::specfun::{
    digamma_dd, dirichlet_eta, harmonic_number, hurwitz_zeta, hurwitz_zeta_deriv, polygamma, zeta,
};

/// Terms kept in the asymptotic expansions of the summands.
const ORDER: usize = 24;
/// Absolute accuracy requested from the summation engine.
pub(crate) const SERIES_EPS: f64 = 1e-18;
/// Truncation cap; the tail models converge long before this.
const MAX_TERMS: u64 = 1 << 14;

fn options() -> SumOptions {
    SumOptions {
        max_terms: MAX_TERMS,
    }
}

/// Which partial-summation representation to evaluate.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SbpKind {
    /// `ζ(s+1) = Σ_{r≥1} H_r [r^{-s} − (r+1)^{-s}]`; params `(s)`.
    #[serde(rename = "zeta_sbp")]
    Zeta,
    /// `(1 − 2^{-s}) ζ(s+1) = Σ_{r≥1} H_r [(−1)^{r+1} r^{-s} − (−1)^r (r+1)^{-s}]`;
    /// params `(s)`.
    #[serde(rename = "eta_sbp")]
    Eta,
    /// `ζ(s+1, a) = Σ_{r≥0} [ψ(a+r+1) − ψ(a)] [(r+a)^{-s} − (r+a+1)^{-s}]`;
    /// params `(s, a)`.
    #[serde(rename = "hurwitz_sbp")]
    Hurwitz,
    /// `ψ(x) = −γ − 1/x + x Σ_{k≥1} H_k [1/(x+k) − 1/(x+k+1)]`; params `(x)`.
    #[serde(rename = "digamma_sbp")]
    Digamma,
    /// `ψ′(x)` by the differentiated form; params `(x)`.
    #[serde(rename = "trigamma_sbp")]
    Trigamma,
    /// `ψ^{(j)}(x)` for `j ≥ 2`; params `(j, x)`.
    #[serde(rename = "polygamma_sbp")]
    Polygamma,
    /// `∂ζ(s+1, a)/∂s = Σ_{r≥0} [ψ(a+r+1) − ψ(a)] [ln(r+a+1)/(r+a+1)^s − ln(r+a)/(r+a)^s]`;
    /// params `(s, a)`.
    #[serde(rename = "hurwitz_deriv_sbp")]
    HurwitzDeriv,
}

impl SbpKind {
    pub const ALL: [SbpKind; 7] = [
        SbpKind::Zeta,
        SbpKind::Eta,
        SbpKind::Hurwitz,
        SbpKind::Digamma,
        SbpKind::Trigamma,
        SbpKind::Polygamma,
        SbpKind::HurwitzDeriv,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SbpKind::Zeta => "zeta_sbp",
            SbpKind::Eta => "eta_sbp",
            SbpKind::Hurwitz => "hurwitz_sbp",
            SbpKind::Digamma => "digamma_sbp",
            SbpKind::Trigamma => "trigamma_sbp",
            SbpKind::Polygamma => "polygamma_sbp",
            SbpKind::HurwitzDeriv => "hurwitz_deriv_sbp",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            SbpKind::Zeta | SbpKind::Eta | SbpKind::Digamma | SbpKind::Trigamma => 1,
            SbpKind::Hurwitz | SbpKind::Polygamma | SbpKind::HurwitzDeriv => 2,
        }
    }

    fn check_arity(self, params: &[f64]) -> Result<()> {
        if params.len() == self.arity() {
            Ok(())
        } else {
            Err(Error::Usage(format!(
                "{} takes {} parameter(s), got {}",
                self.tag(),
                self.arity(),
                params.len()
            )))
        }
    }
}

/// Evaluates the partial-summation representation `kind` at `params`.
pub fn sbp_eval(kind: SbpKind, params: &[f64]) -> Result<ExtendedReal> {
    kind.check_arity(params)?;
    match kind {
        SbpKind::Zeta => zeta_sbp(params[0]),
        SbpKind::Eta => eta_sbp(params[0]),
        SbpKind::Hurwitz => hurwitz_sbp(params[0], params[1]),
        SbpKind::Digamma => polygamma_form(0, params[0]),
        SbpKind::Trigamma => polygamma_form(1, params[0]),
        SbpKind::Polygamma => {
            let j = polygamma_order(params[0])?;
            if j < 2 {
                return domain(format!("polygamma_sbp requires j >= 2, got {j}"));
            }
            polygamma_form(j, params[1])
        }
        SbpKind::HurwitzDeriv => hurwitz_deriv_sbp(params[0], params[1]),
    }
}

/// The function each representation equals, through the direct special
/// function route it is checked against.
pub fn sbp_direct(kind: SbpKind, params: &[f64]) -> Result<ExtendedReal> {
    kind.check_arity(params)?;
    match kind {
        SbpKind::Zeta => {
            check_s(params[0])?;
            zeta(params[0] + 1.0)
        }
        SbpKind::Eta => {
            check_s(params[0])?;
            dirichlet_eta(params[0] + 1.0)
        }
        SbpKind::Hurwitz => {
            check_s(params[0])?;
            hurwitz_zeta(params[0] + 1.0, params[1])
        }
        SbpKind::Digamma => polygamma(0, params[0]),
        SbpKind::Trigamma => polygamma(1, params[0]),
        SbpKind::Polygamma => polygamma(polygamma_order(params[0])?, params[1]),
        SbpKind::HurwitzDeriv => {
            check_s(params[0])?;
            hurwitz_zeta_deriv(params[0] + 1.0, params[1])
        }
    }
}

fn polygamma_order(j: f64) -> Result<u32> {
    if j >= 0.0 && j.fract() == 0.0 && j <= 64.0 {
        Ok(j as u32)
    } else {
        domain(format!(
            "polygamma order must be a small non-negative integer, got {j}"
        ))
    }
}

fn check_s(s: f64) -> Result<()> {
    if s > 0.0 && s.is_finite() {
        Ok(())
    } else {
        domain(format!("partial-summation forms require s > 0, got {s}"))
    }
}

fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        domain(format!("partial-summation forms require a > 0, got {a}"))
    }
}

fn valid_from(c: f64) -> u64 {
    (4.0 * (c.abs() + 1.0)).ceil().max(16.0) as u64
}

/// `x = 1/k` scaled by `c`.
fn scaled_x(c: f64) -> LogSeries {
    LogSeries::x(ORDER).scale(Dd::from_f64(c))
}

/// `(k + c)^{-p} − (k + c + 1)^{-p}` expanded in `1/k`.
fn power_difference(p: f64, c: f64) -> LogSeries {
    scaled_x(c)
        .pow_1p(-p)
        .sub(&scaled_x(c + 1.0).pow_1p(-p))
        .times_power(p)
}

fn power_difference_at(p: f64, m: Dd) -> Dd {
    m.powf(-p) - (m + Dd::ONE).powf(-p)
}

fn harmonic_weighted(
    n0: u64,
    expansion_without_weight: &LogSeries,
    from: u64,
    term: impl Fn(u64, Dd) -> Dd + Send + Sync + 'static,
) -> Result<ExtendedReal> {
    let expansion = harmonic_expansion(ORDER).mul(expansion_without_weight);
    let spec = SeriesSpec::new(n0, SeriesKind::General, term)
        .with_tail(TailModel::from_expansion(&expansion, 0.0, from));
    sum_series_with(&spec, SERIES_EPS, options())
}

fn zeta_sbp(s: f64) -> Result<ExtendedReal> {
    check_s(s)?;
    harmonic_weighted(1, &power_difference(s, 0.0), 16, move |r, h| {
        h * power_difference_at(s, Dd::from_f64(r as f64))
    })
}

/// The alternating representation is summed in pairs `r = 2m − 1, 2m`:
/// `H_{2m} [(2m−1)^{-s} − (2m+1)^{-s}] − [(2m−1)^{-s} + (2m)^{-s}] / (2m)`.
fn eta_sbp(s: f64) -> Result<ExtendedReal> {
    check_s(s)?;
    let order = ORDER;
    let x = LogSeries::x(order);
    let two_s = Dd::from_f64(2.0).powf(-s);
    // H_{2m} = ln m + γ + ln 2 + Σ_j a_j (2m)^{-j}
    let psi = digamma_succ_expansion(order);
    let mut a = vec![euler_gamma() + ln2()];
    let mut half = Dd::ONE;
    for j in 1..order {
        half = half.mul_f64(0.5);
        a.push(psi.coefficient(j, 0) * half);
    }
    let h2 = LogSeries::log(order).add(&LogSeries::power(&a, order));
    let at = |c: f64| {
        x.clone()
            .scale(Dd::from_f64(c))
            .pow_1p(-s)
            .scale(two_s)
            .times_power(s)
    };
    let (am, b, ap) = (
        at(-0.5),
        LogSeries::constant(two_s, order).times_power(s),
        at(0.5),
    );
    let expansion = h2
        .mul(&am.sub(&ap))
        .sub(&x.scale(Dd::from_f64(0.5)).mul(&am.add(&b)));
    let spec = SeriesSpec::new(1, SeriesKind::General, move |m, _| {
        let two_m = Dd::from_f64(2.0 * m as f64);
        let h = harmonic_number(2 * m).value;
        let am = (two_m - Dd::ONE).powf(-s);
        let b = two_m.powf(-s);
        let ap = (two_m + Dd::ONE).powf(-s);
        h * (am - ap) - (am + b) / two_m
    })
    .with_tail(TailModel::from_expansion(&expansion, 0.0, 16));
    sum_series_with(&spec, SERIES_EPS, options())
}

/// Summand weight `ψ(a+r+1) − ψ(a)` expanded in `1/m`, `m = r + a`.
fn digamma_weight(psi_a: Dd) -> LogSeries {
    digamma_succ_expansion(ORDER).sub(&LogSeries::constant(psi_a, ORDER))
}

fn digamma_weighted(
    a: f64,
    expansion_without_weight: &LogSeries,
    term: impl Fn(Dd) -> Dd + Send + Sync + 'static,
) -> Result<ExtendedReal> {
    let ad = Dd::from_f64(a);
    let psi_a = digamma_dd(ad);
    let expansion = digamma_weight(psi_a.value).mul(expansion_without_weight);
    let spec = SeriesSpec::new(0, SeriesKind::General, move |r, _| {
        let m = ad + Dd::from_f64(r as f64);
        let w = digamma_dd(m + Dd::ONE).value - psi_a.value;
        w * term(m)
    })
    .with_tail(TailModel::from_expansion(&expansion, a, 16));
    let v = sum_series_with(&spec, SERIES_EPS, options())?;
    // every weight inherits the error of ψ(a)
    Ok(v.with_extra_err(psi_a.err * v.to_f64().abs()))
}

fn hurwitz_sbp(s: f64, a: f64) -> Result<ExtendedReal> {
    check_s(s)?;
    check_a(a)?;
    digamma_weighted(a, &power_difference(s, 0.0), move |m| {
        power_difference_at(s, m)
    })
}

fn hurwitz_deriv_sbp(s: f64, a: f64) -> Result<ExtendedReal> {
    check_s(s)?;
    check_a(a)?;
    // m^{-s} [L ((1+x)^{-s} − 1) + ln(1+x) (1+x)^{-s}],  L = ln m
    let x = LogSeries::x(ORDER);
    let pw = x.pow_1p(-s);
    let g = LogSeries::log(ORDER)
        .mul(&pw.sub(&LogSeries::constant(Dd::ONE, ORDER)))
        .add(&x.ln_1p().mul(&pw))
        .times_power(s);
    digamma_weighted(a, &g, move |m| {
        let m1 = m + Dd::ONE;
        m1.ln() * m1.powf(-s) - m.ln() * m.powf(-s)
    })
}

/// `ψ^{(j)}(x)` from the partial-summation form; `j = 0` and `j = 1` are
/// the digamma and trigamma representations.
fn polygamma_form(j: u32, x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!(
            "partial-summation polygamma requires x > 0, got {x}"
        ));
    }
    let xd = Dd::from_f64(x);
    let from = valid_from(x + 1.0);
    let p = j as f64;
    let q = p + 1.0;
    if j == 0 {
        // −γ − 1/x + x Σ H_k [1/(x+k) − 1/(x+k+1)]
        let sum = harmonic_weighted(1, &power_difference(1.0, x), from, move |k, h| {
            h * power_difference_at(1.0, xd + Dd::from_f64(k as f64))
        })?;
        let head = -euler_gamma() - xd.recip();
        return Ok(sum * xd + ExtendedReal::rounded(head).with_extra_err(1e-32));
    }
    // x^{-j-1} + Σ H_k [(x+k)^{-j} − (x+k+1)^{-j}] − x Σ H_k [(x+k)^{-j-1} − (x+k+1)^{-j-1}]
    let expansion = power_difference(p, x).sub(&power_difference(q, x).scale(xd));
    let sum = harmonic_weighted(1, &expansion, from, move |k, h| {
        let m = xd + Dd::from_f64(k as f64);
        h * (power_difference_at(p, m) - xd * power_difference_at(q, m))
    })?;
    let braced = sum + ExtendedReal::rounded(xd.powf(-q));
    let mut fact = Dd::ONE;
    for i in 2..=j {
        fact = fact.mul_f64(i as f64);
    }
    let v = braced * fact;
    Ok(if j % 2 == 1 { v } else { -v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(kind: SbpKind, params: &[f64], tol: f64) {
        let a = sbp_eval(kind, params).unwrap();
        let b = sbp_direct(kind, params).unwrap();
        assert!(a.err <= 1e-15, "{} {params:?}: err {a:?}", kind.tag());
        assert!(
            a.distance(b) <= tol,
            "{} {params:?}: {a:?} vs {b:?}",
            kind.tag()
        );
    }

    #[test]
    fn zeta_form_gives_zeta_three() {
        check(SbpKind::Zeta, &[2.0], 1e-15);
        check(SbpKind::Zeta, &[0.5], 1e-15);
    }

    #[test]
    fn eta_form_matches() {
        for s in [0.5, 1.0, 2.0, 3.5] {
            check(SbpKind::Eta, &[s], 1e-15);
        }
    }

    #[test]
    fn hurwitz_forms_match() {
        for (s, a) in [(1.0, 1.0), (1.5, 0.3), (2.0, 0.5), (0.5, 2.0)] {
            check(SbpKind::Hurwitz, &[s, a], 1e-15);
            check(SbpKind::HurwitzDeriv, &[s, a], 1e-14);
        }
    }

    #[test]
    fn digamma_form_at_one_is_minus_gamma() {
        let v = sbp_eval(SbpKind::Digamma, &[1.0]).unwrap();
        assert!((v.value + euler_gamma()).abs().to_f64() < 1e-16);
        for x in [0.25, 2.0, 7.5] {
            check(SbpKind::Digamma, &[x], 1e-15);
            check(SbpKind::Trigamma, &[x], 1e-15);
            check(SbpKind::Polygamma, &[2.0, x], 1e-14);
            check(SbpKind::Polygamma, &[3.0, x], 1e-13);
        }
    }

    #[test]
    fn arity_and_domain() {
        assert!(matches!(sbp_eval(SbpKind::Zeta, &[]), Err(Error::Usage(_))));
        assert!(matches!(
            sbp_eval(SbpKind::Zeta, &[0.0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            sbp_eval(SbpKind::Polygamma, &[1.0, 1.0]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            sbp_eval(SbpKind::Hurwitz, &[1.0, -1.0]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn tags_round_trip_through_serde() {
        for k in SbpKind::ALL {
            let text = serde_json::to_string(&k).unwrap();
            assert_eq!(text, format!("\"{}\"", k.tag()));
            assert_eq!(serde_json::from_str::<SbpKind>(&text).unwrap(), k);
        }
    }
}
