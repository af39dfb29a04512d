use crate::error::{domain, Result};
use crate::numerics::{em_corrections, Dd, ExtendedReal, DD_EPS};

/// Closure point for the regularised sum: the Euler–Maclaurin remainder for
/// `ln x / x` at this distance is far below working precision.
const CLOSURE_POINT: f64 = 256.0;

/// Generalised Stieltjes constant
/// `γ₁(a) = lim_{m→∞} [Σ_{k=0}^{m} ln(k+a)/(k+a) − ln²(m+a)/2]`.
///
/// The partial sum runs to `N` with `N + a ≥ 256`. Beyond that point the sum
/// equals `∫ f` plus the Euler–Maclaurin corrections at `X = N + a`; the
/// integral cancels the `ln²(m+a)/2` term up to `−ln²X/2`.
pub fn stieltjes_gamma1(a: f64) -> Result<ExtendedReal> {
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("stieltjes_gamma1 requires a > 0, got {a}"));
    }
    let n = (CLOSURE_POINT - a).ceil().max(0.0) as u64;
    let ad = Dd::from_f64(a);
    let mut acc = Dd::ZERO;
    let mut mag = 0.0f64;
    for k in (0..=n).rev() {
        let x = ad + Dd::from_f64(k as f64);
        let t = x.ln() / x;
        mag += t.hi.abs();
        acc += t;
    }
    let x = ad + Dd::from_f64(n as f64);
    let corr = em_corrections(1, 1.0, x);
    let l = x.ln();
    let value = acc + corr.value - l.sqr().mul_f64(0.5);
    let err = corr.err + (mag + l.sqr().hi) * 8.0 * DD_EPS;
    Ok(ExtendedReal::new(value, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::constants::{euler_gamma, gamma1};

    #[test]
    fn gamma1_at_one_matches_constant() {
        let v = stieltjes_gamma1(1.0).unwrap();
        assert!((v.value - gamma1()).abs().to_f64() < 1e-28);
        assert!(v.err <= 1e-18);
    }

    #[test]
    fn half_argument_relation() {
        let d = stieltjes_gamma1(1.0).unwrap().value - stieltjes_gamma1(0.5).unwrap().value;
        let ln2 = Dd::LN2;
        let want = ln2.sqr() + euler_gamma() * ln2.mul_f64(2.0);
        assert!((d - want).abs().to_f64() < 1e-25);
    }

    #[test]
    fn difference_law() {
        for a in [0.5, 1.0, 2.0, 3.0] {
            let d = stieltjes_gamma1(a).unwrap().value - stieltjes_gamma1(a + 1.0).unwrap().value;
            let ad = Dd::from_f64(a);
            assert!((d - ad.ln() / ad).abs().to_f64() < 1e-15, "a={a}");
        }
        assert!(stieltjes_gamma1(0.0).is_err());
    }
}
