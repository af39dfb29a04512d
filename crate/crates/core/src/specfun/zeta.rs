use std::sync::OnceLock;

use crate::error::{domain, Result};
use crate::numerics::{
    extrapolate, log_power_tail, power_tail, Dd, ExtendedReal, ExtrapolationModel, DD_EPS,
};

/// Number of partial sums fed to the alternating accelerator. The averaging
/// window is much shorter than the index reached, which keeps the
/// finite-difference remainder negligible for smooth summands.
const ALTERNATING_TERMS: u64 = 256;

/// Riemann zeta for real `s > 1`.
pub fn zeta(s: f64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("zeta requires s > 1, got {s}"));
    }
    Ok(ExtendedReal::exact(Dd::ONE) + zeta_minus_one(s)?)
}

/// Exponent beyond which `Σ_{n≥2} n^{-s}` converges fast enough to sum
/// directly; the tail closure would work with underflowing magnitudes.
const DIRECT_EXPONENT: f64 = 30.0;

/// `ζ(s) − 1`, without the cancellation of forming it from [`zeta`].
pub fn zeta_minus_one(s: f64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("zeta requires s > 1, got {s}"));
    }
    if s < DIRECT_EXPONENT {
        return power_tail(s, Dd::ONE);
    }
    let mut acc = Dd::ZERO;
    for n in 2u32.. {
        let t = Dd::from_f64(n as f64).powf(-s);
        if t.hi <= 1e-34 * acc.hi {
            // remaining terms are bounded by n·t
            return Ok(ExtendedReal::new(acc, t.hi * n as f64 + rounding(acc, 4.0)));
        }
        acc += t;
    }
    unreachable!()
}

/// Hurwitz zeta `Σ_{n≥0} (n+a)^{-s}` for `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("hurwitz_zeta requires s > 1, got {s}"));
    }
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("hurwitz_zeta requires a > 0, got {a}"));
    }
    let a = Dd::from_f64(a);
    let head = ExtendedReal::rounded(a.powf(-s));
    Ok(head + power_tail(s, a)?)
}

/// `∂ζ(s, a)/∂s = −Σ_{n≥0} ln(n+a) (n+a)^{-s}` for `s > 1`, `a > 0`, by
/// direct summation closed with a log-power tail.
pub fn hurwitz_zeta_deriv(s: f64, a: f64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("hurwitz_zeta_deriv requires s > 1, got {s}"));
    }
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("hurwitz_zeta_deriv requires a > 0, got {a}"));
    }
    let a = Dd::from_f64(a);
    let mut head = Dd::ZERO;
    let mut abs_head = 0.0;
    for n in 0..DERIV_HEAD {
        let m = a + Dd::from_f64(n as f64);
        let t = m.ln() * m.powf(-s);
        head += t;
        abs_head += t.hi.abs();
    }
    let x = a + Dd::from_f64((DERIV_HEAD - 1) as f64);
    let tail = log_power_tail(1, s, x, 1e-31)?;
    let total = ExtendedReal::new(head, abs_head * 8.0 * DD_EPS) + tail;
    Ok(ExtendedReal::new(-total.value, total.err))
}

/// Terms summed directly before the tail closure takes over; keeps the
/// closure clear of the maximum of `ln m · m^{-s}`.
const DERIV_HEAD: u32 = 32;

/// Dirichlet eta `Σ (−1)^{n+1} n^{-s}` for `s > 0`.
///
/// For `s > 1` this is `(1 − 2^{1−s}) ζ(s)`; for `0 < s ≤ 1` the alternating
/// series is accelerated directly.
pub fn dirichlet_eta(s: f64) -> Result<ExtendedReal> {
    if !(s > 0.0) {
        return domain(format!("dirichlet_eta requires s > 0, got {s}"));
    }
    if s > 1.0 {
        let factor = Dd::ONE - Dd::from_f64(2.0).powf(1.0 - s);
        Ok(zeta(s)? * factor)
    } else {
        dirichlet_eta_alternating(s)
    }
}

/// Eta by accelerating the alternating partial sums; valid for all `s > 0`
/// and independent of the zeta route.
pub fn dirichlet_eta_alternating(s: f64) -> Result<ExtendedReal> {
    if !(s > 0.0) {
        return domain(format!("dirichlet_eta requires s > 0, got {s}"));
    }
    let mut acc = Dd::ZERO;
    let mut partials = Vec::with_capacity(ALTERNATING_TERMS as usize);
    for n in 1..=ALTERNATING_TERMS {
        let t = Dd::from_f64(n as f64).powf(-s);
        acc = if n % 2 == 1 { acc + t } else { acc - t };
        partials.push(ExtendedReal::rounded(acc));
    }
    extrapolate(&[], &partials, ExtrapolationModel::Alternating)
}

const INT_TABLE: usize = 130;

/// `ζ(n)` for integers `2 ≤ n < INT_TABLE`, computed once.
fn zeta_int_table() -> &'static [Dd] {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..INT_TABLE)
            .map(|n| {
                if n < 2 {
                    Dd::ZERO
                } else {
                    zeta(n as f64).expect("s > 1").value
                }
            })
            .collect()
    })
}

/// `ζ(n)` at integer `n ≥ 2`.
pub(crate) fn zeta_int(n: usize) -> Dd {
    if n < INT_TABLE {
        zeta_int_table()[n]
    } else {
        // ζ(n) − 1 < 2^{1−n} is below working precision here
        Dd::ONE + Dd::from_f64(2.0).powi(-(n as i32))
    }
}

/// `ζ(−m)` for integers `m ≥ 0` via `ζ(1−2k) = (−1)^k 2 (2k−1)! ζ(2k) / (2π)^{2k}`.
pub(crate) fn zeta_nonpositive(m: usize) -> Dd {
    if m == 0 {
        return Dd::from_f64(-0.5);
    }
    if m.is_multiple_of(2) {
        return Dd::ZERO;
    }
    let k = m.div_ceil(2);
    let mut fact = Dd::ONE;
    for i in 2..2 * k {
        fact = fact.mul_f64(i as f64);
    }
    let two_pi = Dd::PI.mul_f64(2.0);
    let v = fact.mul_f64(2.0) * zeta_int(2 * k) / two_pi.powi(2 * k as i32);
    if k % 2 == 1 {
        -v
    } else {
        v
    }
}

pub(crate) fn rounding(v: Dd, ulps: f64) -> f64 {
    v.hi.abs() * ulps * DD_EPS
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: ExtendedReal, b: Dd, tol: f64) -> bool {
        (a.value - b).abs().to_f64() <= tol
    }

    #[test]
    fn even_zeta_closed_forms() {
        let z2 = zeta(2.0).unwrap();
        assert!(close(z2, Dd::PI.sqr() / Dd::from_f64(6.0), 1e-30));
        assert!(z2.err <= 1e-25);
        let z4 = zeta(4.0).unwrap();
        assert!(close(z4, Dd::PI.sqr().sqr() / Dd::from_f64(90.0), 1e-30));
        assert!(zeta(1.1).unwrap().err <= 1e-25);
    }

    #[test]
    fn zeta_three_against_truncation() {
        let mut acc = Dd::ZERO;
        for k in (1..=1_000_000u64).rev() {
            acc += Dd::from_f64(k as f64).powi(-3);
        }
        let n = 1e6f64;
        // Σ_{k>n} k^-3 ≈ 1/(2n²) − 1/(2n³)
        let beyond = 0.5 / (n * n) - 0.5 / (n * n * n);
        let z3 = zeta(3.0).unwrap();
        assert!((z3.to_f64() - (acc.to_f64() + beyond)).abs() < 1e-15);
    }

    #[test]
    fn zeta_domain() {
        assert!(zeta(1.0).is_err());
        assert!(zeta(-2.0).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
        assert!(dirichlet_eta(0.0).is_err());
    }

    #[test]
    fn hurwitz_special_cases() {
        for s in [2.0, 3.0] {
            let h = hurwitz_zeta(s, 1.0).unwrap();
            assert!((h.value - zeta(s).unwrap().value).abs().to_f64() < 1e-30);
        }
        let half = hurwitz_zeta(2.0, 0.5).unwrap();
        let want = zeta(2.0).unwrap().value.mul_f64(3.0);
        assert!((half.value - want).abs().to_f64() < 1e-29);
        let v = hurwitz_zeta(2.5, 0.3).unwrap();
        let oracle = Dd::parse_decimal("21.06923920224772491718377801253623091996").unwrap();
        assert!((v.value - oracle).abs().to_f64() < 1e-27);
    }

    #[test]
    fn hurwitz_derivative_values() {
        for (s, a, want) in [
            (2.0, 1.0, "-0.9375482543158437537025740945678649778979"),
            (2.5, 0.3, "23.94423817902941263780325870314419528335"),
            (1.5, 0.5, "-2.068209378232991581190082991694228595853"),
        ] {
            let v = hurwitz_zeta_deriv(s, a).unwrap();
            let want = Dd::parse_decimal(want).unwrap();
            assert!(
                (v.value - want).abs().to_f64() <= v.err.max(1e-28),
                "s={s} a={a} {v:?}"
            );
            assert!(v.err < 1e-25);
        }
        assert!(hurwitz_zeta_deriv(1.0, 1.0).is_err());
    }

    #[test]
    fn eta_values() {
        let e1 = dirichlet_eta(1.0).unwrap();
        assert!((e1.value - Dd::LN2).abs().to_f64() < 1e-25);
        let e2 = dirichlet_eta(2.0).unwrap();
        assert!(
            (e2.value - Dd::PI.sqr() / Dd::from_f64(12.0))
                .abs()
                .to_f64()
                < 1e-29
        );
        let e = dirichlet_eta(0.5).unwrap();
        let want = Dd::parse_decimal("0.6048986434216303702472659142359554997598").unwrap();
        assert!((e.value - want).abs().to_f64() < 1e-12);
        assert!(e.err < 1e-12);
    }

    #[test]
    fn eta_routes_agree_above_one() {
        for s in [1.5, 2.0, 3.25, 6.0] {
            let a = dirichlet_eta(s).unwrap();
            let b = dirichlet_eta_alternating(s).unwrap();
            assert!((a.value - b.value).abs().to_f64() < 1e-24, "s={s}");
        }
    }

    #[test]
    fn nonpositive_zeta_values() {
        assert!((zeta_nonpositive(1) + Dd::ratio(1, 12)).abs().to_f64() < 1e-31);
        assert!((zeta_nonpositive(3) - Dd::ratio(1, 120)).abs().to_f64() < 1e-31);
        assert!((zeta_nonpositive(5) + Dd::ratio(1, 252)).abs().to_f64() < 1e-31);
        assert!(zeta_nonpositive(4).is_zero());
    }
}
