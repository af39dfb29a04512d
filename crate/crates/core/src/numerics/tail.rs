//! Euler–Maclaurin closure of tails `Σ_{k≥1} f(X + k)` for
//! `f(x) = ln^p(x) · x^{-σ}`.
//!
//! The correction series runs through B₁₀; the B₁₂ term, doubled, is the
//! remainder bound. When that bound is too large at the requested start the
//! first terms are summed directly and the closure is applied further out.

use super::dd::{Dd, DD_EPS};
use super::extended::ExtendedReal;
use crate::error::{domain, Result};

pub type TailValue = ExtendedReal;

/// B₂, B₄, …, B₁₂ as exact fractions.
const BERNOULLI: [(i64, i64); 6] = [(1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730)];

/// Euler's constant to double-word precision.
pub(crate) const EULER_GAMMA: Dd = Dd {
    hi: 0.5772156649015329,
    lo: -4.942915152430645e-18,
};

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Coefficients of `f^{(m)}(x) = x^{-σ-m} Σ_i c_i ln^i x`, for m = 0..=max_m.
fn derivative_polys(p: usize, sigma: f64, max_m: usize) -> Vec<Vec<Dd>> {
    let mut out = Vec::with_capacity(max_m + 1);
    let mut c = vec![Dd::ZERO; p + 1];
    c[p] = Dd::ONE;
    out.push(c.clone());
    for m in 0..max_m {
        let k = Dd::from_f64(sigma) + Dd::from_f64(m as f64);
        let mut next = vec![Dd::ZERO; p + 1];
        for i in 0..=p {
            next[i] = -(k * c[i]);
            if i < p {
                next[i] += c[i + 1] * Dd::from_f64((i + 1) as f64);
            }
        }
        c = next;
        out.push(c.clone());
    }
    out
}

fn poly_at(c: &[Dd], l: Dd) -> Dd {
    c.iter().rev().fold(Dd::ZERO, |acc, &ci| acc * l + ci)
}

/// `ln^p(x) x^{-σ}` at a double-word point.
fn f_at(p: usize, sigma: f64, x: Dd) -> Dd {
    let l = x.ln();
    x.powf(-sigma) * l.powi(p as i32)
}

/// Euler–Maclaurin corrections at `x`:
/// `Σ_{k≥1} f(x+k) − ∫_x^∞ f = −f(x)/2 − Σ_{j=1}^{5} B_{2j}/(2j)! f^{(2j−1)}(x) + R`.
///
/// Returned value carries `2|B₁₂/12! f^{(11)}(x)|` as its error. Valid for any
/// `σ` (the integral is handled by the caller), so it also serves the
/// regularised sums defining Stieltjes constants.
pub fn em_corrections(p: usize, sigma: f64, x: Dd) -> ExtendedReal {
    let polys = derivative_polys(p, sigma, 11);
    let l = x.ln();
    let xs = x.powf(-sigma);
    let inv = x.recip();
    let deriv = |m: usize| xs * inv.powi(m as i32) * poly_at(&polys[m], l);
    let mut value = -deriv(0).mul_f64(0.5);
    for (j, &(num, den)) in BERNOULLI.iter().take(5).enumerate() {
        let b = Dd::ratio(num, den) / Dd::from_f64(factorial(2 * j as u32 + 2));
        value -= b * deriv(2 * j + 1);
    }
    let (num, den) = BERNOULLI[5];
    let b12 = Dd::ratio(num, den) / Dd::from_f64(factorial(12));
    let rem = (b12 * deriv(11)).abs().to_f64() * 2.0;
    ExtendedReal::new(value, rem + value.hi.abs() * 8.0 * DD_EPS)
}

/// `∫_x^∞ ln^p(t) t^{-σ} dt` for σ > 1.
fn tail_integral(p: usize, sigma: f64, x: Dd) -> Dd {
    let l = x.ln();
    let s1 = Dd::from_f64(sigma) - Dd::ONE;
    let mut acc = Dd::ZERO;
    let mut falling = Dd::ONE; // p!/(p-i)!
    let mut s1pow = s1;
    for i in 0..=p {
        acc += falling * l.powi((p - i) as i32) / s1pow;
        falling = falling.mul_f64((p - i) as f64);
        s1pow *= s1;
    }
    acc * x.powf(1.0 - sigma)
}

/// `Σ_{k≥1} ln^p(x+k) (x+k)^{-σ}` for real `x > 0`, `σ > 1`.
///
/// `rel_target` bounds the Euler–Maclaurin remainder relative to the result;
/// the start point is pushed outward (summing skipped terms directly) until
/// the bound is met.
pub fn log_power_tail(p: usize, sigma: f64, x: Dd, rel_target: f64) -> Result<ExtendedReal> {
    if !(sigma > 1.0) {
        return domain(format!("tail exponent must exceed 1, got {sigma}"));
    }
    if !(x.hi > 0.0) {
        return domain("tail start must be positive");
    }
    let mut start = x;
    let mut direct = Dd::ZERO;
    // f must be decreasing with monotone derivatives beyond the closure point
    let min_start = (sigma + 12.0).max(10.0).max((p as f64 / sigma).exp() + 2.0);
    loop {
        if start.hi >= min_start {
            let corr = em_corrections(p, sigma, start);
            let value = tail_integral(p, sigma, start) + corr.value;
            let bound = corr.err;
            if bound <= rel_target * value.hi.abs() || start.hi > 1e7 {
                let total = direct + value;
                let err = bound + total.hi.abs() * 16.0 * DD_EPS;
                return Ok(ExtendedReal::new(total, err));
            }
        }
        let next = (start.hi * 2.0).max(min_start).ceil();
        let steps = (next - start.hi).ceil().max(1.0) as u64;
        for k in 1..=steps {
            direct += f_at(p, sigma, start + Dd::from_f64(k as f64));
        }
        start += Dd::from_f64(steps as f64);
    }
}

/// `Σ_{n>N} n^{-s}`.
pub fn zeta_tail(s: f64, n: u64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("zeta_tail requires s > 1, got {s}"));
    }
    if n < 1 {
        return domain("zeta_tail requires N >= 1");
    }
    log_power_tail(0, s, Dd::from_f64(n as f64), 1e-31)
}

/// `Σ_{n>X} (n+shift)^{-s}` style tail with real start point.
pub fn power_tail(s: f64, x: Dd) -> Result<ExtendedReal> {
    log_power_tail(0, s, x, 1e-31)
}

/// `Σ_{n>N} ln(n) n^{-s}`.
pub fn log_zeta_tail(s: f64, n: u64) -> Result<ExtendedReal> {
    if !(s > 1.0) {
        return domain(format!("log_zeta_tail requires s > 1, got {s}"));
    }
    if n < 3 {
        return domain("log_zeta_tail requires N >= 3");
    }
    log_power_tail(1, s, Dd::from_f64(n as f64), 1e-31)
}

/// `Σ_{n>N} H_n n^{-j}` using `H_n = ln n + γ + 1/(2n) − 1/(12n²) + 1/(120n⁴)`
/// with the asymptotic remainder `1/(252 n⁶)` folded into the error.
pub fn harmonic_tail(j: u32, n: u64) -> Result<ExtendedReal> {
    if j < 2 {
        return domain(format!("harmonic_tail diverges for j = {j}"));
    }
    if n < 10 {
        return domain("harmonic_tail requires N >= 10");
    }
    let s = j as f64;
    let x = Dd::from_f64(n as f64);
    let gamma = ExtendedReal::exact(EULER_GAMMA);
    let mut total = log_power_tail(1, s, x, 1e-31)? + gamma * power_tail(s, x)?;
    total = total + power_tail(s + 1.0, x)?.mul_f64(0.5);
    total = total - power_tail(s + 2.0, x)? / ExtendedReal::from_f64(12.0);
    total = total + power_tail(s + 4.0, x)? / ExtendedReal::from_f64(120.0);
    let remainder = power_tail(s + 6.0, x)?.to_f64() / 252.0;
    Ok(total.with_extra_err(remainder))
}

/// `Σ_{n>N} H_n n^{-σ}` for real σ > 1, using the asymptotic expansion of
/// `H_n` through `n^{-12}`.
pub fn harmonic_power_tail(sigma: f64, n: u64) -> Result<ExtendedReal> {
    if !(sigma > 1.0) {
        return domain(format!("harmonic tail diverges for exponent {sigma}"));
    }
    let x = Dd::from_f64(n as f64);
    let gamma = ExtendedReal::exact(EULER_GAMMA);
    let mut total = log_power_tail(1, sigma, x, 1e-31)? + gamma * power_tail(sigma, x)?;
    total = total + power_tail(sigma + 1.0, x)?.mul_f64(0.5);
    // −Σ B_{2k}/(2k) n^{-2k}
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let two_k = 2 * (k + 1);
        let c = Dd::ratio(num, den * two_k as i64);
        let t = power_tail(sigma + two_k as f64, x)?;
        total = total - t * ExtendedReal::exact(c);
    }
    // next term: B₁₄/14 = 7/84 = 1/12
    let remainder = power_tail(sigma + 14.0, x)?.to_f64() / 12.0;
    Ok(total.with_extra_err(remainder))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta2() -> Dd {
        Dd::PI.sqr() / Dd::from_f64(6.0)
    }

    #[test]
    fn basel_closes() {
        for n in [10u64, 100] {
            let mut partial = Dd::ZERO;
            for k in 1..=n {
                partial += Dd::from_f64(k as f64).sqr().recip();
            }
            let total = partial + zeta_tail(2.0, n).unwrap().value;
            assert!((total - zeta2()).abs().to_f64() < 1e-29, "N={n}");
        }
    }

    #[test]
    fn zeta_tail_domain() {
        assert!(zeta_tail(1.0, 10).is_err());
        assert!(zeta_tail(0.5, 10).is_err());
        assert!(zeta_tail(2.0, 0).is_err());
        assert!(harmonic_tail(1, 100).is_err());
        assert!(log_zeta_tail(1.0, 100).is_err());
    }

    #[test]
    fn zeta_tail_matches_brute_force() {
        // Σ_{n=51}^{10^6} n^-3 plus the integral estimate beyond 10^6
        let mut acc = Dd::ZERO;
        for k in (51u64..=1_000_000).rev() {
            acc += Dd::from_f64(k as f64).powi(-3);
        }
        let beyond = 0.5 / (1e6f64 * 1e6) - 0.5 / 1e18;
        let tail = zeta_tail(3.0, 50).unwrap();
        assert!((tail.to_f64() - acc.to_f64() - beyond).abs() < 1e-15);
    }

    #[test]
    fn positive_tails() {
        for s in [1.1, 2.0, 3.5, 10.0] {
            for n in [1u64, 7, 100] {
                assert!(zeta_tail(s, n).unwrap().value.hi > 0.0);
            }
        }
        assert!(log_zeta_tail(2.0, 10).unwrap().value.hi > 0.0);
        assert!(harmonic_tail(2, 10).unwrap().value.hi > 0.0);
    }

    #[test]
    fn log_tail_below_power_tail() {
        for n in [100u64, 1000] {
            let a = log_zeta_tail(3.0, n).unwrap().to_f64();
            let b = zeta_tail(2.5, n).unwrap().to_f64();
            assert!(a < b);
        }
    }

    #[test]
    fn harmonic_tail_self_consistent() {
        let mut h = Dd::ZERO;
        let mut partial100 = Dd::ZERO;
        let mut partial1000 = Dd::ZERO;
        for n in 1..=1000u64 {
            let x = Dd::from_f64(n as f64);
            h += x.recip();
            let t = h / x.powi(3);
            partial1000 += t;
            if n <= 100 {
                partial100 += t;
            }
        }
        let a = partial100 + harmonic_tail(3, 100).unwrap().value;
        let b = partial1000 + harmonic_tail(3, 1000).unwrap().value;
        assert!((a - b).abs().to_f64() < 1e-16);
    }
}
