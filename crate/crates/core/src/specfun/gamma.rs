use crate::error::{domain, Result};
use crate::numerics::asymptotic::BERNOULLI_EVEN;
use crate::numerics::{Dd, ExtendedReal, DD_EPS};

use super::constants::euler_gamma;
use super::zeta::{hurwitz_zeta, rounding};

/// Shift point for the asymptotic digamma series.
const DIGAMMA_SHIFT: f64 = 40.0;
/// Shift point for Stirling's series.
const STIRLING_SHIFT: f64 = 30.0;
/// Asymptotic terms used: B₂ … B₂₄; B₂₆ bounds the remainder.
const ASYMPTOTIC_TERMS: usize = 12;

fn bernoulli(k: usize) -> Dd {
    let (num, den) = BERNOULLI_EVEN[k];
    Dd::ratio(num, den)
}

fn shift_count(x: f64, target: f64) -> u32 {
    if x >= target {
        0
    } else {
        (target - x).ceil() as u32
    }
}

/// `ψ(x)` for `x > 0`: upward recurrence then the asymptotic series.
fn digamma(x: f64) -> Result<ExtendedReal> {
    Ok(digamma_dd(Dd::from_f64(x)))
}

/// `ψ(x)` at a positive double-word argument.
pub(crate) fn digamma_dd(xd: Dd) -> ExtendedReal {
    let m = shift_count(xd.hi, DIGAMMA_SHIFT);
    let mut shift = Dd::ZERO;
    for k in 0..m {
        shift += (xd + Dd::from_f64(k as f64)).recip();
    }
    let y = xd + Dd::from_f64(m as f64);
    let inv = y.recip();
    let inv2 = inv.sqr();
    // ln y − 1/(2y) − Σ B_{2k}/(2k y^{2k})
    let mut series = Dd::ZERO;
    let mut p = inv2;
    for k in 0..ASYMPTOTIC_TERMS {
        series += bernoulli(k) * p / Dd::from_f64((2 * k + 2) as f64);
        p *= inv2;
    }
    let next = (bernoulli(ASYMPTOTIC_TERMS) * p / Dd::from_f64((2 * ASYMPTOTIC_TERMS + 2) as f64))
        .abs()
        .to_f64();
    let value = y.ln() - inv.mul_f64(0.5) - series - shift;
    let err = next + rounding(y.ln(), 8.0) + rounding(shift, 4.0 + m as f64);
    ExtendedReal::new(value, err)
}

/// Polygamma `ψ^{(j)}(x)` for `x > 0`.
///
/// `j = 0` uses recurrence plus the asymptotic series; `j ≥ 1` uses
/// `ψ^{(j)}(x) = (−1)^{j+1} j! ζ(j+1, x)`.
pub fn polygamma(j: u32, x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("polygamma requires x > 0, got {x}"));
    }
    if j == 0 {
        return digamma(x);
    }
    let mut fact = Dd::ONE;
    for i in 2..=j {
        fact = fact.mul_f64(i as f64);
    }
    let z = hurwitz_zeta((j + 1) as f64, x)? * fact;
    Ok(if j % 2 == 1 { z } else { -z })
}

/// `H_n = Σ_{k≤n} 1/k`.
pub fn harmonic_number(n: u64) -> ExtendedReal {
    if n == 0 {
        return ExtendedReal::exact(Dd::ZERO);
    }
    if n > 1 << 24 {
        // ψ(n+1) + γ; the shift is empty for such n
        let psi = digamma(n as f64 + 1.0).expect("positive argument");
        return psi + ExtendedReal::rounded(euler_gamma());
    }
    let mut acc = Dd::ZERO;
    for k in (1..=n).rev() {
        acc += Dd::from_f64(k as f64).recip();
    }
    ExtendedReal::new(acc, acc.hi * 2.0 * DD_EPS * (n as f64).log2().max(1.0))
}

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("log_gamma requires x > 0, got {x}"));
    }
    let m = shift_count(x, STIRLING_SHIFT);
    let xd = Dd::from_f64(x);
    let mut prod = Dd::ONE;
    for k in 0..m {
        prod *= xd + Dd::from_f64(k as f64);
    }
    let y = xd + Dd::from_f64(m as f64);
    let inv = y.recip();
    let inv2 = inv.sqr();
    let mut series = Dd::ZERO;
    let mut p = inv;
    for k in 0..ASYMPTOTIC_TERMS {
        let n = (2 * k + 2) as f64;
        series += bernoulli(k) * p / Dd::from_f64(n * (n - 1.0));
        p *= inv2;
    }
    let n = (2 * ASYMPTOTIC_TERMS + 2) as f64;
    let next = (bernoulli(ASYMPTOTIC_TERMS) * p / Dd::from_f64(n * (n - 1.0)))
        .abs()
        .to_f64();
    let ly = y.ln();
    let stirling = (y - Dd::from_f64(0.5)) * ly - y + Dd::HALF_LN_2PI + series;
    let value = stirling - prod.ln();
    let err = next + rounding(y * ly, 16.0) + rounding(prod.ln(), 8.0);
    Ok(ExtendedReal::new(value, err))
}

/// Upper incomplete gamma `Γ(0, x) = ∫_x^∞ e^{-u}/u du` for `x > 0`.
pub fn upper_gamma0(x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("upper_gamma0 requires x > 0, got {x}"));
    }
    if x <= 1.0 {
        let ein = ein_series(x);
        let value = ein.value - euler_gamma() - Dd::from_f64(x).ln();
        Ok(ExtendedReal::new(
            value,
            ein.err + rounding(value, 8.0) + 4.0 * DD_EPS,
        ))
    } else {
        Ok(e1_continued_fraction(x))
    }
}

/// `Ein(x) = Σ_{n≥1} (−1)^{n+1} x^n/(n·n!) = γ + ln x + Γ(0, x)`, entire
/// and free of the logarithmic singularity at 0.
pub fn ein(x: f64) -> Result<ExtendedReal> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("ein requires x > 0, got {x}"));
    }
    if x <= 1.0 {
        Ok(ein_series(x))
    } else {
        let e1 = e1_continued_fraction(x);
        let value = e1.value + euler_gamma() + Dd::from_f64(x).ln();
        Ok(ExtendedReal::new(value, e1.err + rounding(value, 8.0)))
    }
}

fn ein_series(x: f64) -> ExtendedReal {
    let xd = Dd::from_f64(x);
    let mut term = Dd::ONE; // x^n / n!
    let mut acc = Dd::ZERO;
    let mut last = 0.0;
    for n in 1..200u32 {
        term = term * xd / Dd::from_f64(n as f64);
        let t = term / Dd::from_f64(n as f64);
        acc = if n % 2 == 1 { acc + t } else { acc - t };
        last = t.hi.abs();
        if last <= 1e-34 * acc.hi.abs() {
            break;
        }
    }
    ExtendedReal::new(acc, last + rounding(acc, 8.0))
}

/// `E₁(x)` by the modified Lentz continued fraction, `x > 1`.
fn e1_continued_fraction(x: f64) -> ExtendedReal {
    let tiny = Dd::from_f64(1e-300);
    let mut b = Dd::from_f64(x + 1.0);
    let mut c = tiny.recip();
    let mut d = b.recip();
    let mut h = d;
    let mut last = 1.0;
    for i in 1..10_000u32 {
        let an = -Dd::from_f64(i as f64).sqr();
        b += Dd::from_f64(2.0);
        d = (an * d + b).recip();
        c = b + an / c;
        let del = c * d;
        h *= del;
        last = (del - Dd::ONE).abs().to_f64();
        if last < 1e-33 {
            break;
        }
    }
    let value = h * (-Dd::from_f64(x)).exp();
    ExtendedReal::new(value, value.hi.abs() * (last + 64.0 * DD_EPS))
}

#[derive(Copy, Clone, Debug)]
struct Complex {
    re: Dd,
    im: Dd,
}

impl Complex {
    fn mul(self, o: Complex) -> Complex {
        Complex {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn recip(self) -> Complex {
        let n = self.re.sqr() + self.im.sqr();
        Complex {
            re: self.re / n,
            im: -self.im / n,
        }
    }
}

/// `Im ln Γ(1 + i y)` by the upward recurrence
/// `ln Γ(1+iy) = ln Γ(m+1+iy) − Σ_{k=1}^{m} ln(k+iy)` and Stirling's series
/// at `m+1+iy`.
pub fn im_log_gamma_one_plus(y: f64, m: u32) -> ExtendedReal {
    let yd = Dd::from_f64(y);
    let re = Dd::from_f64((m + 1) as f64);
    let z = Complex { re, im: yd };
    let modulus_sq = re.sqr() + yd.sqr();
    let ln_mod = modulus_sq.ln().mul_f64(0.5);
    let arg = (yd / re).atan();
    // Im[(z − ½) ln z − z]
    let mut value = (re - Dd::from_f64(0.5)) * arg + yd * ln_mod - yd;
    let inv = z.recip();
    let inv2 = inv.mul(inv);
    let mut p = inv;
    for k in 0..ASYMPTOTIC_TERMS {
        let n = (2 * k + 2) as f64;
        value += bernoulli(k) * p.im / Dd::from_f64(n * (n - 1.0));
        p = p.mul(inv2);
    }
    let n = (2 * ASYMPTOTIC_TERMS + 2) as f64;
    let next = (bernoulli(ASYMPTOTIC_TERMS) / Dd::from_f64(n * (n - 1.0)))
        .abs()
        .to_f64()
        * modulus_sq.to_f64().powf(-(n - 1.0) / 2.0);
    let mut shift = Dd::ZERO;
    for k in 1..=m {
        shift += (yd / Dd::from_f64(k as f64)).atan();
    }
    let total = value - shift;
    ExtendedReal::new(
        total,
        next + rounding(value, 32.0) + rounding(shift, 4.0 * m as f64),
    )
}

/// `Im ln Γ(1 + i)`.
pub fn im_log_gamma_one_plus_i() -> ExtendedReal {
    im_log_gamma_one_plus(1.0, 20)
}
