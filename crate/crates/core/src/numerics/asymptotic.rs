//! Truncated asymptotic expansions in `x = 1/m` with at most a `ln² m` factor.
//!
//! A [`LogSeries`] stands for `Σ_j (c_{j,0} + c_{j,1} L + c_{j,2} L²) m^{-σ₀-j}`
//! with `L = ln m`. Summands of the slowly convergent series are expanded this
//! way so their tails can be closed term by term with
//! [`log_power_tail`](super::tail::log_power_tail).

use super::dd::Dd;
use super::extended::ExtendedReal;
use super::tail::{log_power_tail, EULER_GAMMA};
use crate::error::Result;

const MAX_LOG: usize = 2;

/// B₂ … B₃₀ as exact fractions.
pub(crate) const BERNOULLI_EVEN: [(i64, i64); 15] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
];

#[derive(Clone, Debug)]
pub struct LogSeries {
    offset: f64,
    coeffs: Vec<[Dd; MAX_LOG + 1]>,
}

impl LogSeries {
    pub fn zero(order: usize) -> Self {
        LogSeries {
            offset: 0.0,
            coeffs: vec![[Dd::ZERO; MAX_LOG + 1]; order],
        }
    }

    /// Pure power series `Σ_j a_j x^j`.
    pub fn power(a: &[Dd], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (j, &v) in a.iter().enumerate().take(order) {
            s.coeffs[j][0] = v;
        }
        s
    }

    pub fn constant(c: Dd, order: usize) -> Self {
        Self::power(&[c], order)
    }

    /// `x = 1/m`.
    pub fn x(order: usize) -> Self {
        Self::power(&[Dd::ZERO, Dd::ONE], order)
    }

    /// `ln m`.
    pub fn log(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0][1] = Dd::ONE;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn coefficient(&self, j: usize, log_power: usize) -> Dd {
        self.coeffs[j][log_power]
    }

    /// Multiply by `m^{-σ}` (shifts the exponent offset).
    pub fn times_power(mut self, sigma: f64) -> Self {
        self.offset += sigma;
        self
    }

    pub fn scale(mut self, k: Dd) -> Self {
        for c in &mut self.coeffs {
            for v in c.iter_mut() {
                *v *= k;
            }
        }
        self
    }

    fn is_pure(&self) -> bool {
        self.offset == 0.0 && self.coeffs.iter().all(|c| c[1].is_zero() && c[2].is_zero())
    }

    pub fn add(&self, other: &LogSeries) -> LogSeries {
        let (lo, hi) = if self.offset <= other.offset {
            (self, other)
        } else {
            (other, self)
        };
        let shift = hi.offset - lo.offset;
        assert!(
            (shift - shift.round()).abs() < 1e-12,
            "offsets must differ by an integer"
        );
        let shift = shift.round() as usize;
        let order = lo.order().min(hi.order() + shift);
        let mut out = LogSeries {
            offset: lo.offset,
            coeffs: vec![[Dd::ZERO; MAX_LOG + 1]; order],
        };
        for j in 0..order {
            for p in 0..=MAX_LOG {
                let mut v = lo.coeffs[j][p];
                if j >= shift && j - shift < hi.order() {
                    v += hi.coeffs[j - shift][p];
                }
                out.coeffs[j][p] = v;
            }
        }
        out
    }

    pub fn sub(&self, other: &LogSeries) -> LogSeries {
        self.add(&other.clone().scale(-Dd::ONE))
    }

    pub fn mul(&self, other: &LogSeries) -> LogSeries {
        let order = self.order().min(other.order());
        let mut out = LogSeries {
            offset: self.offset + other.offset,
            coeffs: vec![[Dd::ZERO; MAX_LOG + 1]; order],
        };
        for i in 0..order {
            for j in 0..order - i {
                for p in 0..=MAX_LOG {
                    let a = self.coeffs[i][p];
                    if a.is_zero() {
                        continue;
                    }
                    for q in 0..=MAX_LOG {
                        let b = other.coeffs[j][q];
                        if b.is_zero() {
                            continue;
                        }
                        assert!(p + q <= MAX_LOG, "log power above {MAX_LOG}");
                        out.coeffs[i + j][p + q] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `Σ_k f_k u^k` for a pure series `u` with `u(0) = 0`.
    fn compose(&self, f: impl Fn(usize) -> Dd) -> LogSeries {
        assert!(self.is_pure(), "composition needs a pure power series");
        assert!(self.coeffs[0][0].is_zero(), "argument must vanish at x = 0");
        let order = self.order();
        let mut out = LogSeries::constant(f(0), order);
        let mut upow = LogSeries::constant(Dd::ONE, order);
        for k in 1..order {
            upow = upow.mul(self);
            let fk = f(k);
            if !fk.is_zero() {
                out = out.add(&upow.clone().scale(fk));
            }
        }
        out
    }

    /// `ln(1 + u)`.
    pub fn ln_1p(&self) -> LogSeries {
        self.compose(|k| match k {
            0 => Dd::ZERO,
            k if k % 2 == 1 => Dd::ONE / Dd::from_f64(k as f64),
            k => -(Dd::ONE / Dd::from_f64(k as f64)),
        })
    }

    /// `atan(u)`.
    pub fn atan(&self) -> LogSeries {
        self.compose(|k| {
            if k % 2 == 0 {
                Dd::ZERO
            } else if (k / 2) % 2 == 0 {
                Dd::ONE / Dd::from_f64(k as f64)
            } else {
                -(Dd::ONE / Dd::from_f64(k as f64))
            }
        })
    }

    /// `atanh(u)`.
    pub fn atanh(&self) -> LogSeries {
        self.compose(|k| {
            if k % 2 == 0 {
                Dd::ZERO
            } else {
                Dd::ONE / Dd::from_f64(k as f64)
            }
        })
    }

    /// `(1 + u)^α`.
    pub fn pow_1p(&self, alpha: f64) -> LogSeries {
        self.compose(|k| {
            let mut c = Dd::ONE;
            for i in 0..k {
                c = c * (Dd::from_f64(alpha) - Dd::from_f64(i as f64))
                    / Dd::from_f64((i + 1) as f64);
            }
            c
        })
    }

    /// `1 / (1 + u)`.
    pub fn recip_1p(&self) -> LogSeries {
        self.pow_1p(-1.0)
    }

    /// Tail `Σ_{k≥1} S(x+k)` of the represented function, with the
    /// contribution of the last retained order added to the error.
    pub fn tail(&self, x: Dd) -> Result<ExtendedReal> {
        let mut total = ExtendedReal::ZERO;
        let mut last = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let mut order_sum = ExtendedReal::ZERO;
            for (p, &cp) in c.iter().enumerate() {
                if cp.is_zero() {
                    continue;
                }
                let t = log_power_tail(p, self.offset + j as f64, x, 1e-31)?;
                order_sum = order_sum + t * ExtendedReal::exact(cp);
            }
            if !order_sum.value.is_zero() {
                last = order_sum.to_f64().abs();
            }
            total = total + order_sum;
        }
        Ok(total.with_extra_err(last))
    }

    /// Evaluate the truncated expansion at `m` (for testing the algebra).
    pub fn eval(&self, m: Dd) -> Dd {
        let l = m.ln();
        let x = m.recip();
        let mut acc = Dd::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c[0] + c[1] * l + c[2] * l.sqr();
        }
        acc * m.powf(-self.offset)
    }
}

/// `ψ(m + 1) = ln m + 1/(2m) − Σ_k B_{2k}/(2k m^{2k})`.
pub fn digamma_succ_expansion(order: usize) -> LogSeries {
    let mut a = vec![Dd::ZERO; order];
    if order > 1 {
        a[1] = Dd::from_f64(0.5);
    }
    for (k, &(num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let j = 2 * (k + 1);
        if j >= order {
            break;
        }
        a[j] = -Dd::ratio(num, den * j as i64);
    }
    LogSeries::log(order).add(&LogSeries::power(&a, order))
}

/// `H_n = ψ(n+1) + γ` expanded in `1/n`.
pub fn harmonic_expansion(order: usize) -> LogSeries {
    digamma_succ_expansion(order).add(&LogSeries::constant(EULER_GAMMA, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_ratio_expansion_matches_function() {
        let order = 14;
        let x = LogSeries::x(order);
        // ln(1 + 1/m) − 1/(m+1)
        let s = x.ln_1p().sub(&x.mul(&x.recip_1p()));
        let m = Dd::from_f64(200.0);
        let exact = m.recip().ln_1p() - (m + Dd::ONE).recip();
        assert!((s.eval(m) - exact).abs().to_f64() < 1e-32);
    }

    #[test]
    fn harmonic_expansion_is_accurate() {
        let h = harmonic_expansion(14);
        let mut exact = Dd::ZERO;
        for k in 1..=100 {
            exact += Dd::from_f64(k as f64).recip();
        }
        assert!((h.eval(Dd::from_f64(100.0)) - exact).abs().to_f64() < 1e-28);
    }

    #[test]
    fn atan_and_power_compose() {
        let order = 14;
        let x = LogSeries::x(order);
        let m = Dd::from_f64(1000.0);
        let at = x.atan().eval(m);
        assert!((at - m.recip().atan()).abs().to_f64() < 1e-30);
        let p = x.pow_1p(-2.5).eval(m);
        let want = (Dd::ONE + m.recip()).powf(-2.5);
        assert!((p - want).abs().to_f64() < 1e-28);
    }
}
