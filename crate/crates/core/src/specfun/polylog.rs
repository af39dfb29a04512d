use crate::error::{domain, Result};
use crate::numerics::{Dd, ExtendedReal, DD_EPS};

use super::zeta::{dirichlet_eta, zeta, zeta_int, zeta_nonpositive};

/// `Li_k(t) = Σ_{n≥1} t^n/n^k` for integer `k ≥ 1`, `|t| ≤ 1`,
/// `(k, t) ≠ (1, 1)`.
///
/// `|t| ≤ ½` sums the defining series; `t > ½` uses the expansion in
/// `μ = ln t`; `t < −½` reduces through the duplication formula
/// `Li_k(−u) = 2^{1−k} Li_k(u²) − Li_k(u)`.
pub fn polylog_int(k: u32, t: f64) -> Result<ExtendedReal> {
    if k == 0 {
        return domain("polylog order must be at least 1");
    }
    if !(t.abs() <= 1.0) {
        return domain(format!("polylog requires |t| <= 1, got {t}"));
    }
    if t == 1.0 {
        if k == 1 {
            return domain("Li_1 diverges at t = 1");
        }
        return zeta(k as f64);
    }
    if t == -1.0 {
        return Ok(-dirichlet_eta(k as f64)?);
    }
    if k == 1 {
        let v = (-Dd::from_f64(t)).ln_1p();
        return Ok(-ExtendedReal::new(v, v.hi.abs() * 8.0 * DD_EPS));
    }
    if t.abs() <= 0.5 {
        return Ok(direct(k, Dd::from_f64(t)));
    }
    if t > 0.5 {
        return polylog_int_log(k, Dd::from_f64(t).ln());
    }
    let u = Dd::from_f64(-t);
    let u2 = u.sqr();
    let sq = if u2.hi <= 0.5 {
        direct(k, u2)
    } else {
        polylog_int_log(k, u.ln().mul_f64(2.0))?
    };
    let u = -t;
    let lin = polylog_int(k, u)?;
    Ok(sq * Dd::from_f64(2.0).powi(1 - k as i32) - lin)
}

fn direct(k: u32, t: Dd) -> ExtendedReal {
    if t.is_zero() {
        return ExtendedReal::exact(Dd::ZERO);
    }
    let at = t.hi.abs();
    let mut acc = Dd::ZERO;
    let mut p = Dd::ONE;
    for n in 1u32.. {
        p *= t;
        acc += p / Dd::from_f64(n as f64).powi(k as i32);
        let bound = at.powi(n as i32 + 1) / ((n as f64 + 1.0).powi(k as i32) * (1.0 - at));
        if bound <= 1e-33 * acc.hi.abs() {
            return ExtendedReal::new(acc, bound + acc.hi.abs() * 8.0 * DD_EPS);
        }
    }
    unreachable!()
}

/// `Li_k(e^μ)` for `k ≥ 2` and `−1 < μ < 0`, from
/// `Σ_{j≠k−1} ζ(k−j) μ^j/j! + μ^{k−1}/(k−1)! (H_{k−1} − ln(−μ))`.
///
/// Taking `μ` rather than `t` keeps full relative accuracy in `1 − t` near
/// the endpoint.
pub fn polylog_int_log(k: u32, mu: Dd) -> Result<ExtendedReal> {
    if k < 2 {
        return domain("log-series polylog needs k >= 2");
    }
    if !(mu.hi < 0.0 && mu.hi > -1.0) {
        return domain(format!(
            "log-series polylog needs -1 < ln t < 0, got {}",
            mu.hi
        ));
    }
    let k = k as usize;
    let mut acc = Dd::ZERO;
    let mut pw = Dd::ONE; // μ^j / j!
    let mut last = 0.0;
    let mut quiet = 0;
    for j in 0..400usize {
        if j > 0 {
            pw = pw * mu / Dd::from_f64(j as f64);
        }
        let t = if j + 1 == k {
            let mut h = Dd::ZERO;
            for i in 1..k {
                h += Dd::from_f64(i as f64).recip();
            }
            pw * (h - (-mu).ln())
        } else if j + 1 < k {
            pw * zeta_int(k - j)
        } else {
            pw * zeta_nonpositive(j - k)
        };
        acc += t;
        if j >= k {
            if t.hi.abs() <= 1e-34 * acc.hi.abs() {
                quiet += 1;
                if quiet >= 3 {
                    break;
                }
            } else {
                quiet = 0;
                last = t.hi.abs();
            }
        }
    }
    Ok(ExtendedReal::new(
        acc,
        last * 1e-3 + acc.hi.abs() * 64.0 * DD_EPS,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_is_log() {
        let v = polylog_int(1, 0.5).unwrap();
        assert!((v.value - Dd::LN2).abs().to_f64() < 1e-31);
        assert!(polylog_int(1, 1.0).is_err());
    }

    #[test]
    fn endpoint_values() {
        let z2 = zeta(2.0).unwrap().value;
        assert!((polylog_int(2, 1.0).unwrap().value - z2).abs().to_f64() < 1e-30);
        let z3 = zeta(3.0).unwrap().value;
        let m = polylog_int(3, -1.0).unwrap().value;
        assert!((m + z3.mul_f64(0.75)).abs().to_f64() < 1e-30);
        assert!(polylog_int(2, 1.5).is_err());
    }

    #[test]
    fn dilog_half() {
        // Li₂(½) = π²/12 − ln²2/2
        let want = Dd::PI.sqr() / Dd::from_f64(12.0) - Dd::LN2.sqr().mul_f64(0.5);
        let v = polylog_int(2, 0.5).unwrap();
        assert!((v.value - want).abs().to_f64() < 1e-30);
    }

    #[test]
    fn branches_agree_and_limit_is_continuous() {
        for k in [2u32, 3, 4, 7] {
            for t in [0.55, 0.8, 0.99, -0.6, -0.95] {
                let a = polylog_int(k, t).unwrap();
                // brute force with many terms
                let mut acc = Dd::ZERO;
                let mut p = Dd::ONE;
                let td = Dd::from_f64(t);
                for n in 1..20_000u32 {
                    p *= td;
                    acc += p / Dd::from_f64(n as f64).powi(k as i32);
                }
                assert!((a.value - acc).abs().to_f64() < 1e-20, "k={k} t={t}");
            }
            let near = polylog_int_log(k, Dd::from_f64(-1e-12)).unwrap().value;
            let at_one = zeta(k as f64).unwrap().value;
            assert!((near - at_one).abs().to_f64() < 1e-9);
        }
    }
}
