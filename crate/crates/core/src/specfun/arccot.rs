use crate::error::{domain, Result};
use crate::numerics::{extrapolate, Dd, ExtendedReal, ExtrapolationModel, DD_EPS};

const ACCELERATED_TERMS: usize = 256;

/// `cot⁻¹ x = Σ_{k≥0} (−1)^k x^{−(2k+1)}/(2k+1)` for `x ≥ 1`.
///
/// With `terms` given, returns that partial sum and the first omitted term as
/// its error. Otherwise sums to working precision when `x ≥ 2` and
/// accelerates the alternating partial sums below that.
pub fn arccot_series(x: f64, terms: Option<usize>) -> Result<ExtendedReal> {
    if !(x >= 1.0) || !x.is_finite() {
        return domain(format!("arccot series diverges for x = {x}"));
    }
    let xd = Dd::from_f64(x);
    let inv = xd.recip();
    let inv2 = inv.sqr();
    let term = |p: Dd, k: usize| p / Dd::from_f64((2 * k + 1) as f64);
    if let Some(count) = terms {
        let mut acc = Dd::ZERO;
        let mut p = inv;
        for k in 0..count {
            let t = term(p, k);
            acc = if k % 2 == 0 { acc + t } else { acc - t };
            p *= inv2;
        }
        let omitted = term(p, count).abs().to_f64();
        return Ok(ExtendedReal::new(
            acc,
            omitted + acc.hi.abs() * 4.0 * DD_EPS,
        ));
    }
    if x >= 2.0 {
        let mut acc = Dd::ZERO;
        let mut p = inv;
        for k in 0.. {
            let t = term(p, k);
            if t.hi.abs() <= 1e-34 * acc.hi.abs() {
                return Ok(ExtendedReal::new(
                    acc,
                    t.hi.abs() + acc.hi.abs() * 4.0 * DD_EPS,
                ));
            }
            acc = if k % 2 == 0 { acc + t } else { acc - t };
            p *= inv2;
        }
        unreachable!()
    }
    let mut acc = Dd::ZERO;
    let mut p = inv;
    let mut partials = Vec::with_capacity(ACCELERATED_TERMS);
    for k in 0..ACCELERATED_TERMS {
        let t = term(p, k);
        acc = if k % 2 == 0 { acc + t } else { acc - t };
        partials.push(ExtendedReal::rounded(acc));
        p *= inv2;
    }
    extrapolate(&[], &partials, ExtrapolationModel::Alternating)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arccot_values() {
        let one = arccot_series(1.0, None).unwrap();
        assert!((one.value - Dd::PI.ldexp(-2)).abs().to_f64() < 1e-25);
        let two = arccot_series(2.0, None).unwrap();
        assert!((two.value - Dd::from_f64(0.5).atan()).abs().to_f64() < 1e-20);
        let near = arccot_series(1.3, None).unwrap();
        assert!(
            (near.value - Dd::from_f64(1.3).recip().atan())
                .abs()
                .to_f64()
                < 1e-20
        );
        let big = arccot_series(100.0, Some(2)).unwrap();
        assert!((big.to_f64() - (0.01 - 0.01f64.powi(3) / 3.0)).abs() < 1e-10);
        assert!(big.err < 1e-10);
        assert!(arccot_series(0.5, None).is_err());
    }
}
