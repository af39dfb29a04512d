use serde::{Deserialize, Serialize};

use super::dd::{Dd, DD_EPS};
use super::extended::ExtendedReal;
use crate::error::{Error, Result};

/// Leading error model of a sequence of partial sums.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtrapolationModel {
    /// `S_N = S + Σ_k (a_k ln N + b_k) / N^k`
    LogOverN,
    /// `S_N = S + Σ_k b_k / N^k`
    InverseN,
    /// Partial sums of an alternating series at consecutive N.
    Alternating,
}

const MAX_STAGES: usize = 9;

fn basis(model: ExtrapolationModel, n: f64, count: usize) -> Vec<Dd> {
    let inv = Dd::from_f64(n).recip();
    let l = Dd::from_f64(n).ln();
    let mut out = Vec::with_capacity(count);
    let mut p = inv;
    while out.len() < count {
        match model {
            ExtrapolationModel::LogOverN => {
                out.push(l * p);
                if out.len() < count {
                    out.push(p);
                }
            }
            _ => out.push(p),
        }
        p *= inv;
    }
    out
}

/// Solve the square system in place by Gaussian elimination with partial
/// pivoting; returns the first unknown.
#[allow(clippy::needless_range_loop)] // textbook index form
fn solve_first(mut a: Vec<Vec<Dd>>, mut b: Vec<Dd>) -> Option<Dd> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[piv][col].is_zero() {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
            let v = b[col];
            b[row] -= f * v;
        }
    }
    let mut x = vec![Dd::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x[0])
}

fn richardson(ns: &[u64], vals: &[Dd], model: ExtrapolationModel) -> Option<Dd> {
    let k = vals.len();
    let rows: Vec<Vec<Dd>> = ns
        .iter()
        .map(|&n| {
            let mut row = vec![Dd::ONE];
            row.extend(basis(model, n as f64, k - 1));
            row
        })
        .collect();
    solve_first(rows, vals.to_vec())
}

fn check_monotone(vals: &[Dd]) -> Result<()> {
    let diffs: Vec<f64> = vals.windows(2).map(|w| (w[1] - w[0]).to_f64()).collect();
    let tail = &diffs[diffs.len().saturating_sub(4)..];
    let pos = tail.iter().any(|&d| d > 0.0);
    let neg = tail.iter().any(|&d| d < 0.0);
    if pos && neg {
        return Err(Error::Diagnostic(
            "partial sums are not monotone; inconsistent with the declared model".into(),
        ));
    }
    Ok(())
}

fn check_alternating(vals: &[Dd]) -> Result<()> {
    let diffs: Vec<f64> = vals
        .windows(2)
        .map(|w| (w[1] - w[0]).to_f64())
        .filter(|d| *d != 0.0)
        .collect();
    let tail = &diffs[diffs.len().saturating_sub(6)..];
    if tail.windows(2).any(|w| w[0].signum() == w[1].signum()) {
        return Err(Error::Diagnostic(
            "partial-sum increments do not alternate in sign".into(),
        ));
    }
    Ok(())
}

/// Repeated averaging of consecutive partial sums (Euler's transformation
/// applied to the tail).
fn average_down(vals: &[Dd]) -> Dd {
    let mut row = vals.to_vec();
    while row.len() > 1 {
        row = row.windows(2).map(|w| (w[0] + w[1]).mul_f64(0.5)).collect();
    }
    row[0]
}

/// Accelerates a sequence of partial sums toward its limit.
///
/// For the `LogOverN`/`InverseN` models `ns` gives the truncation point of
/// each partial sum (geometric spacing expected); for `Alternating` the
/// partial sums must be at consecutive indices and `ns` is ignored.
pub fn extrapolate(
    ns: &[u64],
    partials: &[ExtendedReal],
    model: ExtrapolationModel,
) -> Result<ExtendedReal> {
    if partials.len() < 6 {
        return Err(Error::Configuration(format!(
            "extrapolation needs at least 6 partial sums, got {}",
            partials.len()
        )));
    }
    let vals: Vec<Dd> = partials.iter().map(|p| p.value).collect();
    let input_err = partials.iter().map(|p| p.err).fold(0.0, f64::max);
    let scale = vals.iter().map(|v| v.hi.abs()).fold(0.0, f64::max);
    if vals.iter().all(|v| *v == vals[0]) {
        return Ok(ExtendedReal::new(vals[0], input_err));
    }
    match model {
        ExtrapolationModel::Alternating => {
            check_alternating(&vals)?;
            let take = vals.len().min(48);
            let window = &vals[vals.len() - take..];
            let best = average_down(window);
            let prev = average_down(&window[..take - 1]);
            let err = (best - prev).abs().to_f64() + input_err + scale * 64.0 * DD_EPS;
            Ok(ExtendedReal::new(best, err))
        }
        _ => {
            if ns.len() != vals.len() {
                return Err(Error::Configuration(
                    "one truncation point per partial sum required".into(),
                ));
            }
            check_monotone(&vals)?;
            let k = vals.len().min(MAX_STAGES);
            let start = vals.len() - k;
            let best = richardson(&ns[start..], &vals[start..], model)
                .ok_or_else(|| Error::Diagnostic("singular extrapolation system".into()))?;
            // one stage fewer, same newest points
            let prev = richardson(&ns[start + 1..], &vals[start + 1..], model)
                .ok_or_else(|| Error::Diagnostic("singular extrapolation system".into()))?;
            let err = (best - prev).abs().to_f64() + input_err * 4.0 + scale * 1e3 * DD_EPS;
            Ok(ExtendedReal::new(best, err))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basel_by_richardson() {
        let mut ns = Vec::new();
        let mut ps = Vec::new();
        let mut acc = Dd::ZERO;
        let mut n = 0u64;
        for k in 3..=12 {
            let target = 1u64 << k;
            while n < target {
                n += 1;
                acc += Dd::from_f64(n as f64).sqr().recip();
            }
            ns.push(n);
            ps.push(ExtendedReal::rounded(acc));
        }
        let r = extrapolate(&ns, &ps, ExtrapolationModel::InverseN).unwrap();
        let z2 = Dd::PI.sqr() / Dd::from_f64(6.0);
        assert!((r.value - z2).abs().to_f64() < 1e-10);
        assert!(r.err < 1e-8);
    }

    #[test]
    fn constant_sequence_is_fixed_point() {
        let c = ExtendedReal::from_f64(0.75);
        let ps = vec![c; 7];
        let ns: Vec<u64> = (1..=7).map(|k| 1 << k).collect();
        for m in [
            ExtrapolationModel::LogOverN,
            ExtrapolationModel::InverseN,
            ExtrapolationModel::Alternating,
        ] {
            assert_eq!(extrapolate(&ns, &ps, m).unwrap().value, c.value);
        }
    }

    #[test]
    fn alternating_harmonic_gives_ln2() {
        let mut acc = Dd::ZERO;
        let mut ps = Vec::new();
        for n in 1..=60u64 {
            let t = Dd::from_f64(n as f64).recip();
            acc = if n % 2 == 1 { acc + t } else { acc - t };
            ps.push(ExtendedReal::rounded(acc));
        }
        let r = extrapolate(&[], &ps, ExtrapolationModel::Alternating).unwrap();
        assert!((r.value - Dd::LN2).abs().to_f64() < 1e-20);
    }

    #[test]
    fn rejects_inconsistent_sequences() {
        let ps: Vec<ExtendedReal> = [1.0, 2.0, 1.5, 1.7, 1.6, 1.65, 1.62]
            .iter()
            .map(|&v| ExtendedReal::from_f64(v))
            .collect();
        let ns: Vec<u64> = (1..=7).map(|k| 1 << k).collect();
        assert!(matches!(
            extrapolate(&ns, &ps, ExtrapolationModel::InverseN),
            Err(Error::Diagnostic(_))
        ));
        let mono: Vec<ExtendedReal> = (1..=8)
            .map(|k| ExtendedReal::from_f64(1.0 - 1.0 / k as f64))
            .collect();
        assert!(matches!(
            extrapolate(&[], &mono, ExtrapolationModel::Alternating),
            Err(Error::Diagnostic(_))
        ));
        assert!(extrapolate(&ns[..3], &ps[..3], ExtrapolationModel::InverseN).is_err());
    }
}
