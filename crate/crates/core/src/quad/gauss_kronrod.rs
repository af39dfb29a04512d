//! Adaptive 7/15-point Gauss–Kronrod quadrature.

// Nodes and weights are tabulated to 33 digits as published; the excess
// is rounded away at compile time.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::numerics::{Accumulator, Dd, ExtendedReal};

use super::{non_finite, Point};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_INTERVALS: usize = 4000;

/// Rounding level of a panel whose integrand values are good to an ulp.
fn floor(resabs: f64) -> f64 {
    2.0 * f64::EPSILON * resabs
}

struct Piece {
    a: f64,
    b: f64,
    value: Dd,
    err: f64,
    abs: f64,
}

impl PartialEq for Piece {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Piece {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn rule(
    f: &(dyn Fn(Point) -> f64 + Send + Sync),
    lo: f64,
    hi: f64,
    a: f64,
    b: f64,
) -> Result<Piece> {
    let c = 0.5 * (lo + hi);
    let h = 0.5 * (hi - lo);
    let at = |x: f64| -> Result<f64> {
        let v = f(Point::interior(x, a, b));
        if v.is_finite() {
            Ok(v)
        } else {
            Err(non_finite(x))
        }
    };
    let fc = at(c)?;
    let mut kronrod = Dd::from_f64(fc) * Dd::from_f64(WGK[7]);
    let mut gauss = fc * WG[3];
    let mut abs = (fc * WGK[7]).abs();
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = at(c - dx)?;
        let f2 = at(c + dx)?;
        fv[j] = f1;
        fv[14 - j] = f2;
        kronrod += Dd::from_f64(WGK[j]) * (Dd::from_f64(f1) + Dd::from_f64(f2));
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kronrod.to_f64() * 0.5;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let value = kronrod * Dd::from_f64(h);
    let mut err = ((kronrod.to_f64() - gauss) * h).abs();
    let resasc = asc * h.abs();
    let resabs = abs * h.abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    err = err.max(floor(resabs));
    Ok(Piece {
        a: lo,
        b: hi,
        value,
        err,
        abs: resabs,
    })
}

pub(crate) fn integrate(
    f: &(dyn Fn(Point) -> f64 + Send + Sync),
    a: f64,
    b: f64,
    eps: f64,
) -> Result<ExtendedReal> {
    let mut heap = BinaryHeap::new();
    let first = rule(f, a, b, a, b)?;
    let mut total_err = first.err;
    heap.push(first);
    while total_err > eps {
        if heap.len() >= MAX_INTERVALS {
            return Err(Error::Integrability(format!(
                "adaptive subdivision did not converge (error {total_err:e})"
            )));
        }
        let worst = heap.pop().expect("non-empty");
        if worst.err <= floor(worst.abs) * 1.0001 {
            return Err(Error::Precision {
                requested: eps,
                reached: total_err,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::Integrability(format!(
                "subdivision exhausted near {mid}"
            )));
        }
        let left = rule(f, worst.a, mid, a, b)?;
        let right = rule(f, mid, worst.b, a, b)?;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        if heap.len() % 64 == 0 {
            // refresh to shed drift in the running error
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }
    let pieces = heap.into_vec();
    let mut acc = Accumulator::new();
    let mut err = 0.0;
    let mut abs = 0.0;
    for p in &pieces {
        acc.add_dd(p.value);
        err += p.err;
        abs += p.abs;
    }
    Ok(ExtendedReal::new(
        acc.value()?,
        err + abs * 2.0 * f64::EPSILON,
    ))
}
