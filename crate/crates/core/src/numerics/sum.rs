use super::dd::{Dd, DD_EPS};
use super::extended::ExtendedReal;
use crate::error::{Error, Result};

/// Exact floating-point accumulator.
///
/// Keeps the running sum as a list of non-overlapping doubles (Shewchuk's
/// expansion), so the represented sum is exact until it is rounded to
/// double-word by [`Accumulator::value`]. The rounded result is independent
/// of input order up to the final rounding.
#[derive(Clone, Debug, Default)]
pub struct Accumulator {
    partials: Vec<f64>,
    err: f64,
    overflowed: bool,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    fn push_f64(&mut self, mut x: f64) {
        if !x.is_finite() {
            self.overflowed = true;
            return;
        }
        let mut i = 0;
        for j in 0..self.partials.len() {
            let mut y = self.partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.partials[i] = lo;
                i += 1;
            }
            x = hi;
        }
        if !x.is_finite() {
            self.overflowed = true;
        }
        self.partials.truncate(i);
        self.partials.push(x);
    }

    pub fn add_dd(&mut self, v: Dd) {
        self.push_f64(v.hi);
        self.push_f64(v.lo);
    }

    pub fn add(&mut self, v: ExtendedReal) {
        self.add_dd(v.value);
        self.err += v.err;
    }

    /// Rounded double-word sum, or an error if any partial overflowed.
    pub fn value(&self) -> Result<Dd> {
        if self.overflowed {
            return Err(Error::Overflow);
        }
        let mut acc = Dd::ZERO;
        for &p in &self.partials {
            acc += Dd::from_f64(p);
        }
        Ok(acc)
    }

    pub fn finish(&self) -> Result<ExtendedReal> {
        let v = self.value()?;
        Ok(ExtendedReal::new(v, self.err + v.hi.abs() * DD_EPS))
    }
}

/// Sum of error-carrying terms, exact up to one final rounding.
pub fn compensated_sum(terms: &[ExtendedReal]) -> Result<ExtendedReal> {
    let mut acc = Accumulator::new();
    for t in terms {
        if !t.is_finite() {
            return Err(Error::Overflow);
        }
        acc.add(*t);
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_survives() {
        let terms = [1.0, 1e-20, -1.0].map(ExtendedReal::from_f64);
        let s = compensated_sum(&terms).unwrap();
        assert_eq!(s.to_f64(), 1e-20);
        assert!(s.err < 1e-35);
    }

    #[test]
    fn empty_sum_is_exact_zero() {
        let s = compensated_sum(&[]).unwrap();
        assert_eq!(s.value, Dd::ZERO);
        assert_eq!(s.err, 0.0);
    }

    #[test]
    fn overflow_reported() {
        let terms = [f64::MAX, f64::MAX].map(ExtendedReal::from_f64);
        assert_eq!(compensated_sum(&terms), Err(Error::Overflow));
        let terms = [ExtendedReal::from_f64(f64::INFINITY)];
        assert_eq!(compensated_sum(&terms), Err(Error::Overflow));
    }
}
