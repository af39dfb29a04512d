//! Double-word ("double-double") floating point.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 106 bits (about 32 decimal digits) of significand. The arithmetic
//! follows the classic error-free transformations of Dekker and Knuth; the
//! elementary functions use argument reduction plus a short Taylor series or
//! one Newton step from the `f64` result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Relative rounding unit of double-word arithmetic (2^-104).
pub const DD_EPS: f64 = 4.930380657631324e-32;

#[derive(Copy, Clone, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    // 2^27 + 1
    const SPLITTER: f64 = 134_217_729.0;
    if a.abs() > 6.69692879491417e299 {
        let a = a * 3.725_290_298_461_914e-9;
        let t = SPLITTER * a;
        let hi = t - (t - a);
        let lo = a - hi;
        (hi * 268_435_456.0, lo * 268_435_456.0)
    } else {
        let t = SPLITTER * a;
        let hi = t - (t - a);
        (hi, a - hi)
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.2246467991473532e-16,
    };
    pub const LN2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.3190468138462996e-17,
    };
    /// ln(2π)/2
    pub const HALF_LN_2PI: Dd = Dd {
        hi: 0.9189385332046728,
        lo: -3.8782941580672414e-17,
    };

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Dd {
        Dd { hi, lo }
    }

    #[inline]
    pub const fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact conversion of an integer up to 2^106 in magnitude.
    pub fn from_i128(n: i128) -> Dd {
        let hi = n as f64;
        let rest = n - hi as i128;
        Dd::from_f64(hi) + Dd::from_f64(rest as f64)
    }

    /// Exact rational `num/den` rounded to double-word.
    pub fn ratio(num: i64, den: i64) -> Dd {
        Dd::from_i128(num as i128) / Dd::from_i128(den as i128)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    #[inline]
    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn sqr(self) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, self.hi);
        p2 += 2.0 * self.hi * self.lo;
        p2 += self.lo * self.lo;
        let (s, e) = quick_two_sum(p1, p2);
        Dd::new(s, e)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b);
        p2 += self.lo * b;
        let (s, e) = quick_two_sum(p1, p2);
        Dd::new(s, e)
    }

    /// Multiplication by a power of two; exact barring over/underflow.
    pub fn ldexp(self, k: i32) -> Dd {
        let f = 2f64.powi(k);
        Dd::new(self.hi * f, self.lo * f)
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn floor(self) -> Dd {
        let hi = self.hi.floor();
        if hi == self.hi {
            let (s, e) = quick_two_sum(hi, self.lo.floor());
            Dd::new(s, e)
        } else {
            Dd::new(hi, 0.0)
        }
    }

    pub fn round(self) -> Dd {
        (self + Dd::from_f64(0.5)).floor()
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Dd::ZERO
            } else {
                Dd::from_f64(f64::NAN)
            };
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let corr = (self - Dd::from_f64(ax).sqr()).hi * (x * 0.5);
        let (s, e) = two_sum(ax, corr);
        Dd::new(s, e)
    }

    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = self;
        let mut m = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while m > 0 {
            if m & 1 == 1 {
                acc *= base;
            }
            m >>= 1;
            if m > 0 {
                base = base.sqr();
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// `self^s` for positive `self`; integral exponents use repeated squaring.
    pub fn powf(self, s: f64) -> Dd {
        if s == s.trunc() && s.abs() < 1024.0 {
            return self.powi(s as i32);
        }
        (self.ln().mul_f64(s)).exp()
    }

    /// `self^s` with a double-word exponent.
    pub fn powd(self, s: Dd) -> Dd {
        (self.ln() * s).exp()
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        if self.is_zero() {
            return Dd::ONE;
        }
        let k = (self.hi / Dd::LN2.hi).round();
        let r = (self - Dd::LN2.mul_f64(k)).ldexp(-5);
        // expm1(r) by Taylor; |r| < 1.1e-2 so ~16 terms reach below 1e-36.
        let mut term = r;
        let mut s = r;
        for i in 2..30 {
            term = term * r / Dd::from_f64(i as f64);
            s += term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..5 {
            s = s.mul_f64(2.0) + s.sqr();
        }
        (s + Dd::ONE).ldexp(k as i32)
    }

    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::from_f64(if self.hi == 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::NAN
            });
        }
        if self.hi == 1.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        // two Newton steps: the quadratic error of one step from a double
        // start is visible once |ln x| exceeds a few units
        let mut x = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp() - Dd::ONE;
        }
        x
    }

    /// ln(1 + self), accurate for small arguments.
    pub fn ln_1p(self) -> Dd {
        if self.hi.abs() < 0.25 {
            let w = self / (Dd::from_f64(2.0) + self);
            Dd::from_f64(2.0) * w.atanh_series()
        } else {
            (Dd::ONE + self).ln()
        }
    }

    /// exp(self) - 1, accurate for small arguments.
    pub fn exp_m1(self) -> Dd {
        if self.hi.abs() < 0.5 {
            let mut term = self;
            let mut s = self;
            for i in 2..60 {
                term = term * self / Dd::from_f64(i as f64);
                s += term;
                if term.hi.abs() < 1e-34 * s.hi.abs() {
                    break;
                }
            }
            s
        } else {
            self.exp() - Dd::ONE
        }
    }

    // w + w^3/3 + w^5/5 + ... for |w| small
    fn atanh_series(self) -> Dd {
        let w2 = self.sqr();
        let mut pw = self;
        let mut s = self;
        for k in 1..200 {
            pw *= w2;
            let t = pw / Dd::from_f64((2 * k + 1) as f64);
            s += t;
            if t.hi.abs() <= 1e-34 * s.hi.abs() {
                break;
            }
        }
        s
    }

    pub fn atan(self) -> Dd {
        if self.is_zero() {
            return Dd::ZERO;
        }
        if self.hi.abs() > 1.0 {
            let half_pi = Dd::PI.ldexp(-1);
            let r = self.recip().atan();
            return if self.hi > 0.0 {
                half_pi - r
            } else {
                -half_pi - r
            };
        }
        // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2)))
        let mut x = self;
        let halvings = 4;
        for _ in 0..halvings {
            x = x / (Dd::ONE + (Dd::ONE + x.sqr()).sqrt());
        }
        let x2 = x.sqr();
        let mut pw = x;
        let mut s = x;
        for k in 1..60 {
            pw = -(pw * x2);
            let t = pw / Dd::from_f64((2 * k + 1) as f64);
            s += t;
            if t.hi.abs() <= 1e-35 * s.hi.abs() {
                break;
            }
        }
        s.ldexp(halvings)
    }

    /// Parses a plain or scientific decimal literal.
    pub fn parse_decimal(text: &str) -> Option<Dd> {
        let text = text.trim();
        let (mantissa, exp10) = match text.find(['e', 'E']) {
            Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
            None => (text, 0),
        };
        let (neg, digits) = match mantissa.as_bytes().first()? {
            b'-' => (true, &mantissa[1..]),
            b'+' => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let mut value = Dd::ZERO;
        let mut frac_digits = 0i32;
        let mut seen_point = false;
        let mut any = false;
        for ch in digits.chars() {
            match ch {
                '0'..='9' => {
                    value = value.mul_f64(10.0) + Dd::from_f64((ch as u8 - b'0') as f64);
                    any = true;
                    if seen_point {
                        frac_digits += 1;
                    }
                }
                '.' if !seen_point => seen_point = true,
                '_' => {}
                _ => return None,
            }
        }
        if !any {
            return None;
        }
        let e = exp10 - frac_digits;
        let value = if e >= 0 {
            value * Dd::from_f64(10.0).powi(e)
        } else {
            value / Dd::from_f64(10.0).powi(-e)
        };
        Some(if neg { -value } else { value })
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_decimal_string(self, digits: usize) -> String {
        if !self.is_finite() {
            return format!("{}", self.to_f64());
        }
        if self.is_zero() {
            return format!("0.{}e0", "0".repeat(digits.saturating_sub(1)));
        }
        let digits = digits.clamp(1, 34);
        let neg = self.hi < 0.0;
        let x = self.abs();
        let mut e = x.hi.log10().floor() as i32;
        let scale = |e: i32| -> Dd {
            if e >= 0 {
                x / Dd::from_f64(10.0).powi(e)
            } else {
                x * Dd::from_f64(10.0).powi(-e)
            }
        };
        let mut r = scale(e);
        if r.hi >= 10.0 {
            e += 1;
            r = scale(e);
        } else if r.hi < 1.0 {
            e -= 1;
            r = scale(e);
        }
        // one extra digit for rounding
        let mut ds: Vec<i32> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = r.hi.floor().clamp(0.0, 9.0);
            ds.push(d as i32);
            r = (r - Dd::from_f64(d)).mul_f64(10.0);
        }
        let last = ds.pop().unwrap_or(0);
        if last >= 5 {
            let mut i = ds.len();
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.pop();
                    e += 1;
                    break;
                }
                i -= 1;
                ds[i] += 1;
                if ds[i] < 10 {
                    break;
                }
                ds[i] = 0;
            }
        }
        let mut out = String::with_capacity(digits + 8);
        if neg {
            out.push('-');
        }
        out.push(char::from(b'0' + ds[0] as u8));
        if ds.len() > 1 {
            out.push('.');
            for d in &ds[1..] {
                out.push(char::from(b'0' + *d as u8));
            }
        }
        out.push('e');
        out.push_str(&e.to_string());
        out
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({})", self.to_decimal_string(32))
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(32);
        f.write_str(&self.to_decimal_string(digits))
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi)? {
            Ordering::Equal => self.lo.partial_cmp(&other.lo),
            o => Some(o),
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd::new(-self.hi, -self.lo)
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s, e) = quick_two_sum(s1, s2 + t2);
        Dd::new(s, e)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p1, mut p2) = two_prod(self.hi, b.hi);
        p2 += self.hi * b.lo + self.lo * b.hi;
        let (s, e) = quick_two_sum(p1, p2);
        Dd::new(s, e)
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e) + Dd::from_f64(q3)
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for Dd {
            #[inline]
            fn $m(&mut self, b: Dd) {
                *self = *self $op b;
            }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

macro_rules! f64_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for Dd {
            type Output = Dd;
            #[inline]
            fn $m(self, b: f64) -> Dd {
                $tr::$m(self, Dd::from_f64(b))
            }
        }
        impl $tr<Dd> for f64 {
            type Output = Dd;
            #[inline]
            fn $m(self, b: Dd) -> Dd {
                $tr::$m(Dd::from_f64(self), b)
            }
        }
    )*};
}
f64_ops!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for Dd {
    fn sum<I: Iterator<Item = Dd>>(iter: I) -> Dd {
        iter.fold(Dd::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, rel: f64) -> bool {
        ((a - b).abs().to_f64()) <= rel * b.abs().to_f64().max(1e-300)
    }

    fn lit(s: &str) -> Dd {
        Dd::parse_decimal(s).unwrap()
    }

    #[test]
    fn pi_and_ln2_literals_round_trip() {
        let pi = lit("3.14159265358979323846264338327950288");
        assert!(close(pi, Dd::PI, 1e-31));
        let ln2 = lit("0.693147180559945309417232121458176568");
        assert!(close(ln2, Dd::LN2, 1e-31));
    }

    #[test]
    fn exp_ln_inverse() {
        for &x in &[1e-8, 0.3, 1.0, 2.5, 17.0, 123.456] {
            let d = Dd::from_f64(x);
            assert!(close(d.ln().exp(), d, 4e-31), "x={x}");
        }
        let e = Dd::ONE.exp();
        assert!(close(
            e,
            lit("2.71828182845904523536028747135266250"),
            2e-31
        ));
    }

    #[test]
    fn atan_matches_reference() {
        let v = Dd::from_f64(0.5).atan();
        assert!(close(
            v,
            lit("0.4636476090008061162142562314612144020"),
            2e-31
        ));
        assert!(close(Dd::ONE.atan().mul_f64(4.0), Dd::PI, 2e-31));
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Dd::from_f64(2.0);
        assert!(close(two.sqrt().sqr(), two, 2e-31));
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(Dd::from_f64(1.5).to_decimal_string(5), "1.5000e0");
        assert_eq!(Dd::from_f64(-0.00125).to_decimal_string(3), "-1.25e-3");
        assert_eq!(Dd::from_f64(9.9999).to_decimal_string(3), "1.00e1");
        let pi = Dd::PI.to_decimal_string(32);
        assert_eq!(pi, "3.1415926535897932384626433832795e0");
    }

    #[test]
    fn ln_1p_small() {
        let u = lit("1e-10");
        let want = lit("9.9999999995000000000333333333308333e-11");
        assert!(close(u.ln_1p(), want, 1e-30));
    }
}
