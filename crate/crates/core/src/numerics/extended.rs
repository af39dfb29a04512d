use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dd::{Dd, DD_EPS};

/// A double-word value with an absolute error bound.
///
/// Arithmetic propagates the bound to first order plus one rounding unit of
/// the result, so `err(a + b) <= err(a) + err(b) + |a + b| * 2^-104`.
#[derive(Copy, Clone, Default, PartialEq)]
pub struct ExtendedReal {
    pub value: Dd,
    pub err: f64,
}

impl ExtendedReal {
    pub const ZERO: ExtendedReal = ExtendedReal {
        value: Dd::ZERO,
        err: 0.0,
    };

    pub fn new(value: Dd, err: f64) -> Self {
        debug_assert!(err >= 0.0 || err.is_nan());
        ExtendedReal {
            value,
            err: err.abs(),
        }
    }

    /// A value known to working precision.
    pub fn exact(value: Dd) -> Self {
        ExtendedReal { value, err: 0.0 }
    }

    pub fn rounded(value: Dd) -> Self {
        ExtendedReal {
            value,
            err: value.hi.abs() * DD_EPS,
        }
    }

    pub fn from_f64(x: f64) -> Self {
        Self::exact(Dd::from_f64(x))
    }

    pub fn to_f64(self) -> f64 {
        self.value.to_f64()
    }

    pub fn is_finite(self) -> bool {
        self.value.is_finite() && self.err.is_finite()
    }

    pub fn with_extra_err(self, extra: f64) -> Self {
        ExtendedReal {
            value: self.value,
            err: self.err + extra.abs(),
        }
    }

    pub fn abs(self) -> Self {
        ExtendedReal {
            value: self.value.abs(),
            err: self.err,
        }
    }

    pub fn mul_f64(self, k: f64) -> Self {
        let value = self.value.mul_f64(k);
        ExtendedReal {
            value,
            err: self.err * k.abs() + value.hi.abs() * DD_EPS,
        }
    }

    /// Division by a double, carried out in double-double so that exact
    /// divisors such as integers add only one rounding.
    pub fn div_f64(self, k: f64) -> Self {
        let value = self.value / Dd::from_f64(k);
        ExtendedReal {
            value,
            err: self.err / k.abs() + value.hi.abs() * DD_EPS,
        }
    }

    /// |self - other| as a plain double.
    pub fn distance(self, other: ExtendedReal) -> f64 {
        (self.value - other.value).abs().to_f64()
    }

    /// Whether two values agree within their combined error bounds.
    pub fn agrees_with(self, other: ExtendedReal) -> bool {
        self.distance(other) <= self.err + other.err
    }

    pub fn to_decimal_string(self) -> String {
        self.value.to_decimal_string(32)
    }
}

impl fmt::Debug for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:.2e}", self.value.to_decimal_string(32), self.err)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(32);
        write!(
            f,
            "{} ± {:.3e}",
            self.value.to_decimal_string(digits),
            self.err
        )
    }
}

impl From<Dd> for ExtendedReal {
    fn from(value: Dd) -> Self {
        ExtendedReal::rounded(value)
    }
}

impl Neg for ExtendedReal {
    type Output = ExtendedReal;
    fn neg(self) -> ExtendedReal {
        ExtendedReal {
            value: -self.value,
            err: self.err,
        }
    }
}

impl Add for ExtendedReal {
    type Output = ExtendedReal;
    fn add(self, b: ExtendedReal) -> ExtendedReal {
        let value = self.value + b.value;
        ExtendedReal {
            value,
            err: self.err + b.err + value.hi.abs() * DD_EPS,
        }
    }
}

impl Sub for ExtendedReal {
    type Output = ExtendedReal;
    fn sub(self, b: ExtendedReal) -> ExtendedReal {
        self + (-b)
    }
}

impl Mul for ExtendedReal {
    type Output = ExtendedReal;
    fn mul(self, b: ExtendedReal) -> ExtendedReal {
        let value = self.value * b.value;
        let err = self.value.hi.abs() * b.err
            + b.value.hi.abs() * self.err
            + self.err * b.err
            + value.hi.abs() * DD_EPS;
        ExtendedReal { value, err }
    }
}

impl Div for ExtendedReal {
    type Output = ExtendedReal;
    fn div(self, b: ExtendedReal) -> ExtendedReal {
        let value = self.value / b.value;
        let denom = (b.value.hi.abs() - b.err).max(f64::MIN_POSITIVE);
        let err = (self.err + value.hi.abs() * b.err) / denom + value.hi.abs() * DD_EPS;
        ExtendedReal { value, err }
    }
}

macro_rules! mixed {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Dd> for ExtendedReal {
            type Output = ExtendedReal;
            fn $m(self, b: Dd) -> ExtendedReal {
                $tr::$m(self, ExtendedReal::exact(b))
            }
        }
        impl $tr<f64> for ExtendedReal {
            type Output = ExtendedReal;
            fn $m(self, b: f64) -> ExtendedReal {
                $tr::$m(self, ExtendedReal::from_f64(b))
            }
        }
    )*};
}
mixed!(Add add, Sub sub, Mul mul, Div div);

/// Serialized as `{"value": "<decimal>", "err": "<decimal>", "hi": .., "lo": ..}`:
/// the decimal for reading, the exact double-double components so that a
/// value read back is bit-identical. Input without the components is parsed
/// from the decimal.
impl Serialize for ExtendedReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExtendedReal", 4)?;
        st.serialize_field("value", &self.value.to_decimal_string(32))?;
        st.serialize_field("err", &format!("{:e}", self.err))?;
        st.serialize_field("hi", &self.value.hi)?;
        st.serialize_field("lo", &self.value.lo)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExtendedReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            value: String,
            err: String,
            hi: Option<f64>,
            lo: Option<f64>,
        }
        let raw = Raw::deserialize(d)?;
        let value = match (raw.hi, raw.lo) {
            (Some(hi), Some(lo)) => Dd { hi, lo },
            _ => Dd::parse_decimal(&raw.value)
                .ok_or_else(|| serde::de::Error::custom(format!("bad decimal `{}`", raw.value)))?,
        };
        let err = raw
            .err
            .parse::<f64>()
            .map_err(|e| serde::de::Error::custom(e.to_string()))?;
        Ok(ExtendedReal { value, err })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_add_subadditively() {
        let a = ExtendedReal::new(Dd::from_f64(1.0), 1e-20);
        let b = ExtendedReal::new(Dd::from_f64(2.0), 3e-20);
        let c = a + b;
        assert!(c.err <= 4e-20 + 3.0 * DD_EPS * 1.0001);
        assert!(c.err >= 4e-20);
    }

    #[test]
    fn serde_keeps_digits() {
        let x = ExtendedReal::new(Dd::PI, 1.5e-30);
        let s = serde_json::to_string(&x).unwrap();
        let y: ExtendedReal = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        let text = r#"{"value": "3.1415926535897932384626433832795", "err": "1e-30"}"#;
        let z: ExtendedReal = serde_json::from_str(text).unwrap();
        assert!((x.value - z.value).abs().to_f64() < 1e-31);
    }
}
