//! Vetted decimal constants.
//!
//! The cache is built once from literal strings and never mutated; runtime
//! code reads constants from it. [`ConstantsCache::validate`] recomputes each
//! entry by an independent route and returns a copy with the `validated`
//! flags set.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{em_corrections, Dd};

pub const CACHE_SCHEMA: u32 = 1;

/// Agreement demanded of every oracle, relative.
pub const VALIDATION_DIGITS: i32 = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub digits: String,
    pub provenance: String,
    pub validated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantsCache {
    pub schema: u32,
    pub constants: BTreeMap<String, ConstantEntry>,
}

const ENTRIES: [(&str, &str, &str); 6] = [
    (
        "pi",
        "3.141592653589793238462643383279502884197",
        "circle constant; oracle: Machin formula 16·atan(1/5) − 4·atan(1/239)",
    ),
    (
        "gamma",
        "0.5772156649015328606065120900824024310422",
        "Euler's constant γ = −ψ(1); oracle: Euler–Maclaurin on H_N − ln N",
    ),
    (
        "ln2",
        "0.6931471805599453094172321214581765680755",
        "natural log of 2; oracle: Σ 1/(k·2^k)",
    ),
    (
        "zeta2",
        "1.644934066848226436472415166646025189219",
        "ζ(2); oracle: π²/6",
    ),
    (
        "zeta3",
        "1.202056903159594285399738161511449990765",
        "Apéry's constant ζ(3); oracle: direct sum with Euler–Maclaurin tail",
    ),
    (
        "gamma1",
        "-0.07281584548367672486058637587490131913774",
        "first Stieltjes constant γ₁; oracle: regularised Σ ln k/k − ln²N/2",
    ),
];

impl ConstantsCache {
    pub fn standard() -> Self {
        let constants = ENTRIES
            .iter()
            .map(|&(name, digits, provenance)| {
                (
                    name.to_string(),
                    ConstantEntry {
                        digits: digits.to_string(),
                        provenance: provenance.to_string(),
                        validated: false,
                    },
                )
            })
            .collect();
        ConstantsCache {
            schema: CACHE_SCHEMA,
            constants,
        }
    }

    pub fn get(&self, name: &str) -> Option<Dd> {
        self.constants
            .get(name)
            .and_then(|e| Dd::parse_decimal(&e.digits))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("constants serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cache: ConstantsCache =
            serde_json::from_str(text).map_err(|e| Error::Configuration(e.to_string()))?;
        if cache.schema != CACHE_SCHEMA {
            return Err(Error::Configuration(format!(
                "unsupported constants schema {}",
                cache.schema
            )));
        }
        for (name, entry) in &cache.constants {
            if Dd::parse_decimal(&entry.digits).is_none() {
                return Err(Error::Configuration(format!(
                    "constant `{name}` is not a decimal string"
                )));
            }
        }
        Ok(cache)
    }

    /// Recomputes every known entry and returns a copy with flags set; the
    /// second element lists `(name, relative discrepancy)` for each check.
    pub fn validate(&self) -> Result<(ConstantsCache, Vec<(String, f64)>)> {
        let mut out = self.clone();
        let mut report = Vec::new();
        let tol = 10f64.powi(-VALIDATION_DIGITS);
        for (name, entry) in out.constants.iter_mut() {
            let cached = Dd::parse_decimal(&entry.digits)
                .ok_or_else(|| Error::Configuration(format!("bad digits for {name}")))?;
            let oracle = oracle(name)?;
            let rel = ((cached - oracle).abs() / cached.abs()).to_f64();
            entry.validated = rel <= tol;
            report.push((name.clone(), rel));
        }
        Ok((out, report))
    }
}

fn machin_pi() -> Dd {
    let a = Dd::from_f64(5.0).recip().atan().mul_f64(16.0);
    let b = Dd::from_f64(239.0).recip().atan().mul_f64(4.0);
    a - b
}

fn euler_gamma_oracle() -> Dd {
    let n = 1000u64;
    let mut h = Dd::ZERO;
    for k in (1..=n).rev() {
        h += Dd::from_f64(k as f64).recip();
    }
    let x = Dd::from_f64(n as f64);
    h - x.ln() + em_corrections(0, 1.0, x).value
}

fn ln2_oracle() -> Dd {
    let mut acc = Dd::ZERO;
    for k in (1..=110).rev() {
        acc += Dd::ONE / (Dd::from_f64(k as f64) * Dd::from_f64(2.0).powi(k));
    }
    acc
}

fn oracle(name: &str) -> Result<Dd> {
    Ok(match name {
        "pi" => machin_pi(),
        "gamma" => euler_gamma_oracle(),
        "ln2" => ln2_oracle(),
        "zeta2" => machin_pi().sqr() / Dd::from_f64(6.0),
        "zeta3" => super::zeta(3.0)?.value,
        "gamma1" => super::stieltjes_gamma1(1.0)?.value,
        other => {
            return Err(Error::Configuration(format!(
                "no oracle for constant `{other}`"
            )))
        }
    })
}

fn cache() -> &'static ConstantsCache {
    static CACHE: OnceLock<ConstantsCache> = OnceLock::new();
    CACHE.get_or_init(ConstantsCache::standard)
}

fn cached(name: &str) -> Dd {
    cache().get(name).expect("standard constant present")
}

pub fn pi() -> Dd {
    cached("pi")
}

pub fn euler_gamma() -> Dd {
    cached("gamma")
}

pub fn ln2() -> Dd {
    cached("ln2")
}

pub fn zeta2() -> Dd {
    cached("zeta2")
}

pub fn zeta3() -> Dd {
    cached("zeta3")
}

pub fn gamma1() -> Dd {
    cached("gamma1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_validate_to_25_digits() {
        let (validated, report) = ConstantsCache::standard().validate().unwrap();
        for (name, rel) in &report {
            assert!(*rel <= 1e-25, "{name}: {rel:e}");
        }
        assert!(validated.constants.values().all(|e| e.validated));
        for name in ["pi", "gamma", "ln2", "zeta2", "zeta3", "gamma1"] {
            assert!(validated.constants.contains_key(name));
        }
    }

    #[test]
    fn json_round_trip() {
        let c = ConstantsCache::standard();
        let text = c.to_json();
        assert!(text.contains("\"schema\": 1"));
        assert_eq!(ConstantsCache::from_json(&text).unwrap(), c);
        let bad = text.replace("3.14159", "3.1x159");
        assert!(ConstantsCache::from_json(&bad).is_err());
    }

    #[test]
    fn literal_matches_internal_double_word() {
        assert!((pi() - Dd::PI).abs().to_f64() < 1e-31);
        assert!((ln2() - Dd::LN2).abs().to_f64() < 1e-31);
    }
}
