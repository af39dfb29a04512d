//! The identity corpus: each record pairs two (or more) independent
//! evaluation routes for the two sides of an equation and is judged by the
//! residual between them.

mod kit;
mod registry;

pub use kit::DEFAULT_MAX_TERMS;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{Dd, ExtendedReal, SeriesSpec};
use crate::par;

/// Default residual tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CostClass {
    Fast,
    Slow,
}

impl fmt::Display for CostClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CostClass::Fast => "fast",
            CostClass::Slow => "slow",
        })
    }
}

pub type Evaluator = Arc<dyn Fn(&[f64]) -> Result<ExtendedReal> + Send + Sync>;

/// One way of computing one side of an identity.
#[derive(Clone)]
pub struct Route {
    pub name: &'static str,
    /// The functions whose values this route finally rests on; two routes of
    /// a record must not rest on exactly the same set.
    pub terminals: &'static [&'static str],
    /// Restricts the route to particular parameter samples.
    pub applies: Option<fn(&[f64]) -> bool>,
    pub eval: Evaluator,
}

impl Route {
    pub fn new(
        name: &'static str,
        terminals: &'static [&'static str],
        eval: impl Fn(&[f64]) -> Result<ExtendedReal> + Send + Sync + 'static,
    ) -> Self {
        Route {
            name,
            terminals,
            applies: None,
            eval: Arc::new(eval),
        }
    }

    pub fn only_when(mut self, applies: fn(&[f64]) -> bool) -> Self {
        self.applies = Some(applies);
        self
    }

    fn applies_to(&self, param: &[f64]) -> bool {
        self.applies.is_none_or(|f| f(param))
    }
}

impl fmt::Debug for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Route")
            .field("name", &self.name)
            .field("terminals", &self.terminals)
            .finish()
    }
}

/// A value quoted in the text that the left-hand side must reproduce.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reference {
    pub value: String,
    pub tol: f64,
}

/// One equation as two or more independent routes.
#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// Alternative ids under which the record may also be looked up.
    pub aliases: &'static [&'static str],
    pub statement: &'static str,
    pub param_names: &'static [&'static str],
    pub params: Vec<Vec<f64>>,
    /// `routes[0]` is the left-hand side, `routes[1]` the right-hand side;
    /// any further routes are alternative representations.
    pub routes: Vec<Route>,
    pub tol: f64,
    pub cost_class: CostClass,
    pub reference: Option<Reference>,
    pub notes: &'static str,
}

impl IdentityRecord {
    pub fn lhs(&self) -> &Route {
        &self.routes[0]
    }

    pub fn rhs(&self) -> &Route {
        &self.routes[1]
    }

    fn matches_name(&self, name: &str) -> bool {
        self.id == name || self.aliases.contains(&name)
    }

    /// Checks that every pair of routes rests on different terminal sets.
    pub fn independence_audit(&self) -> Result<()> {
        if self.routes.len() < 2 {
            return Err(Error::Configuration(format!(
                "{}: fewer than two routes",
                self.id
            )));
        }
        for (i, a) in self.routes.iter().enumerate() {
            for b in &self.routes[i + 1..] {
                let sa: BTreeSet<_> = a.terminals.iter().collect();
                let sb: BTreeSet<_> = b.terminals.iter().collect();
                if sa == sb {
                    return Err(Error::Configuration(format!(
                        "{}: routes `{}` and `{}` share the terminal set {:?}",
                        self.id, a.name, b.name, a.terminals
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Value produced by one route.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RouteValue {
    pub route: String,
    pub value: ExtendedReal,
}

/// Outcome of checking one record at one parameter sample.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationResult {
    pub id: String,
    pub param: Vec<f64>,
    pub lhs_value: Option<ExtendedReal>,
    pub rhs_value: Option<ExtendedReal>,
    /// Further representations, in registry order.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra: Vec<RouteValue>,
    /// Largest pairwise `|a − b|` over all routes.
    #[serde(with = "sci")]
    pub residual: f64,
    /// Largest error bound reported by any route.
    #[serde(with = "sci")]
    pub max_err: f64,
    #[serde(with = "sci")]
    pub tol: f64,
    /// `|lhs − quoted value|` when the record carries a quoted value.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "sci_opt")]
    pub reference_deviation: Option<f64>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall time; kept out of serialized results so reports stay
    /// reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Equality ignores `elapsed`, which is not part of a result's content.
impl PartialEq for VerificationResult {
    fn eq(&self, o: &Self) -> bool {
        self.id == o.id
            && self.param == o.param
            && self.lhs_value == o.lhs_value
            && self.rhs_value == o.rhs_value
            && self.extra == o.extra
            && self.residual.to_bits() == o.residual.to_bits()
            && self.max_err.to_bits() == o.max_err.to_bits()
            && self.tol.to_bits() == o.tol.to_bits()
            && self.reference_deviation.map(f64::to_bits) == o.reference_deviation.map(f64::to_bits)
            && self.pass == o.pass
            && self.error == o.error
    }
}

mod sci {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{v:e}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

mod sci_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&format!("{x:e}")),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Selects part of the corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    Cost(CostClass),
    /// Records whose id (or an alias) starts with the prefix.
    Prefix(String),
    /// Records named exactly (by id or alias).
    Ids(Vec<String>),
}

impl FromStr for Filter {
    type Err = Error;

    /// `fast`/`slow` select a cost class; a comma-separated list or a single
    /// registered id (or alias) names records; anything else is an id prefix.
    fn from_str(s: &str) -> Result<Filter> {
        let s = s.trim();
        match s {
            "" => Err(Error::Usage("empty filter".into())),
            "fast" => Ok(Filter::Cost(CostClass::Fast)),
            "slow" => Ok(Filter::Cost(CostClass::Slow)),
            _ if s.contains(',') => Ok(Filter::Ids(
                s.split(',')
                    .map(|p| p.trim().to_string())
                    .filter(|p| !p.is_empty())
                    .collect(),
            )),
            _ if registry().iter().any(|r| r.matches_name(s)) => Ok(Filter::Ids(vec![s.into()])),
            _ => Ok(Filter::Prefix(s.to_string())),
        }
    }
}

impl Filter {
    fn accepts(&self, r: &IdentityRecord) -> bool {
        match self {
            Filter::Cost(c) => r.cost_class == *c,
            Filter::Prefix(p) => {
                r.id.starts_with(p.as_str()) || r.aliases.iter().any(|a| a.starts_with(p.as_str()))
            }
            Filter::Ids(ids) => ids.iter().any(|i| r.matches_name(i)),
        }
    }
}

/// Orders ids like `E1.2 < E1.10 < E2.1 < L2a < P1`.
pub fn compare_ids(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> Vec<(String, u64)> {
        let mut out = Vec::new();
        let mut text = String::new();
        let mut num: Option<u64> = None;
        for c in s.chars() {
            if let Some(d) = c.to_digit(10) {
                num = Some(num.unwrap_or(0) * 10 + d as u64);
            } else {
                if num.is_some() || c == '.' {
                    out.push((std::mem::take(&mut text), num.take().unwrap_or(0)));
                }
                if c != '.' {
                    text.push(c);
                }
            }
        }
        out.push((text, num.unwrap_or(0)));
        out
    }
    key(a).cmp(&key(b))
}

/// The registry, built and audited once.
pub fn registry() -> &'static [IdentityRecord] {
    static REGISTRY: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut records = registry::build();
        records.sort_by(|a, b| compare_ids(a.id, b.id));
        for r in &records {
            if let Err(e) = r.independence_audit() {
                panic!("corpus registration: {e}");
            }
        }
        records
    })
}

/// Records selected by `filter`, in id order.
pub fn list_identities(filter: Option<&Filter>) -> Result<Vec<&'static IdentityRecord>> {
    let all = registry();
    let Some(filter) = filter else {
        return Ok(all.iter().collect());
    };
    if let Filter::Ids(ids) = filter {
        if ids.is_empty() {
            return Err(Error::Usage("empty id list".into()));
        }
        for id in ids {
            if !all.iter().any(|r| r.matches_name(id)) {
                return Err(unknown(id));
            }
        }
    }
    let out: Vec<_> = all.iter().filter(|r| filter.accepts(r)).collect();
    if out.is_empty() {
        if let Filter::Prefix(p) = filter {
            return Err(Error::Usage(format!("no identity matches prefix `{p}`")));
        }
    }
    Ok(out)
}

fn unknown(id: &str) -> Error {
    Error::Lookup(id.to_string())
}

pub fn lookup(id: &str) -> Result<&'static IdentityRecord> {
    registry()
        .iter()
        .find(|r| r.matches_name(id))
        .ok_or_else(|| unknown(id))
}

/// Evaluates one record at `param` (the first sample when omitted).
pub fn evaluate_identity(
    id: &str,
    param: Option<&[f64]>,
    tol_override: Option<f64>,
) -> Result<VerificationResult> {
    let record = lookup(id)?;
    let param = match param {
        Some(p) => {
            if !record.params.iter().any(|s| s.as_slice() == p) {
                return Err(Error::Usage(format!(
                    "{}: parameter {p:?} is not among the registered samples {:?}",
                    record.id, record.params
                )));
            }
            p.to_vec()
        }
        None => record.params[0].clone(),
    };
    if let Some(t) = tol_override {
        if !(t > 0.0) {
            return Err(Error::Usage(format!("tolerance must be positive, got {t}")));
        }
    }
    check(record, &param, tol_override)
}

fn check(
    record: &IdentityRecord,
    param: &[f64],
    tol_override: Option<f64>,
) -> Result<VerificationResult> {
    let tol = tol_override.unwrap_or(record.tol);
    let start = Instant::now();
    let mut values = Vec::with_capacity(record.routes.len());
    for route in &record.routes {
        if !route.applies_to(param) {
            continue;
        }
        let v = (route.eval)(param).map_err(|e| Error::Route {
            route: format!("{}:{}", record.id, route.name),
            source: Box::new(e),
        })?;
        values.push((route.name, v));
    }
    let elapsed = start.elapsed();
    let mut residual = 0.0f64;
    for (i, (_, a)) in values.iter().enumerate() {
        for (_, b) in &values[i + 1..] {
            residual = residual.max(a.distance(*b));
        }
    }
    let max_err = values.iter().map(|(_, v)| v.err).fold(0.0, f64::max);
    let lhs = values[0].1;
    let reference_deviation = record.reference.as_ref().map(|r| {
        let quoted = Dd::parse_decimal(&r.value).expect("registry reference parses");
        (lhs.value - quoted).abs().to_f64()
    });
    let reference_ok = match (&record.reference, reference_deviation) {
        (Some(r), Some(d)) => d < r.tol,
        _ => true,
    };
    let finite = values.iter().all(|(_, v)| v.is_finite());
    let pass = finite && residual <= tol && max_err <= tol / 10.0 && reference_ok;
    Ok(VerificationResult {
        id: record.id.to_string(),
        param: param.to_vec(),
        lhs_value: Some(lhs),
        rhs_value: Some(values[1].1),
        extra: values[2..]
            .iter()
            .map(|(n, v)| RouteValue {
                route: n.to_string(),
                value: *v,
            })
            .collect(),
        residual,
        max_err,
        tol,
        reference_deviation,
        pass,
        error: None,
        elapsed,
    })
}

/// Settings of a suite run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SuiteConfig {
    /// Worker threads; all available when `None`.
    pub jobs: Option<usize>,
    /// Replaces every record's tolerance.
    pub tol: Option<f64>,
    /// Cap on directly summed terms of the corpus series.
    pub max_terms: Option<u64>,
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.jobs == Some(0) {
            return Err(Error::Usage("jobs must be at least 1".into()));
        }
        if let Some(t) = self.tol {
            if !(t > 0.0) {
                return Err(Error::Usage(format!("tolerance must be positive, got {t}")));
            }
        }
        if let Some(m) = self.max_terms {
            if m < MIN_MAX_TERMS {
                return Err(Error::Usage(format!(
                    "max-terms must be at least {MIN_MAX_TERMS}, got {m}"
                )));
            }
        }
        Ok(())
    }
}

/// Smallest accepted series term cap.
pub const MIN_MAX_TERMS: u64 = 64;

/// Evaluates every sample of every selected record, concurrently on at most
/// `jobs` threads. Results are in id order (then sample order) and do not
/// depend on `jobs`. Evaluation failures are recorded per result.
pub fn evaluate_suite(
    filter: Option<&Filter>,
    jobs: Option<usize>,
) -> Result<Vec<VerificationResult>> {
    evaluate_suite_with(
        filter,
        &SuiteConfig {
            jobs,
            ..SuiteConfig::default()
        },
    )
}

pub fn evaluate_suite_with(
    filter: Option<&Filter>,
    config: &SuiteConfig,
) -> Result<Vec<VerificationResult>> {
    config.validate()?;
    let records = list_identities(filter)?;
    let work: Vec<(&IdentityRecord, Vec<f64>)> = records
        .iter()
        .flat_map(|r| r.params.iter().map(move |p| (*r, p.clone())))
        .collect();
    let max_terms = config.max_terms.unwrap_or(kit::DEFAULT_MAX_TERMS);
    let tol = config.tol;
    let run = || {
        par::map(&work, |(r, p)| {
            let start = Instant::now();
            kit::with_max_terms(max_terms, || check(r, p, tol)).unwrap_or_else(|e| {
                VerificationResult {
                    id: r.id.to_string(),
                    param: p.clone(),
                    lhs_value: None,
                    rhs_value: None,
                    extra: Vec::new(),
                    residual: f64::INFINITY,
                    max_err: f64::INFINITY,
                    tol: tol.unwrap_or(r.tol),
                    reference_deviation: None,
                    pass: false,
                    error: Some(e.to_string()),
                    elapsed: start.elapsed(),
                }
            })
        })
    };
    Ok(match config.jobs {
        Some(j) => par::with_jobs(j, run),
        None => run(),
    })
}

/// A series summed by one of the corpus routes.
#[derive(Clone, Debug)]
pub struct SampleSeries {
    /// Record whose route sums the series.
    pub id: &'static str,
    pub description: &'static str,
    pub spec: SeriesSpec,
}

/// Series from the corpus, with the tail models their routes use.
pub fn sample_series() -> Vec<SampleSeries> {
    registry::sample_series()
        .into_iter()
        .map(|(id, description, spec)| SampleSeries {
            id,
            description,
            spec,
        })
        .collect()
}

/// Catalog entry for documentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub aliases: Vec<String>,
    pub statement: String,
    pub param_names: Vec<String>,
    pub params: Vec<Vec<f64>>,
    #[serde(with = "sci")]
    pub tol: f64,
    pub cost_class: CostClass,
    pub routes: Vec<CatalogRoute>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<Reference>,
    pub notes: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRoute {
    pub name: String,
    pub terminals: Vec<String>,
}

pub fn catalog() -> Vec<CatalogEntry> {
    registry()
        .iter()
        .map(|r| CatalogEntry {
            id: r.id.into(),
            aliases: r.aliases.iter().map(|s| s.to_string()).collect(),
            statement: r.statement.into(),
            param_names: r.param_names.iter().map(|s| s.to_string()).collect(),
            params: r.params.clone(),
            tol: r.tol,
            cost_class: r.cost_class,
            routes: r
                .routes
                .iter()
                .map(|rt| CatalogRoute {
                    name: rt.name.into(),
                    terminals: rt.terminals.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
            reference: r.reference.clone(),
            notes: r.notes.into(),
        })
        .collect()
}

pub fn catalog_json() -> String {
    serde_json::to_string_pretty(&catalog()).expect("catalog serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let results = evaluate_suite(None, None).unwrap();
        let mut failed = Vec::new();
        for r in &results {
            println!(
                "{:6} {:?} residual={:.2e} err={:.2e} ref={:?} {:?} {} {:?}",
                r.id,
                r.param,
                r.residual,
                r.max_err,
                r.reference_deviation,
                r.elapsed,
                if r.pass { "ok" } else { "FAIL" },
                r.error
            );
            if !r.pass {
                failed.push(format!("{} {:?}", r.id, r.param));
            }
            // any two routes must agree within their combined error bounds
            if r.residual > 2.0 * r.max_err + 1e-31 {
                failed.push(format!(
                    "{} {:?}: residual exceeds the error bounds",
                    r.id, r.param
                ));
            }
        }
        assert!(failed.is_empty(), "failed: {failed:?}");
    }

    fn toy(rhs_offset: f64, rhs_terminals: &'static [&'static str]) -> IdentityRecord {
        IdentityRecord {
            id: "T1",
            aliases: &[],
            statement: "toy",
            param_names: &[],
            params: vec![vec![]],
            routes: vec![
                Route::new("lhs", &["a"], |_| Ok(ExtendedReal::new(Dd::ONE, 1e-30))),
                Route::new("rhs", rhs_terminals, move |_| {
                    Ok(ExtendedReal::new(Dd::ONE + Dd::from_f64(rhs_offset), 1e-30))
                }),
            ],
            tol: DEFAULT_TOL,
            cost_class: CostClass::Fast,
            reference: None,
            notes: "",
        }
    }

    #[test]
    fn census_and_ordering() {
        let all = list_identities(None).unwrap();
        assert!(all.len() >= 40);
        let ids: Vec<_> = all.iter().map(|r| r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_by(|a, b| compare_ids(a, b));
        assert_eq!(ids, sorted);
        assert_eq!(compare_ids("E1.2", "E1.10"), Ordering::Less);
        assert_eq!(compare_ids("E2.1", "E1.49"), Ordering::Greater);
        for r in all {
            assert!(r.routes.len() >= 2 && !r.params.is_empty(), "{}", r.id);
            assert!(r.tol > 0.0);
        }
    }

    #[test]
    fn filters() {
        let l2 = list_identities(Some(&"L2".parse().unwrap())).unwrap();
        assert_eq!(l2.len(), 7);
        let e3 = list_identities(Some(&"E3".parse().unwrap())).unwrap();
        assert_eq!(e3.len(), 5);
        // an exact id does not pick up longer ids sharing its prefix
        let one = list_identities(Some(&"E1.1".parse().unwrap())).unwrap();
        assert_eq!(one.len(), 1);
        let alias = list_identities(Some(&"E1.13".parse().unwrap())).unwrap();
        assert_eq!(alias[0].id, "P1");
        let pair = list_identities(Some(&"E1.2, P2".parse().unwrap())).unwrap();
        assert_eq!(
            pair.iter().map(|r| r.id).collect::<Vec<_>>(),
            ["E1.2", "P2"]
        );
        let slow = list_identities(Some(&"slow".parse().unwrap())).unwrap();
        assert!(slow.iter().all(|r| r.cost_class == CostClass::Slow));
        assert!(matches!("".parse::<Filter>(), Err(Error::Usage(_))));
        assert!(matches!(
            list_identities(Some(&"Z9".parse().unwrap())),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            list_identities(Some(&"E1.2,E9.9".parse().unwrap())),
            Err(Error::Lookup(id)) if id == "E9.9"
        ));
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(
            evaluate_identity("E9.99", None, None),
            Err(Error::Lookup(_))
        ));
        assert!(matches!(
            evaluate_identity("E1.2", Some(&[11.0]), None),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            evaluate_identity("E1.2", None, Some(0.0)),
            Err(Error::Usage(_))
        ));
        let r = evaluate_identity("E1.2", Some(&[3.0]), None).unwrap();
        assert!(r.pass);
        assert_eq!(r.param, vec![3.0]);
    }

    #[test]
    fn audit_rejects_shared_terminals() {
        assert!(toy(0.0, &["b"]).independence_audit().is_ok());
        assert!(matches!(
            toy(0.0, &["a"]).independence_audit(),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn wrong_identity_fails() {
        let good = check(&toy(0.0, &["b"]), &[], None).unwrap();
        assert!(good.pass);
        let bad = check(&toy(1e-6, &["b"]), &[], None).unwrap();
        assert!(!bad.pass);
        assert!((bad.residual - 1e-6).abs() < 1e-15);
        // a tighter tolerance than the error bounds can support also fails
        let tight = check(&toy(0.0, &["b"]), &[], Some(1e-31)).unwrap();
        assert!(!tight.pass);
    }

    #[test]
    fn results_independent_of_jobs() {
        let filter: Filter = "L2".parse().unwrap();
        let one = evaluate_suite(Some(&filter), Some(1)).unwrap();
        let many = evaluate_suite(Some(&filter), Some(4)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn suite_config_validation() {
        let bad = SuiteConfig {
            jobs: Some(0),
            ..SuiteConfig::default()
        };
        assert!(matches!(
            evaluate_suite_with(None, &bad),
            Err(Error::Usage(_))
        ));
        let bad = SuiteConfig {
            max_terms: Some(1),
            ..SuiteConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::Usage(_))));
        let bad = SuiteConfig {
            tol: Some(f64::NAN),
            ..SuiteConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::Usage(_))));
    }

    #[test]
    fn results_round_trip_through_json() {
        let r = evaluate_identity("P2", None, None).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: VerificationResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let catalog: Vec<CatalogEntry> = serde_json::from_str(&catalog_json()).unwrap();
        assert_eq!(catalog, super::catalog());
    }
}
