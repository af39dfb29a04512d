//! Verification reports: the JSON document and its markdown and plain
//! renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use zetaforge::corpus::VerificationResult;
use zetaforge::Error;

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Markdown,
    #[default]
    Plain,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "plain" | "text" => Ok(ReportFormat::Plain),
            other => Err(Error::Usage(format!(
                "unknown report format `{other}`; expected json, markdown or plain"
            ))),
        }
    }
}

/// The settings of a run, as echoed in its report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub ids: Option<String>,
    #[serde(with = "sci_opt")]
    pub tol: Option<f64>,
    pub jobs: Option<usize>,
    pub max_terms: u64,
    pub report_format: ReportFormat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(with = "sci")]
    pub max_residual: f64,
    /// The only field that varies between identical runs.
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool_version: String,
    pub config: ConfigEcho,
    pub rows: Vec<VerificationResult>,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(config: ConfigEcho, rows: Vec<VerificationResult>, wall_time_s: f64) -> Self {
        let passed = rows.iter().filter(|r| r.pass).count();
        let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
        ReportDocument {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            summary: Summary {
                total: rows.len(),
                passed,
                failed: rows.len() - passed,
                max_residual,
                wall_time_s,
            },
            rows,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            ReportFormat::Markdown => self.markdown(),
            ReportFormat::Plain => self.plain(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: ReportDocument = serde_json::from_str(text)
            .map_err(|e| Error::Configuration(format!("bad report: {e}")))?;
        if doc.schema != SCHEMA {
            return Err(Error::Configuration(format!(
                "unsupported report schema {}",
                doc.schema
            )));
        }
        Ok(doc)
    }

    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        format!(
            "{} checks: {} passed, {} failed; max residual {:.3e}; {:.2} s",
            s.total, s.passed, s.failed, s.max_residual, s.wall_time_s
        )
    }

    fn markdown(&self) -> String {
        let mut out = String::from("# zetaforge verification\n\n");
        out.push_str("| id | param | lhs | rhs | residual | error bound | tol | result |\n");
        out.push_str("|---|---|---|---|---|---|---|---|\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {:.3e} | {:.3e} | {:.0e} | {} |",
                r.id,
                param(&r.param),
                value(r.lhs_value.as_ref()),
                value(r.rhs_value.as_ref()),
                r.residual,
                r.max_err,
                r.tol,
                status(r)
            );
        }
        let _ = writeln!(out, "\n{}", self.summary_line());
        out
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<6} {:<4} {:<14} lhs={:<36} residual={:.3e} err={:.3e} tol={:.0e}",
                r.id,
                status(r),
                param(&r.param),
                value(r.lhs_value.as_ref()),
                r.residual,
                r.max_err,
                r.tol
            );
            if let Some(e) = &r.error {
                let _ = writeln!(out, "       {e}");
            }
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}

fn status(r: &VerificationResult) -> &'static str {
    if r.pass {
        "ok"
    } else {
        "FAIL"
    }
}

fn param(p: &[f64]) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn value(v: Option<&zetaforge::ExtendedReal>) -> String {
    v.map_or_else(|| "-".into(), |v| v.value.to_decimal_string(30))
}

mod sci {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{v:e}"))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

mod sci_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&format!("{x:e}")),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zetaforge::corpus::{evaluate_suite, Filter};

    fn document() -> ReportDocument {
        let filter: Filter = "E1.2,P2".parse().unwrap();
        let rows = evaluate_suite(Some(&filter), Some(2)).unwrap();
        let config = ConfigEcho {
            ids: Some("E1.2,P2".into()),
            tol: Some(1e-9),
            jobs: Some(2),
            max_terms: 65536,
            report_format: ReportFormat::Json,
        };
        ReportDocument::new(config, rows, 0.25)
    }

    #[test]
    fn summary_matches_rows() {
        let doc = document();
        assert_eq!(doc.summary.total, doc.rows.len());
        assert_eq!(doc.summary.passed + doc.summary.failed, doc.rows.len());
        let max = doc.rows.iter().map(|r| r.residual).fold(0.0, f64::max);
        assert_eq!(doc.summary.max_residual, max);
        assert!(doc.all_passed());
    }

    #[test]
    fn json_round_trips() {
        let doc = document();
        let text = doc.render(ReportFormat::Json);
        assert!(text.contains("\"schema\": 1"));
        assert_eq!(ReportDocument::from_json(&text).unwrap(), doc);
        let other = text.replace("\"schema\": 1", "\"schema\": 2");
        assert!(ReportDocument::from_json(&other).is_err());
    }

    #[test]
    fn text_renderings() {
        let doc = document();
        let md = doc.render(ReportFormat::Markdown);
        assert!(md.contains("| P2 |"));
        assert_eq!(md.matches("| ok |").count(), doc.rows.len());
        let plain = doc.render(ReportFormat::Plain);
        assert_eq!(plain.lines().count(), doc.rows.len() + 1);
        assert!(plain.ends_with("0.25 s\n"));
    }

    #[test]
    fn formats_parse() {
        assert_eq!("JSON".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert_eq!(
            "md".parse::<ReportFormat>().unwrap(),
            ReportFormat::Markdown
        );
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
