//! Machine-readable report types and their text/JSON/CSV renderings.
//!
//! Big integers travel as decimal strings (they overflow native JSON
//! numbers); certified values are decimal strings with an explicit
//! radius bound, so no floating-point nondeterminism ever reaches an
//! output stream. Sweep reports carry no wall-clock fields: parallel and
//! serial runs must be byte-identical.

use serde::{Deserialize, Serialize};

use arcfib_core::catalog::{Arity, IdentityInfo, Report};
use arcfib_core::series::VerificationReport;
use arcfib_core::{IdentityId, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussianJson {
    pub re: String,
    pub im: String,
}

/// One verification result, finite or infinite; unused fields are null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub id: String,
    pub m: Option<i64>,
    pub t: Option<i64>,
    pub status: String,
    pub gaussian: Option<GaussianJson>,
    pub pi_multiple: Option<i64>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub radius: Option<String>,
    pub terms_used: Option<u64>,
    pub elapsed_ms: Option<u64>,
}

impl ReportRow {
    /// Finite exact report. `with_elapsed` is false inside sweeps, where
    /// outputs must not depend on wall-clock time.
    pub fn finite(report: &Report, with_elapsed: bool) -> Self {
        ReportRow {
            id: report.id.name(),
            m: report.m,
            t: report.t,
            status: report.status.label().to_string(),
            gaussian: Some(GaussianJson {
                re: report.witness.re().to_string(),
                im: report.witness.im().to_string(),
            }),
            pi_multiple: Some(report.pi_multiple),
            lhs: None,
            rhs: None,
            radius: None,
            terms_used: Some(report.terms as u64),
            elapsed_ms: with_elapsed.then_some(report.elapsed.as_millis() as u64),
        }
    }

    /// Certified infinite report; values rendered to `digits + 5`
    /// decimal places.
    pub fn infinite(report: &VerificationReport, elapsed_ms: Option<u64>) -> Self {
        let places = report.digits + 5;
        let radius = {
            let lr = report.lhs.radius();
            let rr = report.rhs.radius();
            if lr >= rr {
                report.lhs.radius_decimal_upper()
            } else {
                report.rhs.radius_decimal_upper()
            }
        };
        ReportRow {
            id: report.id.name(),
            m: report.m,
            t: None,
            status: report.status.label().to_string(),
            gaussian: None,
            pi_multiple: None,
            lhs: Some(report.lhs.decimal_string(places)),
            rhs: Some(report.rhs.decimal_string(places)),
            radius: Some(radius),
            terms_used: Some(report.terms_used),
            elapsed_ms,
        }
    }

    pub fn status_is_verified(&self) -> bool {
        self.status == Status::Verified.label()
    }

    pub const CSV_HEADER: &'static str =
        "id,m,t,status,gaussian_re,gaussian_im,pi_multiple,lhs,rhs,radius,terms_used,elapsed_ms";

    pub fn csv_line(&self) -> String {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        let (re, im) = match &self.gaussian {
            Some(g) => (g.re.clone(), g.im.clone()),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.id,
            opt(&self.m),
            opt(&self.t),
            self.status,
            re,
            im,
            opt(&self.pi_multiple),
            opt(&self.lhs),
            opt(&self.rhs),
            opt(&self.radius),
            opt(&self.terms_used),
            opt(&self.elapsed_ms),
        )
    }

    pub fn text_line(&self) -> String {
        // The schema's t column doubles as the index n for per-index
        // identities; label it accordingly in human output.
        let t_name = IdentityId::parse(&self.id)
            .ok()
            .and_then(|id| id.info().ok())
            .map_or(
                "t",
                |info| {
                    if info.arity == Arity::MAndN {
                        "n"
                    } else {
                        "t"
                    }
                },
            );
        let params = match (self.m, self.t) {
            (Some(m), Some(t)) => format!(" m={m} {t_name}={t}"),
            (Some(m), None) => format!(" m={m}"),
            (None, Some(t)) => format!(" {t_name}={t}"),
            (None, None) => String::new(),
        };
        let mut line = format!("{}{params}: {}", self.id, self.status);
        if let Some(g) = &self.gaussian {
            let im = if g.im.starts_with('-') {
                format!("{}i", g.im)
            } else {
                format!("+{}i", g.im)
            };
            line.push_str(&format!(
                " (witness {}{im}, pi multiple {}, {} terms",
                g.re,
                self.pi_multiple.unwrap_or(0),
                self.terms_used.unwrap_or(0)
            ));
            if let Some(ms) = self.elapsed_ms {
                line.push_str(&format!(", {ms} ms"));
            }
            line.push(')');
        } else if let (Some(lhs), Some(rhs)) = (&self.lhs, &self.rhs) {
            line.push_str(&format!(
                " ({} terms, radius <= {})",
                self.terms_used.unwrap_or(0),
                self.radius.as_deref().unwrap_or("?")
            ));
            if let Some(ms) = self.elapsed_ms {
                line.push_str(&format!(" [{ms} ms]"));
            }
            line.push_str(&format!("\n  lhs = {lhs}\n  rhs = {rhs}"));
        }
        line
    }
}

/// Aggregate result of a finite sweep. Deterministic: no timing fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub id: String,
    pub m_range: Option<String>,
    pub t_range: Option<String>,
    pub checked: u64,
    pub verified: u64,
    pub falsified: u64,
    pub inconclusive: u64,
    pub first_counterexample: Option<ReportRow>,
}

impl SweepReport {
    pub fn all_verified(&self) -> bool {
        self.checked == self.verified
    }

    pub fn text(&self) -> String {
        let ranges = match (&self.m_range, &self.t_range) {
            (Some(m), Some(t)) => format!(" m={m} t={t}"),
            (Some(m), None) => format!(" m={m}"),
            (None, Some(t)) => format!(" t={t}"),
            (None, None) => String::new(),
        };
        let mut out = format!(
            "sweep {}{ranges}: {} checked, {} verified, {} falsified, {} inconclusive",
            self.id, self.checked, self.verified, self.falsified, self.inconclusive
        );
        if let Some(cx) = &self.first_counterexample {
            out.push_str(&format!("\nfirst counterexample: {}", cx.text_line()));
        }
        out
    }
}

/// Aggregate result of an algebraic family sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicReport {
    pub family: String,
    pub m_range: String,
    pub n_range: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<AlgebraicPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicPair {
    pub m: i64,
    pub n: i64,
}

impl AlgebraicReport {
    pub fn text(&self) -> String {
        let mut out = format!(
            "algebraic {} m={} n={}: {} checked, {} passed, {} failed",
            self.family, self.m_range, self.n_range, self.checked, self.passed, self.failed
        );
        if let Some(cx) = &self.first_counterexample {
            out.push_str(&format!("\nfirst counterexample: m={} n={}", cx.m, cx.n));
        }
        out
    }
}

/// Selftest summary: one section per suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub mode: String,
    pub sections: Vec<SelftestSection>,
    pub status: String,
    pub first_counterexample: Option<ReportRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestSection {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
}

impl SelftestReport {
    pub fn text(&self) -> String {
        let mut out = format!("selftest ({})", self.mode);
        for s in &self.sections {
            out.push_str(&format!(
                "\n  {:<28} {:>6} checked, {} failed",
                s.name, s.checked, s.failed
            ));
        }
        out.push_str(&format!("\nstatus: {}", self.status));
        if let Some(cx) = &self.first_counterexample {
            out.push_str(&format!("\nfirst counterexample: {}", cx.text_line()));
        }
        out
    }
}

/// Catalog listing entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListEntry {
    pub id: String,
    pub params: String,
    pub parity: String,
    pub kind: String,
    pub description: String,
}

impl ListEntry {
    pub fn from_info(info: &IdentityInfo) -> Self {
        use arcfib_core::catalog::{Arity, Kind};
        ListEntry {
            id: info.id.name(),
            params: match info.arity {
                Arity::TOnly => "t",
                Arity::MAndT => "m,t",
                Arity::MAndN => "m,n",
                Arity::Parameterless => "none",
                Arity::MOnly => "m",
            }
            .to_string(),
            parity: info.parity.label().to_string(),
            kind: match info.kind {
                Kind::Finite => "finite",
                Kind::Infinite => "infinite",
            }
            .to_string(),
            description: info.description.to_string(),
        }
    }
}
