use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{from_graph6, Graph};

use super::claims::VerificationRecord;
use super::survey::{render_ratio, SurveyRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl ReportFormat {
    /// Picks the format from a file extension, defaulting to CSV.
    pub fn from_path(path: &Path) -> ReportFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => ReportFormat::Json,
            _ => ReportFormat::Csv,
        }
    }
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(Error::InvalidParameter(format!(
                "unknown report format `{s}`"
            ))),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        })
    }
}

/// A record type with a fixed CSV layout.
pub trait Report: Serialize {
    const HEADER: &'static [&'static str];
    fn row(&self) -> Vec<String>;
}

fn cell<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(T::to_string).unwrap_or_default()
}

impl Report for VerificationRecord {
    const HEADER: &'static [&'static str] = &[
        "claim",
        "relation",
        "graph6",
        "n",
        "k",
        "family",
        "value",
        "bound",
        "holds",
        "special",
        "runtime_ms",
        "error",
    ];

    fn row(&self) -> Vec<String> {
        vec![
            self.claim.to_string(),
            self.relation.to_string(),
            self.graph6.clone(),
            self.n.to_string(),
            cell(&self.k),
            self.family.clone(),
            cell(&self.value),
            cell(&self.bound),
            self.holds.to_string(),
            self.special.to_string(),
            cell(&self.runtime_ms),
            cell(&self.error),
        ]
    }
}

impl Report for SurveyRecord {
    const HEADER: &'static [&'static str] = &[
        "family",
        "n",
        "graphs",
        "max_iota",
        "ratio",
        "argmax",
        "reference",
        "exceeds_reference",
        "errors",
    ];

    fn row(&self) -> Vec<String> {
        vec![
            self.family.clone(),
            self.n.to_string(),
            self.graphs.to_string(),
            self.max_iota.to_string(),
            render_ratio(&self.ratio),
            self.argmax.join(" "),
            self.reference
                .as_ref()
                .map(render_ratio)
                .unwrap_or_default(),
            cell(&self.exceeds_reference),
            self.errors.to_string(),
        ]
    }
}

/// CSV text with a header line, even when there are no records.
pub fn render_csv<R: Report>(records: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let wrap = |source| Error::Csv {
        path: "<memory>".into(),
        source,
    };
    w.write_record(R::HEADER).map_err(wrap)?;
    for r in records {
        w.write_record(r.row()).map_err(wrap)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

pub fn render_json<R: Report>(records: &[R]) -> Result<String> {
    Ok(serde_json::to_string_pretty(records)? + "\n")
}

pub fn report_write<R: Report>(records: &[R], format: ReportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ReportFormat::Csv => render_csv(records)?,
        ReportFormat::Json => render_json(records)?,
    };
    write_text(path, &text)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A graph given either as a graph6 string or as a path to a file whose
/// first non-empty line is one.
pub fn read_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = read_text(path)?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::InvalidInput(format!("{} holds no graph", path.display())))?;
        return from_graph6(line);
    }
    from_graph6(arg.trim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::claims::{ClaimId, Relation};

    fn record(claim: ClaimId) -> VerificationRecord {
        VerificationRecord {
            claim,
            relation: Relation::Le,
            graph6: "Bw".into(),
            n: 3,
            k: Some(3),
            family: "union(star:3,regmin:2)".into(),
            value: Some(1),
            bound: Some(0),
            holds: true,
            special: true,
            runtime_ms: None,
            error: None,
        }
    }

    #[test]
    fn empty_csv_is_header_only() {
        let text = render_csv::<VerificationRecord>(&[]).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("claim,relation,graph6,"));
    }

    #[test]
    fn one_row() {
        let text = render_csv(&[record(ClaimId::T4)]).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(
            lines[1],
            "T4,le,Bw,3,3,\"union(star:3,regmin:2)\",1,0,true,true,,"
        );
        let json: serde_json::Value =
            serde_json::from_str(&render_json(&[record(ClaimId::T4)]).unwrap()).unwrap();
        assert_eq!(json[0]["claim"], "T4");
    }

    #[test]
    fn format_from_path() {
        assert_eq!(
            ReportFormat::from_path(Path::new("a/b.JSON")),
            ReportFormat::Json
        );
        assert_eq!(
            ReportFormat::from_path(Path::new("out.csv")),
            ReportFormat::Csv
        );
        assert!("xml".parse::<ReportFormat>().is_err());
    }

    #[test]
    fn io_errors_carry_path() {
        let err = report_write::<VerificationRecord>(
            &[],
            ReportFormat::Csv,
            Path::new("/nonexistent/x.csv"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("/nonexistent/x.csv"));
    }
}
