//! Rendering of results as markdown, CSV or JSON, and the reproduction of
//! the table of tangentially degenerate orbits.

mod table1;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cayley::{format_coeffs, AppendixReport};
use crate::error::{Error, Result};
use crate::ferus::{FerusCertificate, ScanRow};
use crate::orbits::{Eigen, OrbitReport};
use crate::pairdb::PairDatum;

pub use table1::{
    check_table1, parse_rows, table1_numeric, table1_symbolic, Form, Table1Check, Table1Grid,
    Table1Row, EXPECTED_TABLE1,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Md,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::malformed(s, "expected md, csv or json")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Md => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// A record with a fixed set of columns.
pub trait Tabular: Serialize {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

pub fn render<T: Tabular>(rows: &[T], format: Format) -> Result<String> {
    match format {
        Format::Md => Ok(markdown(&T::headers(), rows.iter().map(T::cells))),
        Format::Csv => csv_text(&T::headers(), rows.iter().map(T::cells)),
        Format::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
    }
}

/// Renders a single value; JSON emits the object itself rather than a list.
pub fn render_one<T: Tabular>(row: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(row)? + "\n"),
        _ => render(std::slice::from_ref(row), format),
    }
}

/// A markdown table. Pipes inside cells are escaped as `\|`.
pub fn markdown(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let line = |cells: &[String]| {
        let cells: Vec<String> = cells.iter().map(|c| c.replace('|', "\\|")).collect();
        format!("| {} |\n", cells.join(" | "))
    };
    let mut out = line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    out.push_str(&line(&vec!["---".to_string(); headers.len()]));
    for row in rows {
        out.push_str(&line(&row));
    }
    out
}

pub fn csv_text(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl Tabular for OrbitReport {
    fn headers() -> Vec<&'static str> {
        vec![
            "pair",
            "H",
            "degenerate",
            "l",
            "r",
            "nullity",
            "rule",
            "root_class",
            "parallel_root",
            "conditions_ab",
            "nullity_bound",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.pair.clone(),
            self.h.to_string(),
            self.degenerate.to_string(),
            self.l.to_string(),
            self.r.to_string(),
            self.nullity.to_string(),
            self.rule.to_string(),
            opt(&self.root_class),
            opt(&self.parallel_root),
            opt(&self.conditions_ab),
            self.nullity_bound.to_string(),
        ]
    }
}

impl Tabular for Eigen {
    fn headers() -> Vec<&'static str> {
        vec!["eigenvalue", "multiplicity"]
    }

    fn cells(&self) -> Vec<String> {
        vec![self.value.to_string(), self.multiplicity.to_string()]
    }
}

impl Tabular for FerusCertificate {
    fn headers() -> Vec<&'static str> {
        vec!["l", "F", "witness_k", "minimality_checked_up_to"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.l.to_string(),
            self.f.to_string(),
            self.witness_k.to_string(),
            self.minimality_checked_up_to.to_string(),
        ]
    }
}

impl Tabular for ScanRow {
    fn headers() -> Vec<&'static str> {
        vec![
            "pair",
            "p",
            "n",
            "root_class",
            "degenerate",
            "l",
            "r",
            "F",
            "equality",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.pair.clone(),
            opt(&self.params.p),
            opt(&self.params.n),
            self.root_class.to_string(),
            self.degenerate.to_string(),
            self.l.to_string(),
            self.r.to_string(),
            self.f.to_string(),
            self.equality.to_string(),
        ]
    }
}

/// Flat view of a pair for listings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct PairSummary {
    pub key: String,
    #[serde(rename = "type")]
    pub rstype: String,
    pub rank: String,
    pub params: String,
    pub mult: String,
    pub flags: String,
}

impl From<&PairDatum> for PairSummary {
    fn from(d: &PairDatum) -> Self {
        PairSummary {
            key: d.key().to_string(),
            rstype: d.family().to_string(),
            rank: d.rank().to_string(),
            params: d.param_spec().to_string(),
            mult: d.mult().to_string(),
            flags: d
                .flags()
                .iter()
                .map(|f| f.as_str())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

impl Tabular for PairSummary {
    fn headers() -> Vec<&'static str> {
        vec!["key", "type", "rank", "params", "mult", "flags"]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.key.clone(),
            self.rstype.clone(),
            self.rank.clone(),
            self.params.clone(),
            self.mult.clone(),
            self.flags.clone(),
        ]
    }
}

/// Markdown or CSV summary of an appendix run: one line per projected
/// root class, then the verification verdicts.
pub fn render_appendix(rep: &AppendixReport, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(rep)? + "\n");
    }
    let d = &rep.datum;
    let mut rows: Vec<Vec<String>> = vec![
        vec!["algebra".into(), d.algebra.to_string()],
        vec!["highest root".into(), d.delta.to_string()],
        vec!["roots with ratio 1/2".into(), d.m_plus.len().to_string()],
    ];
    for (i, g) in d.gammas.iter().enumerate() {
        rows.push(vec![format!("gamma_{}", i + 1), g.to_string()]);
    }
    rows.push(vec!["projected type".into(), d.restricted_type.to_string()]);
    for (class, m) in &rep.class_multiplicities {
        rows.push(vec![format!("multiplicity ({class})"), m.to_string()]);
    }
    rows.push(vec![
        "long-root orbit dimension".into(),
        rep.long_orbit_dimension.to_string(),
    ]);
    if let Some(ids) = &rep.identities {
        rows.push(vec![
            format!("preimage of {}", format_coeffs(&ids.lambda_projection)),
            ids.lambda_preimage.len().to_string(),
        ]);
        rows.push(vec![
            format!("preimage of {}", format_coeffs(&ids.nu_projection)),
            ids.nu_preimage.len().to_string(),
        ]);
        for (i, s) in ids.steps.iter().enumerate() {
            rows.push(vec![
                format!("root-set identity {}", i + 1),
                if s.holds { "holds" } else { "FAILS" }.into(),
            ]);
        }
    }
    let p = &rep.properties;
    for (name, ok) in [
        (
            "pairwise strongly orthogonal",
            p.pairwise_strongly_orthogonal,
        ),
        ("gammas have ratio 1/2", p.gammas_in_m_plus),
        ("equal gamma lengths", p.equal_gamma_lengths),
        ("half sums are the highest root", p.half_sums_are_highest),
        ("projection norm inequality", p.norm_inequality),
        ("maximal strongly orthogonal set", p.maximal),
        ("quaternionic dimension", p.quaternionic_dimension),
        ("multiplicity total", p.multiplicity_total),
    ] {
        rows.push(vec![name.into(), ok.to_string()]);
    }
    rows.push(vec!["verified".into(), rep.verified.to_string()]);
    let headers = ["item", "value"];
    match format {
        Format::Md => Ok(markdown(&headers, rows.into_iter())),
        _ => csv_text(&headers, rows.into_iter()),
    }
}
