//! JSON and CSV output for spectrum reports and criticality certificates.
//!
//! JSON output is one compact object per line. Field order follows the
//! struct definitions, so identical inputs give byte-identical text.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::coloring::{Color, Model};
use crate::critical::CriticalityCertificate;
use crate::signed::Signature;
use crate::spectrum::SpectrumReport;
use crate::verify::GraphVerification;

pub(crate) fn serialize_signature<S: Serializer>(signature: &Signature, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&signature.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Something that can be written as a JSON object or a CSV row.
pub trait Record: Serialize {
    fn csv_header() -> &'static str;
    fn csv_row(&self) -> String;
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

impl Record for SpectrumReport {
    fn csv_header() -> &'static str {
        "id,model,m,M,spectrum,interval_ok"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{},{},{},{}", self.graph, self.model, self.m, self.max, join(&self.spectrum), self.interval_ok)
    }
}

/// A certificate labelled with the instance it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub id: String,
    #[serde(flatten)]
    pub certificate: CriticalityCertificate,
    pub critical: bool,
}

impl CertificateRecord {
    pub fn new(id: impl Into<String>, certificate: CriticalityCertificate) -> Self {
        let critical = certificate.is_critical();
        CertificateRecord { id: id.into(), certificate, critical }
    }
}

impl Record for CertificateRecord {
    fn csv_header() -> &'static str {
        "id,model,k,per_vertex,critical"
    }

    fn csv_row(&self) -> String {
        let c = &self.certificate;
        format!("{},{},{},{},{}", self.id, c.model, c.k, join(&c.per_vertex), self.critical)
    }
}

/// Chromatic number of one signed graph with a witnessing colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiRecord {
    pub id: String,
    pub model: Model,
    pub chi: usize,
    pub coloring: Vec<Color>,
}

impl Record for ChiRecord {
    fn csv_header() -> &'static str {
        "id,model,chi,coloring"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.id, self.model, self.chi, join(&self.coloring))
    }
}

/// One switching-class representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub id: String,
    pub index: usize,
    #[serde(serialize_with = "serialize_signature")]
    pub signature: Signature,
}

impl Record for ClassRecord {
    fn csv_header() -> &'static str {
        "id,index,signature"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.id, self.index, self.signature)
    }
}

/// Vertex set of an extracted critical subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionRecord {
    pub id: String,
    pub model: Model,
    pub target: usize,
    pub vertices: Vec<usize>,
}

impl Record for ExtractionRecord {
    fn csv_header() -> &'static str {
        "id,model,target,vertices"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.id, self.model, self.target, join(&self.vertices))
    }
}

impl Record for GraphVerification {
    fn csv_header() -> &'static str {
        "id,classes,checks,violations"
    }

    fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.id, self.classes, self.evaluated.iter().sum::<usize>(), self.violations.len())
    }
}

pub fn emit_report<R: Record>(records: &[R], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("report types serialize"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(R::csv_header());
            out.push('\n');
            for r in records {
                writeln!(out, "{}", r.csv_row()).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spectrum::chromatic_spectrum;

    #[test]
    fn k4_cyclic_json() {
        let report = chromatic_spectrum(&Graph::complete(4), "C~", Model::Cyclic, 20).unwrap();
        let json = emit_report(std::slice::from_ref(&report), Format::Json);
        assert!(json.contains(r#""spectrum":[3,4],"m":3,"M":4,"interval_ok":true"#), "{json}");
        assert!(json.starts_with(r#"{"graph":"C~","model":"cyclic","classes":[{"signature":"++++++","chi":4}"#));
        assert_eq!(json, emit_report(&[report], Format::Json));
    }

    #[test]
    fn edgeless_and_csv() {
        let report = chromatic_spectrum(&Graph::empty(2), "A?", Model::Symmetric, 20).unwrap();
        assert!(emit_report(std::slice::from_ref(&report), Format::Json).contains(r#""spectrum":[1]"#));
        let csv = emit_report(&[report], Format::Csv);
        assert_eq!(csv, "id,model,m,M,spectrum,interval_ok\nA?,symmetric,1,1,1,true\n");
    }

    #[test]
    fn certificate_output() {
        let cert = CriticalityCertificate { model: Model::Cyclic, k: 3, per_vertex: vec![2, 2, 2] };
        let record = CertificateRecord::new("C3", cert);
        assert_eq!(
            emit_report(std::slice::from_ref(&record), Format::Json),
            "{\"id\":\"C3\",\"model\":\"cyclic\",\"k\":3,\"per_vertex\":[2,2,2],\"critical\":true}\n"
        );
        assert_eq!(emit_report(&[record], Format::Csv), "id,model,k,per_vertex,critical\nC3,cyclic,3,2;2;2,true\n");
    }

    #[test]
    fn negative_colours_in_csv() {
        let record = ChiRecord { id: "A_".into(), model: Model::Symmetric, chi: 2, coloring: vec![1, -1] };
        assert_eq!(emit_report(&[record], Format::Csv), "id,model,chi,coloring\nA_,symmetric,2,1;-1\n");
    }
}
