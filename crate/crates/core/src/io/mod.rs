//! Text formats: graph6 corpora, signed edge lists and report output.

pub mod corpus;
pub mod edgelist;
pub mod graph6;
pub mod report;

pub use corpus::{parse_corpus, CorpusEntry, CorpusError};
pub use edgelist::{emit_signed_edgelist, parse_signed_edgelist, EdgeListError};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use report::{emit_report, CertificateRecord, ChiRecord, ClassRecord, ExtractionRecord, Format, Record};
