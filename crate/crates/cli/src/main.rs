use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sgspec::coloring::{chromatic_number, find_coloring, Model, Palette};
use sgspec::critical::{classify_small_critical, criticality_certificate, extract_critical_subgraph};
use sgspec::io::{
    emit_report, parse_corpus, CertificateRecord, ChiRecord, ClassRecord, CorpusEntry, ExtractionRecord, Format, Record,
};
use sgspec::signed::SignedGraph;
use sgspec::spectrum::{chromatic_spectrum, signature_class_representatives, DEFAULT_MAX_COTREE};
use sgspec::verify::{verify_graph, Check};

const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(name = "sgspec", version, about = "Chromatic numbers and spectra of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Colouring model
    #[arg(long, global = true, value_enum, default_value_t = ModelArg::Both)]
    model: ModelArg,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Worker threads (0 = one per core)
    #[arg(long, global = true, env = "SGSPEC_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Refuse graphs with more co-tree edges than this
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COTREE)]
    max_cotree: usize,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number of one signed graph (signed edge list)
    Chi { input: PathBuf },
    /// Chromatic spectrum of each graph (graph6 lines or an edge list)
    Spectrum { input: PathBuf },
    /// Criticality certificate of one signed graph; optionally extract a critical subgraph
    Critical {
        input: PathBuf,
        /// Extract an induced critical subgraph with this chromatic number
        #[arg(long)]
        extract: Option<usize>,
    },
    /// List one signature per switching class
    Classes { input: PathBuf },
    /// Run every consistency check over a corpus
    Verify { input: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Cyclic,
    Symmetric,
    Both,
}

impl ModelArg {
    fn models(self) -> Vec<Model> {
        match self {
            ModelArg::Cyclic => vec![Model::Cyclic],
            ModelArg::Symmetric => vec![Model::Symmetric],
            ModelArg::Both => Model::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

/// Text written to the output, and whether a theorem violation was seen.
struct Outcome {
    text: String,
    violation: bool,
}

fn read_input(path: &PathBuf) -> Result<Vec<CorpusEntry>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(parse_corpus(&text)?)
}

fn signed_entry(entries: Vec<CorpusEntry>) -> Result<(String, SignedGraph)> {
    let [entry] = <[CorpusEntry; 1]>::try_from(entries).map_err(|_| anyhow::anyhow!("expected exactly one graph"))?;
    let signature = entry.signature.ok_or_else(|| anyhow::anyhow!("expected a signed edge list"))?;
    Ok((entry.id, SignedGraph::new(entry.graph, signature)?))
}

fn emit<R: Record>(records: &[R], common: &Common) -> String {
    emit_report(records, common.format.into())
}

fn run_chi(input: &PathBuf, common: &Common) -> Result<Outcome> {
    let (id, sg) = signed_entry(read_input(input)?)?;
    let records: Vec<ChiRecord> = common
        .model
        .models()
        .into_iter()
        .map(|model| {
            let chi = chromatic_number(&sg, model);
            let coloring = match chi {
                0 => Vec::new(),
                k => find_coloring(&sg, &Palette::new(model, k).expect("palette in range")).unwrap().into_inner(),
            };
            ChiRecord { id: id.clone(), model, chi, coloring }
        })
        .collect();
    Ok(Outcome { text: emit(&records, common), violation: false })
}

fn run_spectrum(input: &PathBuf, common: &Common) -> Result<Outcome> {
    let entries = read_input(input)?;
    let models = common.model.models();
    let mut reports = Vec::new();
    for entry in &entries {
        for &model in &models {
            reports.push(
                chromatic_spectrum(&entry.graph, entry.id.clone(), model, common.max_cotree)
                    .with_context(|| format!("line {}", entry.line))?,
            );
        }
    }
    let violation = reports.iter().any(|r| !r.interval_ok);
    Ok(Outcome { text: emit(&reports, common), violation })
}

fn run_critical(input: &PathBuf, extract: Option<usize>, common: &Common) -> Result<Outcome> {
    let (id, sg) = signed_entry(read_input(input)?)?;
    if sg.vertex_count() == 0 {
        bail!("graph has no vertices");
    }
    let mut text = String::new();
    let mut violation = false;
    let mut certificates = Vec::new();
    for model in common.model.models() {
        let cert = criticality_certificate(&sg, model)?;
        violation |= !cert.drops_by_at_most_one();
        if cert.is_critical() && cert.k <= 3 {
            if let Err(e) = classify_small_critical(&sg, model) {
                eprintln!("{model}: {e}");
                violation = true;
            }
        }
        certificates.push(CertificateRecord::new(id.clone(), cert));
    }
    text.push_str(&emit(&certificates, common));
    if let Some(target) = extract {
        let records = common
            .model
            .models()
            .into_iter()
            .map(|model| {
                let vertices = extract_critical_subgraph(&sg, target, model)?;
                Ok(ExtractionRecord { id: id.clone(), model, target, vertices })
            })
            .collect::<Result<Vec<_>>>()?;
        text.push_str(&emit(&records, common));
    }
    Ok(Outcome { text, violation })
}

fn run_classes(input: &PathBuf, common: &Common) -> Result<Outcome> {
    let mut records = Vec::new();
    for entry in read_input(input)? {
        let reps = signature_class_representatives(&entry.graph, common.max_cotree)
            .with_context(|| format!("line {}", entry.line))?;
        records.extend(reps.into_iter().enumerate().map(|(index, signature)| ClassRecord {
            id: entry.id.clone(),
            index,
            signature,
        }));
    }
    Ok(Outcome { text: emit(&records, common), violation: false })
}

fn run_verify(input: &PathBuf, common: &Common) -> Result<Outcome> {
    let entries = read_input(input)?;
    let mut results = Vec::new();
    for entry in &entries {
        results.push(
            verify_graph(&entry.graph, &entry.id, common.max_cotree).with_context(|| format!("line {}", entry.line))?,
        );
    }
    let mut totals = [0usize; Check::ALL.len()];
    let mut violations = 0;
    for r in &results {
        for (t, e) in totals.iter_mut().zip(&r.evaluated) {
            *t += e;
        }
        for v in &r.violations {
            eprintln!("violation [{}] {}", v.check, v.detail);
            violations += 1;
        }
    }
    for (check, total) in Check::ALL.iter().zip(totals) {
        eprintln!("{check}: {total} checks");
    }
    eprintln!("{} graphs, {violations} violations", results.len());
    Ok(Outcome { text: emit(&results, common), violation: violations > 0 })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let common = &cli.common;
    match &cli.command {
        Command::Chi { input } => run_chi(input, common),
        Command::Spectrum { input } => run_spectrum(input, common),
        Command::Critical { input, extract } => run_critical(input, *extract, common),
        Command::Classes { input } => run_classes(input, common),
        Command::Verify { input } => run_verify(input, common),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.common.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match pool.install(|| run(&cli)) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match &cli.common.output {
        Some(path) => fs::write(path, &outcome.text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(outcome.text.as_bytes()).map_err(Into::into),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE);
    }
    if outcome.violation {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}
