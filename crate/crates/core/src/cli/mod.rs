//! The `hgx` command line: file format, commands, and reports.
//!
//! Exit codes: `0` every verdict positive, `1` a checked property fails,
//! `2` the input is broken.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::Value;

use crate::bundle::{
    check_bundle, freeness_check, galois_check, peter_weyl_decompose, translation_map_pw, translation_map_solve,
    verify_prop1, Bundle, TranslationTable,
};
use crate::corpus::{self, builtin_irreps, recognize_group};
use crate::differential::cross_check_galois;
use crate::error::{Error, Result};
use crate::hopf::{check_corep, check_hopf, Corep};

pub use format::{emit, parse, parse_with, CorepList, Document};

/// Environment variable overriding the worker thread count. Results do not depend on it.
pub const THREADS_ENV: &str = "HGX_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "hgx",
    version,
    about = "Exact Hopf-Galois decisions for finite-dimensional bundles"
)]
struct Cli {
    /// Also write the report as a JSON object to this path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of every object in the file.
    Validate { file: PathBuf },
    /// Freeness and bijectivity of the canonical map.
    Galois {
        file: PathBuf,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Compute the translation map.
    Translate {
        file: PathBuf,
        /// Corepresentation list; defaults to one in the file, then to the built-in list.
        #[arg(long)]
        irreps: Option<PathBuf>,
        #[arg(long, value_enum)]
        method: Method,
        /// Check that the translation map and the canonical map are mutually inverse.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Peter-Weyl decomposition of the bundle algebra.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        irreps: Option<PathBuf>,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Universal calculus, horizontal forms and the cross-check against the Galois verdict.
    Differential {
        file: PathBuf,
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Build a corpus example and emit it in the file format.
    Example {
        /// One of the registry names, or `list`.
        name: String,
        /// Destination file; standard output when absent.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Pw,
    Solve,
}

/// Ordered key-value report.
#[derive(Clone, Debug, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
    /// Extra text emitted after the key-value lines, e.g. an emitted file.
    pub body: Option<String>,
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.entries.push((key.into(), v));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    /// `key: value` lines; strings are printed bare.
    pub fn render(&self, with_timing: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            match v {
                Value::String(s) => {
                    let _ = writeln!(out, "{k}: {s}");
                }
                other => {
                    let _ = writeln!(out, "{k}: {other}");
                }
            }
        }
        if with_timing {
            if let Some(ms) = self.elapsed_ms {
                let _ = writeln!(out, "elapsed_ms: {ms}");
            }
        }
        out
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (k, v) in &self.entries {
            map.serialize_entry(k, v)?;
        }
        if let Some(ms) = self.elapsed_ms {
            map.serialize_entry("elapsed_ms", &ms)?;
        }
        map.end()
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Report,
}

/// Exit code for an error: broken input is `2`, a mathematical verdict is `1`.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) | Error::Parse { .. } | Error::Scalar(_) | Error::Io(_) | Error::Unsupported(_) => 2,
        Error::NotPrincipal { .. }
        | Error::NotGalois { .. }
        | Error::IncompleteIrreps(_)
        | Error::AntipodeNotInvolutive
        | Error::Construction(_)
        | Error::Invariant(_) => 1,
    }
}

/// Parses `args` (program name first) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let report = Report {
                body: Some(e.to_string()),
                ..Report::default()
            };
            return Outcome { code, report };
        }
    };
    let start = Instant::now();
    let mut report = Report::default();
    let code = match execute(&cli.command, &mut report) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            report.push("error", e.to_string());
            exit_code(&e)
        }
    };
    report.elapsed_ms = Some(start.elapsed().as_millis());
    if let Some(path) = &cli.out {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        if let Err(e) = std::fs::write(path, json + "\n") {
            report.push("error", format!("cannot write {}: {e}", path.display()));
            return Outcome { code: 2, report };
        }
    }
    Outcome { code, report }
}

fn load(path: &Path, context: Option<&Document>) -> Result<Document> {
    let text = std::fs::read_to_string(path)?;
    parse_with(&text, context)
}

/// Runs the bundle axiom suite; a failure is a verdict.
fn checked_bundle<'a>(doc: &'a Document, name: Option<&str>, r: &mut Report) -> Result<Option<&'a Bundle>> {
    let p = doc.bundle(name)?;
    r.push("bundle", p.name());
    r.push("hopf", p.hopf().name());
    let hr = check_hopf(p.hopf());
    let br = check_bundle(p);
    if !hr.ok || !br.ok {
        r.push("axioms_ok", false);
        let all: Vec<String> = hr
            .violations
            .iter()
            .chain(&br.violations)
            .map(|v| v.to_string())
            .collect();
        r.push("violations", all);
        return Ok(None);
    }
    r.push("axioms_ok", true);
    Ok(Some(p))
}

/// Irreducibles for `p`: the `--irreps` file, then a list in the main file, then the built-in list.
fn irreps_for(p: &Bundle, doc: &Document, file: Option<&Path>, r: &mut Report) -> Result<Vec<Corep>> {
    let hopf = p.hopf().name();
    let pick = |d: &Document| d.coreps_over(hopf).map(|l| l.coreps.clone());
    if let Some(path) = file {
        let extra = load(path, Some(doc))?;
        r.push("irreps_source", path.display().to_string());
        return pick(&extra).ok_or_else(|| Error::Malformed(format!("{} has no coreps over {hopf}", path.display())));
    }
    if let Some(list) = pick(doc) {
        r.push("irreps_source", "file");
        return Ok(list);
    }
    let g = recognize_group(p.hopf())
        .ok_or_else(|| Error::Unsupported(format!("no irreducibles given and {hopf} is not a built-in group")))?;
    r.push("irreps_source", format!("builtin {g}"));
    builtin_irreps(g, p.hopf())
}

fn execute(cmd: &Command, r: &mut Report) -> Result<bool> {
    match cmd {
        Command::Validate { file } => {
            let doc = load(file, None)?;
            let mut ok = true;
            for h in &doc.hopfs {
                let rep = check_hopf(h);
                let key = format!("hopf.{}", h.name());
                r.push(format!("{key}.ok"), rep.ok);
                r.push(format!("{key}.s_squared_is_id"), rep.s_squared_is_id);
                if !rep.violations.is_empty() {
                    let all: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
                    r.push(format!("{key}.violations"), all);
                }
                ok &= rep.ok;
            }
            for p in &doc.bundles {
                let rep = check_bundle(p);
                let key = format!("bundle.{}", p.name());
                r.push(format!("{key}.ok"), rep.ok);
                if !rep.violations.is_empty() {
                    let all: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
                    r.push(format!("{key}.violations"), all);
                }
                ok &= rep.ok;
            }
            for (_, list) in &doc.coreps {
                for u in &list.coreps {
                    let good = check_corep(u);
                    r.push(format!("corep.{}.{}.ok", list.name, u.name()), good);
                    ok &= good;
                }
            }
            r.push("ok", ok);
            Ok(ok)
        }
        Command::Galois { file, bundle } => {
            let doc = load(file, None)?;
            let Some(p) = checked_bundle(&doc, bundle.as_deref(), r)? else {
                return Ok(false);
            };
            r.push("dim_bundle", p.dim());
            r.push("dim_hopf", p.hopf().dim());
            r.push("dim_base", p.base().dim());
            r.push("dim_tensor_over_base", p.tensor_over_base().dim());
            let f = freeness_check(p);
            r.push("freeness.surjective", f.surjective);
            r.push("freeness.rank", f.rank);
            r.push("freeness.target_dim", f.target_dim);
            r.push("freeness.cokernel_dim", f.cokernel_dim);
            let g = galois_check(p);
            r.push("galois.bijective", g.bijective);
            r.push("galois.rank", g.rank);
            r.push("galois.source_dim", g.source_dim);
            r.push("galois.target_dim", g.target_dim);
            r.push("galois.kernel_dim", g.kernel_dim);
            r.push("galois.cokernel_dim", g.cokernel_dim);
            Ok(g.bijective)
        }
        Command::Translate {
            file,
            irreps,
            method,
            verify,
            bundle,
        } => {
            let doc = load(file, None)?;
            let Some(p) = checked_bundle(&doc, bundle.as_deref(), r)? else {
                return Ok(false);
            };
            let table = match method {
                Method::Pw => {
                    if !p.hopf().s_squared_is_id() {
                        return Err(Error::AntipodeNotInvolutive);
                    }
                    let list = irreps_for(p, &doc, irreps.as_deref(), r)?;
                    translation_map_pw(p, &list)?
                }
                Method::Solve => translation_map_solve(p)?,
            };
            r.push("method", table.method().name());
            push_table(p, &table, doc.conductor, r);
            if *verify {
                let v = verify_prop1(p, &table);
                r.push("verify.x_tau_is_id", v.x_tau_is_id);
                r.push("verify.tau_x_is_id", v.tau_x_is_id);
                if let Some(w) = v.x_tau_witness {
                    r.push("verify.x_tau_witness", w);
                }
                if let Some(w) = v.tau_x_witness {
                    r.push("verify.tau_x_witness", w);
                }
                if let Some(inv) = &v.invariance {
                    r.push("verify.invariance_checked", inv.checked);
                    r.push("verify.invariance_failures", inv.failures.len());
                }
                r.push("verify.ok", v.ok());
                return Ok(v.ok());
            }
            Ok(true)
        }
        Command::Decompose { file, irreps, bundle } => {
            let doc = load(file, None)?;
            let Some(p) = checked_bundle(&doc, bundle.as_deref(), r)? else {
                return Ok(false);
            };
            let list = irreps_for(p, &doc, irreps.as_deref(), r)?;
            let pw = peter_weyl_decompose(p, &list)?;
            for c in pw.summary() {
                r.push(format!("component.{}.multiplicity", c.corep), c.multiplicity);
                r.push(format!("component.{}.carrier_dim", c.corep), c.carrier_dim);
            }
            r.push("total_dim", pw.total_dim);
            r.push("rank", pw.rank);
            r.push("bundle_dim", pw.bundle_dim);
            r.push("injective", pw.injective);
            r.push("surjective", pw.surjective);
            r.push("complete", pw.complete);
            Ok(pw.complete)
        }
        Command::Differential { file, bundle } => {
            let doc = load(file, None)?;
            let Some(p) = checked_bundle(&doc, bundle.as_deref(), r)? else {
                return Ok(false);
            };
            let x = cross_check_galois(p)?;
            r.push("omega1_dim", x.exactness.omega1_dim);
            r.push("vertical_dim", x.exactness.vertical_dim);
            r.push("vertical_cokernel_dim", x.bm_md.vertical_cokernel_dim);
            r.push("hor1_dim", x.bm_md.hor1_dim);
            r.push("omega_hor1_dim", x.bm_md.omega_hor1_dim);
            r.push("gap_dim", x.bm_md.gap_dim);
            r.push("subspaces_equal", x.bm_md.subspaces_equal);
            r.push("bm_md.holds", x.bm_md.holds);
            r.push("exactness_law.holds", x.exactness.holds);
            r.push("galois.bijective", x.galois.bijective);
            r.push("consistent", x.consistent);
            if !x.consistent {
                r.push(
                    "error",
                    "engine defect: Galois verdict and horizontality criterion disagree",
                );
            }
            Ok(x.consistent && x.bm_md.holds)
        }
        Command::Example { name, emit: path } => {
            if name == "list" {
                r.push("examples", corpus::EXAMPLES);
                return Ok(true);
            }
            let doc = example_document(name)?;
            let b = &doc.bundles[0];
            let text = emit(&doc);
            match path {
                Some(path) => {
                    std::fs::write(path, &text)?;
                    r.push("example", b.name());
                    r.push("dim_bundle", b.dim());
                    r.push("dim_hopf", b.hopf().dim());
                    r.push("emitted", path.display().to_string());
                }
                // standard output carries the document alone so it can be redirected to a file
                None => r.body = Some(text),
            }
            Ok(true)
        }
    }
}

fn push_table(p: &Bundle, t: &TranslationTable, conductor: u32, r: &mut Report) {
    let labels = p.labels();
    let hopf_labels = p.hopf().labels();
    let width = t.values().iter().flatten().fold(conductor.max(1), |acc, s| {
        crate::exactlin::scalar::lcm_conductor(acc, s.conductor())
    });
    for (h, terms) in t.triples(p).into_iter().enumerate() {
        let text = if terms.is_empty() {
            "0".to_string()
        } else {
            terms
                .iter()
                .map(|(i, j, s)| format!("({}) {}|{}", s.format_in(width), labels[*i], labels[*j]))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        r.push(format!("tau.{}", hopf_labels[h]), text);
    }
}

/// Applies the thread-count override, if set. Call once at startup.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .parse()
            .map_err(|_| Error::Malformed(format!("{THREADS_ENV}={v:?} is not a thread count")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Malformed(format!("{THREADS_ENV}: {e}")))?;
    }
    Ok(())
}

/// A corpus example as a document, with its built-in irreducibles when it has them.
pub fn example_document(name: &str) -> Result<Document> {
    let e = corpus::example(name)?;
    let mut doc = Document {
        conductor: 1,
        hopfs: vec![Arc::clone(e.bundle.hopf())],
        bundles: vec![e.bundle.clone()],
        coreps: Vec::new(),
    };
    if let Some(irreps) = e.irreps {
        doc.coreps.push((
            e.bundle.hopf().name().to_string(),
            CorepList {
                name: "irreps".into(),
                coreps: irreps,
            },
        ));
    }
    Ok(doc)
}
