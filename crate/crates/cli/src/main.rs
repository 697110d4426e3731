use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{ArgGroup, Parser, Subcommand};
use finspace::enumerate::{core_shapes, enumerate_shard, merge_shards};
use finspace::grouppres::DEFAULT_STEP_BUDGET;
use finspace::poset::{parse_poset, to_dot, to_json, to_text};
use finspace::{
    classify_poset, fixtures, homology, min_model_search, order_complex, presentation,
    tietze_simplify, verify_paper, ClassificationRecord, Poset, SimplificationStatus,
};
use rayon::prelude::*;
use serde_json::json;

const WORKERS_VAR: &str = "FINSPACE_WORKERS";

#[derive(Parser)]
#[command(
    name = "finspace",
    version,
    about = "Finite T0-spaces, their cores and homotopy types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a poset: sizes, levels, roles and beat points.
    Show { file: String },
    /// Print the core obtained by removing beat points.
    Core {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the opposite order.
    Dual {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two posets are isomorphic.
    Iso { a: String, b: String },
    /// Integral homology of the order complex, as JSON.
    Homology { file: String },
    /// Edge-path group presentation and its simplification.
    Pi1 {
        file: String,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify one poset, or every core of a given size and height.
    Classify {
        file: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        height: Option<usize>,
    },
    /// Enumerate and classify all cores of a given size and height.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        height: usize,
        /// Write JSON lines here instead of standard output.
        #[arg(long)]
        jsonl: Option<String>,
    },
    /// Smallest cores of a given wedge type.
    MinModel {
        #[arg(long)]
        circles: usize,
        #[arg(long)]
        spheres: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Check the built-in claims against computation.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Convert a poset file to DOT or JSON.
    #[command(group(ArgGroup::new("format").required(true).args(["dot", "json"])))]
    Export {
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Data(String),
    Check,
}

type Outcome = Result<(), Failure>;

/// Reads a poset from a path, falling back to a built-in fixture id.
fn load(arg: &str) -> Result<Poset, Failure> {
    let text = if Path::new(arg).exists() {
        fs::read_to_string(arg).map_err(|e| Failure::Data(format!("{arg}: {e}")))?
    } else if let Some(f) = fixtures::get(arg) {
        f.source.to_owned()
    } else {
        return Err(Failure::Data(format!("{arg}: no such file or fixture")));
    };
    parse_poset(&text).map_err(|e| Failure::Data(format!("{arg}: {e}")))
}

fn emit(text: &str, output: Option<&str>) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Data(format!("{path}: {e}"))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Data(e.to_string()))
        }
    }
}

fn format_poset(p: &Poset, json: bool) -> String {
    if json {
        let mut s = to_json(p);
        s.push('\n');
        s
    } else {
        to_text(p)
    }
}

fn names(p: &Poset, set: finspace::ElementSet) -> String {
    let v: Vec<&str> = set.iter().map(|x| p.label(x)).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn show(p: &Poset) -> String {
    let mut s = String::new();
    let roles = p.role_partition();
    s += &format!("points      {}\n", p.len());
    s += &format!("height      {}\n", p.height());
    s += &format!("connected   {}\n", p.is_connected());
    s += &format!("covers      {}\n", p.covers().pairs.len());
    for (h, level) in p.levels().iter().enumerate().rev() {
        s += &format!("level {h:<5} {}\n", names(p, *level));
    }
    s += &format!("maximal     {}\n", names(p, roles.maximal));
    s += &format!("minimal     {}\n", names(p, roles.minimal));
    if roles.has_isolated() {
        s += &format!("isolated    {}\n", names(p, roles.isolated));
    }
    s += &format!("beat points {}\n", names(p, p.beat_points()));
    let core = p.core();
    s += &format!("core size   {}\n", core.len());
    s += &format!("homogeneous {}\n", p.is_homogeneous());
    s += &format!("code        {}\n", p.canonical_code());
    s
}

fn pi1(p: &Poset, basepoint: usize, json: bool) -> Outcome {
    let k = order_complex(p);
    let g = presentation(&k, basepoint).map_err(|e| Failure::Data(e.to_string()))?;
    let status = tietze_simplify(&g, DEFAULT_STEP_BUDGET);
    let text = if json {
        let (kind, rank) = match &status {
            SimplificationStatus::FreeOfRank(r) => ("free", Some(*r)),
            SimplificationStatus::Trivial => ("trivial", Some(0)),
            SimplificationStatus::Inconclusive(_) => ("inconclusive", None),
        };
        let mut s = serde_json::to_string(&json!({
            "basepoint": p.label(basepoint),
            "generators": g.generators,
            "relators": g.relators,
            "status": kind,
            "free_rank": rank,
            "abelianization_rank": g.abelianization_rank(),
        }))
        .expect("JSON");
        s.push('\n');
        s
    } else {
        format!("presentation {g}\nsimplified   {status}\n")
    };
    emit(&text, None)
}

/// Enumerates shard by shard, reporting progress on standard error.
fn enumerate_records(n: usize, height: usize) -> Result<Vec<ClassificationRecord>, Failure> {
    let shapes = core_shapes(n, height).map_err(|e| Failure::Usage(e.to_string()))?;
    let total = shapes.len();
    let done = AtomicUsize::new(0);
    let shards: Vec<_> = shapes
        .into_par_iter()
        .map(|shape| {
            let shard = enumerate_shard(shape);
            let k = done.fetch_add(1, Ordering::SeqCst) + 1;
            eprintln!(
                "shard {k}/{total} ({},{},{}): {} cores",
                shape.m2,
                shape.m1,
                shape.m0,
                shard.len()
            );
            shard
        })
        .collect();
    let cores = merge_shards(shards);
    eprintln!("classifying {} cores", cores.len());
    let records: Vec<ClassificationRecord> = cores.par_iter().map(classify_poset).collect();
    eprintln!("done: {} records", records.len());
    Ok(records)
}

fn counts(records: &[ClassificationRecord]) -> std::collections::BTreeMap<String, usize> {
    let mut m = std::collections::BTreeMap::new();
    for r in records {
        *m.entry(r.label.key()).or_insert(0) += 1;
    }
    m
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Show { file } => emit(&show(&load(&file)?), None),
        Command::Core { file, json } => emit(&format_poset(&load(&file)?.core(), json), None),
        Command::Dual { file, json } => emit(&format_poset(&load(&file)?.dual(), json), None),
        Command::Iso { a, b } => {
            let iso = load(&a)?.is_isomorphic(&load(&b)?);
            emit(
                if iso {
                    "isomorphic\n"
                } else {
                    "not isomorphic\n"
                },
                None,
            )
        }
        Command::Homology { file } => {
            let h = homology(&order_complex(&load(&file)?));
            emit(&format!("{}\n", h.to_json()), None)
        }
        Command::Pi1 {
            file,
            basepoint,
            json,
        } => {
            let p = load(&file)?;
            if basepoint >= p.len() {
                return Err(Failure::Usage(format!(
                    "basepoint {basepoint} out of range"
                )));
            }
            pi1(&p, basepoint, json)
        }
        Command::Classify { file, n, height } => match (file, n, height) {
            (Some(file), None, None) => {
                let r = classify_poset(&load(&file)?);
                emit(&format!("{}\n", r.to_json_line()), None)
            }
            (None, Some(n), Some(height)) => {
                let records = enumerate_records(n, height)?;
                let summary = json!({
                    "n": n,
                    "height": height,
                    "filters": ["connected", "beat_point_free"],
                    "total": records.len(),
                    "counts": counts(&records),
                });
                emit(
                    &format!(
                        "{}\n",
                        serde_json::to_string_pretty(&summary).expect("JSON")
                    ),
                    None,
                )
            }
            _ => Err(Failure::Usage(
                "classify takes a file, or both --n and --height".into(),
            )),
        },
        Command::Enumerate { n, height, jsonl } => {
            let records = enumerate_records(n, height)?;
            let mut text = String::new();
            for r in &records {
                text += &r.to_json_line();
                text.push('\n');
            }
            for (key, c) in counts(&records) {
                eprintln!("{key:<14} {c}");
            }
            emit(&text, jsonl.as_deref())
        }
        Command::MinModel {
            circles,
            spheres,
            max_n,
        } => {
            let m = min_model_search(circles, spheres, max_n)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            emit(
                &format!("{}\n", serde_json::to_string_pretty(&m).expect("JSON")),
                None,
            )
        }
        Command::VerifyPaper { json } => {
            let report = verify_paper();
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_string()
            };
            emit(&text, None)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Export {
            dot, file, output, ..
        } => {
            let p = load(&file)?;
            let text = if dot {
                to_dot(&p)
            } else {
                format_poset(&p, true)
            };
            emit(&text, output.as_deref())
        }
    }
}

fn configure_workers() -> Outcome {
    let Ok(v) = std::env::var(WORKERS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Usage(format!("{WORKERS_VAR} must be a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match configure_workers().and_then(|_| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Data(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Check) => ExitCode::from(1),
    }
}
