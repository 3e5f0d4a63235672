//! Command-line front door: construct the fixture modules, compute
//! module-theoretic invariants, verify the exact sequences and bounds,
//! and report radical profiles. All input and output is JSON; exit code 0
//! means success or verification pass, 1 means a verification failed, 2
//! means a usage or input error.

mod corpus;
mod descriptor;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use endoring_core::endoscope::{
    end_algebra, generator_bound_report, is_local_module, radical_block_profile, verify_adual,
    verify_ausbr0, verify_perfect_syzygy_sequence,
};
use endoring_core::error::{Error, Result};
use endoring_core::fpmodules::{
    auslander_dual, depth, dual, ext, free_resolution, hom, module_to_json, morphism_to_json, rank,
    tensor, tor, trace_ideal, FPModule, ModuleJson, MorphismJson,
};

use descriptor::Descriptor;

#[derive(Parser)]
#[command(
    name = "endoring",
    version,
    about = "endomorphism rings of graded modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// coefficient prime for constructed rings
    #[arg(long, global = true, default_value_t = 32003)]
    prime: u64,
    /// Hilbert-function comparison window `lo:hi`
    #[arg(long, global = true, value_parser = parse_window)]
    hf_window: Option<(i64, i64)>,
    /// seed for randomized internals (falls back to ENDORING_SEED)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// write the JSON output to a file instead of standard output
    #[arg(short, long, global = true)]
    output: Option<String>,
}

fn parse_window(text: &str) -> std::result::Result<(i64, i64), String> {
    let Some((lo, hi)) = text.split_once(':') else {
        return Err("expected `lo:hi`".to_string());
    };
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lo: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad hi: {e}"))?;
    if lo > hi {
        return Err("window must satisfy lo <= hi".to_string());
    }
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the module families and emit its JSON
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Compute an invariant or derived module
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Verify an exact sequence or bound; exit 1 on failure
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Report radical structure
    Report {
        #[command(subcommand)]
        what: ReportCmd,
    },
    /// Run a fixture manifest and exit 1 unless all expectations hold
    Corpus { manifest: String },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Koszul cycle module Z_cycle on n variables
    Koszul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cycle: usize,
    },
    /// Generic determinantal cokernel of an m x n variable matrix
    Det {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Module with one relation column
    OneRelation {
        /// comma-separated variable names
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// comma-separated homogeneous entries of equal degree
        #[arg(long, value_delimiter = ',')]
        entries: Vec<String>,
    },
    /// k-th syzygy module of a perfect module
    Syzygy {
        module: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum ComputeCmd {
    /// Hom(A, B) with morphism witnesses
    Hom {
        a: String,
        b: String,
    },
    /// End(E) with witnesses and the identity coordinates
    End {
        module: String,
    },
    /// E* = Hom(E, R)
    Dual {
        module: String,
    },
    /// Auslander dual D(E)
    Adual {
        module: String,
    },
    /// A (x) B
    Tensor {
        a: String,
        b: String,
    },
    /// trace ideal and free-summand verdict
    TraceIdeal {
        module: String,
    },
    /// minimal free resolution
    Resolution {
        module: String,
        #[arg(long)]
        max_length: Option<usize>,
    },
    /// Hilbert function over a degree range
    Hilbert {
        module: String,
        #[arg(long)]
        lo: i64,
        #[arg(long)]
        hi: i64,
    },
    Rank {
        module: String,
    },
    Depth {
        module: String,
    },
    /// Ext^i(E, R)
    Ext {
        module: String,
        #[arg(long)]
        i: usize,
    },
    /// Tor_i(A, B)
    Tor {
        a: String,
        b: String,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// exactness of E* (x) E -> End(E) -> Tor_1(D(E), E) -> 0
    Ausbr0 { module: String },
    /// the four-term evaluation sequence against Tor_2 / Tor_1
    Adual { module: String, with: String },
    /// 0 -> E* (x) E -> End(E) -> End(M) -> 0 for the k-th syzygy
    PerfectSyzygy {
        module: String,
        #[arg(long)]
        k: usize,
    },
    /// generator bounds on End(E)
    Bounds { module: String },
    /// transition conditions for a pair
    Transition { a: String, b: String },
}

#[derive(Subcommand)]
enum ReportCmd {
    /// locality verdict with the radical profile
    IsLocal { module: String },
    /// full bar-level radical profile
    RadicalProfile { module: String },
    /// radical blocks of End(E1 + E2), verified at the bar level
    RadicalBlocks { a: String, b: String },
    /// generator-count report
    Generators { module: String },
}

fn load_module(path: &str) -> Result<FPModule> {
    Descriptor::File {
        path: path.to_string(),
    }
    .build(32003)
}

fn emit<T: Serialize>(value: &T, output: &Option<String>) -> Result<()> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    text.push('\n');
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("cannot write `{path}`: {e}"),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct HomOutput {
    #[serde(flatten)]
    module: ModuleJson,
    witnesses: Vec<MorphismJson>,
}

fn run(cli: &Cli) -> Result<u8> {
    let seed = cli.seed.unwrap_or_else(|| {
        std::env::var("ENDORING_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    });
    let window = cli.hf_window;
    match &cli.command {
        Command::Construct { what } => {
            let descriptor = match what {
                ConstructCmd::Koszul { n, cycle } => Descriptor::Koszul {
                    n: *n,
                    cycle: *cycle,
                },
                ConstructCmd::Det { n, m } => Descriptor::Det { n: *n, m: *m },
                ConstructCmd::OneRelation { vars, entries } => Descriptor::OneRelation {
                    vars: vars.clone(),
                    entries: entries.clone(),
                },
                ConstructCmd::Syzygy { module, k } => Descriptor::Syzygy {
                    module: Box::new(Descriptor::File {
                        path: module.clone(),
                    }),
                    k: *k,
                },
            };
            let module = descriptor.build(cli.prime)?;
            emit(&module_to_json(&module), &cli.output)?;
            Ok(0)
        }
        Command::Compute { what } => {
            let value: Value = match what {
                ComputeCmd::Hom { a, b } => {
                    let (a, b) = (load_module(a)?, load_module(b)?);
                    let h = hom(&a, &b)?;
                    serde_json::to_value(HomOutput {
                        module: module_to_json(h.module()),
                        witnesses: h.witnesses().iter().map(morphism_to_json).collect(),
                    })
                    .unwrap()
                }
                ComputeCmd::End { module } => {
                    let e = load_module(module)?;
                    let end = end_algebra(&e)?;
                    let mut value = serde_json::to_value(HomOutput {
                        module: module_to_json(&end.module),
                        witnesses: end.hom.witnesses().iter().map(morphism_to_json).collect(),
                    })
                    .unwrap();
                    value["identity_coords"] = json!(end
                        .identity_coords
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>());
                    value
                }
                ComputeCmd::Dual { module } => {
                    let e = load_module(module)?;
                    let d = dual(&e)?;
                    serde_json::to_value(HomOutput {
                        module: module_to_json(d.module()),
                        witnesses: d.witnesses().iter().map(morphism_to_json).collect(),
                    })
                    .unwrap()
                }
                ComputeCmd::Adual { module } => {
                    let e = load_module(module)?;
                    serde_json::to_value(module_to_json(&auslander_dual(&e)?)).unwrap()
                }
                ComputeCmd::Tensor { a, b } => {
                    let (a, b) = (load_module(a)?, load_module(b)?);
                    serde_json::to_value(module_to_json(&tensor(&a, &b)?)).unwrap()
                }
                ComputeCmd::TraceIdeal { module } => {
                    let e = load_module(module)?;
                    let t = trace_ideal(&e)?;
                    let mut value = serde_json::to_value(module_to_json(&t.module)).unwrap();
                    value["ideal_generators"] = json!(t
                        .generators
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>());
                    value["has_free_summand"] = json!(t.has_free_summand);
                    value
                }
                ComputeCmd::Resolution { module, max_length } => {
                    let e = load_module(module)?;
                    let cap = max_length.unwrap_or(e.ring().nvars() + 1);
                    let res = free_resolution(&e, cap)?;
                    json!({
                        "betti": res.betti(),
                        "degrees": res.frees.iter().map(|f| f.degrees().to_vec()).collect::<Vec<_>>(),
                        "complete": res.complete,
                        "maps": res.maps.iter().map(|d| {
                            d.matrix()
                                .iter()
                                .map(|row| row.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                                .collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    })
                }
                ComputeCmd::Hilbert { module, lo, hi } => {
                    let e = load_module(module)?;
                    if lo > hi {
                        return Err(Error::Precondition("hilbert needs lo <= hi".into()));
                    }
                    let hf = e.hilbert_function(*lo, *hi);
                    json!({"lo": hf.lo, "hi": hf.hi, "dims": hf.dims})
                }
                ComputeCmd::Rank { module } => {
                    let e = load_module(module)?;
                    json!({"rank": rank(&e)?})
                }
                ComputeCmd::Depth { module } => {
                    let e = load_module(module)?;
                    json!({"depth": depth(&e)?})
                }
                ComputeCmd::Ext { module, i } => {
                    let e = load_module(module)?;
                    serde_json::to_value(module_to_json(&ext(&e, *i)?)).unwrap()
                }
                ComputeCmd::Tor { a, b, i } => {
                    let (a, b) = (load_module(a)?, load_module(b)?);
                    serde_json::to_value(module_to_json(&tor(&a, &b, *i)?)).unwrap()
                }
            };
            emit(&value, &cli.output)?;
            Ok(0)
        }
        Command::Verify { what } => {
            let (report_value, pass): (Value, bool) = match what {
                VerifyCmd::Ausbr0 { module } => {
                    let e = load_module(module)?;
                    let report = verify_ausbr0(&e, window)?;
                    let pass = report.pass;
                    (serde_json::to_value(&report).unwrap(), pass)
                }
                VerifyCmd::Adual { module, with } => {
                    let e = load_module(module)?;
                    let x = load_module(with)?;
                    let report = verify_adual(&e, &x, window)?;
                    let pass = report.pass;
                    (serde_json::to_value(&report).unwrap(), pass)
                }
                VerifyCmd::PerfectSyzygy { module, k } => {
                    let m = load_module(module)?;
                    let report = verify_perfect_syzygy_sequence(&m, *k, window)?;
                    let pass = report.pass;
                    (serde_json::to_value(&report).unwrap(), pass)
                }
                VerifyCmd::Bounds { module } => {
                    let e = load_module(module)?;
                    let report = generator_bound_report(&e)?;
                    let pass = report.pass;
                    (serde_json::to_value(&report).unwrap(), pass)
                }
                VerifyCmd::Transition { a, b } => {
                    let (a, b) = (load_module(a)?, load_module(b)?);
                    let ok = endoring_core::endoscope::check_transition(&a, &b)?;
                    (json!({"id": "transition", "pass": ok}), ok)
                }
            };
            emit(&report_value, &cli.output)?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Report { what } => {
            let value: Value = match what {
                ReportCmd::IsLocal { module } | ReportCmd::RadicalProfile { module } => {
                    let e = load_module(module)?;
                    serde_json::to_value(is_local_module(&e, seed)?).unwrap()
                }
                ReportCmd::RadicalBlocks { a, b } => {
                    let (a, b) = (load_module(a)?, load_module(b)?);
                    serde_json::to_value(radical_block_profile(&a, &b, seed)?).unwrap()
                }
                ReportCmd::Generators { module } => {
                    let e = load_module(module)?;
                    serde_json::to_value(generator_bound_report(&e)?).unwrap()
                }
            };
            emit(&value, &cli.output)?;
            Ok(0)
        }
        Command::Corpus { manifest } => {
            let manifest = corpus::load_manifest(manifest)?;
            let summary = corpus::run_manifest(&manifest, cli.prime, seed, window)?;
            emit(&summary, &cli.output)?;
            Ok(if summary.pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
