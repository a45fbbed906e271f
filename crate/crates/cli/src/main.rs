use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qkcheck::exterior::json::{pieces_from_json, pieces_to_json};
use qkcheck::gstructure::conditions::c2_intersection_dim;
use qkcheck::gstructure::engine::{is_bracket_closed, is_skew_algebra};
use qkcheck::gstructure::{GStructure, StructureForm};
use qkcheck::linalg::scalar::render;
use qkcheck::quaternionic::build_phi;
use qkcheck::rep::casimir::CasimirOracle;
use qkcheck::rep::tables::{DecompositionTable, Space};
use qkcheck::rep::weyl::{sigma_dim, weight_of, weyl_dim, weyl_dim_classical};
use qkcheck::suite::{run_suite, Mode, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "qkcheck", version, about = "Exact checks for the linear algebra of quaternionic Kähler structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites and emit a report; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// `assert` or `observe`.
        #[arg(long, default_value = "assert")]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Record per-suite wall-clock times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight and dimension of λ^p_q (times σ^r if given).
    Weyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        sigma: Option<u32>,
    },
    /// Casimir decomposition of Λ^k (or of a tabulated space) against the printed table.
    Decompose {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, conflicts_with = "space")]
        k: Option<usize>,
        /// lambda3, lambda4, lambda5, e0, e1 or e2.
        #[arg(long)]
        space: Option<String>,
    },
    /// Operations on a structure form read from JSON.
    Form {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum)]
        op: FormOp,
    },
    /// Print the quaternionic 4-form Φ as JSON.
    Phi {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormOp {
    Isotropy,
    Norm,
    Hodge,
    Dims,
    C2,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    // a closed pipe (`| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn run(cli: Cli) -> qkcheck::Result<ExitCode> {
    match cli.command {
        Command::Verify { n, suite, seed, mode, format, timings, out } => {
            let mut config = SuiteConfig::new(n, Suite::parse_list(&suite)?, seed);
            config.mode = mode.parse::<Mode>()?;
            config.timings = timings;
            let report = run_suite(&config)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Markdown => report.to_markdown(),
            };
            match out {
                Some(path) => {
                    fs::write(&path, &text)?;
                    eprintln!(
                        "{} checks: {} pass, {} fail, {} observed -> {}",
                        report.checks.len(),
                        report.count(qkcheck::report::Verdict::Pass),
                        report.fail_count(),
                        report.count(qkcheck::report::Verdict::Observed),
                        path.display()
                    );
                }
                None => print!("{text}"),
            }
            for c in report.checks.iter().filter(|c| c.verdict == qkcheck::report::Verdict::Fail) {
                eprintln!("FAIL {}: claimed {}, computed {}", c.id, c.claimed, c.computed);
            }
            Ok(if report.fail_count() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Weyl { n, p, q, sigma } => {
            let w = weight_of(p, q, n)?;
            let v = match w {
                None => json!({"n": n, "p": p, "q": q, "weight": null, "dim": 0, "note": "vanishes: p - q > n"}),
                Some(w) => {
                    let d = weyl_dim(&w);
                    let mut v = json!({
                        "n": n, "p": p, "q": q,
                        "weight": w.to_string(),
                        "dim": d,
                        "dim_classical": weyl_dim_classical(&w),
                    });
                    if let Some(r) = sigma {
                        v["sigma"] = json!(r);
                        v["dim_with_sigma"] = json!(d * sigma_dim(r));
                    }
                    v
                }
            };
            print_json(&v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { n, k, space } => {
            let (k, space, within) = match (k, space) {
                (_, Some(s)) => {
                    let space: Space = s.parse()?;
                    let k = space.form_degree();
                    (k, Some(space), matches!(space, Space::E0 | Space::E1 | Space::E2))
                }
                (Some(k), None) => {
                    let space = match k {
                        3 => Some(Space::Lambda3),
                        4 => Some(Space::Lambda4),
                        5 => Some(Space::Lambda5),
                        _ => None,
                    };
                    (k, space, false)
                }
                (None, None) => {
                    return Err(qkcheck::Error::InvalidArgument("give --k or --space".into()));
                }
            };
            let oracle = CasimirOracle::new(n, k)?;
            let gs;
            let sub = if within {
                let form = StructureForm::single(build_phi(n)?)?;
                gs = GStructure::new(form)?;
                let e = match space {
                    Some(Space::E0) => 0,
                    Some(Space::E1) => 1,
                    _ => 2,
                };
                Some(gs.ek(e)?)
            } else {
                None
            };
            let d = oracle.decompose(sub)?;
            let blocks: Vec<Value> = d
                .blocks
                .iter()
                .map(|b| json!({"weight": b.weight.to_string(), "sigma": b.sigma, "dim": b.dim}))
                .collect();
            let unidentified: Vec<Value> =
                d.unidentified.iter().map(|u| json!({"sigma": u.sigma, "dim": u.dim})).collect();
            let mut v = json!({
                "n": n, "k": k, "total": d.total,
                "labels_separated": oracle.labels_are_separated(),
                "blocks": blocks,
                "unidentified": unidentified,
            });
            if let Some(space) = space {
                let printed = DecompositionTable::printed(space).isotypic(n)?;
                let computed = d.as_map();
                let mut diff = Vec::new();
                for key in printed.keys().chain(computed.keys()) {
                    let (a, b) = (printed.get(key).copied().unwrap_or(0), computed.get(key).copied().unwrap_or(0));
                    if a != b && !diff.iter().any(|x: &Value| x["label"] == format!("{}σ^{}", key.0, key.1)) {
                        diff.push(json!({"label": format!("{}σ^{}", key.0, key.1), "printed": a, "computed": b}));
                    }
                }
                v["space"] = json!(space.to_string());
                v["printed_total"] = json!(printed.values().sum::<u64>());
                v["differences"] = Value::Array(diff);
            }
            print_json(&v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Form { file, op } => {
            let pieces = pieces_from_json(&fs::read_to_string(&file)?)?;
            let form = StructureForm::new(pieces.clone())?;
            let v = match op {
                FormOp::Norm => json!({
                    "pieces": pieces.iter().map(|p| json!({"degree": p.degree(), "terms": p.nnz(), "norm2": render(&p.norm2())})).collect::<Vec<_>>(),
                }),
                FormOp::Hodge => {
                    let stars: Vec<_> = pieces.iter().map(|p| p.hodge()).collect();
                    print!("{}", pieces_to_json(&stars));
                    return Ok(ExitCode::SUCCESS);
                }
                FormOp::Isotropy => {
                    let g = form.isotropy_algebra();
                    json!({
                        "N": form.dim(),
                        "dim": g.dim(),
                        "bracket_closed": is_bracket_closed(&g)?,
                        "in_so": is_skew_algebra(&g)?,
                    })
                }
                FormOp::Dims => {
                    let gs = GStructure::new(form)?;
                    let mut rows = Vec::new();
                    for k in 0..=2 {
                        let abar = gs.abar_iso_check(k)?;
                        rows.push(json!({
                            "k": k,
                            "tensor_dim": gs.tensor_dim(k),
                            "dim_g": gs.gk(k)?.dim(),
                            "dim_p": gs.pk(k)?.dim(),
                            "rank_a": gs.ak_rank(k)?,
                            "abar_iso": abar.passed(),
                        }));
                    }
                    json!({"N": gs.dim(), "algebra_dim": gs.algebra().dim(), "levels": rows})
                }
                FormOp::C2 => {
                    let g = form.isotropy_algebra();
                    let dims: Vec<usize> = (0..3).map(|v| c2_intersection_dim(&g, v)).collect::<qkcheck::Result<_>>()?;
                    json!({"N": form.dim(), "algebra_dim": g.dim(), "intersection_dims": dims, "holds": dims.iter().all(|&d| d == 0)})
                }
            };
            print_json(&v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Phi { n } => {
            print!("{}", pieces_to_json(&[build_phi(n)?]));
            Ok(ExitCode::SUCCESS)
        }
    }
}
