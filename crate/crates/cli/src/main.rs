//! `coadjoint`: validate nilpotent Lie algebras, stratify their duals,
//! compute invariants and query the topology of the Heisenberg dual.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use coadjoint::catalog::{self, CatalogEntry};
use coadjoint::heisenberg_dual::DualSubset;
use coadjoint::invariants::{compute_bundle, BundleOptions, NuclearMode};
use coadjoint::rational::{parse_rational, parse_rational_list};
use coadjoint::stratification::{jump_set, stratify, IndexSet};
use coadjoint::{Functional, NilpotentAlgebra, Rational};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(
    name = "coadjoint",
    version,
    about = "Coadjoint orbits and C*-invariants of nilpotent Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry, Jacobi, nilpotency and flag adaptedness.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Ranks, index, coarse length and nuclear-dimension bounds.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
        #[arg(long, value_enum, default_value = "coarse")]
        mode: Mode,
        /// Dimension of a stratum for fine mode, e.g. `2,3=1` or `empty=2`.
        #[arg(long = "stratum-dim", value_name = "SET=DIM")]
        stratum_dims: Vec<String>,
        /// Fill missing fine-mode stratum dimensions with a heuristic estimate.
        #[arg(long)]
        estimate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Coarse stratification by jump sets over an integer lattice.
    Stratify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: Search,
        #[arg(long)]
        json: bool,
    },
    /// Jump set of a functional.
    Jump {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long)]
        json: bool,
    },
    /// Stabilizer and orbit data of a functional, optionally moved by `exp x`.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Lie algebra element to act by, as comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Subsets of the Heisenberg dual.
    Heis {
        #[command(subcommand)]
        op: HeisOp,
    },
    /// Built-in example algebras.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Algebra JSON file.
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Catalog entry, `name[:params]`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args)]
struct Search {
    #[arg(long, default_value_t = 2)]
    height: u32,
    #[arg(long, env = "COADJOINT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Mode {
    Coarse,
    Fine,
}

#[derive(Args)]
struct SetArgs {
    /// `n` of the Heisenberg group `H_{2n+1}`; must match the file.
    #[arg(long)]
    n: usize,
    /// Dual-subset JSON file.
    #[arg(long)]
    set: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum HeisOp {
    /// Decide quasi-compactness, listing every failed condition.
    Qc(SetArgs),
    Closure(SetArgs),
    Interior(SetArgs),
    Boundary(SetArgs),
    /// Report closed/open flags.
    Classify(SetArgs),
    /// Apply the multiplicative action `t · C`.
    Act {
        #[command(flatten)]
        args: SetArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

#[derive(Subcommand)]
enum CatalogOp {
    List {
        #[arg(long)]
        json: bool,
    },
    Get {
        name: String,
        #[arg(long)]
        json: bool,
    },
}

/// Failures mapped to exit codes: 1 for invalid algebras, 2 for bad input.
enum Failure {
    Invalid(String),
    Usage(String),
}

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce() -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string(value).expect("report serializes")
        );
    } else {
        print!("{}", human());
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load(input: &Input) -> Result<NilpotentAlgebra, Failure> {
    match (&input.algebra, &input.catalog) {
        (Some(path), None) => {
            let text = read_file(path)?;
            NilpotentAlgebra::from_json_str(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        (None, Some(name)) => catalog::get(name).map(|e| e.algebra).map_err(usage),
        _ => Err(usage("give exactly one of --algebra or --catalog")),
    }
}

fn load_valid(input: &Input) -> Result<NilpotentAlgebra, Failure> {
    let alg = load(input)?;
    let report = alg.validate();
    if !report.is_ok() {
        let lines: Vec<String> = report
            .violations
            .iter()
            .map(|v| format!("violation: {v}"))
            .collect();
        return Err(Failure::Invalid(format!(
            "invalid algebra\n{}",
            lines.join("\n")
        )));
    }
    Ok(alg)
}

fn parse_functional(
    alg: &NilpotentAlgebra,
    text: &str,
    what: &str,
) -> Result<Vec<Rational>, Failure> {
    let v = parse_rational_list(text).map_err(|e| usage(format!("--{what}: {e}")))?;
    if v.len() != alg.dim() {
        return Err(usage(format!(
            "--{what} has {} coordinates, the algebra has dimension {}",
            v.len(),
            alg.dim()
        )));
    }
    Ok(v)
}

fn parse_stratum_dim(text: &str) -> Result<(IndexSet, usize), Failure> {
    let bad = || {
        usage(format!(
            "--stratum-dim `{text}`: expected SET=DIM, e.g. 2,3=1 or empty=2"
        ))
    };
    let (set, dim) = text.rsplit_once('=').ok_or_else(bad)?;
    let dim = dim.trim().parse().map_err(|_| bad())?;
    let set = set.trim();
    let e = if set.is_empty() || set == "empty" || set == "{}" {
        IndexSet::empty()
    } else {
        let elems = set
            .trim_matches(|c| c == '{' || c == '}')
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|_| bad())?;
        IndexSet::new(elems).map_err(usage)?
    };
    Ok((e, dim))
}

fn validate(input: &Input, json: bool) -> Outcome {
    let alg = load(input)?;
    let report = alg.validate();
    #[derive(Serialize)]
    struct Out {
        ok: bool,
        dim: usize,
        violations: Vec<String>,
    }
    let out = Out {
        ok: report.is_ok(),
        dim: alg.dim(),
        violations: report.violations.iter().map(ToString::to_string).collect(),
    };
    emit(json, &out, || {
        if out.ok {
            format!("ok: valid nilpotent Lie algebra of dimension {}\n", out.dim)
        } else {
            out.violations
                .iter()
                .map(|v| format!("violation: {v}\n"))
                .collect()
        }
    });
    if out.ok {
        Ok(())
    } else {
        Err(Failure::Invalid(String::new()))
    }
}

fn invariants(
    input: &Input,
    search: &Search,
    mode: Mode,
    dims: &[String],
    estimate: bool,
    json: bool,
) -> Outcome {
    let alg = load_valid(input)?;
    let mut opts = BundleOptions::new(search.height, search.seed);
    opts.mode = match mode {
        Mode::Coarse => NuclearMode::Coarse,
        Mode::Fine => NuclearMode::Fine,
    };
    opts.stratum_dims = dims
        .iter()
        .map(|d| parse_stratum_dim(d))
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    opts.estimate_missing = estimate;
    let b = compute_bundle(&alg, &opts).map_err(usage)?;
    emit(json, &b, || {
        let strata: Vec<String> = b.strata.iter().map(ToString::to_string).collect();
        let mut s = String::new();
        let mut row = |k: &str, v: String| s.push_str(&format!("{k:<18}{v}\n"));
        row("dim g", b.dim_g.to_string());
        row("dim g/[g,g]", b.a.to_string());
        row("real rank", b.real_rank.to_string());
        row("stable rank", b.stable_rank.to_string());
        row("index", b.index.to_string());
        row("clgth >=", b.clgth_lower.to_string());
        row("strata", strata.join(" "));
        row(
            "nuclear dim",
            format!("[{}, {}] ({})", b.nuclear_lower, b.nuclear_upper, b.mode),
        );
        row("exhaustive", b.exhaustive.to_string());
        row("estimate used", b.estimate_used.to_string());
        row("height", b.height.to_string());
        row("seed", b.seed.to_string());
        s
    });
    Ok(())
}

fn stratify_cmd(input: &Input, search: &Search, json: bool) -> Outcome {
    let alg = load_valid(input)?;
    let r = stratify(&alg, search.height, search.seed).map_err(usage)?;
    emit(json, &r, || {
        let mut s = format!(
            "{} strata (height {}, seed {}, {})\n",
            r.strata.len(),
            r.height,
            r.seed,
            if r.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
        );
        for st in &r.strata {
            let w: Vec<String> = st.witnesses.iter().map(ToString::to_string).collect();
            s.push_str(&format!("  {:<14}{}\n", st.e.to_string(), w.join(" ")));
        }
        s
    });
    Ok(())
}

fn jump(input: &Input, xi: &str, json: bool) -> Outcome {
    let alg = load_valid(input)?;
    let xi = Functional::new(parse_functional(&alg, xi, "xi")?);
    let e = jump_set(&alg, &xi).map_err(usage)?;
    #[derive(Serialize)]
    struct Out {
        e: IndexSet,
    }
    emit(json, &Out { e: e.clone() }, || format!("J = {e}\n"));
    Ok(())
}

fn orbit(input: &Input, xi: &str, x: Option<&str>, json: bool) -> Outcome {
    let alg = load_valid(input)?;
    let xi = Functional::new(parse_functional(&alg, xi, "xi")?);
    let stab = alg.stabilizer(&xi).map_err(usage)?;
    let e = jump_set(&alg, &xi).map_err(usage)?;
    let moved = match x {
        Some(x) => {
            let x = parse_functional(&alg, x, "x")?;
            Some(alg.coadjoint_act(&x, &xi).map_err(usage)?)
        }
        None => None,
    };
    #[derive(Serialize)]
    struct Out {
        xi: Functional,
        e: IndexSet,
        orbit_dim: usize,
        stabilizer_dim: usize,
        stabilizer: Vec<Functional>,
        #[serde(skip_serializing_if = "Option::is_none")]
        moved: Option<Functional>,
    }
    let out = Out {
        orbit_dim: alg.dim() - stab.dim(),
        stabilizer_dim: stab.dim(),
        stabilizer: stab
            .basis()
            .iter()
            .map(|v| Functional::new(v.clone()))
            .collect(),
        xi,
        e,
        moved,
    };
    emit(json, &out, || {
        let mut s = format!("xi              {}\nJ               {}\n", out.xi, out.e);
        s.push_str(&format!(
            "orbit dim       {}\nstabilizer dim  {}\n",
            out.orbit_dim, out.stabilizer_dim
        ));
        for v in &out.stabilizer {
            s.push_str(&format!("  {v}\n"));
        }
        if let Some(m) = &out.moved {
            s.push_str(&format!("Ad*(exp x) xi   {m}\n"));
        }
        s
    });
    Ok(())
}

fn load_set(args: &SetArgs) -> Result<DualSubset, Failure> {
    let s = DualSubset::from_json_str(&read_file(&args.set)?)
        .map_err(|e| usage(format!("{}: {e}", args.set.display())))?;
    if s.space().n() != args.n {
        return Err(usage(format!(
            "--n {} but {} describes n = {}",
            args.n,
            args.set.display(),
            s.space().n()
        )));
    }
    Ok(s)
}

fn emit_set(json: bool, s: &DualSubset) {
    emit(json, &s.to_json(), || {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&s.to_json()).expect("serializes")
        )
    });
}

fn heis(op: &HeisOp) -> Outcome {
    match op {
        HeisOp::Qc(args) => {
            let d = load_set(args)?.quasi_compactness();
            emit(args.json, &d, || {
                if d.quasi_compact {
                    "quasi-compact\n".to_string()
                } else {
                    let r: Vec<String> = d
                        .reasons
                        .iter()
                        .map(|r| format!("  ({}) {}\n", r.condition(), r.code()))
                        .collect();
                    format!("not quasi-compact:\n{}", r.concat())
                }
            });
        }
        HeisOp::Closure(args) => emit_set(args.json, &load_set(args)?.closure()),
        HeisOp::Interior(args) => emit_set(args.json, &load_set(args)?.interior()),
        HeisOp::Boundary(args) => emit_set(args.json, &load_set(args)?.boundary()),
        HeisOp::Classify(args) => {
            let s = load_set(args)?;
            #[derive(Serialize)]
            struct Out {
                closed: bool,
                open: bool,
                quasi_compact: bool,
            }
            let out = Out {
                closed: s.is_closed(),
                open: s.is_open(),
                quasi_compact: s.is_quasi_compact(),
            };
            emit(args.json, &out, || {
                format!(
                    "closed          {}\nopen            {}\nquasi-compact   {}\n",
                    out.closed, out.open, out.quasi_compact
                )
            });
        }
        HeisOp::Act { args, t } => {
            let t = parse_rational(t).map_err(|e| usage(format!("--t: {e}")))?;
            emit_set(args.json, &load_set(args)?.r_act(&t));
        }
    }
    Ok(())
}

fn entry_line(e: &CatalogEntry) -> String {
    let idx = e
        .expected
        .index
        .as_ref()
        .map_or("?".to_string(), |x| x.value.to_string());
    format!("{:<16}dim {:<4}index {}\n", e.id(), e.algebra.dim(), idx)
}

fn catalog_cmd(op: &CatalogOp) -> Outcome {
    match op {
        CatalogOp::List { json } => {
            let entries = catalog::list();
            let docs: Vec<_> = entries.iter().map(CatalogEntry::to_json).collect();
            emit(*json, &docs, || entries.iter().map(entry_line).collect());
        }
        CatalogOp::Get { name, json } => {
            let e = catalog::get(name).map_err(usage)?;
            emit(*json, &e.to_json(), || {
                let mut s = entry_line(&e);
                s.push_str(&format!("{:?}\n", e.algebra));
                for (field, x) in [
                    ("dim_g", &e.expected.dim_g),
                    ("index", &e.expected.index),
                    ("clgth", &e.expected.clgth),
                    ("real_rank", &e.expected.real_rank),
                    ("stable_rank", &e.expected.stable_rank),
                ] {
                    if let Some(x) = x {
                        s.push_str(&format!(
                            "expected {field:<12}{:<4}{:?}\n",
                            x.value, x.source
                        ));
                    }
                }
                for n in &e.notes {
                    s.push_str(&format!("note: {n}\n"));
                }
                s
            });
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { input, json } => validate(input, *json),
        Command::Invariants {
            input,
            search,
            mode,
            stratum_dims,
            estimate,
            json,
        } => invariants(input, search, *mode, stratum_dims, *estimate, *json),
        Command::Stratify {
            input,
            search,
            json,
        } => stratify_cmd(input, search, *json),
        Command::Jump { input, xi, json } => jump(input, xi, *json),
        Command::Orbit { input, xi, x, json } => orbit(input, xi, x.as_deref(), *json),
        Command::Heis { op } => heis(op),
        Command::Catalog { op } => catalog_cmd(op),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
