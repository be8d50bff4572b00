//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 success, 1 a well-formed negative answer (claim fails,
//! not torsion-free, power not contained, bound exceeded), 2 usage or
//! computation error.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use vvkit::geometry::{
    classify_config, ideal_of_points, jacobian, sample_config, PointConfiguration,
};
use vvkit::hilbert::hilbert_series;
use vvkit::ideals::Ideal;
use vvkit::poly::MonomialOrder;
use vvkit::repro::{self, ClaimStatus, ReproOptions};
use vvkit::vava::{mpower_in_ideal, relation_type, vv_torsion_free, vv_torsion_free_up_to};
use vvkit::{Error, Result};

#[derive(Parser)]
#[command(
    name = "vvkit",
    version,
    about = "Jacobian ideals of plane points and Valabrega-Valla torsion"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Defining ideal of a points file.
    PointsIdeal { file: PathBuf },
    /// Reduced Gröbner basis of an ideal (or of the ideal of points).
    Gb {
        file: PathBuf,
        /// lex, degrevlex or elim:k
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
    /// Hilbert series of R/J.
    Hilbert { file: PathBuf },
    /// Collinearity profile and case label of a points file.
    Classify { file: PathBuf },
    /// Sample a configuration of the given class.
    Sample {
        #[arg(long = "class")]
        class: String,
        #[arg(long, default_value_t = 3)]
        seed: u64,
    },
    /// Jacobian matrix minors and Jacobian ideal.
    Jacobian {
        file: PathBuf,
        /// Size of the minors; defaults to the codimension of the points.
        #[arg(long)]
        codim: Option<usize>,
    },
    /// Decide J ∩ I^t = J·I^(t-1).
    VvCheck {
        file: PathBuf,
        /// `auto` covers every t via the relation type; a number checks
        /// t = 2..=N directly.
        #[arg(long, default_value = "auto")]
        tmax: String,
    },
    /// Relation type of I/J with its minimal relations.
    RelationType {
        file: PathBuf,
        /// Largest fiber degree searched; defaults to the number of points.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Whether m^e lies in the ideal (the Jacobian ideal for a points file).
    Mpower {
        file: PathBuf,
        #[arg(long)]
        e: u32,
    },
    /// Run a registered claim, `all`, or `list` the registry.
    Repro {
        id: String,
        #[arg(long)]
        slow: bool,
    },
    /// m^(2d-2) ⊆ I experiments on framed general points.
    Conjecture {
        #[arg(long, default_value_t = 6)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: u32,
    },
}

enum Input {
    Points(PointConfiguration),
    Ideal(Ideal),
}

impl Input {
    fn base(&self) -> Ideal {
        match self {
            Input::Points(cfg) => ideal_of_points(cfg),
            Input::Ideal(j) => j.clone(),
        }
    }

    fn codim(&self) -> usize {
        match self {
            Input::Points(cfg) => cfg.dim(),
            Input::Ideal(j) => j.ring().arity().saturating_sub(1),
        }
    }

    /// Number of points; for an ideal, the multiplicity of R/J.
    fn count(&self, j: &Ideal) -> Result<usize> {
        match self {
            Input::Points(cfg) => Ok(cfg.len()),
            Input::Ideal(_) => {
                let hs = hilbert_series(j)?;
                if hs.pole_order != 1 {
                    return Err(Error::Precondition("R/J is not one-dimensional".into()));
                }
                usize::try_from(hs.multiplicity())
                    .map_err(|_| Error::Precondition("empty scheme".into()))
            }
        }
    }
}

fn load(path: &PathBuf) -> Result<Input> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Format(e.to_string()))?;
    if v.get("points").is_some() {
        Ok(Input::Points(PointConfiguration::from_json(&v)?))
    } else if v.get("gens").is_some() {
        Ok(Input::Ideal(Ideal::from_json(&v)?))
    } else {
        Err(Error::Format(
            "expected a points file or an ideal file".into(),
        ))
    }
}

fn strings(ps: &[vvkit::poly::Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn jacobian_ideal(input: &Input, j: &Ideal) -> Result<Ideal> {
    Ok(jacobian(j, input.codim())?.ideal)
}

/// Output document and exit code.
fn run(cmd: Cmd) -> Result<(Value, u8)> {
    match cmd {
        Cmd::PointsIdeal { file } => match load(&file)? {
            Input::Points(cfg) => Ok((ideal_of_points(&cfg).to_json(), 0)),
            Input::Ideal(_) => Err(Error::Format("expected a points file".into())),
        },
        Cmd::Gb { file, order } => {
            let order: MonomialOrder = order.parse()?;
            let gb = load(&file)?.base().groebner(order)?;
            Ok((
                json!({"order": order.to_string(), "basis": strings(gb.elements())}),
                0,
            ))
        }
        Cmd::Hilbert { file } => {
            let hs = hilbert_series(&load(&file)?.base())?;
            Ok((
                json!({
                    "numerator": hs.numerator,
                    "pole_order": hs.pole_order,
                    "series": hs.to_string(),
                    "multiplicity": hs.multiplicity(),
                }),
                0,
            ))
        }
        Cmd::Classify { file } => match load(&file)? {
            Input::Points(cfg) => Ok((
                serde_json::to_value(classify_config(&cfg)?).expect("plain data"),
                0,
            )),
            Input::Ideal(_) => Err(Error::Format("expected a points file".into())),
        },
        Cmd::Sample { class, seed } => Ok((sample_config(&class, seed)?.to_json(), 0)),
        Cmd::Jacobian { file, codim } => {
            let input = load(&file)?;
            let j = input.base();
            let data = jacobian(&j, codim.unwrap_or(input.codim()))?;
            Ok((
                json!({
                    "codim": data.codim,
                    "base": strings(data.base.generators()),
                    "minors": strings(data.minor_ideal.generators()),
                    "ideal": data.ideal.to_json(),
                }),
                0,
            ))
        }
        Cmd::VvCheck { file, tmax } => {
            let input = load(&file)?;
            let j = input.base();
            let i = jacobian_ideal(&input, &j)?;
            let report = if tmax == "auto" {
                vv_torsion_free(&j, &i, input.count(&j)?)?
            } else {
                let n: u32 = tmax.parse().map_err(|_| {
                    Error::InvalidArgument(format!("--tmax must be auto or a number, got {tmax}"))
                })?;
                vv_torsion_free_up_to(&j, &i, n)?
            };
            let code = if report.torsion_free { 0 } else { 1 };
            Ok((report.to_json(), code))
        }
        Cmd::RelationType { file, bound } => {
            let input = load(&file)?;
            let j = input.base();
            let i = jacobian_ideal(&input, &j)?;
            let bound = match bound {
                Some(b) => b,
                None => input.count(&j)? as u32,
            };
            match relation_type(&j, &i, bound) {
                Ok(p) => Ok((p.to_json(), 0)),
                Err(Error::BoundExceeded { bound, found }) => Ok((
                    json!({"bound": bound, "exceeded": true, "found_fiber_degree": found}),
                    1,
                )),
                Err(e) => Err(e),
            }
        }
        Cmd::Mpower { file, e } => {
            let input = load(&file)?;
            let ideal = match &input {
                Input::Points(_) => jacobian_ideal(&input, &input.base())?,
                Input::Ideal(i) => i.clone(),
            };
            let contained = mpower_in_ideal(&ideal, e)?;
            Ok((
                json!({"e": e, "contained": contained}),
                if contained { 0 } else { 1 },
            ))
        }
        Cmd::Repro { id, slow } => {
            let opts = ReproOptions { slow };
            match id.as_str() {
                "list" => {
                    let list: Vec<Value> = repro::registry()
                        .iter()
                        .map(|c| json!({"id": c.id, "description": c.description}))
                        .collect();
                    Ok((Value::Array(list), 0))
                }
                "all" => {
                    let mut out = Vec::new();
                    let mut code = 0;
                    for (id, res) in repro::run_all(&opts) {
                        match res {
                            Ok(r) => {
                                code = code.max(r.exit_code() as u8);
                                out.push(r.to_json());
                            }
                            Err(e) => {
                                code = 2;
                                out.push(json!({"claim": id, "status": "error", "details": {"error": e.to_string()}}));
                            }
                        }
                    }
                    Ok((Value::Array(out), code))
                }
                _ => {
                    let r = repro::run_claim(&id, &opts)?;
                    let code = if r.status == ClaimStatus::Fail { 1 } else { 0 };
                    Ok((r.to_json(), code))
                }
            }
        }
        Cmd::Conjecture { d, seed, trials } => {
            let runs = repro::conjecture_experiment(d, seed, trials)?;
            Ok((
                json!({
                    "status": "experimental",
                    "statement": format!("m^{} contained in the Jacobian ideal", 2 * d - 2),
                    "d": d,
                    "trials": runs,
                }),
                0,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((doc, code)) => {
            let text = serde_json::to_string_pretty(&doc).expect("serializable");
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
