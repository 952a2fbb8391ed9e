//! The command-line surface: construction, verification and JSON export.
//!
//! Every subcommand produces a single deterministic JSON document on stdout
//! (or atomically into `--output`). Exit codes: 0 success, 1 internal
//! inconsistency (a formula mismatch — never expected), 2 usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braid::{eval_word, sigma_matrix, BraidWord};
use crate::cyclo::{make_field, CycField};
use crate::dominant::{
    basis_n20, basis_n21, find_equivariant_section, full_twist_check, n20_closed_form,
    sr_split_check, SectionResult,
};
use crate::floatcheck::sigma_deviation;
use crate::generic::{generic_n20, generic_n21};
use crate::hecke::{cubic_quotient_42, generator_order, minimal_polynomial, ExtRep};
use crate::json::{cyc_mat_to_json, cyc_to_json, lpoly_mat_to_json};
use crate::laurent::LPoly3;
use crate::lawrence::{braid_on_w, w_basis, w_dim_by_rank};
use crate::linalg::Mat;
use crate::weightspace::{ab_split, enumerate_basis, kappa};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rhorep",
    about = "Exact braid group representations from the Steinberg module at roots of unity",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON document to this path (atomic rename) instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Cross-check exact entries against the complex weight-module oracle;
    /// any deviation above 1e-9 fails the run.
    #[arg(long = "float-check", alias = "float_check", global = true)]
    pub float_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepKind {
    #[value(name = "V", alias = "v")]
    V,
    #[value(name = "W", alias = "w")]
    W,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "N20", alias = "n20")]
    N20,
    #[value(name = "N21", alias = "n21")]
    N21,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SplitRep {
    #[value(name = "N20", alias = "n20")]
    N20,
    #[value(name = "N21", alias = "n21")]
    N21,
    #[value(name = "SR", alias = "sr")]
    Sr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenericRep {
    #[value(name = "N20", alias = "n20")]
    N20,
    #[value(name = "N21", alias = "n21")]
    N21,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HeckeCheck {
    Minpoly,
    Order,
    Quotient42,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of V_{n,l}, its A/B split, and W_{n,l}.
    Dims {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        r: u32,
    },
    /// Generator matrices (or a braid word evaluation) for a representation.
    Matrices {
        #[arg(long, value_enum)]
        rep: RepKind,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long)]
        r: u32,
        /// Comma-separated signed generator indices, e.g. "1,2,-1".
        #[arg(long)]
        word: Option<String>,
    },
    /// Full twist on N_{n,l}: scalar exponent, nilpotent part, formula match.
    Twist {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        r: u32,
    },
    /// Equivariant-section certification for the l = 2 extensions.
    SplitCheck {
        #[arg(long, value_enum)]
        rep: SplitRep,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Three-variable generic families, optionally specialized at a root of unity.
    Generic {
        #[arg(long, value_enum)]
        rep: GenericRep,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        specialize: Option<u32>,
    },
    /// Minimal polynomial / generator order / the r=3, n=4 cubic quotient.
    Hecke {
        #[arg(long, value_enum)]
        check: HeckeCheck,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
    },
    /// Run the full invariant sweep; exit 0 iff every property passes.
    VerifyAll {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 5)]
        max_r: u32,
    },
}

/// Validated run configuration, mirroring the CLI surface.
pub struct RunConfig {
    pub command: Command,
    pub output: Option<PathBuf>,
    pub float_check: bool,
}

fn usage_err(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

fn field_for(r: u32) -> Result<CycField> {
    make_field(r)
}

fn basis_json(n: u32, l: u32, r: u32) -> Value {
    let basis = enumerate_basis(n, l, r);
    Value::Array(
        basis
            .order
            .iter()
            .map(|c| Value::Array(c.0.iter().map(|&e| json!(e)).collect()))
            .collect(),
    )
}

fn pairs_json(nn: u32) -> Value {
    Value::Array(
        crate::lawrence::pair_basis(nn)
            .iter()
            .map(|&(i, j)| json!([i, j]))
            .collect(),
    )
}

/// Run a validated command, returning the JSON document and the exit code.
pub fn run(config: &RunConfig) -> Result<(Value, i32)> {
    match &config.command {
        Command::Dims { n, l, r } => run_dims(*n, *l, *r),
        Command::Matrices { rep, n, l, r, word } => {
            run_matrices(*rep, *n, *l, *r, word.as_deref(), config.float_check)
        }
        Command::Twist { n, l, r } => run_twist(*n, *l, *r),
        Command::SplitCheck { rep, n, r } => run_split_check(*rep, *n, *r),
        Command::Generic { rep, n, specialize } => run_generic(*rep, *n, *specialize),
        Command::Hecke { check, n, r } => run_hecke(*check, *n, *r),
        Command::VerifyAll { max_n, max_r } => run_verify_all(*max_n, *max_r),
    }
}

fn run_dims(n: u32, l: u32, r: u32) -> Result<(Value, i32)> {
    if n < 1 || r < 2 {
        return Err(usage_err("dims requires n >= 1 and r >= 2"));
    }
    let basis = enumerate_basis(n, l, r);
    let (a, b) = ab_split(&basis);
    let mut doc = json!({
        "kappa": kappa(l, r, n),
        "dimA": a.len(),
        "dimB": b.len(),
    });
    if l < r {
        let field = field_for(r)?;
        doc["dimW"] = json!(w_dim_by_rank(&field, n, l));
    }
    Ok((doc, EXIT_OK))
}

fn run_matrices(
    rep: RepKind,
    n: u32,
    l: u32,
    r: u32,
    word: Option<&str>,
    float_check: bool,
) -> Result<(Value, i32)> {
    if n < 2 || r < 2 {
        return Err(usage_err("matrices requires n >= 2 and r >= 2"));
    }
    if matches!(rep, RepKind::W | RepKind::N | RepKind::N20 | RepKind::N21) && l >= r {
        return Err(usage_err("this representation requires l < r"));
    }
    let field = field_for(r)?;
    let word = word.map(|w| BraidWord::parse(n, w)).transpose()?;
    let mut doc = json!({
        "rep": format!("{rep:?}"),
        "n": n, "l": l, "r": r,
    });
    match rep {
        RepKind::V => {
            doc["basis"] = basis_json(n, l, r);
            match &word {
                Some(w) => {
                    doc["word"] = json!(w.letters);
                    doc["entries"] = cyc_mat_to_json(&eval_word(&field, w, l));
                }
                None => {
                    doc["matrices"] = generators_json(n, |i| {
                        cyc_mat_to_json(&sigma_matrix(&field, n, l, i, false))
                    });
                }
            }
        }
        RepKind::W => {
            let wb = w_basis(&field, n, l)?;
            doc["basis"] = Value::Array(
                wb.a_index
                    .iter()
                    .map(|c| Value::Array(c.0.iter().map(|&e| json!(e)).collect()))
                    .collect(),
            );
            match &word {
                Some(w) => {
                    doc["word"] = json!(w.letters);
                    let full = eval_word(&field, w, l);
                    let span = wb.column_matrix(&field);
                    let images: Vec<Vec<crate::cyclo::CycNum>> =
                        wb.dense_vectors().iter().map(|v| full.apply(v)).collect();
                    let img = Mat::from_columns(&images, &field.zero());
                    let m = crate::linalg::coords_in_span(&span, &img, "word image of W");
                    doc["entries"] = cyc_mat_to_json(&m);
                }
                None => {
                    doc["matrices"] = generators_json(n, |i| {
                        cyc_mat_to_json(&braid_on_w(&field, n, l, i).expect("l < r checked"))
                    });
                }
            }
        }
        RepKind::N => {
            let nb = crate::dominant::n_space(&field, n, l)?;
            doc["head_dim"] = json!(nb.h_part.len());
            doc["w_dim"] = json!(nb.w_part.dim());
            match &word {
                Some(w) => {
                    doc["word"] = json!(w.letters);
                    doc["entries"] = cyc_mat_to_json(&nb.word_matrix(&field, w));
                }
                None => {
                    doc["matrices"] = generators_json(n, |i| cyc_mat_to_json(&nb.sigma(&field, i)));
                }
            }
        }
        RepKind::N20 | RepKind::N21 => {
            let nb = match rep {
                RepKind::N20 => basis_n20(&field, n)?,
                _ => basis_n21(&field, n)?,
            };
            doc["l"] = json!(2);
            doc["head_dim"] = json!(nb.h_part.len());
            doc["w_dim"] = json!(nb.w_part.dim());
            match &word {
                Some(w) => {
                    doc["word"] = json!(w.letters);
                    doc["entries"] = cyc_mat_to_json(&nb.word_matrix(&field, w));
                }
                None => {
                    doc["matrices"] = generators_json(n, |i| cyc_mat_to_json(&nb.sigma(&field, i)));
                }
            }
        }
    }
    let mut exit = EXIT_OK;
    if float_check {
        let mut worst: f64 = 0.0;
        for i in 1..n {
            let exact = sigma_matrix(&field, n, l, i, false);
            worst = worst.max(sigma_deviation(&exact, r, n, l, i));
        }
        let pass = worst < 1e-9;
        doc["float_check"] = json!({
            "max_deviation": worst,
            "tolerance": 1e-9,
            "pass": pass,
        });
        if !pass {
            exit = EXIT_INCONSISTENT;
        }
    }
    Ok((doc, exit))
}

fn generators_json(n: u32, mut f: impl FnMut(u32) -> Value) -> Value {
    Value::Array(
        (1..n)
            .map(|i| json!({ "generator": i, "entries": f(i) }))
            .collect(),
    )
}

fn run_twist(n: u32, l: u32, r: u32) -> Result<(Value, i32)> {
    if n < 2 || r < 2 || l >= r {
        return Err(usage_err("twist requires n >= 2, r >= 2 and l < r"));
    }
    let field = field_for(r)?;
    let rep = full_twist_check(&field, n, l)?;
    let scalar = field.q_pow(rep.scalar_exponent);
    let doc = json!({
        "n": n, "l": l, "r": r,
        "lprime": rep.modular.lprime,
        "scalar_exponent": rep.scalar_exponent,
        "scalar": cyc_to_json(&scalar),
        "nilpotent_nonzero": rep.nilpotent_nonzero,
        "nilpotent_rank": rep.nilpotent_rank,
        "matches_formula": rep.matches_formula,
    });
    let exit = if rep.matches_formula {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    Ok((doc, exit))
}

fn run_split_check(rep: SplitRep, n: u32, r: u32) -> Result<(Value, i32)> {
    if n < 2 || r < 3 {
        return Err(usage_err("split-check requires n >= 2 and r >= 3"));
    }
    let field = field_for(r)?;
    let t0 = &field.s_pow(-3) * &(&field.one() - &field.q_pow(2));
    let (label, outcome) = match rep {
        SplitRep::N20 => {
            let gens = n20_closed_form(&field, n, &t0);
            ("N20", find_equivariant_section(&gens, 1)?)
        }
        SplitRep::N21 => {
            if n < 3 {
                return Err(usage_err("N21 requires n >= 3"));
            }
            let q0 = field.q();
            let s0 = field.s();
            let gens: Vec<Mat<crate::cyclo::CycNum>> = generic_n21(n)
                .iter()
                .map(|g| {
                    Mat::from_fn(g.rows(), g.cols(), |i, j| {
                        g[(i, j)].specialize(&q0, &s0, &t0)
                    })
                })
                .collect();
            ("N21", find_equivariant_section(&gens, (n - 1) as usize)?)
        }
        SplitRep::Sr => {
            if n < 3 {
                return Err(usage_err("SR requires n >= 3"));
            }
            ("SR", sr_split_check(&field, n, r)?)
        }
    };
    let doc = match outcome {
        SectionResult::Section(lambda) => {
            let rows: Vec<Value> = (0..lambda.rows())
                .map(|i| {
                    Value::Array(
                        (0..lambda.cols())
                            .map(|j| cyc_to_json(&lambda[(i, j)]))
                            .collect(),
                    )
                })
                .collect();
            json!({
                "rep": label, "n": n, "r": r,
                "split": true,
                "certificate": { "section": rows },
            })
        }
        SectionResult::NoSection {
            rank_coefficient,
            rank_augmented,
        } => json!({
            "rep": label, "n": n, "r": r,
            "split": false,
            "certificate": {
                "rank_coefficient": rank_coefficient,
                "rank_augmented": rank_augmented,
            },
        }),
    };
    Ok((doc, EXIT_OK))
}

fn run_generic(rep: GenericRep, n: u32, specialize: Option<u32>) -> Result<(Value, i32)> {
    let min_n = match rep {
        GenericRep::N20 => 2,
        GenericRep::N21 => 3,
    };
    if n < min_n {
        return Err(usage_err(format!("generic {rep:?} requires n >= {min_n}")));
    }
    let gens: Vec<Mat<LPoly3>> = match rep {
        GenericRep::N20 => generic_n20(n),
        GenericRep::N21 => generic_n21(n),
    };
    let mut doc = json!({
        "rep": format!("{rep:?}"),
        "n": n,
        "basis": {
            "head_dim": match rep { GenericRep::N20 => 1, GenericRep::N21 => n as usize - 1 },
            "pairs": pairs_json(n),
        },
    });
    match specialize {
        None => {
            doc["coefficients"] = json!("laurent");
            doc["matrices"] = Value::Array(
                gens.iter()
                    .enumerate()
                    .map(|(k, g)| json!({ "generator": k + 1, "entries": lpoly_mat_to_json(g) }))
                    .collect(),
            );
        }
        Some(r) => {
            if r < 3 {
                return Err(usage_err("specialization requires r >= 3"));
            }
            let field = field_for(r)?;
            let q0 = field.q();
            let s0 = field.s();
            let t0 = &field.s_pow(-3) * &(&field.one() - &field.q_pow(2));
            doc["coefficients"] = json!("cyclotomic");
            doc["specialized_at"] = json!({
                "r": r,
                "t": cyc_to_json(&t0),
            });
            doc["matrices"] = Value::Array(
                gens.iter()
                    .enumerate()
                    .map(|(k, g)| {
                        let m = Mat::from_fn(g.rows(), g.cols(), |i, j| {
                            g[(i, j)].specialize(&q0, &s0, &t0)
                        });
                        json!({ "generator": k + 1, "entries": cyc_mat_to_json(&m) })
                    })
                    .collect(),
            );
        }
    }
    Ok((doc, EXIT_OK))
}

fn run_hecke(check: HeckeCheck, n: u32, r: u32) -> Result<(Value, i32)> {
    if r < 3 {
        return Err(usage_err("hecke requires r >= 3"));
    }
    match check {
        HeckeCheck::Minpoly | HeckeCheck::Order => {
            let rep = if (n + 1).is_multiple_of(r) {
                ExtRep::N20
            } else if (n + 2).is_multiple_of(r) {
                ExtRep::N21
            } else {
                return Err(usage_err(format!(
                    "no l = 2 extension at n = {n}, r = {r}: need n ≡ -1 or -2 mod r"
                )));
            };
            let field = field_for(r)?;
            match check {
                HeckeCheck::Minpoly => {
                    let nb = match rep {
                        ExtRep::N20 => basis_n20(&field, n)?,
                        ExtRep::N21 => basis_n21(&field, n)?,
                    };
                    let m = nb.sigma(&field, 1);
                    let p = minimal_polynomial(&m);
                    let cubic = crate::hecke::cubic_min_poly(&field);
                    let is_cubic =
                        p.len() == cubic.len() && p.iter().zip(&cubic).all(|(a, b)| a == b);
                    let doc = json!({
                        "rep": format!("{rep:?}"),
                        "n": n, "r": r,
                        "min_poly": Value::Array(p.iter().map(cyc_to_json).collect()),
                        "is_lkb_cubic": is_cubic,
                    });
                    Ok((doc, EXIT_OK))
                }
                _ => {
                    let report = generator_order(&field, n, rep)?;
                    let doc = json!({
                        "rep": format!("{rep:?}"),
                        "n": n, "r": r,
                        "order": report.order,
                        "annihilated_by_cubic": report.annihilated_by_cubic,
                        "eigenvalues_distinct": report.eigenvalues_distinct,
                    });
                    let ok = report.order.is_some_and(|k| (2 * r).is_multiple_of(k));
                    Ok((doc, if ok { EXIT_OK } else { EXIT_INCONSISTENT }))
                }
            }
        }
        HeckeCheck::Quotient42 => {
            if n != 4 || r != 3 {
                return Err(usage_err("quotient42 is defined for n = 4, r = 3"));
            }
            let field = field_for(3)?;
            let rep = cubic_quotient_42(&field)?;
            let doc = json!({
                "n": 4, "r": 3,
                "basis": ["g1", "g2", "g3"],
                "matrices": [
                    { "generator": 1, "entries": cyc_mat_to_json(&rep.matrices[0]) },
                    { "generator": 2, "entries": cyc_mat_to_json(&rep.matrices[1]) },
                    { "generator": 3, "entries": cyc_mat_to_json(&rep.matrices[2]) },
                ],
                "matches_cubic_rep": rep.matches_cubic_rep,
            });
            let exit = if rep.matches_cubic_rep {
                EXIT_OK
            } else {
                EXIT_INCONSISTENT
            };
            Ok((doc, exit))
        }
    }
}

fn run_verify_all(max_n: u32, max_r: u32) -> Result<(Value, i32)> {
    if max_n < 2 || max_r < 3 {
        return Err(usage_err("verify-all requires max-n >= 2 and max-r >= 3"));
    }
    let results = crate::verify::run_all(max_n, max_r);
    let all_pass = results.iter().all(|p| p.pass);
    let failures: Vec<&crate::verify::PropertyResult> =
        results.iter().filter(|p| !p.pass).collect();
    let doc = json!({
        "max_n": max_n,
        "max_r": max_r,
        "checked": results.len(),
        "all_pass": all_pass,
        "failures": failures.iter().map(|p| serde_json::to_value(p).unwrap()).collect::<Vec<_>>(),
        "properties": results.iter().map(|p| serde_json::to_value(p).unwrap()).collect::<Vec<_>>(),
    });
    Ok((doc, if all_pass { EXIT_OK } else { EXIT_INCONSISTENT }))
}

/// Print or atomically write the document; returns the final exit code.
pub fn emit(doc: &Value, output: Option<&PathBuf>, exit: i32) -> i32 {
    let text = serde_json::to_string_pretty(doc).expect("JSON serialization");
    match output {
        None => {
            println!("{text}");
            exit
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            let write_res = std::fs::File::create(&tmp)
                .and_then(|mut f| f.write_all(text.as_bytes()).and_then(|_| f.sync_all()))
                .and_then(|_| std::fs::rename(&tmp, path));
            match write_res {
                Ok(()) => exit,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    EXIT_USAGE
                }
            }
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> ! {
    let cli = Cli::parse();
    let config = RunConfig {
        command: cli.command,
        output: cli.output,
        float_check: cli.float_check,
    };
    match run(&config) {
        Ok((doc, exit)) => {
            let code = emit(&doc, config.output.as_ref(), exit);
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
