//! `zk` — generate the simplicial complexes of the stacked-polytope family,
//! compute the cohomology of their moment-angle complexes with exact
//! arithmetic, and run the verification batteries.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

mod checks;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::json;

use zk_core::complex::SimplicialComplex;
use zk_core::hochster::{cup_product, summand_classes, zk_cohomology};
use zk_core::homology::{reduced_cohomology, Coeffs, HomologyCache};
use zk_core::json::{read_complex, write_complex};
use zk_core::linalg::{PrimeField, Rationals};
use zk_core::polytope::{
    build_lhat, build_stacked, disjoint_points, htype_family, random_history, HtypeMode,
};

use checks::FieldSel;
use report::params;

#[derive(Parser)]
#[command(
    name = "zk",
    version,
    about = "Exact cohomology of moment-angle complexes and the stacked-polytope verification suite"
)]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Aligned text output (the default; kept as an explicit flag).
    #[arg(long, global = true, conflicts_with = "json")]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a complex and print it in the JSON interchange format.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Reduced cohomology of a complex; with --zk also the moment-angle aggregate.
    Betti {
        /// Complex file in the JSON interchange format.
        file: PathBuf,
        /// Coefficients: z, q, f2, or `fp:<p>`.
        #[arg(long, default_value = "z")]
        coeffs: String,
        /// Also aggregate over all vertex subsets.
        #[arg(long)]
        zk: bool,
        /// Cap on the vertex count for subset enumeration.
        #[arg(long = "limit-m", default_value_t = 20)]
        limit_m: usize,
    },
    /// All pairwise products of basis classes on two disjoint supports.
    Cup {
        file: PathBuf,
        /// First support, e.g. 1,3
        #[arg(long)]
        i: String,
        /// Second support, e.g. 2,4
        #[arg(long)]
        j: String,
        /// Field coefficients: q, f2, or `fp:<p>`.
        #[arg(long = "coeffs", default_value = "q")]
        field: String,
        #[arg(long = "limit-m", default_value_t = 14)]
        limit_m: usize,
    },
    /// Full verification battery for the stacked ball of one (d, ell) pair.
    CheckPanov {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        /// Field coefficients: q, f2, or `fp:<p>`.
        #[arg(long = "coeffs", default_value = "q")]
        field: String,
        #[arg(long = "limit-m", default_value_t = 14)]
        limit_m: usize,
    },
    /// Check that all positive-degree products vanish for a complex file.
    CheckGolod {
        file: PathBuf,
        /// Field coefficients: q, f2, or `fp:<p>`.
        #[arg(long = "coeffs", default_value = "q")]
        field: String,
        #[arg(long = "limit-m", default_value_t = 14)]
        limit_m: usize,
    },
    /// Random stack histories all give the same Betti vector.
    CheckStackInvariance {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "limit-m", default_value_t = 20)]
        limit_m: usize,
    },
    /// Glued simplex chains match disjoint points in cohomology.
    CheckHtype {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        /// chain, star, or random.
        #[arg(long, default_value = "chain")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "limit-m", default_value_t = 20)]
        limit_m: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Stacked ball with the prescribed labeling on d + ell vertices.
    Lhat {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        /// Emit the boundary complex instead of the ball.
        #[arg(long)]
        boundary: bool,
    },
    /// ell disjoint points.
    Points {
        #[arg(long)]
        ell: usize,
    },
    /// Stacked ball with a seeded random stack history.
    Stacked {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        boundary: bool,
    },
    /// ell simplices of dimension k glued along (k-1)-faces.
    Htype {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value = "chain")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, exiting quietly when the consumer closed the pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Gen { family } => {
            let complex = match family {
                GenFamily::Lhat { d, ell, boundary } => {
                    let ball = build_lhat(d, ell)?;
                    if boundary {
                        ball.boundary_complex()?
                    } else {
                        ball
                    }
                }
                GenFamily::Points { ell } => disjoint_points(ell)?,
                GenFamily::Stacked { d, ell, seed, boundary } => {
                    let ball = build_stacked(&random_history(d, ell, seed)?)?;
                    if boundary {
                        ball.boundary_complex()?
                    } else {
                        ball
                    }
                }
                GenFamily::Htype { k, ell, mode, seed } => {
                    let (_, complex) = htype_family(k, ell, HtypeMode::parse(&mode)?, seed)?;
                    complex
                }
            };
            emit(&format!("{}\n", write_complex(&complex)?));
            Ok(true)
        }
        Command::Betti { file, coeffs, zk, limit_m } => {
            let complex = load(&file)?;
            let coeffs = Coeffs::parse(&coeffs)?;
            emit(&cmd_betti(&complex, coeffs, zk, limit_m, &file.display().to_string(), json)?);
            Ok(true)
        }
        Command::Cup { file, i, j, field, limit_m } => {
            let complex = load(&file)?;
            let sel = FieldSel::parse(&field)?;
            let i_set = parse_subset(&i)?;
            let j_set = parse_subset(&j)?;
            emit(&cmd_cup(&complex, &i_set, &j_set, sel, limit_m, &file.display().to_string(), json)?);
            Ok(true)
        }
        Command::CheckPanov { d, ell, field, limit_m } => {
            let sel = FieldSel::parse(&field)?;
            let report = checks::check_panov(d, ell, sel, limit_m)?;
            emit(&report.render(json));
            Ok(report.pass)
        }
        Command::CheckGolod { file, field, limit_m } => {
            let complex = load(&file)?;
            let sel = FieldSel::parse(&field)?;
            let report =
                checks::check_golod(&complex, sel, limit_m, &file.display().to_string())?;
            emit(&report.render(json));
            Ok(report.pass)
        }
        Command::CheckStackInvariance { d, ell, trials, seed, limit_m } => {
            let report = checks::check_stack_invariance(d, ell, trials, seed, limit_m)?;
            emit(&report.render(json));
            Ok(report.pass)
        }
        Command::CheckHtype { k, ell, mode, seed, limit_m } => {
            let mode = HtypeMode::parse(&mode)?;
            let report = checks::check_htype(k, ell, mode, seed, limit_m)?;
            emit(&report.render(json));
            Ok(report.pass)
        }
    }
}

fn load(path: &PathBuf) -> anyhow::Result<SimplicialComplex> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(read_complex(&text)?)
}

fn parse_subset(text: &str) -> anyhow::Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        out.push(part.trim().parse::<usize>().with_context(|| format!("bad label `{part}`"))?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn cmd_betti(
    complex: &SimplicialComplex,
    coeffs: Coeffs,
    zk: bool,
    limit_m: usize,
    file: &str,
    json: bool,
) -> anyhow::Result<String> {
    use std::fmt::Write;
    let reduced = reduced_cohomology(complex, coeffs);
    let reduced_rows: Vec<serde_json::Value> = reduced
        .iter()
        .map(|(d, s)| {
            let torsion: Vec<String> = s.torsion.iter().map(|t| t.to_string()).collect();
            json!({"degree": d, "betti": s.betti, "torsion": torsion})
        })
        .collect();

    let zk_value = if zk {
        let cache = HomologyCache::new();
        let z = zk_cohomology(complex, coeffs, limit_m, &cache)?;
        let subsets: Vec<serde_json::Value> = z
            .subsets
            .iter()
            .flat_map(|s| {
                s.module.iter().map(move |(degree, summand)| {
                    let torsion: Vec<String> =
                        summand.torsion.iter().map(|t| t.to_string()).collect();
                    json!({
                        "I": s.support,
                        "degree": degree,
                        "betti": summand.betti,
                        "torsion": torsion,
                    })
                })
            })
            .collect();
        let torsion: Vec<Vec<String>> = z
            .torsion
            .iter()
            .map(|t| t.iter().map(|x| x.to_string()).collect())
            .collect();
        Some(json!({
            "betti": z.betti_vector(),
            "torsion": torsion,
            "subsets": subsets,
        }))
    } else {
        None
    };

    if json {
        let mut doc = json!({
            "command": "betti",
            "parameters": params(&[
                ("file", json!(file)),
                ("coeffs", json!(coeffs.to_string())),
                ("zk", json!(zk)),
                ("limit_m", json!(limit_m)),
            ]),
            "reduced_cohomology": reduced_rows,
        });
        if let Some(z) = zk_value {
            doc["zk"] = z;
        }
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?));
    }

    let mut out = String::new();
    writeln!(out, "reduced cohomology of {file} over {coeffs}:")?;
    if reduced.is_trivial() {
        writeln!(out, "  trivial")?;
    }
    for (d, s) in reduced.iter() {
        let torsion: Vec<String> = s.torsion.iter().map(|t| t.to_string()).collect();
        if torsion.is_empty() {
            writeln!(out, "  H^{d}: rank {}", s.betti)?;
        } else {
            writeln!(out, "  H^{d}: rank {} torsion [{}]", s.betti, torsion.join(","))?;
        }
    }
    if let Some(z) = zk_value {
        let betti: Vec<usize> = z["betti"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_u64().unwrap() as usize)
            .collect();
        writeln!(out, "moment-angle Betti vector: {}", checks::fmt_betti(&betti))?;
        writeln!(out, "nonzero subset summands:")?;
        for row in z["subsets"].as_array().unwrap() {
            writeln!(out, "  I={} degree={} betti={}", row["I"], row["degree"], row["betti"])?;
        }
    }
    Ok(out)
}

fn cmd_cup(
    complex: &SimplicialComplex,
    i_set: &[usize],
    j_set: &[usize],
    sel: FieldSel,
    limit_m: usize,
    file: &str,
    json: bool,
) -> anyhow::Result<String> {
    use std::fmt::Write;
    let m = complex.vertex_count();
    if m > limit_m {
        anyhow::bail!("vertex count {m} exceeds the limit {limit_m}");
    }
    let overlap = i_set.iter().any(|v| j_set.binary_search(v).is_ok());

    let pairs: Vec<serde_json::Value> = if overlap {
        Vec::new()
    } else {
        match sel {
            FieldSel::Q => cup_pairs(complex, i_set, j_set, &Rationals)?,
            FieldSel::Fp(p) => cup_pairs(complex, i_set, j_set, &PrimeField::new(p)?)?,
        }
    };

    if json {
        let doc = json!({
            "command": "cup",
            "parameters": params(&[
                ("file", json!(file)),
                ("i", json!(i_set)),
                ("j", json!(j_set)),
                ("coeffs", json!(sel.name())),
            ]),
            "overlapping": overlap,
            "verdict": if overlap { "all products zero: supports overlap" } else { "computed" },
            "pairs": pairs,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?));
    }

    let mut out = String::new();
    if overlap {
        writeln!(out, "supports overlap: every product is zero by the product rule")?;
    } else if pairs.is_empty() {
        writeln!(out, "no basis classes on one of the supports")?;
    } else {
        for row in &pairs {
            writeln!(
                out,
                "{} * {} -> {}",
                row["u"],
                row["v"],
                if row["zero"].as_bool().unwrap() {
                    "zero".to_string()
                } else {
                    format!("nonzero in degree {}", row["product_degree"])
                }
            )?;
        }
    }
    Ok(out)
}

fn cup_pairs<F: zk_core::linalg::FieldOps>(
    complex: &SimplicialComplex,
    i_set: &[usize],
    j_set: &[usize],
    field: &F,
) -> anyhow::Result<Vec<serde_json::Value>> {
    let left = summand_classes(complex, i_set, field)?;
    let right = summand_classes(complex, j_set, field)?;
    let mut out = Vec::new();
    for (lu, u) in &left {
        for (lv, v) in &right {
            let product = cup_product(complex, u, v, field)?;
            let row = match &product {
                None => json!({
                    "u": lu.to_string(),
                    "v": lv.to_string(),
                    "zero": true,
                }),
                Some(w) => json!({
                    "u": lu.to_string(),
                    "v": lv.to_string(),
                    "zero": false,
                    "product_support": w.support,
                    "product_degree": w.total_degree(),
                }),
            };
            out.push(row);
        }
    }
    Ok(out)
}
