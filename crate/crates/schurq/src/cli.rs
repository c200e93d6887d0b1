//! Command-line front end: batch computation and export.
//!
//! Partitions are written as comma-separated decreasing integers (`4,2,1`);
//! the empty partition is `-`. Outputs are deterministic byte-for-byte for a
//! given invocation: term order, row/column order, and rational formatting
//! (`num/den`, lowest terms, positive denominator) are all fixed.

use crate::bars::decompose;
use crate::partitions::{
    enumerate_odd_partitions, enumerate_partitions, enumerate_strict_partitions, StrictPartition,
};
use crate::reduced::{reduce, relation_matrix, verify_suite};
use crate::symfunc::{ordinary_character, q_function, spin_character};
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "schurq",
    version,
    about = "Schur Q-functions, bar cores/quotients, spin characters, and certified relations among reduced Q-functions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output path (default: standard output).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Re-derive the printed values through an independent identity and fail
    /// on any mismatch. Always on for `relations`.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Spin,
    Ordinary,
}

#[derive(Subcommand)]
enum Command {
    /// r-bar core, quotient, sign, and removal count of a strict partition.
    CoreQuotientSign {
        /// Strict partition, e.g. "4,2,1" (use "-" for the empty partition).
        lambda: String,
        #[arg(long, default_value_t = 3)]
        r: u32,
    },
    /// Power-sum expansion of Q_lambda, r-reduced when --r is given.
    Expand {
        lambda: String,
        #[arg(long)]
        r: Option<u32>,
    },
    /// Character table of degree n: spin (rows: strict partitions, columns:
    /// odd classes) or ordinary (rows and columns: partitions).
    Chartable {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = TableKind::Spin)]
        kind: TableKind,
    },
    /// Verified relation rows for all strict partitions of n, grouped by core.
    Relations {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        r: u32,
    },
    /// Run the identity suite up to degree n-max for each r; exits nonzero on
    /// any failure.
    Verify {
        #[arg(long = "n-max")]
        n_max: u32,
        #[arg(long, value_delimiter = ',', default_values_t = vec![3])]
        r: Vec<u32>,
    },
}

/// Parses arguments from the process environment and runs; returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(output) => {
            if let Err(e) = write_output(&cli.out, &output) {
                eprintln!("error: {e}");
                return 1;
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            1
        }
    }
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn write_output(path: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn parse_strict(s: &str) -> Result<StrictPartition, Failure> {
    s.parse::<StrictPartition>().map_err(Failure::Usage)
}

fn check_r(r: u32) -> Result<(), Failure> {
    if r % 2 == 1 && r >= 3 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("r must be odd and at least 3, got {r}")))
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::CoreQuotientSign { lambda, r } => {
            check_r(*r)?;
            let lambda = parse_strict(lambda)?;
            if cli.verify {
                verify_decomposition(&lambda, *r)?;
            }
            cmd_core_quotient_sign(&lambda, *r, cli.format)
        }
        Command::Expand { lambda, r } => {
            if let Some(r) = r {
                check_r(*r)?;
            }
            let lambda = parse_strict(lambda)?;
            if cli.verify {
                verify_expansion(&lambda)?;
            }
            cmd_expand(&lambda, *r, cli.format)
        }
        Command::Chartable { n, kind } => {
            if cli.verify {
                verify_chartable(*n, *kind)?;
            }
            cmd_chartable(*n, *kind, cli.format)
        }
        Command::Relations { n, r } => {
            check_r(*r)?;
            cmd_relations(*n, *r, cli.format)
        }
        Command::Verify { n_max, r } => {
            for &ri in r {
                check_r(ri)?;
            }
            cmd_verify(*n_max, r)
        }
    }
}

/// Roundtrips the decomposition and replays every removal order.
fn verify_decomposition(lambda: &StrictPartition, r: u32) -> Result<(), Failure> {
    use crate::bars::{from_core_quotient, list_bars, remove_bar};
    let d = decompose(lambda, r);
    if lambda.size() != d.core.size() + r * d.quotient.weight() {
        return Err(Failure::Verification(format!(
            "FAIL: weight identity broken for {lambda}\n"
        )));
    }
    if from_core_quotient(&d.core, &d.quotient, r) != *lambda {
        return Err(Failure::Verification(format!(
            "FAIL: core/quotient roundtrip broken for {lambda}\n"
        )));
    }
    fn outcomes(
        l: &StrictPartition,
        r: u32,
        sign: i32,
        out: &mut std::collections::BTreeSet<(Vec<u32>, i32)>,
    ) {
        let bars = list_bars(l, r);
        if bars.is_empty() {
            out.insert((l.parts().to_vec(), sign));
            return;
        }
        for bar in bars {
            let s = if bar.leglength % 2 == 1 { -sign } else { sign };
            outcomes(&remove_bar(l, &bar), r, s, out);
        }
    }
    let mut set = std::collections::BTreeSet::new();
    outcomes(lambda, r, 1, &mut set);
    if set.len() != 1 || !set.contains(&(d.core.parts().to_vec(), d.sign)) {
        return Err(Failure::Verification(format!(
            "FAIL: removal orders disagree for {lambda}\n"
        )));
    }
    Ok(())
}

/// Rebuilds Q_lambda from spin character values and compares.
fn verify_expansion(lambda: &StrictPartition) -> Result<(), Failure> {
    use num::{BigInt, BigRational};
    use crate::partitions::z_factor;
    use crate::symfunc::PowerSum;
    let mut rebuilt = PowerSum::zero();
    for pi in enumerate_odd_partitions(lambda.size(), None) {
        let zeta = spin_character(lambda, &pi);
        if zeta == 0 {
            continue;
        }
        let e = (lambda.len() as u32 + pi.len() as u32).div_ceil(2);
        let c = BigRational::new(
            BigInt::from(zeta) * BigInt::from(2).pow(e),
            z_factor(pi.parts()),
        );
        rebuilt = rebuilt.add(&PowerSum::monomial(pi.to_partition(), c));
    }
    if rebuilt != q_function(lambda) {
        return Err(Failure::Verification(format!(
            "FAIL: character expansion does not rebuild Q_{lambda}\n"
        )));
    }
    Ok(())
}

/// Spin: rebuild every Q of the degree from the table. Ordinary: first
/// orthogonality of the rows.
fn verify_chartable(n: u32, kind: TableKind) -> Result<(), Failure> {
    use num::{BigRational, Zero};
    use crate::partitions::z_factor;
    match kind {
        TableKind::Spin => {
            for lambda in enumerate_strict_partitions(n) {
                verify_expansion(&lambda)?;
            }
        }
        TableKind::Ordinary => {
            let mus = enumerate_partitions(n);
            let classes = enumerate_partitions(n);
            for a in &mus {
                for b in &mus {
                    let mut acc = BigRational::zero();
                    for pi in &classes {
                        let prod = ordinary_character(a, pi) * ordinary_character(b, pi);
                        acc += BigRational::new(prod.into(), z_factor(pi.parts()));
                    }
                    let expected = if a == b {
                        BigRational::from_integer(1.into())
                    } else {
                        BigRational::zero()
                    };
                    if acc != expected {
                        return Err(Failure::Verification(format!(
                            "FAIL: character orthogonality broken at ({a}, {b})\n"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_core_quotient_sign(
    lambda: &StrictPartition,
    r: u32,
    format: Format,
) -> Result<String, Failure> {
    let d = decompose(lambda, r);
    let mut quotient = vec![d.quotient.zero.to_string()];
    quotient.extend(d.quotient.paired.iter().map(|p| p.to_string()));
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "core": d.core.to_string(),
                "quotient": quotient,
                "sign": d.sign,
                "bars_removed": d.bars_removed,
            });
            Ok(format!("{}\n", v))
        }
        Format::Text => Ok(format!(
            "lambda: {lambda}\nr: {r}\ncore: {}\nquotient: ({})\nsign: {}\nbars removed: {}\n",
            d.core,
            quotient.join(" | "),
            d.sign,
            d.bars_removed,
        )),
        Format::Csv => Err(Failure::Usage(
            "core-quotient-sign supports json and text output".into(),
        )),
    }
}

fn cmd_expand(lambda: &StrictPartition, r: Option<u32>, format: Format) -> Result<String, Failure> {
    let f = match r {
        None => q_function(lambda),
        Some(r) => reduce(&q_function(lambda), r),
    };
    match format {
        Format::Json => Ok(format!("{}\n", f.to_json())),
        Format::Text => Ok(format!("{f}\n")),
        Format::Csv => Err(Failure::Usage("expand supports json and text output".into())),
    }
}

fn cmd_chartable(n: u32, kind: TableKind, format: Format) -> Result<String, Failure> {
    // rows in enumeration order, columns (classes) in increasing order
    let (kind_name, row_labels, class_labels, values): (_, Vec<String>, Vec<String>, Vec<Vec<i64>>) =
        match kind {
            TableKind::Spin => {
                let rows = enumerate_strict_partitions(n);
                let mut classes = enumerate_odd_partitions(n, None);
                classes.reverse();
                let values = rows
                    .iter()
                    .map(|l| classes.iter().map(|pi| spin_character(l, pi)).collect())
                    .collect();
                (
                    "spin",
                    rows.iter().map(|l| l.to_string()).collect(),
                    classes.iter().map(|p| p.to_string()).collect(),
                    values,
                )
            }
            TableKind::Ordinary => {
                let rows = enumerate_partitions(n);
                let mut classes = enumerate_partitions(n);
                classes.reverse();
                let values = rows
                    .iter()
                    .map(|m| {
                        classes
                            .iter()
                            .map(|pi| ordinary_character(m, pi))
                            .collect()
                    })
                    .collect();
                (
                    "ordinary",
                    rows.iter().map(|m| m.to_string()).collect(),
                    classes.iter().map(|p| p.to_string()).collect(),
                    values,
                )
            }
        };
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "kind": kind_name,
                "n": n,
                "classes": class_labels,
                "rows": row_labels
                    .iter()
                    .zip(&values)
                    .map(|(l, vs)| serde_json::json!({ "index": l, "values": vs }))
                    .collect::<Vec<_>>(),
            });
            Ok(format!("{}\n", v))
        }
        Format::Csv | Format::Text => {
            let sep = if format == Format::Csv { "," } else { "  " };
            let quote = |s: &str| {
                if format == Format::Csv {
                    format!("\"{s}\"")
                } else {
                    s.to_string()
                }
            };
            let mut out = String::new();
            out.push_str(&quote("index"));
            for c in &class_labels {
                out.push_str(sep);
                out.push_str(&quote(c));
            }
            out.push('\n');
            for (l, vs) in row_labels.iter().zip(&values) {
                out.push_str(&quote(l));
                for v in vs {
                    out.push_str(sep);
                    out.push_str(&v.to_string());
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn cmd_relations(n: u32, r: u32, format: Format) -> Result<String, Failure> {
    let table = relation_matrix(n, r);
    match format {
        Format::Json => Ok(format!("{}\n", table.to_json())),
        Format::Csv => Ok(table.to_csv()),
        Format::Text => {
            let mut out = String::new();
            for block in &table.blocks {
                out.push_str(&format!("core {}\n", block.core));
                for row in &block.rows {
                    let terms: Vec<String> = row
                        .ordered_terms()
                        .map(|(mu, c)| format!("{} Q[{}]", crate::symfunc::rational_string(c), mu))
                        .collect();
                    out.push_str(&format!("  Q[{}] = {}\n", row.lambda, terms.join(" + ")));
                }
            }
            Ok(out)
        }
    }
}

fn cmd_verify(n_max: u32, rs: &[u32]) -> Result<String, Failure> {
    let report = verify_suite(n_max, rs);
    let rs_str: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
    let summary = format!(
        "checked {} multiplication identities, {} relation rows, {} basis checks (n <= {n_max}, r in {{{}}})",
        report.multiplication_identities,
        report.relation_rows,
        report.basis_checks,
        rs_str.join(","),
    );
    if report.pass() {
        Ok(format!("PASS: {summary}\n"))
    } else {
        let mut msg = format!("FAIL: {summary}\n");
        for f in &report.failures {
            msg.push_str(&format!("  {f}\n"));
        }
        Err(Failure::Verification(msg))
    }
}
