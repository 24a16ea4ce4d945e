//! Command-line surface.
//!
//! Subcommands: `coeffs` (series expansion), `gf` (reduced rational
//! function), `verify` (identity and oracle suites), `count`
//! (brute-force enumeration), `cheb` (polynomial table), and `codec`
//! (walk/string transcoding). Output formats: whitespace `plain`, `csv`,
//! and a structured `json` record with every integer rendered as a
//! decimal string so arbitrary-precision values survive any consumer.
//!
//! Exit status: 0 success or all checks passed, 1 verification failure,
//! 2 usage error. The enumeration budget can be raised or lowered
//! through `KBALANCE_ENUM_BUDGET`.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chebyshev::{cheb, ChebKind};
use crate::families;
use crate::lattice::{PathSpec, Terminal};
use crate::oracle::{Budget, CountQuery};
use crate::report::Report;
use crate::transfer::{decode_walk, encode_walk, Walk};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "kbalance",
    version,
    about = "Exact generating functions for k-balanced binary strings, covering walks, and height-restricted lattice paths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    #[value(alias = "json-like")]
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WhatArg {
    Strings,
    Walks,
    Paths,
    Extent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TerminalArg {
    Ground,
    Top,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Encode,
    Decode,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the first coefficients of a family's power series
    Coeffs {
        /// One of f, g, F, G, Fbar, Gbar, H, Hbar, R, bad, good
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print a family's reduced generating function as coefficient lists
    Gf {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run verification suites; exit 0 iff every check passes
    Verify {
        /// One of cheb, tables, transfer, reconcile, oracle, all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        kmax: i64,
        #[arg(long, default_value_t = 12)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Brute-force counts of strings, walks, or lattice paths
    Count {
        #[arg(long, value_enum)]
        what: WhatArg,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        n: u32,
        /// Walks only: count covering walks instead of non-covering
        #[arg(long)]
        cover: bool,
        /// Paths only: lower height bound (<= 0)
        #[arg(long, allow_hyphen_values = true)]
        lower: Option<i64>,
        /// Paths only: upper height bound (>= 0)
        #[arg(long)]
        upper: Option<i64>,
        /// Paths only: terminal height condition
        #[arg(long, value_enum)]
        terminal: Option<TerminalArg>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print a combinatorial Chebyshev polynomial
    Cheb {
        /// T or U
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Translate between walks on C_k and their bit strings
    Codec {
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        k: i64,
        /// Bits ("11011") for decode; space-separated nodes ("0 1 2 1 2 3") for encode
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

/// Rendered output plus process exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Executes a parsed invocation. `Err` carries a usage diagnostic
/// (exit code 2); verification failures come back as `Ok` with code 1.
pub fn execute(cli: &Cli) -> Result<Output, String> {
    match &cli.command {
        Command::Coeffs {
            family,
            k,
            terms,
            format,
        } => cmd_coeffs(family, *k, *terms, *format),
        Command::Gf { family, k, format } => cmd_gf(family, *k, *format),
        Command::Verify {
            suite,
            kmax,
            nmax,
            format,
        } => cmd_verify(suite, *kmax, *nmax, *format),
        Command::Count {
            what,
            k,
            n,
            cover,
            lower,
            upper,
            terminal,
            format,
        } => cmd_count(*what, *k, *n, *cover, *lower, *upper, *terminal, *format),
        Command::Cheb { kind, k, format } => cmd_cheb(kind, *k, *format),
        Command::Codec {
            direction,
            k,
            input,
            format,
        } => cmd_codec(*direction, *k, input, *format),
    }
}

/// Full entry point: parses `std::env::args`, prints, maps exit codes.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if !output.text.is_empty() {
                println!("{}", output.text);
            }
            output.code
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn decimal_strings(values: &[num_bigint::BigInt]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn cmd_coeffs(family: &str, k: i64, terms: usize, format: Format) -> Result<Output, String> {
    if terms < 1 {
        return Err("--terms must be >= 1".into());
    }
    let gf = families::resolve(family, k).map_err(|e| e.to_string())?;
    let series = gf
        .series_labeled(terms, format!("{family} k={k}"))
        .map_err(|e| e.to_string())?;
    let rendered = decimal_strings(series.terms());
    let text = match format {
        Format::Plain => rendered.join(" "),
        Format::Csv => {
            let mut lines = vec!["n,coefficient".to_string()];
            lines.extend(rendered.iter().enumerate().map(|(n, c)| format!("{n},{c}")));
            lines.join("\n")
        }
        Format::Json => json!({
            "kind": "coeffs",
            "family": family,
            "k": k.to_string(),
            "terms": terms.to_string(),
            "coefficients": rendered,
        })
        .to_string(),
    };
    Ok(Output::ok(text))
}

fn cmd_gf(family: &str, k: i64, format: Format) -> Result<Output, String> {
    let gf = families::resolve(family, k).map_err(|e| e.to_string())?;
    let num = decimal_strings(gf.num().coeffs());
    let den = decimal_strings(gf.den().coeffs());
    let text = match format {
        Format::Plain => format!("num {}\nden {}", num.join(" "), den.join(" ")),
        Format::Csv => {
            let mut lines = vec!["part,i,coefficient".to_string()];
            lines.extend(num.iter().enumerate().map(|(i, c)| format!("num,{i},{c}")));
            lines.extend(den.iter().enumerate().map(|(i, c)| format!("den,{i},{c}")));
            lines.join("\n")
        }
        Format::Json => json!({
            "kind": "gf",
            "family": family,
            "k": k.to_string(),
            "num": num,
            "den": den,
        })
        .to_string(),
    };
    Ok(Output::ok(text))
}

fn cmd_verify(suite: &str, kmax: i64, nmax: u32, format: Format) -> Result<Output, String> {
    if kmax < 1 || nmax < 1 {
        return Err("--kmax and --nmax must be >= 1".into());
    }
    let budget = Budget::from_env();
    let reports: Vec<Report> = match suite {
        "cheb" => vec![verify::suite_cheb(kmax)],
        "tables" => vec![verify::suite_tables(kmax)],
        "transfer" => vec![verify::suite_transfer(kmax)],
        "reconcile" => vec![verify::suite_reconcile(kmax)],
        "oracle" => vec![verify::suite_oracle(kmax, nmax, budget).map_err(|e| e.to_string())?],
        "all" => verify::suite_all(kmax, nmax, budget).map_err(|e| e.to_string())?,
        other => {
            return Err(format!(
                "unknown suite {other:?}; expected one of {}",
                verify::SUITES.join(", ")
            ))
        }
    };
    let total: usize = reports.iter().map(|r| r.checks().len()).sum();
    let failed: usize = reports.iter().map(|r| r.failed_count()).sum();
    let text = match format {
        Format::Plain => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&report.to_string());
            }
            out.push_str(&format!(
                "verify {suite}: {} passed, {failed} failed",
                total - failed
            ));
            out
        }
        Format::Csv => {
            let mut lines = vec!["suite,check,passed".to_string()];
            for report in &reports {
                for check in report.checks() {
                    lines.push(format!(
                        "{},{},{}",
                        report.suite,
                        check.name.replace(',', ";"),
                        check.passed
                    ));
                }
            }
            lines.join("\n")
        }
        Format::Json => {
            let checks: Vec<_> = reports
                .iter()
                .flat_map(|report| {
                    report.checks().iter().map(|check| {
                        json!({
                            "suite": report.suite,
                            "name": check.name,
                            "passed": check.passed,
                        })
                    })
                })
                .collect();
            json!({
                "kind": "verify",
                "suite": suite,
                "kmax": kmax.to_string(),
                "nmax": nmax.to_string(),
                "passed": (total - failed).to_string(),
                "failed": failed.to_string(),
                "checks": checks,
            })
            .to_string()
        }
    };
    Ok(Output {
        text,
        code: i32::from(failed > 0),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    what: WhatArg,
    k: Option<i64>,
    n: u32,
    cover: bool,
    lower: Option<i64>,
    upper: Option<i64>,
    terminal: Option<TerminalArg>,
    format: Format,
) -> Result<Output, String> {
    let need_k = || k.ok_or_else(|| format!("--k is required for --what {what:?}").to_lowercase());
    let query = match what {
        WhatArg::Strings => CountQuery::Strings { k: need_k()?, n },
        WhatArg::Walks => CountQuery::Walks { k: need_k()?, n, cover },
        WhatArg::Extent => CountQuery::ExtentPaths { k: need_k()?, n },
        WhatArg::Paths => {
            let (Some(lower), Some(upper), Some(terminal)) = (lower, upper, terminal) else {
                return Err("--what paths requires --lower, --upper and --terminal".into());
            };
            let terminal = match terminal {
                TerminalArg::Ground => Terminal::Ground,
                TerminalArg::Top => Terminal::Top,
                TerminalArg::Any => Terminal::Any,
            };
            let spec = PathSpec::new(lower, upper, terminal)?;
            CountQuery::Paths { spec, size: n }
        }
    };
    let count = query.run(Budget::from_env()).map_err(|e| e.to_string())?;
    let params = match &query {
        CountQuery::Strings { k, n } => vec![("k", k.to_string()), ("n", n.to_string())],
        CountQuery::Walks { k, n, cover } => vec![
            ("k", k.to_string()),
            ("n", n.to_string()),
            ("cover", cover.to_string()),
        ],
        CountQuery::Paths { spec, size } => vec![
            ("lower", spec.lower.to_string()),
            ("upper", spec.upper.to_string()),
            ("terminal", format!("{:?}", spec.terminal).to_lowercase()),
            ("n", size.to_string()),
        ],
        CountQuery::ExtentPaths { k, n } => vec![("k", k.to_string()), ("n", n.to_string())],
    };
    let what_name = format!("{what:?}").to_lowercase();
    let text = match format {
        Format::Plain => count.to_string(),
        Format::Csv => {
            let mut lines = vec![format!("what,{what_name}")];
            lines.extend(params.iter().map(|(name, value)| format!("{name},{value}")));
            lines.push(format!("count,{count}"));
            lines.join("\n")
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert("kind".into(), "count".into());
            object.insert("what".into(), what_name.into());
            for (name, value) in &params {
                object.insert((*name).into(), serde_json::Value::String(value.clone()));
            }
            object.insert("count".into(), count.to_string().into());
            serde_json::Value::Object(object).to_string()
        }
    };
    Ok(Output::ok(text))
}

fn cmd_cheb(kind: &str, k: i64, format: Format) -> Result<Output, String> {
    let kind = match kind {
        "T" => ChebKind::T,
        "U" => ChebKind::U,
        other => return Err(format!("unknown kind {other:?}; expected T or U")),
    };
    match (kind, k) {
        (ChebKind::T, k) if k < 0 => return Err("T requires --k >= 0".into()),
        (ChebKind::U, k) if k < -1 => return Err("U requires --k >= -1".into()),
        _ => {}
    }
    let poly = cheb(kind, k);
    let coeffs = decimal_strings(poly.coeffs());
    let text = match format {
        Format::Plain => poly.to_string(),
        Format::Csv => {
            let mut lines = vec!["i,coefficient".to_string()];
            lines.extend(coeffs.iter().enumerate().map(|(i, c)| format!("{i},{c}")));
            lines.join("\n")
        }
        Format::Json => json!({
            "kind": "cheb",
            "cheb_kind": if kind == ChebKind::T { "T" } else { "U" },
            "k": k.to_string(),
            "coefficients": coeffs,
        })
        .to_string(),
    };
    Ok(Output::ok(text))
}

fn cmd_codec(
    direction: DirectionArg,
    k: i64,
    input: &str,
    format: Format,
) -> Result<Output, String> {
    if k < 3 {
        return Err(format!("codec requires --k >= 3, got {k}"));
    }
    let k = k as usize;
    match direction {
        DirectionArg::Decode => {
            let bits: Vec<u8> = input
                .trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    other => Err(format!("invalid bit character {other:?}")),
                })
                .collect::<Result<_, _>>()?;
            let walk = decode_walk(k, &bits).map_err(|e| e.to_string())?;
            let nodes: Vec<String> = walk.nodes().iter().map(|n| n.to_string()).collect();
            let text = match format {
                Format::Plain => nodes.join(" "),
                Format::Csv => {
                    let mut lines = vec!["i,node".to_string()];
                    lines.extend(nodes.iter().enumerate().map(|(i, n)| format!("{i},{n}")));
                    lines.join("\n")
                }
                Format::Json => json!({
                    "kind": "codec",
                    "direction": "decode",
                    "k": k.to_string(),
                    "nodes": nodes,
                })
                .to_string(),
            };
            Ok(Output::ok(text))
        }
        DirectionArg::Encode => {
            let nodes: Vec<usize> = input
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| format!("invalid node index {tok:?}"))
                })
                .collect::<Result<_, _>>()?;
            let walk = Walk::new(k, nodes).map_err(|e| e.to_string())?;
            let bits: String = encode_walk(&walk).iter().map(|b| b.to_string()).collect();
            let text = match format {
                Format::Plain => bits,
                Format::Csv => {
                    let mut lines = vec!["i,bit".to_string()];
                    lines.extend(bits.chars().enumerate().map(|(i, b)| format!("{i},{b}")));
                    lines.join("\n")
                }
                Format::Json => json!({
                    "kind": "codec",
                    "direction": "encode",
                    "k": k.to_string(),
                    "bits": bits,
                })
                .to_string(),
            };
            Ok(Output::ok(text))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigpoly::{Poly, RatFunc};

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("kbalance").chain(args.iter().copied())).unwrap()
    }

    fn run_ok(args: &[&str]) -> String {
        let output = execute(&parse(args)).unwrap();
        assert_eq!(output.code, 0, "unexpected exit code for {args:?}");
        output.text
    }

    #[test]
    fn coeffs_plain() {
        let text = run_ok(&["coeffs", "--family", "g", "--k", "2", "--terms", "8"]);
        assert_eq!(text, "1 2 4 6 10 14 22 30");
        let text = run_ok(&["coeffs", "--family", "good", "--k", "4", "--terms", "4"]);
        assert_eq!(text, "0 0 0 2");
        let text = run_ok(&["coeffs", "--family", "F", "--k", "0", "--terms", "3"]);
        assert_eq!(text, "1 0 0");
    }

    #[test]
    fn coeffs_csv_header() {
        let text = run_ok(&[
            "coeffs", "--family", "f", "--k", "1", "--terms", "3", "--format", "csv",
        ]);
        assert_eq!(text, "n,coefficient\n0,1\n1,2\n2,2");
    }

    #[test]
    fn gf_plain_and_json() {
        let text = run_ok(&["gf", "--family", "f", "--k", "1"]);
        assert_eq!(text, "num 1 1\nden 1 -1");
        let text = run_ok(&["gf", "--family", "Gbar", "--k", "1", "--format", "json"]);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["num"], json!(["1"]));
        assert_eq!(value["den"], json!(["1", "0", "-2"]));
        let text = run_ok(&["gf", "--family", "R", "--k", "0"]);
        assert_eq!(text, "num 1\nden 1");
    }

    #[test]
    fn gf_json_roundtrips_through_series() {
        // re-parse the printed gf and expand: must equal the coeffs output
        for family in crate::families::FAMILY_TOKENS {
            let k_lo = if family == "bad" || family == "good" {
                3
            } else if family == "R" {
                -1
            } else {
                0
            };
            for k in k_lo..=12 {
                let text = run_ok(&[
                    "gf",
                    "--family",
                    family,
                    "--k",
                    &k.to_string(),
                    "--format",
                    "json",
                ]);
                let value: serde_json::Value = serde_json::from_str(&text).unwrap();
                let parse_poly = |field: &str| {
                    let coeffs: Vec<num_bigint::BigInt> = value[field]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|c| c.as_str().unwrap().parse().unwrap())
                        .collect();
                    Poly::from_coeffs(coeffs)
                };
                let reparsed = RatFunc::new(parse_poly("num"), parse_poly("den"));
                let expanded = reparsed.series(10).unwrap();
                let direct = run_ok(&[
                    "coeffs",
                    "--family",
                    family,
                    "--k",
                    &k.to_string(),
                    "--terms",
                    "10",
                ]);
                let expected: Vec<String> =
                    expanded.terms().iter().map(|t| t.to_string()).collect();
                assert_eq!(direct, expected.join(" "), "family={family} k={k}");
            }
        }
    }

    #[test]
    fn verify_suites_pass() {
        for suite in ["cheb", "tables", "transfer", "reconcile"] {
            let output = execute(&parse(&["verify", "--suite", suite, "--kmax", "6"])).unwrap();
            assert_eq!(output.code, 0, "suite {suite}:\n{}", output.text);
            assert!(output.text.contains("0 failed"), "suite {suite}");
        }
        let output = execute(&parse(&[
            "verify", "--suite", "oracle", "--kmax", "4", "--nmax", "10",
        ]))
        .unwrap();
        assert_eq!(output.code, 0, "{}", output.text);
    }

    #[test]
    fn verify_rejects_unknown_suite() {
        let err = execute(&parse(&["verify", "--suite", "nope"])).unwrap_err();
        assert!(err.contains("unknown suite"));
    }

    #[test]
    fn count_commands() {
        assert_eq!(run_ok(&["count", "--what", "strings", "--k", "2", "--n", "4"]), "10");
        assert_eq!(
            run_ok(&["count", "--what", "walks", "--k", "4", "--n", "3", "--cover"]),
            "2"
        );
        assert_eq!(
            run_ok(&[
                "count", "--what", "paths", "--lower", "0", "--upper", "1", "--terminal",
                "ground", "--n", "6",
            ]),
            "1"
        );
        assert_eq!(run_ok(&["count", "--what", "extent", "--k", "2", "--n", "4"]), "10");
    }

    #[test]
    fn count_usage_errors() {
        let err = execute(&parse(&["count", "--what", "strings", "--n", "4"])).unwrap_err();
        assert!(err.contains("--k is required"));
        let err = execute(&parse(&["count", "--what", "paths", "--n", "4"])).unwrap_err();
        assert!(err.contains("requires --lower"));
    }

    #[test]
    fn cheb_outputs() {
        assert_eq!(run_ok(&["cheb", "--kind", "U", "--k", "4"]), "1 - 3x^2 + x^4");
        assert_eq!(
            run_ok(&["cheb", "--kind", "T", "--k", "6"]),
            "1 - 6x^2 + 9x^4 - 2x^6"
        );
        let text = run_ok(&["cheb", "--kind", "U", "--k", "-1", "--format", "json"]);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["coefficients"], json!([]));
        assert!(execute(&parse(&["cheb", "--kind", "T", "--k", "-1"])).is_err());
    }

    #[test]
    fn codec_commands() {
        assert_eq!(
            run_ok(&["codec", "--direction", "decode", "--k", "4", "--input", "11011"]),
            "0 1 2 1 2 3"
        );
        assert_eq!(
            run_ok(&["codec", "--direction", "encode", "--k", "4", "--input", "0 1 2 1 2 3"]),
            "11011"
        );
        assert_eq!(
            run_ok(&["codec", "--direction", "encode", "--k", "5", "--input", "0"]),
            ""
        );
        let err =
            execute(&parse(&["codec", "--direction", "decode", "--k", "2", "--input", "1"])).unwrap_err();
        assert!(err.contains("k >= 3"));
        let err = execute(&parse(&[
            "codec", "--direction", "encode", "--k", "4", "--input", "0 2",
        ]))
        .unwrap_err();
        assert!(err.contains("not an arc"));
    }

    #[test]
    fn output_is_deterministic() {
        let args = [
            "verify", "--suite", "reconcile", "--kmax", "5", "--format", "json",
        ];
        let first = run_ok(&args);
        let second = run_ok(&args);
        assert_eq!(first, second);
    }
}
