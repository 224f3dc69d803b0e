use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use anyhow::{bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use gpkc::census::{census, write_csv, write_json, CensusOptions};
use gpkc::render::{describe, g6_descriptor, involution_text};
use gpkc::search_config_from_env;
use gpkc::verify::verify;
use gpkc_core::classify::{classify, involution_family, symmetry_class, Case, Kind};
use gpkc_core::families::{c_minus, c_plus, GpParams};
use gpkc_core::graph::{decode_graph6, encode_graph6, to_dot};
use gpkc_core::perm::{alpha, delta_10_3, from_triple, NamedInvolution};
use gpkc_core::search::quotients_up_to_iso_with;
use gpkc_core::{gp, h_graph, kronecker_cover, lcf, quotient, Graph};
use serde_json::json;

/// Generalized Petersen graphs and their Kronecker covers.
#[derive(Parser)]
#[command(name = "gpkc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether GP(n,k) is a Kronecker cover and name its quotient.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        /// Write involutions as a^6*g rather than α⁶γ.
        #[arg(long)]
        ascii: bool,
    },
    /// Print the quotient of GP(n,k) as graph6.
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Shift of the involution (α^a, α^a γ or α^a β γ by case); defaults to n/2.
        #[arg(long)]
        a: Option<usize>,
        /// Use Δ instead of α⁵ for GP(10,3).
        #[arg(long)]
        delta: bool,
        /// Also write the quotient as DOT.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Print the Kronecker cover of a graph as graph6.
    Kc {
        /// GP parameters as N,K.
        #[arg(long, value_name = "N,K", value_parser = parse_pair, required_unless_present = "g6", conflicts_with = "g6")]
        gp: Option<(usize, usize)>,
        #[arg(long)]
        g6: Option<String>,
    },
    /// Tabulate the classification for a range of n.
    Census {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Cross-check every row with the search oracle.
        #[arg(long)]
        oracle: bool,
        /// Include non-bipartite rows.
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        ascii: bool,
        /// Output file; .json selects JSON, anything else CSV. Default: CSV on stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<TableFormat>,
    },
    /// Check the closed form against the oracle for all n up to a bound.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Only print failing checks.
        #[arg(long)]
        quiet: bool,
    },
    /// Write a named graph as graph6 or DOT.
    Export {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
        format: GraphFormat,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    G6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gp,
    Cplus,
    Cminus,
    H,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected N,K, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = search_config_from_env();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Classify { n, k, json, ascii } => {
            let p = GpParams::new(n, k)?;
            let c = classify(p);
            let oracle_quotients: Option<Vec<String>> = if c.case == Case::Exceptional8_3 {
                let survey = quotients_up_to_iso_with(&gp(p), &cfg)?;
                Some(survey.classes.iter().map(|(_, q)| g6_descriptor(q)).collect())
            } else {
                None
            };
            if json {
                let s = symmetry_class(p);
                let quotients: Vec<String> = match &oracle_quotients {
                    Some(q) => q.clone(),
                    None => c.quotients.iter().map(|q| q.to_string()).collect(),
                };
                let cover = c.case.is_cover().or(oracle_quotients.as_ref().map(|q| !q.is_empty()));
                let value = json!({
                    "n": n,
                    "k": k,
                    "case": c.case.name(),
                    "cover": cover,
                    "quotients": quotients,
                    "involutions": c.involutions.iter().map(|i| involution_text(i, ascii)).collect::<Vec<_>>(),
                    "symmetric": s.symmetric,
                    "vertex_transitive": s.vertex_transitive,
                    "cayley": s.cayley,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            } else {
                writeln!(out, "{}", describe(&c, ascii, oracle_quotients.as_deref()))?;
            }
        }
        Command::Quotient { n, k, a, delta, dot } => {
            let p = GpParams::new(n, k)?;
            let g = gp(p);
            let c = classify(p);
            let a = a.unwrap_or(n / 2);
            let (name, w) = match c.case {
                Case::A1 | Case::A2 => (format!("α^{a}"), alpha(n).power(a as i64)),
                Case::Exceptional10_3 if delta => ("Δ".to_string(), delta_10_3()),
                Case::Exceptional10_3 => (format!("α^{a}"), alpha(n).power(a as i64)),
                Case::B1 | Case::B2 => {
                    let kind = if c.case == Case::B1 { Kind::Plain } else { Kind::Reflected };
                    let t = kind.triple(a % n);
                    if !involution_family(p)?.contains(&t) {
                        bail!("{} is not a Kronecker involution of {p}", NamedInvolution::Word(t));
                    }
                    (NamedInvolution::Word(t).to_string(), from_triple(n, k, t)?)
                }
                Case::Exceptional8_3 | Case::NoCover | Case::NotBipartite => {
                    bail!("{p} is not a Kronecker cover of a simple graph ({})", c.case)
                }
            };
            let q = quotient(&g, &w).with_context(|| format!("{name} is not a Kronecker involution of {p}"))?;
            writeln!(out, "{}", String::from_utf8(encode_graph6(&q))?)?;
            if let Some(path) = dot {
                write_file(&path, to_dot(&q, None)?.as_bytes())?;
            }
        }
        Command::Kc { gp: pair, g6 } => {
            let g = match (pair, g6) {
                (Some((n, k)), _) => gp(GpParams::new(n, k)?),
                (None, Some(s)) => decode_graph6(s.trim().as_bytes()).context("invalid graph6")?,
                (None, None) => unreachable!("clap requires one of --gp, --g6"),
            };
            writeln!(out, "{}", String::from_utf8(encode_graph6(&kronecker_cover(&g)))?)?;
        }
        Command::Census { min_n, max_n, oracle, verbose, ascii, out: path, format } => {
            if min_n > max_n {
                bail!("--min-n {min_n} exceeds --max-n {max_n}");
            }
            let opts = CensusOptions { n_min: min_n, n_max: max_n, oracle, verbose, ascii, search: cfg };
            let progress = AtomicUsize::new(0);
            let rows = census(&opts, Some(&progress))?;
            eprintln!("census: {} pairs examined, {} rows", progress.load(Ordering::Relaxed), rows.len());
            let json = match format {
                Some(TableFormat::Json) => true,
                Some(TableFormat::Csv) => false,
                None => path.as_ref().and_then(|p| p.extension()).is_some_and(|e| e == "json"),
            };
            let mut buf = Vec::new();
            if json {
                write_json(&rows, &mut buf)?;
                buf.push(b'\n');
            } else {
                write_csv(&rows, &mut buf)?;
            }
            match path {
                Some(p) => write_file(&p, &buf)?,
                None => out.write_all(&buf)?,
            }
        }
        Command::Verify { max_n, quiet } => {
            let report = verify(max_n, &cfg)?;
            for c in &report.checks {
                if !quiet || !c.passed {
                    writeln!(out, "{c}")?;
                }
            }
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let failed = report.failures().count();
            writeln!(out, "verify: {} checks, {} failed", report.checks.len(), failed)?;
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Export { family, n, k, format, out: path } => {
            let g = export_graph(family, n, k)?;
            let text = match format {
                GraphFormat::G6 => format!("{}\n", String::from_utf8(encode_graph6(&g))?),
                GraphFormat::Dot => to_dot(&g, None)?,
            };
            match path {
                Some(p) => write_file(&p, text.as_bytes())?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn export_graph(family: Family, n: Option<usize>, k: Option<usize>) -> Result<Graph> {
    if let Family::H = family {
        return Ok(h_graph());
    }
    let (Some(n), Some(k)) = (n, k) else {
        Cli::command()
            .error(clap::error::ErrorKind::MissingRequiredArgument, "--n and --k are required for this family")
            .exit();
    };
    let p = GpParams::new(n, k)?;
    Ok(match family {
        Family::Gp => gp(p),
        Family::Cplus => lcf(&c_plus(p)?)?,
        Family::Cminus => lcf(&c_minus(p)?)?,
        Family::H => unreachable!(),
    })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut f = BufWriter::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?);
    f.write_all(bytes)?;
    f.flush()?;
    Ok(())
}
