//! Text forms of involutions, quotient descriptors and classifications.

use anyhow::{anyhow, bail, Context, Result};
use gpkc_core::classify::{Case, Classification};
use gpkc_core::families::{c_minus, c_plus, GpParams};
use gpkc_core::graph::{decode_graph6, encode_graph6};
use gpkc_core::perm::NamedInvolution;
use gpkc_core::{gp, h_graph, lcf, Graph};

pub fn involution_text(inv: &NamedInvolution, ascii: bool) -> String {
    if ascii {
        inv.ascii()
    } else {
        inv.to_string()
    }
}

pub fn involutions_text(invs: &[NamedInvolution], ascii: bool) -> String {
    invs.iter().map(|i| involution_text(i, ascii)).collect::<Vec<_>>().join(";")
}

/// `g6:<graph6>`
pub fn g6_descriptor(g: &Graph) -> String {
    format!("g6:{}", String::from_utf8(encode_graph6(g)).expect("graph6 is ASCII"))
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| anyhow!("expected (n,k), got {s:?}"))?;
    let (a, b) = inner.split_once(',').ok_or_else(|| anyhow!("expected (n,k), got {s:?}"))?;
    Ok((a.trim().parse().context("n")?, b.trim().parse().context("k")?))
}

/// Builds the graph named by a descriptor: `GP(n,k)`, `C+(n,k)`, `C-(n,k)`,
/// `H` or `g6:<graph6>`.
pub fn parse_descriptor(s: &str) -> Result<Graph> {
    let s = s.trim();
    if s == "H" {
        return Ok(h_graph());
    }
    if let Some(g6) = s.strip_prefix("g6:") {
        return Ok(decode_graph6(g6.as_bytes())?);
    }
    let (family, rest) = s.split_at(s.find('(').ok_or_else(|| anyhow!("unknown descriptor {s:?}"))?);
    let (n, k) = parse_pair(rest)?;
    let p = GpParams::new(n, k)?;
    match family {
        "GP" => Ok(gp(p)),
        "C+" => Ok(lcf(&c_plus(p)?)?),
        "C-" => Ok(lcf(&c_minus(p)?)?),
        _ => bail!("unknown descriptor {s:?}"),
    }
}

/// One-line summary such as `B1: quotient C+(12,5), involution α⁶γ`.
///
/// `oracle_quotients` fills in the quotient of the (8,3) case, which the
/// closed form leaves to the search.
pub fn describe(c: &Classification, ascii: bool, oracle_quotients: Option<&[String]>) -> String {
    let name = c.case.name();
    let joined = |v: Vec<String>| v.join(", ");
    match c.case {
        Case::NotBipartite | Case::NoCover => format!("{name}: not a Kronecker cover"),
        Case::Exceptional8_3 => match oracle_quotients {
            Some([]) => format!("{name}: not a Kronecker cover of a simple graph (no Kronecker involution exists)"),
            Some(qs) => format!("{name}: quotients {}", qs.join(", ")),
            None => format!("{name}: quotient left to the search oracle"),
        },
        _ => {
            let qs = joined(c.quotients.iter().map(|q| q.to_string()).collect());
            let is = joined(c.involutions.iter().map(|i| involution_text(i, ascii)).collect());
            if c.quotients.len() == 1 {
                format!("{name}: quotient {qs}, involution {is}")
            } else {
                format!("{name}: quotients {qs}, involutions {is}")
            }
        }
    }
}
