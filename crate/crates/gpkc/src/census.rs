//! Sweep over GP(n,k), optionally cross-checked against the search oracle.

use std::io::{Read, Write};
use std::sync::atomic::{AtomicUsize, Ordering};

use gpkc_core::classify::{classify, Case, Classification};
use gpkc_core::families::GpParams;
use gpkc_core::search::{canonical_form_with, quotients_up_to_iso_with, QuotientSurvey};
use gpkc_core::{gp, Graph, SearchConfig, SearchError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::render::{g6_descriptor, involutions_text};

/// One (n,k) line of the census. Oracle columns are empty when the oracle
/// was not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub k: usize,
    pub case: String,
    pub involution: String,
    pub quotient: String,
    pub oracle_cover: Option<bool>,
    pub oracle_classes: Option<usize>,
    pub agree: Option<bool>,
    pub notes: String,
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub oracle: bool,
    /// Include rows for non-bipartite GP(n,k).
    pub verbose: bool,
    pub ascii: bool,
    pub search: SearchConfig,
}

impl CensusOptions {
    pub fn new(n_min: usize, n_max: usize, oracle: bool) -> Self {
        CensusOptions { n_min, n_max, oracle, verbose: false, ascii: false, search: SearchConfig::default() }
    }
}

/// Rows ordered by `n`, then `k`. `progress` is bumped once per (n,k).
pub fn census(opts: &CensusOptions, progress: Option<&AtomicUsize>) -> Result<Vec<CensusRow>, SearchError> {
    if opts.oracle && 2 * opts.n_max > opts.search.max_vertices {
        return Err(SearchError::TooManyVertices { vertices: 2 * opts.n_max, bound: opts.search.max_vertices });
    }
    let params: Vec<GpParams> = GpParams::range(opts.n_min.max(3), opts.n_max).collect();
    let rows: Vec<Option<CensusRow>> = params
        .par_iter()
        .map(|&p| {
            let row = census_row(p, opts);
            if let Some(c) = progress {
                c.fetch_add(1, Ordering::Relaxed);
            }
            row
        })
        .collect::<Result<_, _>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Text attached to the (8,3) row: the word `α⁴βγ` contracts four spokes
/// into loops, and the LCF C-(8,3) has zero jumps.
pub fn mobius_kantor_note(ascii: bool) -> String {
    let word = if ascii { "a^4*b*g" } else { "α⁴βγ" };
    format!(
        "{word} is a fixed-point-free colour-reversing involution but fixes spokes u1v1 u3v3 u5v5 u7v7; \
         C-(8,3) has zero jumps; the search finds no Kronecker involution without fixed edges"
    )
}

pub fn census_row(p: GpParams, opts: &CensusOptions) -> Result<Option<CensusRow>, SearchError> {
    let c = classify(p);
    if c.case == Case::NotBipartite && !opts.verbose {
        return Ok(None);
    }
    let mut row = CensusRow {
        n: p.n(),
        k: p.k(),
        case: c.case.name().to_string(),
        involution: involutions_text(&c.involutions, opts.ascii),
        quotient: c.quotients.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(";"),
        oracle_cover: None,
        oracle_classes: None,
        agree: None,
        notes: String::new(),
    };
    if c.case == Case::Exceptional8_3 {
        row.notes = mobius_kantor_note(opts.ascii);
    }
    if !opts.oracle {
        return Ok(Some(row));
    }
    let g = gp(p);
    let survey = quotients_up_to_iso_with(&g, &opts.search)?;
    row.oracle_cover = Some(!survey.involutions.is_empty());
    row.oracle_classes = Some(survey.classes.len());
    let (agree, evidence) = compare(&c, &g, &survey, &opts.search)?;
    row.agree = Some(agree);
    if c.case == Case::Exceptional8_3 {
        row.involution = if survey.involutions.is_empty() {
            "none".into()
        } else {
            survey.involutions.iter().map(|p| p.cycle_notation()).collect::<Vec<_>>().join(";")
        };
        row.quotient = if survey.classes.is_empty() {
            "none".into()
        } else {
            survey.classes.iter().map(|(_, q)| g6_descriptor(q)).collect::<Vec<_>>().join(";")
        };
    }
    if let Some(e) = evidence {
        if !row.notes.is_empty() {
            row.notes.push_str("; ");
        }
        row.notes.push_str(&e);
    }
    Ok(Some(row))
}

/// Agreement of the closed form with the oracle's survey, with graph6
/// evidence when they differ.
pub fn compare(
    c: &Classification,
    g: &Graph,
    survey: &QuotientSurvey,
    cfg: &SearchConfig,
) -> Result<(bool, Option<String>), SearchError> {
    let oracle_cover = !survey.involutions.is_empty();
    let agree = match c.case.is_cover() {
        None => true,
        Some(false) => !oracle_cover,
        Some(true) => {
            let mut ok = oracle_cover && c.quotients.len() == survey.classes.len();
            for q in &c.quotients {
                let form = match q.materialize() {
                    Some(Ok(graph)) => Some(canonical_form_with(&graph, cfg)?),
                    _ => None,
                };
                ok &= form.is_some_and(|f| survey.classes.iter().any(|(cf, _)| *cf == f));
            }
            ok
        }
    };
    if agree {
        return Ok((true, None));
    }
    let mut ev = format!("evidence: graph={}", g6_descriptor(g));
    for (_, q) in &survey.classes {
        ev.push_str(&format!(" oracle_quotient={}", g6_descriptor(q)));
    }
    Ok((false, Some(ev)))
}

pub fn write_csv<W: Write>(rows: &[CensusRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> csv::Result<Vec<CensusRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn write_json<W: Write>(rows: &[CensusRow], out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_without_oracle() {
        let rows = census(&CensusOptions::new(4, 12, false), None).unwrap();
        assert!(rows.iter().all(|r| r.oracle_cover.is_none() && r.case != "NotBipartite"));
        let r = rows.iter().find(|r| (r.n, r.k) == (12, 5)).unwrap();
        assert_eq!((r.case.as_str(), r.involution.as_str(), r.quotient.as_str()), ("B1", "α⁶γ", "C+(12,5)"));
        let mut verbose = CensusOptions::new(4, 12, false);
        verbose.verbose = true;
        let all = census(&verbose, None).unwrap();
        assert_eq!(all.len(), GpParams::range(4, 12).count());
    }

    #[test]
    fn oracle_rows() {
        let rows = census(&CensusOptions::new(8, 18, true), None).unwrap();
        let r = rows.iter().find(|r| (r.n, r.k) == (18, 3)).unwrap();
        assert_eq!((r.case.as_str(), r.quotient.as_str(), r.agree), ("A1", "GP(9,3)", Some(true)));
        let r = rows.iter().find(|r| (r.n, r.k) == (16, 7)).unwrap();
        assert_eq!((r.case.as_str(), r.oracle_cover), ("NoCover", Some(false)));
        let r = rows.iter().find(|r| (r.n, r.k) == (10, 3)).unwrap();
        assert_eq!((r.quotient.as_str(), r.involution.as_str(), r.oracle_classes), ("GP(5,2);H", "α⁵;Δ", Some(2)));
        let r = rows.iter().find(|r| (r.n, r.k) == (8, 3)).unwrap();
        assert_eq!((r.involution.as_str(), r.quotient.as_str(), r.oracle_cover), ("none", "none", Some(false)));
        assert!(r.notes.contains("u1v1"));
        assert!(rows.iter().all(|r| r.agree == Some(true)));
    }

    #[test]
    fn csv_round_trip_and_header() {
        let rows = census(&CensusOptions::new(4, 10, true), None).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n,k,case,involution,quotient,oracle_cover,oracle_classes,agree,notes\n"));
        assert_eq!(read_csv(&buf[..]).unwrap(), rows);
    }

    #[test]
    fn oracle_bound() {
        let mut opts = CensusOptions::new(4, 70, true);
        opts.search.max_vertices = 120;
        assert_eq!(census(&opts, None), Err(SearchError::TooManyVertices { vertices: 140, bound: 120 }));
    }
}
