//! Pass/fail report comparing the closed form with the search oracle for
//! every GP(n,k) up to a bound.

use std::fmt;

use gpkc_core::classify::{classify, Case};
use gpkc_core::families::GpParams;
use gpkc_core::search::{canonical_form_with, quotients_up_to_iso_with};
use gpkc_core::{gp, kronecker_cover, SearchConfig, SearchError};
use rayon::prelude::*;

use crate::census::{compare, mobius_kantor_note};
use crate::render::g6_descriptor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub n: usize,
    pub k: usize,
    pub name: String,
    pub passed: bool,
    /// graph6 payload reproducing a failure.
    pub evidence: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} GP({},{}) {}", self.n, self.k, self.name)?;
        if let Some(e) = &self.evidence {
            write!(f, " [{e}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn verify(n_max: usize, cfg: &SearchConfig) -> Result<Report, SearchError> {
    if 2 * n_max > cfg.max_vertices {
        return Err(SearchError::TooManyVertices { vertices: 2 * n_max, bound: cfg.max_vertices });
    }
    let params: Vec<GpParams> = GpParams::range(3, n_max).collect();
    let parts: Vec<Report> = params.par_iter().map(|&p| verify_one(p, cfg)).collect::<Result<_, _>>()?;
    let mut report = Report::default();
    for r in parts {
        report.checks.extend(r.checks);
        report.warnings.extend(r.warnings);
    }
    Ok(report)
}

pub fn verify_one(p: GpParams, cfg: &SearchConfig) -> Result<Report, SearchError> {
    let (n, k) = (p.n(), p.k());
    let c = classify(p);
    let g = gp(p);
    let survey = quotients_up_to_iso_with(&g, cfg)?;
    let oracle_cover = !survey.involutions.is_empty();
    let mut report = Report::default();
    let mut check = |name: String, passed: bool, evidence: Option<String>| {
        report.checks.push(Check { n, k, name, passed, evidence });
    };
    let graph_ev = || Some(format!("graph={}", g6_descriptor(&g)));

    match c.case.is_cover() {
        Some(claim) => {
            let name = format!("existence: {} says {}, oracle says {}", c.case, yes_no(claim), yes_no(oracle_cover));
            check(name, claim == oracle_cover, (claim != oracle_cover).then(graph_ev).flatten());
        }
        None => {
            check(format!("existence: {} left to oracle, oracle says {}", c.case, yes_no(oracle_cover)), true, None);
        }
    }
    if c.case == Case::Exceptional8_3 {
        report.warnings.push(format!("GP(8,3): {}", mobius_kantor_note(false)));
    }
    if c.case.is_cover() == Some(true) {
        check(
            format!("quotient classes: closed form {}, oracle {}", c.quotients.len(), survey.classes.len()),
            c.quotients.len() == survey.classes.len(),
            (c.quotients.len() != survey.classes.len()).then(graph_ev).flatten(),
        );
        let (agree, evidence) = compare(&c, &g, &survey, cfg)?;
        let names = c.quotients.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
        check(format!("quotient type: {names} among oracle classes"), agree, evidence);
    }
    let target = canonical_form_with(&g, cfg)?;
    for (_, q) in &survey.classes {
        let ok = canonical_form_with(&kronecker_cover(q), cfg)? == target;
        check(
            format!("round trip: KC({}) = GP({n},{k})", g6_descriptor(q)),
            ok,
            (!ok).then(|| format!("graph={} quotient={}", g6_descriptor(&g), g6_descriptor(q))),
        );
    }
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "cover"
    } else {
        "no cover"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let r = verify(26, &SearchConfig::default()).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.warnings.len(), 1);
        let ten_three: Vec<_> = r.checks.iter().filter(|c| (c.n, c.k) == (10, 3)).collect();
        assert!(ten_three.iter().any(|c| c.name == "quotient classes: closed form 2, oracle 2"));
        assert!(r.checks.iter().any(|c| (c.n, c.k) == (24, 5) && c.name.contains("says no cover, oracle says no cover")));
    }
}
