//! Part-level comparison of a catalog against path enumeration.
//!
//! Every path is assigned to the part that claims it: final basis, size class
//! of its L and R clusters and, for bases 2 and 3, the end of its L mask. The
//! signed count of each class is the expected value of that part alone, so a
//! defect can be pinned to a single part.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::cluster::{clusters, profile, EndType};
use crate::oracle::{path_outcome, DirectionSequence};
use crate::par::Execution;
use crate::walk::Direction;

use super::catalog::{literal_parts, Correction, PartSpec, SizeClass, CORRECTIONS};
use super::{Catalog, ClosedFormError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartKey {
    pub basis: u8,
    pub left: SizeClass,
    pub right: SizeClass,
    pub tail: Option<EndType>,
}

impl PartKey {
    pub fn of(spec: &PartSpec) -> PartKey {
        PartKey { basis: spec.basis, left: spec.left, right: spec.right, tail: spec.tail }
    }
}

fn size_class(runs: &[(Direction, usize)], d: Direction) -> SizeClass {
    match runs.iter().filter(|r| r.0 == d).map(|r| r.1).max().unwrap_or(1) {
        1 => SizeClass::A,
        2 => SizeClass::B,
        _ => SizeClass::C,
    }
}

/// The part class of an RL-prefixed path with at least one free move.
pub fn classify(s: &DirectionSequence) -> PartKey {
    let out = path_outcome(s).expect("path starts with R, L");
    let runs = clusters(s);
    let basis = out.final_basis.get();
    let tail = if basis == 2 || basis == 3 { Some(profile(s).expect("has an L cluster").end) } else { None };
    PartKey { basis, left: size_class(&runs, Direction::L), right: size_class(&runs, Direction::R), tail }
}

/// Signed counts per `(k, class)` after `n ≥ 1` steps.
pub fn class_counts(n: usize) -> BTreeMap<(i64, PartKey), i64> {
    let mut out = BTreeMap::new();
    for index in 0..1u64 << n {
        let s = DirectionSequence::from_index(n, index);
        let o = path_outcome(&s).expect("path starts with R, L");
        *out.entry((o.final_position, classify(&s))).or_insert(0) += o.sign;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartMismatch {
    pub part: String,
    pub n: usize,
    pub k: i64,
    pub expected: i64,
    /// The part's value, or the evaluation error.
    pub got: Result<i128, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub max_n: usize,
    pub mismatches: Vec<PartMismatch>,
    /// Classes reached by some path that no part of the catalog claims.
    pub unclaimed: Vec<(usize, i64, PartKey, i64)>,
    /// Number of `(part, n, k)` evaluations performed.
    pub evaluations: usize,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.unclaimed.is_empty()
    }

    pub fn failing_parts(&self) -> BTreeSet<String> {
        self.mismatches.iter().map(|m| m.part.clone()).collect()
    }

    pub fn mismatches_for(&self, part: &str) -> usize {
        self.mismatches.iter().filter(|m| m.part == part).count()
    }
}

/// Checks every part at every reachable `(n, k)` with `1 ≤ n ≤ max_n`.
pub fn audit(catalog: &Catalog, max_n: usize, exec: Execution) -> AuditReport {
    let ns: Vec<usize> = (1..=max_n).collect();
    let per_n = exec.map(ns, |n| {
        let counts = class_counts(n);
        let mut mismatches = Vec::new();
        let mut evaluations = 0;
        let claimed: BTreeSet<PartKey> = catalog.parts().iter().map(|p| PartKey::of(p.spec())).collect();
        let unclaimed: Vec<_> = counts
            .iter()
            .filter(|((_, key), c)| **c != 0 && !claimed.contains(key))
            .map(|(&(k, key), &c)| (n, k, key, c))
            .collect();
        for k in (-(n as i64)..=n as i64).step_by(2) {
            for p in catalog.parts() {
                let key = PartKey::of(p.spec());
                let expected = counts.get(&(k, key)).copied().unwrap_or(0);
                evaluations += 1;
                let got = p.signed_count(n, k).map_err(|e| e.to_string());
                if got != Ok(expected as i128) {
                    mismatches.push(PartMismatch { part: p.id().to_string(), n, k, expected, got });
                }
            }
        }
        (mismatches, unclaimed, evaluations)
    });
    let mut report = AuditReport { max_n, ..Default::default() };
    for (m, u, e) in per_n {
        report.mismatches.extend(m);
        report.unclaimed.extend(u);
        report.evaluations += e;
    }
    report
}

/// Text report of every published part that needed a correction, with the
/// mismatch counts before and after on `1 ≤ n ≤ max_n`.
pub fn deviations_report(max_n: usize, exec: Execution) -> Result<String, ClosedFormError> {
    let literal = audit(&Catalog::literal(), max_n, exec);
    let corrected = audit(&Catalog::corrected(), max_n, exec);
    let mut out = String::new();
    writeln!(out, "# closed-form deviations (checked against path enumeration for 1 <= n <= {max_n})").unwrap();
    writeln!(out, "# parts: {}", literal_parts().len()).unwrap();
    writeln!(out, "# literal catalog: {} failing parts, {} mismatches", literal.failing_parts().len(), literal.mismatches.len())
        .unwrap();
    writeln!(
        out,
        "# corrected catalog: {} failing parts, {} mismatches",
        corrected.failing_parts().len(),
        corrected.mismatches.len()
    )
    .unwrap();
    for c in CORRECTIONS {
        write_correction(&mut out, c, &literal, &corrected);
    }
    for part in corrected.failing_parts() {
        writeln!(out, "\n[{part}] still failing after corrections ({} mismatches)", corrected.mismatches_for(&part))
            .unwrap();
        if let Some(m) = corrected.mismatches.iter().find(|m| m.part == part) {
            writeln!(out, "first: n={} k={} expected {} got {:?}", m.n, m.k, m.expected, m.got).unwrap();
        }
    }
    Ok(out)
}

fn write_correction(out: &mut String, c: &Correction, literal: &AuditReport, corrected: &AuditReport) {
    writeln!(out, "\n[{}] {}", c.part, c.field).unwrap();
    writeln!(out, "published: {}", c.published).unwrap();
    writeln!(out, "corrected: {}", c.corrected).unwrap();
    writeln!(out, "note: {}", c.note).unwrap();
    writeln!(
        out,
        "mismatches: literal {}, corrected {}",
        literal.mismatches_for(c.part),
        corrected.mismatches_for(c.part)
    )
    .unwrap();
    if let Some(m) = literal.mismatches.iter().find(|m| m.part == c.part) {
        writeln!(out, "first literal failure: n={} k={} expected {} got {:?}", m.n, m.k, m.expected, m.got).unwrap();
    }
}
