//! Exhaustive path enumeration for the two-step-memory walk started in
//! `|0,1,0,0⟩`.
//!
//! Every path begins with the moves R, L that produced the initial state and
//! then continues with `n` free moves. Both moves are always possible, and
//! the sign of a path is the product of the coin weights met along it.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::amplitude::{Gaussian, StateVector};
use crate::par::Execution;
use crate::walk::{transition_table, BasisIndex, Direction, MemoryOrder, TransitionRule};

/// Largest `n` enumerated unless the caller raises the limit.
pub const DEFAULT_ORACLE_CAP: usize = 24;

/// Moves fixed in the enumeration prefix; each block covers `2^(n - PREFIX)` paths.
const BLOCK_PREFIX: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid move '{0}' (expected L or R)")]
    BadChar(char),
    #[error("path must start with R, L")]
    BadPrefix,
    #[error("{n} steps exceeds the enumeration limit of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("path index {index} out of range for {n} steps")]
    BadIndex { index: u64, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectionSequence {
    moves: Vec<Direction>,
}

impl DirectionSequence {
    pub fn new(moves: Vec<Direction>) -> Self {
        DirectionSequence { moves }
    }

    /// `R, L` followed by the `n` moves encoded in the bits of `index`, most
    /// significant first, with 0 meaning L.
    pub fn from_index(n: usize, index: u64) -> Self {
        let mut moves = Vec::with_capacity(n + 2);
        moves.push(Direction::R);
        moves.push(Direction::L);
        for i in (0..n).rev() {
            moves.push(if (index >> i) & 1 == 1 { Direction::R } else { Direction::L });
        }
        DirectionSequence { moves }
    }

    pub fn moves(&self) -> &[Direction] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn count(&self, d: Direction) -> usize {
        self.moves.iter().filter(|&&m| m == d).count()
    }

    pub fn has_walk_prefix(&self) -> bool {
        self.moves.starts_with(&[Direction::R, Direction::L])
    }
}

impl FromStr for DirectionSequence {
    type Err = OracleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let moves = s
            .trim()
            .chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Direction::L),
                'R' | 'r' => Ok(Direction::R),
                other => Err(OracleError::BadChar(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(DirectionSequence { moves })
    }
}

impl fmt::Display for DirectionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.moves.iter().try_for_each(|d| write!(f, "{}", d.as_char()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathOutcome {
    pub final_basis: BasisIndex,
    pub final_position: i64,
    pub sign: i64,
}

fn follow(rule: &TransitionRule, moves: &[Direction]) -> PathOutcome {
    let mut j = BasisIndex::new(2);
    let mut k = 0i64;
    let mut sign = 1i64;
    for &d in moves {
        let br = rule
            .branches(j)
            .iter()
            .find(|b| b.shift == d.shift())
            .expect("every state has a left and a right branch");
        sign *= br.weight;
        k += br.shift;
        j = br.target;
    }
    PathOutcome { final_basis: j, final_position: k, sign }
}

pub fn path_outcome(s: &DirectionSequence) -> Result<PathOutcome, OracleError> {
    if !s.has_walk_prefix() {
        return Err(OracleError::BadPrefix);
    }
    Ok(follow(&transition_table(MemoryOrder::Two), &s.moves[2..]))
}

pub fn path_sign(s: &DirectionSequence) -> Result<i64, OracleError> {
    path_outcome(s).map(|o| o.sign)
}

/// Signed path counts per `(position, basis)` after `n` free moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCounts {
    n: usize,
    counts: Vec<i64>,
}

impl SignedCounts {
    pub fn zero(n: usize) -> Self {
        SignedCounts { n, counts: vec![0; (2 * n + 1) * 8] }
    }

    pub fn steps(&self) -> usize {
        self.n
    }

    fn slot(&self, k: i64, j: BasisIndex) -> Option<usize> {
        let off = k + self.n as i64;
        if off < 0 || off > 2 * self.n as i64 || j.get() >= 8 {
            return None;
        }
        Some(off as usize * 8 + j.get() as usize)
    }

    pub fn get(&self, k: i64, j: BasisIndex) -> i64 {
        self.slot(k, j).map_or(0, |i| self.counts[i])
    }

    pub fn merge(mut self, other: SignedCounts) -> SignedCounts {
        assert_eq!(self.n, other.n, "merging counts of different lengths");
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    /// Sum of `|count|` over all cells.
    pub fn total_magnitude(&self) -> u64 {
        self.counts.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn to_state(&self) -> StateVector {
        let mut v = StateVector::new(MemoryOrder::Two, self.n as u32);
        for (i, &c) in self.counts.iter().enumerate() {
            if c != 0 {
                let k = (i / 8) as i64 - self.n as i64;
                v.accumulate(k, BasisIndex::new((i % 8) as u8), &Gaussian::real(BigInt::from(c)));
            }
        }
        v
    }
}

fn walk_block(rule: &TransitionRule, n: usize, prefix_len: usize, prefix: u64, out: &mut SignedCounts) {
    let prefix_moves = DirectionSequence::from_index(prefix_len, prefix);
    let start = follow(rule, &prefix_moves.moves[2..]);
    descend(rule, n - prefix_len, start.final_basis, start.final_position, start.sign, out);
}

fn descend(rule: &TransitionRule, left: usize, j: BasisIndex, k: i64, sign: i64, out: &mut SignedCounts) {
    if left == 0 {
        let i = out.slot(k, j).expect("position within support");
        out.counts[i] += sign;
        return;
    }
    // L before R keeps the visiting order lexicographic
    let [b0, b1] = rule.branches(j);
    let (first, second) = if b0.shift < 0 { (b0, b1) } else { (b1, b0) };
    for br in [first, second] {
        descend(rule, left - 1, br.target, k + br.shift, sign * br.weight, out);
    }
}

/// Accumulates the paths whose indices lie in `range` (see
/// [`DirectionSequence::from_index`]).
pub fn count_range(n: usize, range: Range<u64>) -> Result<SignedCounts, OracleError> {
    let total = 1u64 << n;
    if range.end > total {
        return Err(OracleError::BadIndex { index: range.end, n });
    }
    let rule = transition_table(MemoryOrder::Two);
    let mut out = SignedCounts::zero(n);
    for index in range {
        let o = follow(&rule, &DirectionSequence::from_index(n, index).moves[2..]);
        let i = out.slot(o.final_position, o.final_basis).expect("position within support");
        out.counts[i] += o.sign;
    }
    Ok(out)
}

/// Signed counts over all `2^n` continuations.
pub fn signed_counts(n: usize, cap: usize, exec: Execution) -> Result<SignedCounts, OracleError> {
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    let prefix_len = n.min(BLOCK_PREFIX);
    let rule = transition_table(MemoryOrder::Two);
    let blocks: Vec<u64> = (0..1u64 << prefix_len).collect();
    Ok(exec.map_reduce(
        blocks,
        |prefix| {
            let mut out = SignedCounts::zero(n);
            walk_block(&rule, n, prefix_len, prefix, &mut out);
            out
        },
        || SignedCounts::zero(n),
        SignedCounts::merge,
    ))
}

/// The walk state after `n` steps, assembled from signed path counts.
pub fn oracle_state(n: usize) -> Result<StateVector, OracleError> {
    oracle_state_with(n, DEFAULT_ORACLE_CAP, Execution::default())
}

pub fn oracle_state_with(n: usize, cap: usize, exec: Execution) -> Result<StateVector, OracleError> {
    Ok(signed_counts(n, cap, exec)?.to_state())
}

pub fn signed_count(n: usize, k: i64, j: BasisIndex) -> Result<i64, OracleError> {
    Ok(signed_counts(n, DEFAULT_ORACLE_CAP, Execution::default())?.get(k, j))
}
