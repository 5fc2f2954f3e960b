//! Cluster decomposition of direction sequences and the counting symbols used
//! by the closed-form amplitudes.
//!
//! A cluster is a maximal run of equal moves. Runs of length one are
//! singular (`S`) when they have a neighbour on both sides and isolated
//! marginal (`I`) at either end; longer runs are multi-element (`M`). R runs
//! use the barred symbols.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::oracle::DirectionSequence;
use crate::walk::Direction;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("sequence has no L cluster")]
    NoLeftCluster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaskSymbol {
    S,
    M,
    I,
    SBar,
    MBar,
    IBar,
}

impl MaskSymbol {
    pub fn is_left(self) -> bool {
        matches!(self, MaskSymbol::S | MaskSymbol::M | MaskSymbol::I)
    }

    fn plain(self) -> MaskSymbol {
        match self {
            MaskSymbol::SBar => MaskSymbol::S,
            MaskSymbol::MBar => MaskSymbol::M,
            MaskSymbol::IBar => MaskSymbol::I,
            other => other,
        }
    }
}

impl fmt::Display for MaskSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MaskSymbol::S => "S",
            MaskSymbol::M => "M",
            MaskSymbol::I => "I",
            MaskSymbol::SBar => "S\u{304}",
            MaskSymbol::MBar => "M\u{304}",
            MaskSymbol::IBar => "I\u{304}",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterMask {
    pub symbols: Vec<MaskSymbol>,
}

impl ClusterMask {
    /// The symbols of L clusters only.
    pub fn left(&self) -> Vec<MaskSymbol> {
        self.symbols.iter().copied().filter(|s| s.is_left()).collect()
    }

    pub fn right(&self) -> Vec<MaskSymbol> {
        self.symbols.iter().copied().filter(|s| !s.is_left()).collect()
    }
}

impl fmt::Display for ClusterMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Maximal runs as `(direction, length)`.
pub fn clusters(s: &DirectionSequence) -> Vec<(Direction, usize)> {
    let mut out: Vec<(Direction, usize)> = Vec::new();
    for &d in s.moves() {
        match out.last_mut() {
            Some((last, len)) if *last == d => *len += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

pub fn cluster_mask(s: &DirectionSequence) -> ClusterMask {
    let runs = clusters(s);
    let last = runs.len().saturating_sub(1);
    let symbols = runs
        .iter()
        .enumerate()
        .map(|(i, &(d, len))| {
            let plain = if len >= 2 {
                MaskSymbol::M
            } else if i == 0 || i == last {
                MaskSymbol::I
            } else {
                MaskSymbol::S
            };
            match (d, plain) {
                (Direction::L, p) => p,
                (Direction::R, MaskSymbol::S) => MaskSymbol::SBar,
                (Direction::R, MaskSymbol::M) => MaskSymbol::MBar,
                (Direction::R, _) => MaskSymbol::IBar,
            }
        })
        .collect();
    ClusterMask { symbols }
}

/// End codes `t2 t1 t0` of an L cluster mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndCode {
    pub t2: u8,
    pub t1: u8,
    pub t0: u8,
}

impl EndCode {
    pub const S: EndCode = EndCode { t2: 0, t1: 1, t0: 0 };
    pub const M: EndCode = EndCode { t2: 0, t1: 0, t0: 1 };
    pub const SI: EndCode = EndCode { t2: 1, t1: 1, t0: 0 };
    pub const MI: EndCode = EndCode { t2: 1, t1: 0, t0: 1 };
    /// Last S/M letter not fixed; only meaningful inside summations.
    pub const EITHER: EndCode = EndCode { t2: 0, t1: 1, t0: 1 };

    /// `t1 t0` as used by [`group_perm_count`].
    pub fn tail(self) -> (u8, u8) {
        (self.t1, self.t0)
    }
}

impl fmt::Display for EndCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.t2, self.t1, self.t0)
    }
}

/// The end form of a concrete L mask. Always one of four codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndType {
    S,
    M,
    SI,
    MI,
}

impl EndType {
    pub fn code(self) -> EndCode {
        match self {
            EndType::S => EndCode::S,
            EndType::M => EndCode::M,
            EndType::SI => EndCode::SI,
            EndType::MI => EndCode::MI,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterProfile {
    pub nl: i64,
    pub nr: i64,
    pub cl: i64,
    pub cr: i64,
    pub cl1: i64,
    pub cr1: i64,
    pub cl2: i64,
    pub cr2: i64,
    pub g: i64,
    pub r: i64,
    pub end: EndType,
}

impl ClusterProfile {
    pub fn steps(&self) -> i64 {
        self.nl + self.nr - 2
    }
}

impl fmt::Display for ClusterProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(N_L={}, N_R={}, C_L={}, C_R={}, C_L1={}, C_R1={}, C_L2={}, C_R2={}, g={}, r={}, t={})",
            self.nl,
            self.nr,
            self.cl,
            self.cr,
            self.cl1,
            self.cr1,
            self.cl2,
            self.cr2,
            self.g,
            self.r,
            self.end.code()
        )
    }
}

/// Number of maximal runs of equal letters in the L mask once `I` is dropped.
fn group_count(left: &[MaskSymbol]) -> i64 {
    let mut groups = 0;
    let mut prev = None;
    for &s in left.iter().filter(|&&s| s != MaskSymbol::I) {
        if prev != Some(s) {
            groups += 1;
            prev = Some(s);
        }
    }
    groups
}

fn end_type(left: &[MaskSymbol]) -> EndType {
    match left {
        [.., MaskSymbol::M] => EndType::M,
        [.., MaskSymbol::S] => EndType::S,
        [.., MaskSymbol::M, MaskSymbol::I] => EndType::MI,
        // `..SI`, and by convention a mask that is `I` alone
        _ => EndType::SI,
    }
}

pub fn profile(s: &DirectionSequence) -> Result<ClusterProfile, ClusterError> {
    let runs = clusters(s);
    let mask = cluster_mask(s);
    let left = mask.left();
    if left.is_empty() {
        return Err(ClusterError::NoLeftCluster);
    }
    let count = |d: Direction, f: &dyn Fn(usize) -> bool| runs.iter().filter(|&&(x, len)| x == d && f(len)).count() as i64;

    let mut r = 0;
    for i in 1..mask.symbols.len().saturating_sub(1) {
        if mask.symbols[i] != MaskSymbol::SBar {
            continue;
        }
        let (a, b) = (mask.symbols[i - 1].plain(), mask.symbols[i + 1].plain());
        let non_singular = |x: MaskSymbol| x == MaskSymbol::M || x == MaskSymbol::I;
        if (a == MaskSymbol::S && non_singular(b)) || (b == MaskSymbol::S && non_singular(a)) {
            r += 1;
        }
    }

    Ok(ClusterProfile {
        nl: s.count(Direction::L) as i64,
        nr: s.count(Direction::R) as i64,
        cl: count(Direction::L, &|_| true),
        cr: count(Direction::R, &|_| true),
        cl1: count(Direction::L, &|l| l == 1),
        cr1: count(Direction::R, &|l| l == 1),
        cl2: count(Direction::L, &|l| l == 2),
        cr2: count(Direction::R, &|l| l == 2),
        g: group_count(&left),
        r,
        end: end_type(&left),
    })
}

/// `(-1)^(n + C_L + C_R + C_L2 + C_R2 + r)` with `n = N_L + N_R - 2`.
pub fn phase_from_profile(p: &ClusterProfile) -> i64 {
    let x = p.steps() + p.cl + p.cr + p.cl2 + p.cr2 + p.r;
    if x.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `C(a, b)`, zero unless `0 ≤ b ≤ a`.
///
/// # Panics
///
/// If the value does not fit in `u128` (not before `a` exceeds 131).
pub fn binomial(a: i64, b: i64) -> u128 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for i in 0..b {
        // acc * (a - i) is divisible by (i + 1) at every stage
        let num = a - i;
        let den = i + 1;
        let g = gcd(acc, den);
        let (acc_r, den_r) = (acc / g, den / g);
        acc = acc_r.checked_mul(num / den_r).expect("binomial overflows u128");
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Compositions of `u` into `m` parts with exactly `v` parts equal to two and
/// none equal to one. Where no such composition exists the value is 1, so the
/// symbol can multiply into a product without dropping it.
pub fn comp_count(u: i64, m: i64, v: i64) -> u128 {
    if u >= 3 * m - v && m > v {
        binomial(m, v) * binomial(u - 2 * m - 1, m - v - 1)
    } else {
        1
    }
}

/// `C(x, r)·C(u − x, m − r)` inside its natural range, else zero.
pub fn placement_count(u: i64, m: i64, x: i64, r: i64) -> u128 {
    if 0 <= r && r <= x && 0 <= m - r && m - r <= u - x {
        binomial(x, r) * binomial(u - x, m - r)
    } else {
        0
    }
}

/// `1` for positive integers, else `0`.
pub fn pos_indicator(x: i64) -> i64 {
    (x > 0) as i64
}

pub fn kronecker(a: i64, b: i64) -> i64 {
    (a == b) as i64
}

/// Arrangements of `x` S's and `y` M's in `g` alternating groups whose last
/// letter is allowed by `(t1, t0)`: `t1` admits a final S, `t0` a final M.
///
/// The two boundary cases where one letter fills exactly `⌊g/2⌋` groups and
/// the single-group case only apply when the letter they end on is admitted.
pub fn group_perm_count(x: i64, y: i64, g: i64, tail: (u8, u8)) -> u128 {
    let (t1, t0) = (tail.0 as i64, tail.1 as i64);
    if x < 0 || y < 0 || g < 1 || x + y == 0 {
        return 0;
    }
    let lo = g / 2;
    let hi = g - lo;
    let ends_m = || binomial(x - 1, lo - 1) * binomial(y - 1, hi - 1);
    let ends_s = || binomial(x - 1, hi - 1) * binomial(y - 1, lo - 1);
    if x * y == 0 && g == 1 {
        return ((x > 0 && t1 == 1) || (y > 0 && t0 == 1)) as u128;
    }
    if g < 2 {
        return 0;
    }
    if t0 == 1 && lo <= x && x < hi && hi <= y {
        return ends_m();
    }
    if t1 == 1 && lo <= y && y < hi && hi <= x {
        return ends_s();
    }
    if g <= 2 * x.min(y) + t1 * pos_indicator(x - y) + t0 * pos_indicator(y - x) {
        return t0 as u128 * ends_m() + t1 as u128 * ends_s();
    }
    0
}

/// Closed integer interval; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// Admissible numbers of size-two clusters among `c` clusters of total size
/// `n`, `c1` of which have size one.
pub fn clsize2_range(n: i64, c: i64, c1: i64) -> BTreeSet<i64> {
    let mut out: BTreeSet<i64> = ((3 * c - 2 * c1 - n).max(0)..=c - c1 - 1).collect();
    if c1 == 2 * c - n {
        out.insert(c - c1);
    }
    out
}

/// Bounds on `g` and, for each `g`, on `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrRanges {
    pub g: IntRange,
    cr: i64,
    cr1: i64,
    t12: i64,
}

impl GrRanges {
    pub fn r_for(&self, g: i64) -> IntRange {
        IntRange::new((self.cr1 - self.cr + g + self.t12 - 1).max(0), (self.cr1 - 1).min(g + self.t12 - 1))
    }
}

pub fn g_r_ranges(cl: i64, cl1: i64, cr: i64, cr1: i64, t: EndCode) -> GrRanges {
    let (t2, t1, t0) = (t.t2 as i64, t.t1 as i64, t.t0 as i64);
    let lo = 2 - kronecker(cl1, t2) - kronecker(cl, cl1);
    let hi = 2 * (cl1 - t2).min(cl - cl1) + t1 * pos_indicator(2 * cl1 - cl - t2) + t0 * pos_indicator(cl - 2 * cl1 + t2);
    GrRanges { g: IntRange::new(lo, hi), cr, cr1, t12: t1 * t2 }
}

/// Which end code bits enter the number of positive places for R clusters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PositivePlaces {
    /// `g + t1·t2 − 1`, the count used when building sequences cluster by cluster.
    #[default]
    T1T2,
    /// `g + t1·t0 − 1`, as in the compact statement of the general formula.
    T1T0,
}

/// Number of RL-prefixed sequences with the given profile.
pub fn sequence_count(p: &ClusterProfile, wiring: PositivePlaces) -> u128 {
    let t = p.end.code();
    let places = match wiring {
        PositivePlaces::T1T2 => t.t1 * t.t2,
        PositivePlaces::T1T0 => t.t1 * t.t0,
    } as i64;
    group_perm_count(p.cl1 - t.t2 as i64, p.cl - p.cl1, p.g, t.tail())
        * comp_count(p.nl - p.cl1, p.cl - p.cl1, p.cl2)
        * placement_count(p.cr - 1, p.cr1 - 1, p.g + places - 1, p.r)
        * comp_count(p.nr - p.cr1, p.cr - p.cr1, p.cr2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::path_sign;

    fn seq(s: &str) -> DirectionSequence {
        s.parse().unwrap()
    }

    #[test]
    fn mask_examples() {
        assert_eq!(cluster_mask(&seq("LRRLLLRRLRLRRRLLLLR")).to_string(), "I M̄ M M̄ S S̄ S M̄ M I\u{304}");
        assert_eq!(cluster_mask(&seq("RLRL")).to_string(), "I\u{304} S S̄ I");
        assert_eq!(cluster_mask(&seq("RLLL")).to_string(), "I\u{304} M");
    }

    #[test]
    fn profile_examples() {
        let p = profile(&seq("RLRL")).unwrap();
        assert_eq!((p.nl, p.nr, p.cl, p.cr, p.cl1, p.cr1, p.cl2, p.cr2), (2, 2, 2, 2, 2, 2, 0, 0));
        assert_eq!((p.g, p.r, p.end), (1, 1, EndType::SI));
        let p = profile(&seq("RLLL")).unwrap();
        assert_eq!((p.nl, p.nr, p.cl, p.cr, p.cl1, p.cr1, p.cl2, p.cr2), (3, 1, 1, 1, 0, 1, 0, 0));
        assert_eq!((p.g, p.r, p.end), (1, 0, EndType::M));
        assert_eq!(profile(&seq("LRRLLLRRLRLRRRLLLLR")).unwrap().g, 3);
        assert_eq!(profile(&seq("RL")).unwrap().end, EndType::SI);
        assert_eq!(profile(&seq("RRR")), Err(ClusterError::NoLeftCluster));
    }

    #[test]
    fn phase_examples() {
        assert_eq!(phase_from_profile(&profile(&seq("RLRL")).unwrap()), -1);
        assert_eq!(phase_from_profile(&profile(&seq("RLLL")).unwrap()), 1);
        for s in ["RLRL", "RLLL", "RLRRLLRLRLLR"] {
            assert_eq!(phase_from_profile(&profile(&seq(s)).unwrap()), path_sign(&seq(s)).unwrap());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(100, 50), 100891344545564193334812497256);
        assert_eq!(binomial(128, 64), 23951146041928082866135587776380551750);
        assert_eq!(binomial(130, 65), 95067625827960698145584333020095113100);
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(comp_count(4, 2, 2), 1);
        assert_eq!(comp_count(7, 2, 1), 2);
        assert_eq!(comp_count(5, 2, 0), 1);
        assert_eq!(placement_count(3, 2, 1, 1), 2);
        assert_eq!(placement_count(3, 2, 1, 2), 0);
        assert_eq!(placement_count(5, 3, 2, 1), 6);
        assert_eq!(group_perm_count(2, 2, 2, (1, 1)), 2);
        assert_eq!(group_perm_count(0, 3, 1, (0, 1)), 1);
        assert_eq!(group_perm_count(2, 1, 3, (1, 1)), 1);
        assert_eq!(group_perm_count(0, 0, 0, (1, 1)), 0);
    }

    #[test]
    fn size_two_ranges() {
        assert_eq!(clsize2_range(4, 2, 0).into_iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!(clsize2_range(7, 3, 1).into_iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(clsize2_range(3, 3, 3).into_iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn g_r_for_rlrl() {
        let gr = g_r_ranges(2, 2, 2, 2, EndCode::SI);
        assert_eq!(gr.g, IntRange::new(1, 1));
        assert_eq!(gr.r_for(1), IntRange::new(1, 1));
        let all_single = g_r_ranges(3, 3, 3, 3, EndCode::S);
        assert_eq!(all_single.g.lo, 1);
    }

    #[test]
    fn counts_for_short_profiles() {
        assert_eq!(sequence_count(&profile(&seq("RLRL")).unwrap(), PositivePlaces::T1T2), 1);
        assert_eq!(sequence_count(&profile(&seq("RLLL")).unwrap(), PositivePlaces::T1T2), 1);
    }
}
