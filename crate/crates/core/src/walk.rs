//! Basis encodings and one-step evolution for Hadamard walks with zero-, one-
//! and two-step memory.
//!
//! For memory order two the basis index is `j = 4·[dr1=R] + 2·[dr2=R] + p`,
//! where `dr1` is the most recent move and `dr2` the one before it. In
//! position form this is `j = 2·n1 − n2 − n3 + p + 3`. Order one uses
//! `j = 2·[dr1=R] + p` and order zero simply `j = p`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::amplitude::{Gaussian, StateVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("memory order must be 0, 1 or 2, got {0}")]
    BadOrder(u8),
    #[error("basis index {j} out of range for memory order {order}")]
    BadBasis { j: u8, order: u8 },
    #[error("positions {0} and {1} are not adjacent")]
    NotAdjacent(i64, i64),
    #[error("coin value must be 0 or 1, got {0}")]
    BadCoin(u8),
    #[error("unknown preset '{0}' (expected 'single' or 'symmetric')")]
    UnknownPreset(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemoryOrder {
    Zero,
    One,
    Two,
}

impl MemoryOrder {
    pub const ALL: [MemoryOrder; 3] = [MemoryOrder::Zero, MemoryOrder::One, MemoryOrder::Two];

    pub fn from_u8(m: u8) -> Result<Self, WalkError> {
        match m {
            0 => Ok(MemoryOrder::Zero),
            1 => Ok(MemoryOrder::One),
            2 => Ok(MemoryOrder::Two),
            _ => Err(WalkError::BadOrder(m)),
        }
    }

    pub fn as_u8(self) -> u8 {
        match self {
            MemoryOrder::Zero => 0,
            MemoryOrder::One => 1,
            MemoryOrder::Two => 2,
        }
    }

    /// Number of basis states per position, `2^(m+1)`.
    pub fn basis_count(self) -> u8 {
        2 << self.as_u8()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex(u8);

impl BasisIndex {
    pub const fn new(j: u8) -> Self {
        BasisIndex(j)
    }

    /// Checked constructor.
    pub fn for_order(j: u8, order: MemoryOrder) -> Result<Self, WalkError> {
        if j < order.basis_count() {
            Ok(BasisIndex(j))
        } else {
            Err(WalkError::BadBasis { j, order: order.as_u8() })
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    pub fn coin(self) -> u8 {
        self.0 & 1
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    L,
    R,
}

impl Direction {
    pub fn shift(self) -> i64 {
        match self {
            Direction::L => -1,
            Direction::R => 1,
        }
    }

    pub fn flip(self) -> Direction {
        match self {
            Direction::L => Direction::R,
            Direction::R => Direction::L,
        }
    }

    fn bit(self) -> u8 {
        (self == Direction::R) as u8
    }

    fn from_bit(b: u8) -> Direction {
        if b & 1 == 1 {
            Direction::R
        } else {
            Direction::L
        }
    }

    fn between(from: i64, to: i64) -> Result<Direction, WalkError> {
        match to - from {
            1 => Ok(Direction::R),
            -1 => Ok(Direction::L),
            _ => Err(WalkError::NotAdjacent(from, to)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Direction::L => 'L',
            Direction::R => 'R',
        }
    }
}

/// `|n3, n2, n1, p⟩`: positions two steps ago, one step ago, now, and the coin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OriginalState {
    pub n3: i64,
    pub n2: i64,
    pub n1: i64,
    pub p: u8,
}

impl OriginalState {
    pub fn new(n3: i64, n2: i64, n1: i64, p: u8) -> Self {
        OriginalState { n3, n2, n1, p }
    }
}

pub fn encode_basis(s: &OriginalState) -> Result<BasisIndex, WalkError> {
    if s.p > 1 {
        return Err(WalkError::BadCoin(s.p));
    }
    Direction::between(s.n3, s.n2)?;
    Direction::between(s.n2, s.n1)?;
    let j = 2 * s.n1 - s.n2 - s.n3 + s.p as i64 + 3;
    Ok(BasisIndex(j as u8))
}

pub fn decode_basis(j: BasisIndex, k: i64) -> Result<OriginalState, WalkError> {
    let j = BasisIndex::for_order(j.get(), MemoryOrder::Two)?.get() as i64;
    let p = j % 2;
    let n2 = k - (j - j % 4) / 2 + 1;
    let n3 = n2 - (j % 4) + p + 1;
    Ok(OriginalState { n3, n2, n1: k, p: p as u8 })
}

/// Basis index of a walker with the given coin whose recent moves are
/// `history` (oldest first). Only the last `m` moves matter.
pub fn basis_from_history(order: MemoryOrder, history: &[Direction], p: u8) -> Result<BasisIndex, WalkError> {
    if p > 1 {
        return Err(WalkError::BadCoin(p));
    }
    let need = order.as_u8() as usize;
    let recent = &history[history.len().saturating_sub(need)..];
    if recent.len() < need {
        return Err(WalkError::BadBasis { j: 0, order: order.as_u8() });
    }
    let j = match order {
        MemoryOrder::Zero => p,
        MemoryOrder::One => 2 * recent[0].bit() + p,
        MemoryOrder::Two => 4 * recent[1].bit() + 2 * recent[0].bit() + p,
    };
    Ok(BasisIndex(j))
}

/// The remembered moves of a basis state, oldest first.
pub fn history_of(order: MemoryOrder, j: BasisIndex) -> Vec<Direction> {
    let j = j.get();
    match order {
        MemoryOrder::Zero => vec![],
        MemoryOrder::One => vec![Direction::from_bit(j >> 1)],
        MemoryOrder::Two => vec![Direction::from_bit(j >> 1), Direction::from_bit(j >> 2)],
    }
}

/// A 2×2 integer coin `[[a, b], [c, d]]` acting as `new0 = a·x0 + b·x1`,
/// `new1 = c·x0 + d·x1`. The shared `1/√2` normalization is implicit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coin {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Coin {
    pub const HADAMARD: Coin = Coin { a: 1, b: 1, c: 1, d: -1 };

    /// Weight of the transition from coin `old` to coin `new`.
    pub fn weight(&self, new: u8, old: u8) -> i64 {
        match (new, old) {
            (0, 0) => self.a,
            (0, _) => self.b,
            (_, 0) => self.c,
            _ => self.d,
        }
    }
}

impl Default for Coin {
    fn default() -> Self {
        Coin::HADAMARD
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub target: BasisIndex,
    pub shift: i64,
    pub weight: i64,
}

/// For every source basis, the branch into new coin 0 and the branch into
/// new coin 1, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionRule {
    order: MemoryOrder,
    branches: Vec<[Branch; 2]>,
}

impl TransitionRule {
    pub fn order(&self) -> MemoryOrder {
        self.order
    }

    pub fn branches(&self, j: BasisIndex) -> &[Branch; 2] {
        &self.branches[j.get() as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisIndex, &[Branch; 2])> {
        self.branches.iter().enumerate().map(|(j, b)| (BasisIndex(j as u8), b))
    }
}

/// Next move once the new coin is known.
fn next_direction(order: MemoryOrder, history: &[Direction], coin: u8) -> Direction {
    match order {
        MemoryOrder::Zero => {
            if coin == 0 {
                Direction::L
            } else {
                Direction::R
            }
        }
        MemoryOrder::One => {
            let last = history[0];
            if coin == 0 {
                last.flip()
            } else {
                last
            }
        }
        MemoryOrder::Two => {
            let (older, last) = (history[0], history[1]);
            match (coin, older == last) {
                // opposite trend is kept, consistent trend is broken
                (0, false) => last,
                (0, true) => last.flip(),
                _ => older,
            }
        }
    }
}

pub fn transition_table(order: MemoryOrder) -> TransitionRule {
    transition_table_with(order, Coin::HADAMARD)
}

pub fn transition_table_with(order: MemoryOrder, coin: Coin) -> TransitionRule {
    let branches = (0..order.basis_count())
        .map(|j| {
            let src = BasisIndex(j);
            let mut history = history_of(order, src);
            let old = src.coin();
            let make = |new: u8, history: &mut Vec<Direction>| {
                let d = next_direction(order, history, new);
                history.push(d);
                let target = basis_from_history(order, history, new).expect("history long enough");
                history.pop();
                Branch { target, shift: d.shift(), weight: coin.weight(new, old) }
            };
            [make(0, &mut history), make(1, &mut history)]
        })
        .collect();
    TransitionRule { order, branches }
}

/// One step of the walk with the Hadamard coin.
pub fn step(v: &StateVector) -> StateVector {
    step_with(v, &transition_table(v.order()))
}

/// One step with an explicit transition rule.
///
/// # Panics
///
/// If the rule's memory order differs from the vector's.
pub fn step_with(v: &StateVector, rule: &TransitionRule) -> StateVector {
    assert_eq!(v.order(), rule.order(), "transition rule order mismatch");
    let mut next: BTreeMap<(i64, BasisIndex), Gaussian> = BTreeMap::new();
    for (k, j, amp) in v.iter() {
        for br in rule.branches(j) {
            let slot = next.entry((k + br.shift, br.target)).or_default();
            match br.weight {
                1 => *slot += amp,
                -1 => {
                    slot.re -= &amp.re;
                    slot.im -= &amp.im;
                }
                w => *slot += &(amp * w),
            }
        }
    }
    next.retain(|_, g| !g.is_zero());
    StateVector::from_parts(v.order(), v.scale() + 1, next)
}

pub fn run(init: &StateVector, n: usize) -> StateVector {
    let rule = transition_table(init.order());
    run_with(init, n, &rule)
}

pub fn run_with(init: &StateVector, n: usize, rule: &TransitionRule) -> StateVector {
    let mut v = init.clone();
    for _ in 0..n {
        v = step_with(&v, rule);
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Single,
    Symmetric,
}

impl FromStr for Preset {
    type Err = WalkError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single" => Ok(Preset::Single),
            "symmetric" => Ok(Preset::Symmetric),
            other => Err(WalkError::UnknownPreset(other.to_string())),
        }
    }
}

/// Built-in initial states, all at the origin.
///
/// `single` is `|0,1,0,0⟩` for order two, `|1,0,0⟩` for order one and
/// `|0,1⟩` for order zero. `symmetric` puts amplitude 1 on every even basis index and `i`
/// on every odd one, normalized.
pub fn preset_init(preset: Preset, order: MemoryOrder) -> StateVector {
    match preset {
        Preset::Single => {
            let p = if order == MemoryOrder::Zero { 1 } else { 0 };
            let j = basis_from_history(order, &[Direction::R, Direction::L], p).expect("valid history");
            let mut v = StateVector::new(order, 0);
            v.accumulate(0, j, &Gaussian::real(1));
            v
        }
        Preset::Symmetric => {
            let count = order.basis_count();
            let mut v = StateVector::new(order, order.as_u8() as u32 + 1);
            for j in 0..count {
                let amp = if j % 2 == 0 {
                    Gaussian::real(1)
                } else {
                    Gaussian::new(BigInt::from(0), BigInt::from(1))
                };
                v.accumulate(0, BasisIndex(j), &amp);
            }
            v
        }
    }
}

pub fn preset_by_name(name: &str, order: MemoryOrder) -> Result<StateVector, WalkError> {
    Ok(preset_init(name.parse()?, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::Rational;
    use num_traits::One;

    fn b(j: u8) -> BasisIndex {
        BasisIndex::new(j)
    }

    fn br(target: u8, shift: i64, weight: i64) -> Branch {
        Branch { target: b(target), shift, weight }
    }

    fn sorted(bs: &[Branch; 2]) -> Vec<(u8, i64, i64)> {
        let mut v: Vec<_> = bs.iter().map(|x| (x.target.get(), x.shift, x.weight)).collect();
        v.sort();
        v
    }

    #[test]
    fn encode_table_rows() {
        for k in [-3i64, 0, 5] {
            let rows = [
                (k + 2, k + 1, k, 0, 0),
                (k + 2, k + 1, k, 1, 1),
                (k, k + 1, k, 0, 2),
                (k, k + 1, k, 1, 3),
                (k, k - 1, k, 0, 4),
                (k, k - 1, k, 1, 5),
                (k - 2, k - 1, k, 0, 6),
                (k - 2, k - 1, k, 1, 7),
            ];
            for (n3, n2, n1, p, j) in rows {
                assert_eq!(encode_basis(&OriginalState::new(n3, n2, n1, p)).unwrap(), b(j));
            }
        }
    }

    #[test]
    fn encode_rejects_jumps() {
        assert_eq!(encode_basis(&OriginalState::new(0, 2, 1, 0)), Err(WalkError::NotAdjacent(0, 2)));
        assert_eq!(encode_basis(&OriginalState::new(0, 1, 1, 0)), Err(WalkError::NotAdjacent(1, 1)));
        assert_eq!(encode_basis(&OriginalState::new(0, 1, 0, 2)), Err(WalkError::BadCoin(2)));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_basis(b(2), 0).unwrap(), OriginalState::new(0, 1, 0, 0));
        assert_eq!(decode_basis(b(0), 5).unwrap(), OriginalState::new(7, 6, 5, 0));
        assert!(decode_basis(b(8), 0).is_err());
    }

    #[test]
    fn decode_round_trip() {
        for j in 0..8 {
            for k in -3..=3 {
                let s = decode_basis(b(j), k).unwrap();
                assert_eq!(s.n1, k);
                assert_eq!(encode_basis(&s).unwrap(), b(j));
            }
        }
    }

    #[test]
    fn history_encoding_agrees_with_positions() {
        for j in 0..8 {
            let s = decode_basis(b(j), 0).unwrap();
            let h = [Direction::between(s.n3, s.n2).unwrap(), Direction::between(s.n2, s.n1).unwrap()];
            assert_eq!(basis_from_history(MemoryOrder::Two, &h, s.p).unwrap(), b(j));
            assert_eq!(history_of(MemoryOrder::Two, b(j)), h.to_vec());
        }
    }

    #[test]
    fn order_two_table_matches_reference_update() {
        let t = transition_table(MemoryOrder::Two);
        let want = [
            [(1, -1, 1), (4, 1, 1)],
            [(1, -1, -1), (4, 1, 1)],
            [(0, -1, 1), (5, 1, 1)],
            [(0, -1, 1), (5, 1, -1)],
            [(3, -1, 1), (6, 1, 1)],
            [(3, -1, -1), (6, 1, 1)],
            [(2, -1, 1), (7, 1, 1)],
            [(2, -1, 1), (7, 1, -1)],
        ];
        for (j, w) in want.iter().enumerate() {
            assert_eq!(sorted(t.branches(b(j as u8))), w.to_vec(), "j={j}");
        }
        assert_eq!(t.branches(b(0))[0], br(4, 1, 1));
        assert_eq!(t.branches(b(5))[1], br(3, -1, -1));
    }

    #[test]
    fn each_basis_has_one_branch_per_new_coin() {
        for order in MemoryOrder::ALL {
            let t = transition_table(order);
            for (_, bs) in t.iter() {
                assert_eq!(bs[0].target.coin(), 0);
                assert_eq!(bs[1].target.coin(), 1);
            }
        }
    }

    #[test]
    fn lower_order_rules() {
        let t0 = transition_table(MemoryOrder::Zero);
        assert_eq!(t0.branches(b(0)), &[br(0, -1, 1), br(1, 1, 1)]);
        assert_eq!(t0.branches(b(1)), &[br(0, -1, 1), br(1, 1, -1)]);
        let t1 = transition_table(MemoryOrder::One);
        // j = 2·[last=R] + p
        assert_eq!(t1.branches(b(0)), &[br(2, 1, 1), br(1, -1, 1)]);
        assert_eq!(t1.branches(b(3)), &[br(0, -1, 1), br(3, 1, -1)]);
    }

    #[test]
    fn first_two_steps() {
        let v0 = preset_init(Preset::Single, MemoryOrder::Two);
        let v1 = step(&v0);
        assert_eq!(v1.scale(), 1);
        assert_eq!(v1.len(), 2);
        assert_eq!(v1.get(-1, b(0)), Some(&Gaussian::real(1)));
        assert_eq!(v1.get(1, b(5)), Some(&Gaussian::real(1)));
        let v2 = step(&v1);
        assert_eq!(v2.len(), 4);
        assert_eq!(v2.get(0, b(4)), Some(&Gaussian::real(1)));
        assert_eq!(v2.get(-2, b(1)), Some(&Gaussian::real(1)));
        assert_eq!(v2.get(2, b(6)), Some(&Gaussian::real(1)));
        assert_eq!(v2.get(0, b(3)), Some(&Gaussian::real(-1)));
        assert_eq!(v2.norm_squared(), Rational::one());
    }

    #[test]
    fn run_zero_is_identity() {
        let v = preset_init(Preset::Symmetric, MemoryOrder::Two);
        assert_eq!(run(&v, 0), v);
    }

    #[test]
    fn presets() {
        let s2 = preset_init(Preset::Single, MemoryOrder::Two);
        assert_eq!(s2.iter().map(|(k, j, _)| (k, j.get())).collect::<Vec<_>>(), vec![(0, 2)]);
        let s1 = preset_init(Preset::Single, MemoryOrder::One);
        assert_eq!(s1.iter().map(|(k, j, _)| (k, j.get())).collect::<Vec<_>>(), vec![(0, 0)]);
        let s0 = preset_init(Preset::Single, MemoryOrder::Zero);
        assert_eq!(s0.iter().map(|(k, j, _)| (k, j.get())).collect::<Vec<_>>(), vec![(0, 1)]);

        let y2 = preset_init(Preset::Symmetric, MemoryOrder::Two);
        assert_eq!(y2.scale(), 3);
        assert_eq!(y2.len(), 8);
        assert_eq!(y2.get(0, b(6)), Some(&Gaussian::real(1)));
        assert_eq!(y2.get(0, b(7)), Some(&Gaussian::new(0, 1)));
        let y0 = preset_init(Preset::Symmetric, MemoryOrder::Zero);
        assert_eq!(y0.scale(), 1);
        assert_eq!(y0.get(0, b(0)), Some(&Gaussian::real(1)));
        assert_eq!(y0.get(0, b(1)), Some(&Gaussian::new(0, 1)));
        for order in MemoryOrder::ALL {
            for p in [Preset::Single, Preset::Symmetric] {
                assert_eq!(preset_init(p, order).norm_squared(), Rational::one());
            }
        }
        assert!(preset_by_name("bogus", MemoryOrder::Two).is_err());
    }

    #[test]
    fn single_distributions() {
        let v0 = preset_init(Preset::Single, MemoryOrder::Two);
        let d1 = step(&v0).distribution();
        let half = Rational::new(1.into(), 2.into());
        let quarter = Rational::new(1.into(), 4.into());
        assert_eq!(d1.iter().collect::<Vec<_>>(), vec![(-1, &half), (1, &half)]);
        let d2 = run(&v0, 2).distribution();
        assert_eq!(d2.iter().collect::<Vec<_>>(), vec![(-2, &quarter), (0, &half), (2, &quarter)]);
    }
}
