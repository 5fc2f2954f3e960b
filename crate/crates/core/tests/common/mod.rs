//! Brute-force reference implementations shared by the integration tests.
//! None of these reuse the library's formulas.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use qwalk_core::amplitude::{Distribution, Rational};
use qwalk_core::{Direction, DirectionSequence};

/// All compositions of `u` into `m` positive parts.
pub fn compositions(u: i64, m: i64) -> Vec<Vec<i64>> {
    fn go(u: i64, m: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if m == 0 {
            if u == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=u - (m - 1) {
            acc.push(first);
            go(u - first, m - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if u >= 0 && m >= 0 {
        go(u, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Compositions of `u` into `m` parts, none equal to 1 and exactly `v` equal to 2.
pub fn count_compositions(u: i64, m: i64, v: i64) -> u128 {
    compositions(u, m)
        .iter()
        .filter(|c| !c.contains(&1) && c.iter().filter(|&&x| x == 2).count() as i64 == v)
        .count() as u128
}

/// Ways to choose `m` of `u` slots with exactly `r` among the first `x`.
pub fn count_placements(u: i64, m: i64, x: i64, r: i64) -> u128 {
    let mut n = 0;
    for mask in 0u32..1 << u {
        if mask.count_ones() as i64 == m && (mask & ((1u32 << x) - 1)).count_ones() as i64 == r {
            n += 1;
        }
    }
    n
}

/// Words over {S, M} with `x` S's and `y` M's, `g` maximal runs, and a last
/// letter admitted by `t1` (S) or `t0` (M).
pub fn count_group_perms(x: i64, y: i64, g: i64, t1: u8, t0: u8) -> u128 {
    let len = x + y;
    let mut n = 0;
    for mask in 0u32..1 << len {
        // bit set = S
        if mask.count_ones() as i64 != x {
            continue;
        }
        let letters: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
        let runs = 1 + letters.windows(2).filter(|w| w[0] != w[1]).count() as i64;
        let last_ok = match letters.last() {
            Some(true) => t1 == 1,
            Some(false) => t0 == 1,
            None => false,
        };
        if runs == g && last_ok {
            n += 1;
        }
    }
    n
}

/// Realized numbers of size-2 parts over compositions of `n` into `c` parts
/// with `c1` parts of size 1.
pub fn realized_size2(n: i64, c: i64, c1: i64) -> BTreeSet<i64> {
    compositions(n, c)
        .into_iter()
        .filter(|p| p.iter().filter(|&&x| x == 1).count() as i64 == c1)
        .map(|p| p.iter().filter(|&&x| x == 2).count() as i64)
        .collect()
}

/// Every sequence `R L ...` of total length `len ≥ 2`.
pub fn walk_sequences(len: usize) -> impl Iterator<Item = DirectionSequence> {
    let n = len - 2;
    (0..1u64 << n).map(move |i| DirectionSequence::from_index(n, i))
}

pub fn moves_of(s: &str) -> Vec<Direction> {
    s.parse::<DirectionSequence>().unwrap().moves().to_vec()
}

/// Dense two-step-memory walk transcribed line by line from the reference
/// MATLAB listing: rows are basis states, columns positions, and every
/// update is written in place while the sweep visits one parity class.
/// Starts from the symmetric eight-component state and returns the exact
/// distribution after `n` steps.
pub fn dense_reference(n: usize) -> Distribution {
    type C = (BigInt, BigInt);
    let (a, b, c, d) = (1i64, 1i64, 1i64, -1i64);
    let width = 2 * n + 3;
    let ini = n + 1;
    let zero = || (BigInt::zero(), BigInt::zero());
    let mut arr: Vec<Vec<C>> = vec![vec![zero(); width]; 8];
    for j in 0..8 {
        arr[j][ini] = if j % 2 == 0 { (1.into(), 0.into()) } else { (0.into(), 1.into()) };
    }
    let lin = |x: i64, p: &C, y: i64, q: &C| -> C { (&p.0 * x + &q.0 * y, &p.1 * x + &q.1 * y) };
    let add = |s: &mut C, v: C| {
        s.0 += v.0;
        s.1 += v.1;
    };
    for t in 0..n {
        let mut k = ini - t;
        while k <= ini + t {
            let col: Vec<C> = (0..8).map(|j| arr[j][k].clone()).collect();
            add(&mut arr[4][k + 1], lin(a, &col[0], b, &col[1]));
            add(&mut arr[1][k - 1], lin(c, &col[0], d, &col[1]));
            add(&mut arr[0][k - 1], lin(a, &col[2], b, &col[3]));
            add(&mut arr[5][k + 1], lin(c, &col[2], d, &col[3]));
            add(&mut arr[6][k + 1], lin(a, &col[4], b, &col[5]));
            add(&mut arr[3][k - 1], lin(c, &col[4], d, &col[5]));
            add(&mut arr[2][k - 1], lin(a, &col[6], b, &col[7]));
            add(&mut arr[7][k + 1], lin(c, &col[6], d, &col[7]));
            for row in arr.iter_mut() {
                row[k] = zero();
            }
            k += 2;
        }
    }
    let den = BigInt::from(1) << (n + 3);
    let mut map = std::collections::BTreeMap::new();
    for k in (ini - n..=ini + n).step_by(2) {
        let s: BigInt = (0..8).map(|j| &arr[j][k].0 * &arr[j][k].0 + &arr[j][k].1 * &arr[j][k].1).sum();
        if !s.is_zero() {
            map.insert(k as i64 - ini as i64, Rational::new(s, den.clone()));
        }
    }
    Distribution::from_map(map)
}
