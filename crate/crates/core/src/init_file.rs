//! Text format for custom initial states.
//!
//! ```text
//! # comments and blank lines are ignored
//! memory 2
//! scale 1
//! # n3 n2 n1 p re im
//! 0 1 0 0 1 0
//! 2 1 0 1 0 1
//! ```
//!
//! `memory` and `scale` must precede all records. Each record lists the
//! remembered positions (oldest first), the current position, the coin and
//! the Gaussian-integer amplitude; the state is `Σ (re + i·im)/√2^scale`.
//! Order one records are `n2 n1 p re im` and order zero records `n1 p re im`.
//! Consecutive positions must be adjacent, no state may repeat, and the total
//! norm must be exactly one.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::amplitude::{Gaussian, Rational, StateVector};
use crate::walk::{basis_from_history, Direction, MemoryOrder, WalkError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InitError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    State { line: usize, source: WalkError },
    #[error("line {line}: state listed twice")]
    Duplicate { line: usize },
    #[error("missing '{0}' header")]
    MissingHeader(&'static str),
    #[error("no amplitude records")]
    Empty,
    #[error("state norm is {0}, expected exactly 1")]
    NotNormalized(Rational),
}

fn syntax(line: usize, msg: impl Into<String>) -> InitError {
    InitError::Syntax { line, msg: msg.into() }
}

fn parse_int<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, InitError> {
    tok.parse().map_err(|_| syntax(line, format!("invalid {what} '{tok}'")))
}

pub fn parse_init(text: &str) -> Result<StateVector, InitError> {
    let mut order: Option<MemoryOrder> = None;
    let mut scale: Option<u32> = None;
    let mut vector: Option<StateVector> = None;
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "memory" | "scale" if vector.is_some() => {
                return Err(syntax(line, format!("'{}' after amplitude records", toks[0])));
            }
            "memory" => {
                let [_, m] = toks[..] else { return Err(syntax(line, "expected 'memory <0|1|2>'")) };
                let m: u8 = parse_int(m, line, "memory order")?;
                order = Some(MemoryOrder::from_u8(m).map_err(|source| InitError::State { line, source })?);
            }
            "scale" => {
                let [_, t] = toks[..] else { return Err(syntax(line, "expected 'scale <t>'")) };
                scale = Some(parse_int(t, line, "scale")?);
            }
            _ => {
                let m = order.ok_or(InitError::MissingHeader("memory"))?;
                let t = scale.ok_or(InitError::MissingHeader("scale"))?;
                let v = vector.get_or_insert_with(|| StateVector::new(m, t));
                let npos = m.as_u8() as usize + 1;
                if toks.len() != npos + 3 {
                    return Err(syntax(line, format!("expected {} fields, found {}", npos + 3, toks.len())));
                }
                let positions: Vec<i64> =
                    toks[..npos].iter().map(|s| parse_int(s, line, "position")).collect::<Result<_, _>>()?;
                let p: u8 = parse_int(toks[npos], line, "coin")?;
                let re: BigInt = parse_int(toks[npos + 1], line, "amplitude")?;
                let im: BigInt = parse_int(toks[npos + 2], line, "amplitude")?;
                let history = positions
                    .windows(2)
                    .map(|w| match w[1] - w[0] {
                        1 => Ok(Direction::R),
                        -1 => Ok(Direction::L),
                        _ => Err(InitError::State { line, source: WalkError::NotAdjacent(w[0], w[1]) }),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let j = basis_from_history(m, &history, p).map_err(|source| InitError::State { line, source })?;
                let k = *positions.last().expect("at least one position");
                if !seen.insert((k, j)) {
                    return Err(InitError::Duplicate { line });
                }
                v.accumulate(k, j, &Gaussian::new(re, im));
            }
        }
    }
    let v = vector.ok_or(InitError::Empty)?;
    let norm = v.norm_squared();
    if norm != Rational::one() {
        return Err(InitError::NotNormalized(norm));
    }
    Ok(v)
}
