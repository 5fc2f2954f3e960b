//! Amplitudes of the two-step-memory Hadamard walk from `|0,1,0,0⟩` as finite
//! signed sums over cluster statistics.
//!
//! After `n` steps at position `k` the walker has made `N_L = (n−k)/2 + 1`
//! left and `N_R = (n+k)/2 + 1` right moves, counting the two initial ones.
//! Each basis amplitude is a sum of parts (see [`catalog`]) and equals an
//! integer signed path count divided by `√2^n`.

pub mod audit;
pub mod catalog;
pub mod expr;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, Zero};
use thiserror::Error;

use crate::amplitude::{Distribution, Gaussian, StateVector};
use crate::par::Execution;
use crate::walk::{BasisIndex, MemoryOrder};
use catalog::{corrected_parts, literal_parts, PartSpec};
use expr::{slot_of, Expr, ExprError, Value, VARIABLES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("part {part}: {source}")]
    Expr { part: String, source: ExprError },
    #[error("part {part}: {what} reads '{var}' before it is bound")]
    Unbound { part: String, what: String, var: String },
    #[error("part {part}: '{var}' cannot be summed over")]
    BadVariable { part: String, var: String },
    #[error("part {part} at n={n}, k={k} sums to the non-integer {value}")]
    NonInteger { part: String, n: usize, k: i64, value: String },
    #[error("part {part}: arithmetic overflow")]
    Overflow { part: String },
    #[error("no part named '{0}'")]
    UnknownPart(String),
}

struct CompiledVar {
    slot: usize,
    lo: Expr,
    hi: Expr,
}

/// A part ready for evaluation.
pub struct CompiledPart {
    spec: PartSpec,
    vars: Vec<CompiledVar>,
    sign: Expr,
    weight: Expr,
}

const BASE_SLOTS: [&str; 3] = ["n", "NL", "NR"];

impl CompiledPart {
    pub fn compile(spec: &PartSpec) -> Result<CompiledPart, ClosedFormError> {
        let err = |source| ClosedFormError::Expr { part: spec.id.clone(), source };
        let mut bound: Vec<usize> = BASE_SLOTS.iter().map(|s| slot_of(s).expect("base slot")).collect();
        let check = |e: &Expr, bound: &[usize], what: &str| {
            match e.variables().into_iter().find(|v| !bound.contains(v)) {
                Some(v) => Err(ClosedFormError::Unbound {
                    part: spec.id.clone(),
                    what: what.to_string(),
                    var: VARIABLES[v].to_string(),
                }),
                None => Ok(()),
            }
        };
        let mut vars = Vec::new();
        for v in &spec.vars {
            let slot = match slot_of(&v.name) {
                Some(s) if !bound.contains(&s) => s,
                _ => return Err(ClosedFormError::BadVariable { part: spec.id.clone(), var: v.name.clone() }),
            };
            let lo = Expr::parse(&v.lo).map_err(err)?;
            let hi = Expr::parse(&v.hi).map_err(err)?;
            check(&lo, &bound, &format!("bound of {}", v.name))?;
            check(&hi, &bound, &format!("bound of {}", v.name))?;
            bound.push(slot);
            vars.push(CompiledVar { slot, lo, hi });
        }
        let sign = Expr::parse(&spec.sign).map_err(err)?;
        let weight = Expr::parse(&spec.weight).map_err(err)?;
        check(&sign, &bound, "sign")?;
        check(&weight, &bound, "weight")?;
        Ok(CompiledPart { spec: spec.clone(), vars, sign, weight })
    }

    pub fn spec(&self) -> &PartSpec {
        &self.spec
    }

    pub fn id(&self) -> &str {
        &self.spec.id
    }

    pub fn basis(&self) -> u8 {
        self.spec.basis
    }

    /// Exact value of the part's sum at `(n, k)`, not yet checked for
    /// integrality.
    pub fn sum(&self, n: usize, k: i64) -> Result<Value, ClosedFormError> {
        let mut env = [0i128; 10];
        env[slot_of("n").unwrap()] = n as i128;
        env[slot_of("NL").unwrap()] = (n as i128 - k as i128) / 2 + 1;
        env[slot_of("NR").unwrap()] = (n as i128 + k as i128) / 2 + 1;
        self.sum_from(0, &mut env).map_err(|e| match e {
            ExprError::Overflow => ClosedFormError::Overflow { part: self.spec.id.clone() },
            source => ClosedFormError::Expr { part: self.spec.id.clone(), source },
        })
    }

    fn sum_from(&self, depth: usize, env: &mut [i128; 10]) -> Result<Value, ExprError> {
        if depth == self.vars.len() {
            let w = self.weight.eval(env)?;
            if w.is_zero() {
                return Ok(w);
            }
            let s = self.sign.eval_int(env)?;
            return Ok(if s.rem_euclid(2) == 0 { w } else { -w });
        }
        let var = &self.vars[depth];
        let lo = var.lo.eval_int(env)?;
        let hi = var.hi.eval_int(env)?;
        let mut acc = Value::zero();
        for x in lo..=hi {
            env[var.slot] = x;
            acc = acc.checked_add(&self.sum_from(depth + 1, env)?).ok_or(ExprError::Overflow)?;
        }
        Ok(acc)
    }

    /// The part's signed count at `(n, k)`; non-integer sums are errors.
    pub fn signed_count(&self, n: usize, k: i64) -> Result<i128, ClosedFormError> {
        let v = self.sum(n, k)?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(ClosedFormError::NonInteger { part: self.spec.id.clone(), n, k, value: v.to_string() })
        }
    }
}

/// A compiled set of parts covering all eight amplitudes.
pub struct Catalog {
    parts: Vec<CompiledPart>,
}

impl Catalog {
    pub fn from_specs(specs: &[PartSpec]) -> Result<Catalog, ClosedFormError> {
        Ok(Catalog { parts: specs.iter().map(CompiledPart::compile).collect::<Result<_, _>>()? })
    }

    /// The parts exactly as published.
    pub fn literal() -> Catalog {
        Catalog::from_specs(&literal_parts()).expect("literal catalog compiles")
    }

    /// The parts with all recorded corrections.
    pub fn corrected() -> Catalog {
        Catalog::from_specs(&corrected_parts()).expect("corrected catalog compiles")
    }

    pub fn parts(&self) -> &[CompiledPart] {
        &self.parts
    }

    pub fn part(&self, id: &str) -> Option<&CompiledPart> {
        self.parts.iter().find(|p| p.id() == id)
    }

    /// Copy of the specs with one part's weight negated, for exercising the
    /// verification harness.
    pub fn specs_with_negated_part(specs: &[PartSpec], id: &str) -> Result<Vec<PartSpec>, ClosedFormError> {
        let mut out = specs.to_vec();
        let p = out.iter_mut().find(|p| p.id == id).ok_or_else(|| ClosedFormError::UnknownPart(id.to_string()))?;
        p.weight = format!("-({})", p.weight);
        Ok(out)
    }

    /// Amplitude of basis `j` after `n` steps at position `k`. Outside the
    /// reachable set the amplitude is zero. The parts describe paths with at
    /// least one free move, so `n = 0` is the initial state itself.
    pub fn amplitude(&self, j: BasisIndex, n: usize, k: i64) -> Result<ClosedAmplitude, ClosedFormError> {
        let scale = n as u32;
        if !reachable(n, k) || j.get() >= 8 {
            return Ok(ClosedAmplitude { signed_count: 0, scale });
        }
        if n == 0 {
            return Ok(ClosedAmplitude { signed_count: (j.get() == 2) as i128, scale });
        }
        let mut total: i128 = 0;
        for p in self.parts.iter().filter(|p| p.basis() == j.get()) {
            let c = p.signed_count(n, k)?;
            total = total.checked_add(c).ok_or(ClosedFormError::Overflow { part: p.id().to_string() })?;
        }
        Ok(ClosedAmplitude { signed_count: total, scale })
    }

    /// Full state after `n` steps.
    pub fn state(&self, n: usize, exec: Execution) -> Result<StateVector, ClosedFormError> {
        let cells: Vec<(i64, u8)> =
            (-(n as i64)..=n as i64).step_by(2).flat_map(|k| (0..8u8).map(move |j| (k, j))).collect();
        let values = exec.map(cells, |(k, j)| self.amplitude(BasisIndex::new(j), n, k).map(|a| (k, j, a)));
        let mut v = StateVector::new(MemoryOrder::Two, n as u32);
        for r in values {
            let (k, j, a) = r?;
            v.accumulate(k, BasisIndex::new(j), &Gaussian::real(BigInt::from(a.signed_count)));
        }
        Ok(v)
    }

    pub fn distribution(&self, n: usize, exec: Execution) -> Result<Distribution, ClosedFormError> {
        Ok(self.state(n, exec)?.distribution())
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::corrected()
    }
}

fn reachable(n: usize, k: i64) -> bool {
    k.unsigned_abs() as usize <= n && (n as i64 - k).rem_euclid(2) == 0
}

/// `signed_count / √2^scale`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedAmplitude {
    pub signed_count: i128,
    pub scale: u32,
}

fn shared() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::corrected)
}

pub fn closed_amplitude(j: BasisIndex, n: usize, k: i64) -> Result<ClosedAmplitude, ClosedFormError> {
    shared().amplitude(j, n, k)
}

pub fn closed_state(n: usize) -> Result<StateVector, ClosedFormError> {
    shared().state(n, Execution::default())
}

pub fn closed_distribution(n: usize) -> Result<Distribution, ClosedFormError> {
    shared().distribution(n, Execution::default())
}
