//! Exact amplitude arithmetic.
//!
//! After `t` applications of a Hadamard-type coin every amplitude of the walk
//! has the form `(re + i·im) / √2^t` with integer `re`, `im`. A [`StateVector`]
//! therefore stores plain Gaussian integers and a single shared scale.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::walk::{BasisIndex, MemoryOrder};

/// Exact probabilities.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AmplitudeError {
    /// `√2^a` and `√2^b` with `a - b` odd have no common dyadic-Gaussian scale.
    #[error("scales {0} and {1} differ in parity; the sum is not a dyadic Gaussian")]
    ScaleParity(u32, u32),
}

/// A Gaussian integer `re + i·im`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Gaussian { re: re.into(), im: im.into() }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        Gaussian { re: re.into(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re² + im²`.
    pub fn norm_squared(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale_by(&self, factor: &BigInt) -> Gaussian {
        Gaussian { re: &self.re * factor, im: &self.im * factor }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, rhs: &Gaussian) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl Mul<i64> for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: i64) -> Gaussian {
        Gaussian { re: &self.re * rhs, im: &self.im * rhs }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", self.re, self.im.abs())
            }
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

/// A complex number `(re + i·im) / √2^scale`.
///
/// Equality compares values, not representations: `(re, im, t)` equals
/// `(re·2^d, im·2^d, t + 2d)` for every `d ≥ 0`.
#[derive(Clone, Debug)]
pub struct DyadicGaussian {
    pub value: Gaussian,
    pub scale: u32,
}

impl DyadicGaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>, scale: u32) -> Self {
        DyadicGaussian { value: Gaussian::new(re, im), scale }
    }

    pub fn zero() -> Self {
        DyadicGaussian { value: Gaussian::default(), scale: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Rewrites the value at a larger scale of the same parity.
    pub fn rescaled(&self, scale: u32) -> Option<DyadicGaussian> {
        if self.is_zero() {
            return Some(DyadicGaussian { value: Gaussian::default(), scale });
        }
        if scale < self.scale || !(scale - self.scale).is_multiple_of(2) {
            return None;
        }
        let factor = BigInt::one() << ((scale - self.scale) / 2);
        Some(DyadicGaussian { value: self.value.scale_by(&factor), scale })
    }

    /// Removes common factors of two while the scale allows it. Zero
    /// canonicalizes to scale 0.
    pub fn canonical(&self) -> DyadicGaussian {
        if self.is_zero() {
            return DyadicGaussian::zero();
        }
        let mut re = self.value.re.clone();
        let mut im = self.value.im.clone();
        let mut scale = self.scale;
        let two = BigInt::from(2);
        while scale >= 2 && re.is_even() && im.is_even() {
            re /= &two;
            im /= &two;
            scale -= 2;
        }
        DyadicGaussian { value: Gaussian { re, im }, scale }
    }

    /// Exact `|z|²` as a rational.
    pub fn norm_squared(&self) -> Rational {
        Rational::new(self.value.norm_squared(), BigInt::one() << self.scale)
    }
}

/// Exact sum of two dyadic Gaussians. The result carries the larger of the
/// two scales; operands whose scales differ in parity cannot be summed in
/// this number system unless one of them is zero.
pub fn add_scaled(a: &DyadicGaussian, b: &DyadicGaussian) -> Result<DyadicGaussian, AmplitudeError> {
    let scale = a.scale.max(b.scale);
    let lhs = a.rescaled(scale).ok_or(AmplitudeError::ScaleParity(a.scale, b.scale))?;
    let rhs = b.rescaled(scale).ok_or(AmplitudeError::ScaleParity(a.scale, b.scale))?;
    Ok(DyadicGaussian { value: lhs.value + rhs.value, scale })
}

impl PartialEq for DyadicGaussian {
    fn eq(&self, other: &Self) -> bool {
        let x = self.canonical();
        let y = other.canonical();
        x.scale == y.scale && x.value == y.value
    }
}

impl Eq for DyadicGaussian {}

impl fmt::Display for DyadicGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/√2^{}", self.value, self.scale)
    }
}

/// Sparse walk state: `(position, basis) -> Gaussian integer`, all sharing
/// one `√2^scale` denominator. Zero amplitudes are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector {
    order: MemoryOrder,
    scale: u32,
    entries: BTreeMap<(i64, BasisIndex), Gaussian>,
}

impl StateVector {
    pub fn new(order: MemoryOrder, scale: u32) -> Self {
        StateVector { order, scale, entries: BTreeMap::new() }
    }

    pub fn order(&self) -> MemoryOrder {
        self.order
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `amp` to the entry at `(position, basis)`, dropping it if the sum
    /// vanishes.
    ///
    /// # Panics
    ///
    /// If `basis` is out of range for the vector's memory order.
    pub fn accumulate(&mut self, position: i64, basis: BasisIndex, amp: &Gaussian) {
        assert!(
            basis.get() < self.order.basis_count(),
            "basis {basis} out of range for memory order {}",
            self.order.as_u8()
        );
        if amp.is_zero() {
            return;
        }
        let key = (position, basis);
        let slot = self.entries.entry(key).or_default();
        *slot += amp;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, position: i64, basis: BasisIndex) -> Option<&Gaussian> {
        self.entries.get(&(position, basis))
    }

    /// Amplitude at `(position, basis)` with the vector's scale attached.
    pub fn amplitude(&self, position: i64, basis: BasisIndex) -> DyadicGaussian {
        let value = self.get(position, basis).cloned().unwrap_or_default();
        DyadicGaussian { value, scale: self.scale }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, BasisIndex, &Gaussian)> {
        self.entries.iter().map(|(&(k, j), v)| (k, j, v))
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        let mut last = None;
        self.entries.keys().filter_map(move |&(k, _)| {
            if last == Some(k) {
                None
            } else {
                last = Some(k);
                Some(k)
            }
        })
    }

    pub(crate) fn from_parts(
        order: MemoryOrder,
        scale: u32,
        entries: BTreeMap<(i64, BasisIndex), Gaussian>,
    ) -> Self {
        debug_assert!(entries.values().all(|v| !v.is_zero()));
        StateVector { order, scale, entries }
    }

    /// Same state rewritten at a larger scale of equal parity.
    pub fn rescaled(&self, scale: u32) -> Option<StateVector> {
        if scale < self.scale || !(scale - self.scale).is_multiple_of(2) {
            return None;
        }
        let factor = BigInt::one() << ((scale - self.scale) / 2);
        let entries = self.entries.iter().map(|(&key, v)| (key, v.scale_by(&factor))).collect();
        Some(StateVector { order: self.order, scale, entries })
    }

    /// `Σ |amp|²` as an exact rational.
    pub fn norm_squared(&self) -> Rational {
        let total: BigInt = self.entries.values().map(Gaussian::norm_squared).sum();
        Rational::new(total, BigInt::one() << self.scale)
    }

    /// Probability of finding the walker at `position`.
    pub fn probability_at(&self, position: i64) -> Rational {
        let total: BigInt = self
            .entries
            .range((position, BasisIndex::new(0))..=(position, BasisIndex::new(u8::MAX)))
            .map(|(_, v)| v.norm_squared())
            .sum();
        Rational::new(total, BigInt::one() << self.scale)
    }

    /// Position distribution, ascending by position. Only occupied positions
    /// appear.
    pub fn distribution(&self) -> Distribution {
        let mut sums: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&(k, _), v) in &self.entries {
            *sums.entry(k).or_default() += v.norm_squared();
        }
        let den = BigInt::one() << self.scale;
        Distribution {
            probabilities: sums.into_iter().map(|(k, s)| (k, Rational::new(s, den.clone()))).collect(),
        }
    }
}

/// Exact position distribution.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    probabilities: BTreeMap<i64, Rational>,
}

impl Distribution {
    pub fn from_map(probabilities: BTreeMap<i64, Rational>) -> Self {
        Distribution { probabilities }
    }

    /// Probability at `k`; zero where nothing is stored.
    pub fn get(&self, k: i64) -> Rational {
        self.probabilities.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.probabilities.iter().map(|(&k, p)| (k, p))
    }

    pub fn total(&self) -> Rational {
        self.probabilities.values().fold(Rational::zero(), |acc, p| acc + p)
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    /// Exact mirror symmetry `p(k) = p(-k)` over all positions.
    pub fn is_symmetric(&self) -> bool {
        self.probabilities.iter().all(|(&k, p)| self.get(-k) == *p)
    }

    /// Drops zero entries so that distributions computed by different
    /// routes compare equal.
    pub fn without_zeros(&self) -> Distribution {
        Distribution {
            probabilities: self
                .probabilities
                .iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(&k, p)| (k, p.clone()))
                .collect(),
        }
    }
}
