//! Local maxima of position distributions.
//!
//! A peak is a position whose probability is strictly larger than at both
//! neighbours `k ± 2` of the same parity (a missing neighbour counts as zero).
//! A run of equal values bounded by smaller ones counts once, at its member
//! closest to the origin.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::amplitude::{Distribution, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peak {
    pub position: i64,
    pub probability: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakReport {
    /// By probability descending, then `|k|`, then `k`.
    pub peaks: Vec<Peak>,
    pub symmetric: bool,
}

impl PeakReport {
    pub fn top(&self, count: usize) -> &[Peak] {
        &self.peaks[..count.min(self.peaks.len())]
    }

    pub fn has_peak_at(&self, k: i64) -> bool {
        self.peaks.iter().any(|p| p.position == k)
    }
}

fn closer_to_origin(a: i64, b: i64) -> bool {
    (a.abs(), a) < (b.abs(), b)
}

pub fn find_peaks(dist: &Distribution) -> PeakReport {
    let mut peaks = Vec::new();
    let parities: BTreeSet<i64> = dist.iter().map(|(k, _)| k.rem_euclid(2)).collect();
    for parity in parities {
        let ks: Vec<i64> = dist.iter().map(|(k, _)| k).filter(|k| k.rem_euclid(2) == parity).collect();
        let (lo, hi) = (ks[0], ks[ks.len() - 1]);
        let mut k = lo;
        while k <= hi {
            let p = dist.get(k);
            // extent of the run of equal values starting at k
            let mut end = k;
            while end + 2 <= hi && dist.get(end + 2) == p {
                end += 2;
            }
            if !p.is_zero() && dist.get(k - 2) < p && dist.get(end + 2) < p {
                let mut best = k;
                let mut m = k;
                while m <= end {
                    if closer_to_origin(m, best) {
                        best = m;
                    }
                    m += 2;
                }
                peaks.push(Peak { position: best, probability: p });
            }
            k = end + 2;
        }
    }
    peaks.sort_by(|a, b| {
        b.probability
            .cmp(&a.probability)
            .then(a.position.abs().cmp(&b.position.abs()))
            .then(a.position.cmp(&b.position))
    });
    PeakReport { peaks, symmetric: dist.is_symmetric() }
}
