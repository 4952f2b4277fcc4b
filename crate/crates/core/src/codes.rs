//! Weight enumerators of the binary linear [n, r+1] code whose generator
//! matrix columns are the points of a cap.
//!
//! For a message vector `a` the codeword coordinate at column `p` is the
//! GF(2) inner product `a · p`; the enumerator tallies the Hamming
//! weights of the 2^(r+1) - 1 nonzero-message codewords. It is invariant
//! under projective equivalence and independent of the column order.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::fmt::Write as _;

use crate::geometry::{PointSet, Space};

/// Multiset of codeword weights: weight -> multiplicity, positive entries
/// only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightEnumerator {
    counts: BTreeMap<u32, u64>,
}

impl WeightEnumerator {
    /// `(weight, multiplicity)` pairs in ascending weight order.
    pub fn counts(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&w, &m)| (w, m))
    }

    /// Number of nonzero-weight codewords: equals 2^(r+1) - 1 for
    /// spanning caps.
    pub fn total_words(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Sum of all codeword weights: equals n * 2^r for caps of size n.
    pub fn total_weight(&self) -> u64 {
        self.counts.iter().map(|(&w, &m)| w as u64 * m).sum()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, m) in self.counts() {
            write!(f, "{w}^{{{m}}}")?;
        }
        Ok(())
    }
}

/// Tallies codeword weights over all nonzero messages.
pub fn weight_enumerator(space: &Space, s: &PointSet) -> WeightEnumerator {
    let mut counts = BTreeMap::new();
    for message in 1..=space.num_points() {
        let mut weight = 0u32;
        for p in s.iter() {
            weight += (message & p.encoding()).count_ones() & 1;
        }
        if weight > 0 {
            *counts.entry(weight).or_insert(0) += 1;
        }
    }
    WeightEnumerator { counts }
}

/// Renders the enumerator in `w^{m}` notation, ascending weights, e.g.
/// `2^{15}4^{15}6^{1}`.
pub fn format_enumerator(e: &WeightEnumerator) -> String {
    let mut out = String::new();
    write!(out, "{e}").expect("writing to a String cannot fail");
    out
}
