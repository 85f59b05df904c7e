//! Permutations of `1..=n` and their ascent statistics.

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=n`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let ok = (1..=n as u32).contains(&v) && !seen[(v - 1) as usize];
            if !ok {
                return Err(Error::InvalidPermutation { word, n });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Ascent set `{ i : 1 <= i <= n-1, p_i < p_(i+1) }`, 1-based positions
    /// in increasing order.
    pub fn ascent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn ascent_count(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] < w[1]).count()
    }
}
