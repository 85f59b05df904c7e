//! Subsets of the simple reflections of `A_n` and their combinatorics.
//!
//! The simple reflections `s_1, ..., s_n` generate the symmetric group
//! `S_{n+1}`; `s_i` and `s_j` commute exactly when `|i - j| >= 2`, so the
//! non-commuting pairs form a path graph on `{s_1, ..., s_n}`. This module
//! provides connected components on that path, parabolic subgroup orders,
//! the admissible family `S(J)` (subsets with no connected component inside
//! `J`), the commuting augmentation `I -> I*_J`, and the classification of
//! the stabilizer subsets whose orbit polytope is simple.

use std::fmt;

use crate::error::{Error, Result};
use crate::eulerian::factorial;
use crate::scalar::Scalar;

/// Largest supported rank; subsets are stored as `u32` bitmasks.
pub const MAX_RANK: u32 = 31;

/// A subset of the simple reflections `{s_1, ..., s_n}`.
///
/// Bit `i - 1` of the mask is set when `s_i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleSubset {
    rank: u32,
    mask: u32,
}

impl SimpleSubset {
    pub fn empty(rank: u32) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        SimpleSubset { rank, mask: 0 }
    }

    pub fn full(rank: u32) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        SimpleSubset {
            rank,
            mask: full_mask(rank),
        }
    }

    /// Builds a subset from 1-based reflection indices.
    pub fn new(rank: u32, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        let mut mask = 0u32;
        for index in members {
            if index < 1 || index > rank {
                return Err(Error::IndexOutOfRange { index, rank });
            }
            mask |= 1 << (index - 1);
        }
        Ok(SimpleSubset { rank, mask })
    }

    /// Builds a subset directly from a bitmask (bit `i-1` is `s_i`).
    pub fn from_mask(rank: u32, mask: u32) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        debug_assert_eq!(mask & !full_mask(rank), 0, "mask has bits beyond rank");
        SimpleSubset { rank, mask }
    }

    /// The tail interval `J(k, n) = {s_(n-k+1), ..., s_n}`.
    ///
    /// `k = 0` is the empty set; the start index is clamped at 1, so any
    /// `k >= n` yields the full set.
    pub fn tail_interval(k: u32, rank: u32) -> Self {
        let len = k.min(rank);
        let mask = full_mask(rank) & !full_mask(rank - len);
        SimpleSubset::from_mask(rank, mask)
    }

    /// Parses the textual syntax shared with the CLI: comma-separated
    /// indices (`"s4,s5"` or `"4,5"`), or `"empty"` for the empty set.
    pub fn parse(input: &str, rank: u32) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() || trimmed.eq_ignore_ascii_case("empty") {
            return Ok(SimpleSubset::empty(rank));
        }
        let mut members = Vec::new();
        for part in trimmed.split(',') {
            let token = part.trim().trim_start_matches(['s', 'S']);
            let index: u32 = token.parse().map_err(|_| Error::SubsetParse {
                input: input.to_string(),
                reason: format!("bad index {part:?}"),
            })?;
            members.push(index);
        }
        SimpleSubset::new(rank, members)
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Number of members.
    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.rank)
    }

    pub fn contains(&self, index: u32) -> bool {
        (1..=self.rank).contains(&index) && self.mask & (1 << (index - 1)) != 0
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.rank).filter(|&i| self.mask & (1 << (i - 1)) != 0)
    }

    pub fn complement(&self) -> Self {
        SimpleSubset {
            rank: self.rank,
            mask: full_mask(self.rank) & !self.mask,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        SimpleSubset {
            rank: self.rank,
            mask: self.mask | other.mask,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.rank == other.rank && self.mask & !other.mask == 0
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.rank == other.rank && self.mask & other.mask == 0
    }
}

fn full_mask(rank: u32) -> u32 {
    if rank == 0 {
        0
    } else {
        (1u32 << rank) - 1
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "s{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}/A_{}", self.rank)
    }
}

/// Maximal runs `[a, b]` of consecutive reflection indices in a subset,
/// ordered left to right. Runs are disjoint and non-adjacent (gap >= 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    intervals: Vec<(u32, u32)>,
}

impl ComponentDecomposition {
    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Connected components of a subset on the path graph.
pub fn connected_components(set: &SimpleSubset) -> ComponentDecomposition {
    let mut intervals = Vec::new();
    let mut mask = set.mask();
    while mask != 0 {
        let start = mask.trailing_zeros();
        let run_len = (!(mask >> start)).trailing_zeros();
        intervals.push((start + 1, start + run_len));
        mask &= !(run_bits(run_len) << start);
    }
    ComponentDecomposition { intervals }
}

fn run_bits(len: u32) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

/// Order of the parabolic subgroup `W_I`: a component of `m` consecutive
/// reflections generates a copy of `S_{m+1}`, so `|W_I|` is the product of
/// `(b - a + 2)!` over the components `[a, b]`.
pub fn parabolic_order<T: Scalar>(set: &SimpleSubset) -> T {
    connected_components(set)
        .intervals()
        .iter()
        .fold(T::one(), |acc, &(a, b)| acc * factorial::<T>(b - a + 2))
}

/// `I*_J = I ∪ { s ∈ J : s commutes with every t ∈ I }`.
///
/// On the path graph `s_j` commutes with `s_i` iff `|i - j| >= 2`, so the
/// adjoined elements are the members of `J` at distance >= 2 from all of `I`.
pub fn i_star(i: &SimpleSubset, j: &SimpleSubset) -> SimpleSubset {
    assert_eq!(i.rank(), j.rank(), "rank mismatch");
    let near = i.mask() | i.mask() << 1 | i.mask() >> 1;
    SimpleSubset::from_mask(i.rank(), i.mask() | (j.mask() & !near))
}

fn no_component_inside(mut mask: u32, j_mask: u32) -> bool {
    while mask != 0 {
        let start = mask.trailing_zeros();
        let run = run_bits((!(mask >> start)).trailing_zeros()) << start;
        if run & !j_mask == 0 {
            return false;
        }
        mask &= !run;
    }
    true
}

/// Lazy enumeration of the admissible family
/// `S(J) = { I ⊆ S : no connected component of I lies inside J }`,
/// in ascending bitmask order (a documented, stable order).
pub struct AdmissibleSubsets {
    rank: u32,
    j_mask: u32,
    next: u64,
}

impl Iterator for AdmissibleSubsets {
    type Item = SimpleSubset;

    fn next(&mut self) -> Option<SimpleSubset> {
        let end = 1u64 << self.rank;
        while self.next < end {
            let mask = self.next as u32;
            self.next += 1;
            if no_component_inside(mask, self.j_mask) {
                return Some(SimpleSubset::from_mask(self.rank, mask));
            }
        }
        None
    }
}

/// All `I` with no connected component contained in `J`. For `J = ∅` this
/// is every one of the `2^n` subsets.
pub fn admissible_subsets(rank: u32, j: &SimpleSubset) -> AdmissibleSubsets {
    assert_eq!(j.rank(), rank, "rank mismatch");
    AdmissibleSubsets {
        rank,
        j_mask: j.mask(),
        next: 0,
    }
}

/// Which of the combinatorially smooth forms a stabilizer subset matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Empty,
    LeftInterval,
    RightInterval,
    TwoIntervals,
    None,
}

impl Form {
    pub fn as_str(&self) -> &'static str {
        match self {
            Form::Empty => "empty",
            Form::LeftInterval => "left-interval",
            Form::RightInterval => "right-interval",
            Form::TwoIntervals => "two-intervals",
            Form::None => "none",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decides whether the orbit polytope of a weight with stabilizer `J` is
/// simple, returning the matching form tag.
///
/// The simple stabilizers are: the empty set, a prefix `{s_1..s_i}`, a
/// suffix `{s_j..s_n}` with `j > 1`, or a prefix plus a suffix with
/// `j - i >= 3`. The full set is not a proper stabilizer and classifies as
/// `(false, None)`.
pub fn classify_combinatorially_smooth(set: &SimpleSubset) -> (bool, Form) {
    if set.is_empty() {
        return (true, Form::Empty);
    }
    if set.is_full() {
        return (false, Form::None);
    }
    let n = set.rank();
    let components = connected_components(set);
    match components.intervals() {
        [(1, _)] => (true, Form::LeftInterval),
        [(_, b)] if *b == n => (true, Form::RightInterval),
        [(1, i), (j, b)] if *b == n && j - i >= 3 => (true, Form::TwoIntervals),
        _ => (false, Form::None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn subset(rank: u32, members: &[u32]) -> SimpleSubset {
        SimpleSubset::new(rank, members.iter().copied()).unwrap()
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            connected_components(&subset(5, &[1, 2, 4])).intervals(),
            &[(1, 2), (4, 4)]
        );
        assert!(connected_components(&SimpleSubset::empty(4)).is_empty());
        assert_eq!(
            connected_components(&subset(4, &[1, 2, 3, 4])).intervals(),
            &[(1, 4)]
        );
    }

    #[test]
    fn parabolic_order_examples() {
        assert_eq!(
            parabolic_order::<Int>(&subset(5, &[1, 2, 4])),
            Int::from(12)
        );
        assert_eq!(
            parabolic_order::<Int>(&SimpleSubset::empty(5)),
            Int::from(1)
        );
        assert_eq!(
            parabolic_order::<Int>(&subset(4, &[1, 2, 3, 4])),
            Int::from(120)
        );
    }

    /// Independent check of the bit-level run extraction: rebuild the
    /// components by scanning the sorted index list.
    #[test]
    fn components_match_a_naive_scan() {
        for n in 0..=10u32 {
            for mask in 0..(1u32 << n) {
                let set = SimpleSubset::from_mask(n, mask);
                let mut naive: Vec<(u32, u32)> = Vec::new();
                for i in set.iter() {
                    match naive.last_mut() {
                        Some((_, b)) if *b + 1 == i => *b = i,
                        _ => naive.push((i, i)),
                    }
                }
                assert_eq!(
                    connected_components(&set).intervals(),
                    naive.as_slice(),
                    "n={n} mask={mask:b}"
                );
            }
        }
    }

    /// Independent check of the admissibility filter: test the defining
    /// condition component by component.
    #[test]
    fn admissibility_matches_the_defining_condition() {
        for n in 0..=8u32 {
            for j_mask in 0..(1u32 << n) {
                let j = SimpleSubset::from_mask(n, j_mask);
                let family: Vec<u32> = admissible_subsets(n, &j).map(|s| s.mask()).collect();
                let naive: Vec<u32> = (0..(1u32 << n))
                    .filter(|&mask| {
                        connected_components(&SimpleSubset::from_mask(n, mask))
                            .intervals()
                            .iter()
                            .all(|&(a, b)| (a..=b).any(|i| !j.contains(i)))
                    })
                    .collect();
                assert_eq!(family, naive, "n={n} J={j:?}");
            }
        }
    }

    #[test]
    fn parabolic_order_divides_group_order() {
        use num_integer::Integer;
        use num_traits::Zero;
        for n in 1..=6u32 {
            let group: Int = factorial(n + 1);
            for mask in 0..(1u32 << n) {
                let order = parabolic_order::<Int>(&SimpleSubset::from_mask(n, mask));
                assert!(group.mod_floor(&order).is_zero(), "n={n} mask={mask:b}");
            }
        }
    }

    #[test]
    fn admissible_subsets_examples() {
        let family: Vec<u32> = admissible_subsets(2, &subset(2, &[2]))
            .map(|s| s.mask())
            .collect();
        assert_eq!(family, vec![0b00, 0b01, 0b11]);

        assert_eq!(admissible_subsets(3, &SimpleSubset::empty(3)).count(), 8);
        assert_eq!(admissible_subsets(3, &subset(3, &[3])).count(), 6);
        // the two excluded subsets are exactly {3} and {1,3}
        let excluded: Vec<u32> = (0..8u32)
            .filter(|&m| !admissible_subsets(3, &subset(3, &[3])).any(|s| s.mask() == m))
            .collect();
        assert_eq!(excluded, vec![0b100, 0b101]);
    }

    #[test]
    fn admissible_family_of_empty_j_is_the_power_set() {
        for n in 0..=16u32 {
            let count = admissible_subsets(n, &SimpleSubset::empty(n)).count();
            assert_eq!(count, 1usize << n, "n={n}");
        }
    }

    #[test]
    fn i_star_examples() {
        let j = subset(2, &[2]);
        assert_eq!(i_star(&SimpleSubset::empty(2), &j), subset(2, &[2]));
        assert_eq!(
            i_star(&subset(3, &[1]), &subset(3, &[3])),
            subset(3, &[1, 3])
        );
        assert_eq!(i_star(&subset(2, &[1, 2]), &j), subset(2, &[1, 2]));
    }

    #[test]
    fn i_star_contains_i_and_is_idempotent_on_the_augmentation() {
        for n in 1..=6u32 {
            for j_mask in 0..(1u32 << n) {
                let j = SimpleSubset::from_mask(n, j_mask);
                for i in admissible_subsets(n, &j) {
                    let star = i_star(&i, &j);
                    assert!(i.is_subset_of(&star));
                    assert_eq!(i_star(&star, &j), star, "n={n} I={i:?} J={j:?}");
                }
            }
        }
    }

    #[test]
    fn tail_interval_family() {
        assert_eq!(SimpleSubset::tail_interval(0, 5), SimpleSubset::empty(5));
        assert_eq!(SimpleSubset::tail_interval(2, 5), subset(5, &[4, 5]));
        assert_eq!(SimpleSubset::tail_interval(5, 5), SimpleSubset::full(5));
        assert_eq!(SimpleSubset::tail_interval(9, 5), SimpleSubset::full(5));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_combinatorially_smooth(&subset(5, &[4, 5])),
            (true, Form::RightInterval)
        );
        assert_eq!(
            classify_combinatorially_smooth(&subset(3, &[2])),
            (false, Form::None)
        );
        assert_eq!(
            classify_combinatorially_smooth(&subset(3, &[1, 3])),
            (false, Form::None)
        );
        assert_eq!(
            classify_combinatorially_smooth(&SimpleSubset::empty(4)),
            (true, Form::Empty)
        );
        assert_eq!(
            classify_combinatorially_smooth(&subset(4, &[1, 2])),
            (true, Form::LeftInterval)
        );
        assert_eq!(
            classify_combinatorially_smooth(&subset(4, &[1, 4])),
            (true, Form::TwoIntervals)
        );
        assert_eq!(
            classify_combinatorially_smooth(&SimpleSubset::full(4)),
            (false, Form::None)
        );
    }

    #[test]
    fn parse_round_trips_display() {
        let j = SimpleSubset::parse("s4,s5", 5).unwrap();
        assert_eq!(j, subset(5, &[4, 5]));
        assert_eq!(SimpleSubset::parse("4, 5", 5).unwrap(), j);
        assert_eq!(j.to_string(), "s4,s5");
        assert_eq!(
            SimpleSubset::parse("empty", 5).unwrap(),
            SimpleSubset::empty(5)
        );
        assert_eq!(SimpleSubset::empty(5).to_string(), "empty");
        assert!(SimpleSubset::parse("s6", 5).is_err());
        assert!(SimpleSubset::parse("s0", 5).is_err());
        assert!(SimpleSubset::parse("abc", 5).is_err());
    }
}
