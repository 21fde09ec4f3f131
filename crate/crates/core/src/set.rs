//! Subsets of a ground set of at most 64 labelled elements.
//!
//! Element labels are 1-based; label `i` occupies bit `i - 1`. Every matroid in
//! the crate, including minors and duals, indexes its elements with the labels
//! of the matroid it was derived from, so sets can be compared across them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Largest supported element label.
pub const MAX_LABEL: usize = 64;

/// A set of element labels stored as a bitmask.
///
/// `Ord` is the lexicographic order on the sorted label sequences, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The labels `1..=n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LABEL, "ground set larger than {MAX_LABEL}");
        if n == MAX_LABEL {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        assert!((1..=MAX_LABEL).contains(&label), "label {label} out of range");
        ElementSet(1u64 << (label - 1))
    }

    /// Builds a set from labels, rejecting labels outside `1..=64`.
    pub fn try_from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self, Error> {
        let mut bits = 0u64;
        for label in labels {
            if !(1..=MAX_LABEL).contains(&label) {
                return Err(Error::InvalidSubset(format!("label {label} out of range")));
            }
            bits |= 1u64 << (label - 1);
        }
        Ok(ElementSet(bits))
    }

    /// Panicking variant of [`ElementSet::try_from_labels`] for literals.
    pub fn of(labels: &[usize]) -> Self {
        Self::try_from_labels(labels.iter().copied()).expect("valid labels")
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 >> (label - 1) & 1 == 1
    }

    pub fn with(self, label: usize) -> Self {
        self | Self::singleton(label)
    }

    pub fn without(self, label: usize) -> Self {
        self - Self::singleton(label)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: ElementSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn min_label(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max_label(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset, in increasing bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Subsets of the given size, in lexicographic order.
    pub fn subsets_of_size(self, size: usize) -> impl Iterator<Item = ElementSet> {
        let labels = self.to_vec();
        let none = size > labels.len();
        labels
            .into_iter()
            .combinations(size)
            .filter(move |_| !none)
            .map(|c| ElementSet::of(&c))
    }
}

/// Ascending iterator over the labels of a set.
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

/// Iterator over all submasks of a mask.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let current = self.next?;
        self.next = if current == self.mask {
            None
        } else {
            Some(current.wrapping_sub(self.mask) & self.mask)
        };
        Some(ElementSet(current))
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Labels;

    fn into_iter(self) -> Labels {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The sequences agree up to the lowest differing label d. The set
        // holding d is smaller unless the other one has nothing beyond d.
        let d = diff & diff.wrapping_neg();
        let beyond = !(d | (d - 1));
        if self.0 & d != 0 {
            if other.0 & beyond != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & beyond != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `1,2,3`, `{1,2,3}`, `-` or the empty string.
impl FromStr for ElementSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "-" {
            return Ok(ElementSet::EMPTY);
        }
        let labels = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad element label `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ElementSet::try_from_labels(labels)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
