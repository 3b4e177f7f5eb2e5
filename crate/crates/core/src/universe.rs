//! Indexed finite universes and subset masks.
//!
//! Every structure in the crate lives over a [`Universe`]: an ordered list of
//! distinct labels. Subsets of a universe are [`Subset`] bit masks where bit
//! `i` stands for the element with index `i`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on universe size. Masks are `u32`, so 24 leaves headroom.
pub const DEFAULT_UNIVERSE_CAP: usize = 24;

/// Universes up to this size are checked exhaustively over `℘(S)²` or `℘(S)³`
/// by the law suites; larger ones are sampled.
pub const EXHAUSTIVE_CAP: usize = 4;

/// Hard ceiling imposed by the `u32` mask representation.
const MASK_BITS: usize = 24;

/// A finite, indexed carrier with unique labels.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    labels: Arc<[String]>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(labels, DEFAULT_UNIVERSE_CAP)
    }

    pub fn with_cap<I, S>(labels: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let cap = cap.min(MASK_BITS);
        if labels.len() > cap {
            return Err(Error::UniverseTooLarge { size: labels.len(), cap });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels: labels.into() })
    }

    /// Universe `{0, 1, …, n-1}` labelled by the decimal indices.
    pub fn range(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    /// Universe labelled `a, b, c, …`; used for probability fixtures.
    pub fn letters(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::UniverseTooLarge { size: n, cap: 26 });
        }
        Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_of_labels<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = Subset::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn subset_of_indices<I: IntoIterator<Item = usize>>(&self, idx: I) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for i in idx {
            if i >= self.len() {
                return Err(Error::ElementOutOfRange { index: i, size: self.len() });
            }
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn complement(&self, s: Subset) -> Subset {
        s.complement(self.len())
    }

    /// All `2^n` subsets in mask order.
    pub fn powerset(&self) -> impl Iterator<Item = Subset> {
        Subset::powerset(self.len())
    }

    /// Render a subset with element labels, e.g. `{A,C,G}`.
    pub fn show(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

/// Serialized as the label list.
impl serde::Serialize for Universe {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.labels.iter())
    }
}

impl<'de> serde::Deserialize<'de> for Universe {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<String>::deserialize(d)?;
        Universe::new(labels).map_err(serde::de::Error::custom)
    }
}

/// A subset of an indexed universe, stored as a membership mask.
///
/// The derived `Ord` is the numeric mask order, used only for canonical
/// sorting. The deterministic choice order is [`Subset::lex_cmp`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MASK_BITS);
        if n == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(idx: I) -> Self {
        idx.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Element indices in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// All subsets of `{0..n}` in mask order.
    pub fn powerset(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << n).map(Subset)
    }

    /// All subsets of `self`, including `∅` and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Subset(cur))
        })
    }

    /// Lexicographic order of the sorted element lists: `{0,1} < {0,1,2} < {1}`.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Serialized as the sorted list of element indices.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = idx.iter().find(|&&i| i >= MASK_BITS) {
            return Err(serde::de::Error::custom(format!("element index {bad} out of range")));
        }
        Ok(Subset::from_indices(idx))
    }
}

pub struct SubsetIter(u32);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Union of a family; `∅` for the empty family.
pub fn union_all<I: IntoIterator<Item = Subset>>(family: I) -> Subset {
    family.into_iter().fold(Subset::EMPTY, Subset::union)
}

/// Intersection of a nonempty family; `None` for the empty family.
pub fn intersect_all<I: IntoIterator<Item = Subset>>(family: I) -> Option<Subset> {
    family.into_iter().reduce(Subset::intersection)
}

/// Sorts and deduplicates a family in mask order.
pub fn canonical(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort();
    family.dedup();
    family
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra_basics() {
        let a = Subset::from_indices([0, 1]);
        let b = Subset::from_indices([1, 2]);
        assert_eq!(a.union(b), Subset::from_indices([0, 1, 2]));
        assert_eq!(a.intersection(b), Subset::singleton(1));
        assert_eq!(a.symmetric_difference(b), Subset::from_indices([0, 2]));
        assert_eq!(a.complement(4), Subset::from_indices([2, 3]));
        assert!(Subset::singleton(1).is_proper_subset(a));
        assert!(!a.is_proper_subset(a));
    }

    #[test]
    fn subsets_of_a_mask() {
        let s = Subset::from_indices([0, 2, 3]);
        let subs: Vec<Subset> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn lex_order_is_list_order() {
        let a = Subset::from_indices([0, 1]);
        let b = Subset::from_indices([0, 1, 2]);
        let c = Subset::singleton(1);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(c), Ordering::Less);
        assert_eq!(Subset::singleton(0).lex_cmp(Subset::singleton(1)), Ordering::Less);
    }

    #[test]
    fn universe_rejects_duplicates_and_oversize() {
        assert_eq!(Universe::new(["a", "a"]), Err(Error::DuplicateLabel("a".into())));
        assert!(matches!(Universe::range(25), Err(Error::UniverseTooLarge { .. })));
        assert!(Universe::with_cap(["a", "b", "c"], 2).is_err());
        let u = Universe::letters(3).unwrap();
        assert_eq!(u.show(u.subset_of_labels(["c", "a"]).unwrap()), "{a,c}");
    }
}
