//! Finite fields of sets, represented by their atom partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{Subset, Universe};

/// A field of subsets of a universe: all unions of a partition into atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetField {
    universe: Universe,
    atoms: Vec<Subset>,
}

/// Outcome of re-checking closure of an enumerated field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldClosure {
    pub events: usize,
    pub closed_union: bool,
    pub closed_intersection: bool,
    pub closed_complement: bool,
}

impl SetField {
    pub fn from_atoms(universe: Universe, mut atoms: Vec<Subset>) -> Result<Self> {
        let mut seen = Subset::EMPTY;
        for &a in &atoms {
            if a.is_empty() || a.meets(seen) || !a.is_subset(universe.full()) {
                return Err(Error::AtomsNotPartition);
            }
            seen = seen.union(a);
        }
        if seen != universe.full() {
            return Err(Error::AtomsNotPartition);
        }
        atoms.sort_by(|a, b| a.lex_cmp(*b));
        Ok(Self { universe, atoms })
    }

    /// The field generated by a family: atoms are the classes of "belongs to
    /// exactly the same members". Members must be nonempty.
    pub fn generated_by(universe: Universe, family: &[Subset]) -> Result<Self> {
        if family.iter().any(|m| m.is_empty()) {
            return Err(Error::EmptyCoverMember);
        }
        let n = universe.len();
        let signature = |x: usize| -> Vec<bool> { family.iter().map(|m| m.contains(x)).collect() };
        let mut atoms: Vec<(Vec<bool>, Subset)> = Vec::new();
        for x in 0..n {
            let sig = signature(x);
            match atoms.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, a)) => *a = a.with(x),
                None => atoms.push((sig, Subset::singleton(x))),
            }
        }
        Self::from_atoms(universe, atoms.into_iter().map(|(_, a)| a).collect())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    /// `s` is a union of atoms.
    pub fn contains(&self, s: Subset) -> bool {
        s.is_subset(self.universe.full()) && self.atoms.iter().all(|a| a.is_subset(s) || !a.meets(s))
    }

    /// The event formed by the atoms selected by bit mask `sel`.
    pub fn event_of_selection(&self, sel: u32) -> Subset {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| sel >> i & 1 == 1)
            .fold(Subset::EMPTY, |acc, (_, a)| acc.union(*a))
    }

    /// All events, ordered by atom-selection mask (∅ first, the universe last).
    pub fn events(&self) -> Vec<Subset> {
        (0..1u32 << self.atoms.len()).map(|s| self.event_of_selection(s)).collect()
    }

    /// Re-verifies closure of the enumerated events under ∪, ∩ and complement.
    pub fn verify_closure(&self) -> FieldClosure {
        let events = self.events();
        let set: std::collections::HashSet<Subset> = events.iter().copied().collect();
        let mut cu = true;
        let mut ci = true;
        for &a in &events {
            for &b in &events {
                cu &= set.contains(&a.union(b));
                ci &= set.contains(&a.intersection(b));
            }
        }
        let cc = events.iter().all(|&a| set.contains(&self.universe.complement(a)));
        FieldClosure { events: events.len(), closed_union: cu, closed_intersection: ci, closed_complement: cc }
    }
}

/// The smallest field containing every member of a cover.
pub fn sigma_field_from_cover(universe: Universe, members: &[Subset]) -> Result<SetField> {
    SetField::generated_by(universe, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlapping_cover_splits_into_singletons() {
        let u = Universe::range(3).unwrap();
        let f = sigma_field_from_cover(u, &[Subset::from_indices([0, 1]), Subset::from_indices([1, 2])]).unwrap();
        assert_eq!(f.atoms(), &[Subset::singleton(0), Subset::singleton(1), Subset::singleton(2)]);
        assert_eq!(f.events().len(), 8);
        let c = f.verify_closure();
        assert!(c.closed_union && c.closed_intersection && c.closed_complement);
    }

    #[test]
    fn whole_universe_cover_is_trivial_field() {
        let u = Universe::range(3).unwrap();
        let f = sigma_field_from_cover(u.clone(), &[u.full()]).unwrap();
        assert_eq!(f.events(), vec![Subset::EMPTY, u.full()]);
        assert!(!f.contains(Subset::singleton(0)));
    }

    #[test]
    fn empty_member_rejected() {
        let u = Universe::range(2).unwrap();
        assert_eq!(sigma_field_from_cover(u, &[Subset::EMPTY]).unwrap_err(), Error::EmptyCoverMember);
    }
}
