//! Binary relations on a universe and the classical approximations they induce.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::universe::{canonical, Subset, Universe};

/// A relation stored as successor rows: `rows[x]` is `{y : x R y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    universe: Universe,
    rows: Vec<Subset>,
}

/// Structural flags of a relation, always recomputed from the pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub anti_serial: bool,
}

impl BinaryRelation {
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(universe: Universe, pairs: I) -> Result<Self> {
        let n = universe.len();
        let mut rows = vec![Subset::EMPTY; n];
        for (x, y) in pairs {
            for i in [x, y] {
                if i >= n {
                    return Err(Error::ElementOutOfRange { index: i, size: n });
                }
            }
            rows[x] = rows[x].with(y);
        }
        Ok(Self { universe, rows })
    }

    pub fn from_rows(universe: Universe, rows: Vec<Subset>) -> Result<Self> {
        let n = universe.len();
        if rows.len() != n {
            return Err(Error::UniverseMismatch);
        }
        let full = universe.full();
        if rows.iter().any(|r| !r.is_subset(full)) {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self { universe, rows })
    }

    pub fn identity(universe: Universe) -> Self {
        let rows = (0..universe.len()).map(Subset::singleton).collect();
        Self { universe, rows }
    }

    /// The equivalence whose classes are the given blocks (must partition the universe).
    pub fn from_partition(universe: Universe, blocks: &[Subset]) -> Result<Self> {
        let n = universe.len();
        let mut rows = vec![Subset::EMPTY; n];
        let mut seen = Subset::EMPTY;
        for &b in blocks {
            if b.is_empty() || b.meets(seen) || !b.is_subset(universe.full()) {
                return Err(Error::NotAPartition);
            }
            seen = seen.union(b);
            for x in b.iter() {
                rows[x] = b;
            }
        }
        if seen != universe.full() {
            return Err(Error::NotAPartition);
        }
        Ok(Self { universe, rows })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn successors(&self, x: usize) -> Subset {
        self.rows[x]
    }

    pub fn rows(&self) -> &[Subset] {
        &self.rows
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows.iter().enumerate().flat_map(|(x, r)| r.iter().map(move |y| (x, y))).collect()
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, r)| r.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().into_iter().all(|(x, y)| self.related(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|y| self.rows[y].is_subset(*r)))
    }

    /// Every element lies in some successor neighbourhood.
    pub fn is_anti_serial(&self) -> bool {
        self.orphan().is_none()
    }

    fn orphan(&self) -> Option<usize> {
        let covered = self.rows.iter().fold(Subset::EMPTY, |a, r| a.union(*r));
        (0..self.universe.len()).find(|&x| !covered.contains(x))
    }

    pub fn flags(&self) -> RelationFlags {
        RelationFlags {
            reflexive: self.is_reflexive(),
            symmetric: self.is_symmetric(),
            transitive: self.is_transitive(),
            anti_serial: self.is_anti_serial(),
        }
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    pub fn require_equivalence(&self) -> Result<()> {
        if !self.is_reflexive() {
            return Err(Error::NotEquivalence("reflexivity"));
        }
        if !self.is_symmetric() {
            return Err(Error::NotEquivalence("symmetry"));
        }
        if !self.is_transitive() {
            return Err(Error::NotEquivalence("transitivity"));
        }
        Ok(())
    }

    pub fn require_tolerance(&self) -> Result<()> {
        if !self.is_reflexive() {
            return Err(Error::NotTolerance("reflexivity"));
        }
        if !self.is_symmetric() {
            return Err(Error::NotTolerance("symmetry"));
        }
        Ok(())
    }

    /// Equivalence classes in mask order.
    pub fn classes(&self) -> Result<Vec<Subset>> {
        self.require_equivalence()?;
        Ok(canonical(self.rows.clone()))
    }

    /// Successor neighbourhoods `n(x)`, deduplicated, as a cover.
    ///
    /// Fails when some element lies in no neighbourhood.
    pub fn neighbourhood_family(&self) -> Result<Vec<Subset>> {
        if let Some(x) = self.orphan() {
            return Err(Error::NotAntiSerial(self.universe.label(x).to_string()));
        }
        let mut members: Vec<Subset> = Vec::new();
        for &r in &self.rows {
            if !r.is_empty() && !members.contains(&r) {
                members.push(r);
            }
        }
        Ok(members)
    }
}

/// Lower, upper, boundary and negative regions of a subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Approximations {
    pub lower: Subset,
    pub upper: Subset,
    pub boundary: Subset,
    pub negative: Subset,
}

/// Approximation operators of an equivalence relation, with its classes cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    relation: BinaryRelation,
    classes: Vec<Subset>,
}

impl ApproximationSpace {
    pub fn new(relation: BinaryRelation) -> Result<Self> {
        let classes = relation.classes()?;
        Ok(Self { relation, classes })
    }

    pub fn from_partition(universe: Universe, blocks: &[Subset]) -> Result<Self> {
        Self::new(BinaryRelation::from_partition(universe, blocks)?)
    }

    pub fn universe(&self) -> &Universe {
        self.relation.universe()
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> Subset {
        self.relation.successors(x)
    }

    pub fn lower(&self, a: Subset) -> Subset {
        self.classes.iter().filter(|c| c.is_subset(a)).fold(Subset::EMPTY, |acc, c| acc.union(*c))
    }

    pub fn upper(&self, a: Subset) -> Subset {
        self.classes.iter().filter(|c| c.meets(a)).fold(Subset::EMPTY, |acc, c| acc.union(*c))
    }

    pub fn approximations(&self, a: Subset) -> Approximations {
        let lower = self.lower(a);
        let upper = self.upper(a);
        Approximations {
            lower,
            upper,
            boundary: upper.difference(lower),
            negative: self.universe().complement(upper),
        }
    }

    /// `|[x] ∩ A| / |[x]|`.
    pub fn rough_membership(&self, x: usize, a: Subset) -> BigRational {
        let class = self.class_of(x);
        ratio(class.intersection(a).len(), class.len())
    }

    /// `A ⊑ B` iff both approximations are included.
    pub fn rough_included(&self, a: Subset, b: Subset) -> bool {
        self.lower(a).is_subset(self.lower(b)) && self.upper(a).is_subset(self.upper(b))
    }

    pub fn rough_equal(&self, a: Subset, b: Subset) -> bool {
        self.rough_included(a, b) && self.rough_included(b, a)
    }

    pub fn is_definite(&self, a: Subset) -> bool {
        self.lower(a) == a
    }
}

/// Classical approximations of `a` under an equivalence relation.
pub fn classical_approximations(a: Subset, eq: &BinaryRelation) -> Result<Approximations> {
    Ok(ApproximationSpace::new(eq.clone())?.approximations(a))
}

pub fn rough_membership(x: usize, a: Subset, eq: &BinaryRelation) -> Result<BigRational> {
    Ok(ApproximationSpace::new(eq.clone())?.rough_membership(x, a))
}

pub(crate) fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f1() -> ApproximationSpace {
        let u = Universe::range(4).unwrap();
        ApproximationSpace::from_partition(u, &[Subset::from_indices([0, 1]), Subset::from_indices([2, 3])]).unwrap()
    }

    #[test]
    fn f1_approximations() {
        let s = f1();
        let a = s.approximations(Subset::from_indices([0, 1, 2]));
        assert_eq!(a.lower, Subset::from_indices([0, 1]));
        assert_eq!(a.upper, Subset::full(4));
        assert_eq!(a.boundary, Subset::from_indices([2, 3]));
        assert_eq!(a.negative, Subset::EMPTY);
        let d = s.approximations(Subset::from_indices([0, 1]));
        assert_eq!(d.lower, d.upper);
        let e = s.approximations(Subset::EMPTY);
        assert_eq!((e.lower, e.upper, e.boundary, e.negative), (Subset::EMPTY, Subset::EMPTY, Subset::EMPTY, Subset::full(4)));
    }

    #[test]
    fn f1_membership_and_inclusion() {
        let s = f1();
        assert_eq!(s.rough_membership(0, Subset::from_indices([0, 2])), ratio(1, 2));
        assert_eq!(s.rough_membership(3, Subset::full(4)), ratio(1, 1));
        assert_eq!(s.rough_membership(3, Subset::EMPTY), ratio(0, 1));
        assert!(s.rough_included(Subset::singleton(0), Subset::singleton(1)));
        assert!(!s.rough_included(Subset::from_indices([0, 1]), Subset::singleton(2)));
    }

    #[test]
    fn flags_are_recomputed() {
        let u = Universe::range(3).unwrap();
        let r = BinaryRelation::from_pairs(u.clone(), [(0, 1), (1, 2)]).unwrap();
        let f = r.flags();
        assert!(!f.reflexive && !f.symmetric && !f.transitive && !f.anti_serial);
        assert_eq!(r.neighbourhood_family(), Err(Error::NotAntiSerial("0".into())));
        assert_eq!(BinaryRelation::identity(u).classes().unwrap().len(), 3);
    }

    #[test]
    fn empty_relation_is_not_anti_serial() {
        let u = Universe::range(2).unwrap();
        let r = BinaryRelation::from_pairs(u, []).unwrap();
        assert!(matches!(r.neighbourhood_family(), Err(Error::NotAntiSerial(_))));
    }
}
