//! Covering approximation spaces and their lower/upper operators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::BinaryRelation;
use crate::report::{Report, SuiteConfig, Tally};
use crate::universe::{canonical, intersect_all, union_all, Subset, Universe};

/// A universe with a family of nonempty members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpace {
    universe: Universe,
    members: Vec<Subset>,
}

/// Point-level descriptors of an element with respect to a cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDescriptors {
    /// Intersection of the members containing the point.
    pub nbd: Subset,
    /// Union of the members containing the point.
    pub fr: Subset,
    /// Inclusion-minimal members containing the point.
    pub md: Vec<Subset>,
    /// Inclusion-maximal members containing the point.
    pub max_d: Vec<Subset>,
    /// Union of `md`.
    pub cfr: Subset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UpperKind {
    #[serde(rename = "u1")]
    U1,
    #[serde(rename = "u1+")]
    U1Plus,
    #[serde(rename = "u2+")]
    U2Plus,
    #[serde(rename = "u3+")]
    U3Plus,
    #[serde(rename = "u4+")]
    U4Plus,
}

impl UpperKind {
    pub const ALL: [UpperKind; 5] = [Self::U1, Self::U1Plus, Self::U2Plus, Self::U3Plus, Self::U4Plus];
    /// Kinds with a published closure characterization.
    pub const CHARACTERIZED: [UpperKind; 4] = [Self::U1, Self::U2Plus, Self::U3Plus, Self::U4Plus];

    pub fn name(self) -> &'static str {
        match self {
            Self::U1 => "u1",
            Self::U1Plus => "u1+",
            Self::U2Plus => "u2+",
            Self::U3Plus => "u3+",
            Self::U4Plus => "u4+",
        }
    }
}

impl fmt::Display for UpperKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for UpperKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Malformed { location: "upper kind".into(), message: format!("unknown operator `{s}`") })
    }
}

/// Result of the unary test, both characterizations side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryVerdict {
    pub unary: bool,
    /// Every point has exactly one minimal description.
    pub by_minimal_descriptions: bool,
    /// Every pairwise intersection of members is a union of members.
    pub by_intersections: bool,
    pub witness: Option<String>,
}

/// Kuratowski-style properties of an operator on `℘(S)`, tested exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureProperties {
    pub preserves_empty: bool,
    pub extensive: bool,
    pub monotone: bool,
    pub idempotent: bool,
    pub additive: bool,
}

impl ClosureProperties {
    /// ∅-preserving, extensive, idempotent and finitely additive.
    pub fn topological(&self) -> bool {
        self.preserves_empty && self.extensive && self.idempotent && self.additive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDiagnostics {
    pub kind: UpperKind,
    /// Direct verdict: the operator is a topological closure operator.
    pub closure: bool,
    pub properties: ClosureProperties,
    /// The published side condition for this operator.
    pub side_condition: bool,
    /// An equivalent second form of the side condition, where one is published.
    pub side_condition_alt: Option<bool>,
    pub agree: bool,
    pub witnesses: Vec<String>,
}

/// Which of u4+, u1 and u3+ are topological closure operators on one cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainVerdict {
    pub u4_plus: bool,
    pub u1: bool,
    pub u3_plus: bool,
}

impl CoverSpace {
    /// Duplicates are dropped (first occurrence kept); empty members are rejected.
    pub fn new(universe: Universe, members: Vec<Subset>) -> Result<Self> {
        let full = universe.full();
        let mut kept: Vec<Subset> = Vec::with_capacity(members.len());
        for m in members {
            if m.is_empty() {
                return Err(Error::EmptyCoverMember);
            }
            if !m.is_subset(full) {
                return Err(Error::UniverseMismatch);
            }
            if !kept.contains(&m) {
                kept.push(m);
            }
        }
        Ok(Self { universe, members: kept })
    }

    /// The cover of successor neighbourhoods of an anti-serial relation.
    pub fn from_relation(r: &BinaryRelation) -> Result<Self> {
        Self::new(r.universe().clone(), r.neighbourhood_family()?)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    /// Union of members equals the universe.
    pub fn is_proper(&self) -> bool {
        union_all(self.members.iter().copied()) == self.universe.full()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperCover)
        }
    }

    pub fn containing(&self, x: usize) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied().filter(move |m| m.contains(x))
    }

    fn uncovered(&self, x: usize) -> Error {
        Error::UncoveredElement(self.universe.label(x).to_string())
    }

    pub fn md(&self, x: usize) -> Result<Vec<Subset>> {
        let cont: Vec<Subset> = self.containing(x).collect();
        if cont.is_empty() {
            return Err(self.uncovered(x));
        }
        Ok(cont.iter().copied().filter(|&a| !cont.iter().any(|&b| b.is_proper_subset(a))).collect())
    }

    pub fn max_d(&self, x: usize) -> Result<Vec<Subset>> {
        let cont: Vec<Subset> = self.containing(x).collect();
        if cont.is_empty() {
            return Err(self.uncovered(x));
        }
        Ok(cont.iter().copied().filter(|&a| !cont.iter().any(|&b| a.is_proper_subset(b))).collect())
    }

    pub fn nbd(&self, x: usize) -> Result<Subset> {
        intersect_all(self.containing(x)).ok_or_else(|| self.uncovered(x))
    }

    pub fn fr(&self, x: usize) -> Result<Subset> {
        let f = union_all(self.containing(x));
        if f.is_empty() {
            Err(self.uncovered(x))
        } else {
            Ok(f)
        }
    }

    pub fn cfr(&self, x: usize) -> Result<Subset> {
        Ok(union_all(self.md(x)?))
    }

    pub fn point_descriptors(&self, x: usize) -> Result<PointDescriptors> {
        if x >= self.universe.len() {
            return Err(Error::ElementOutOfRange { index: x, size: self.universe.len() });
        }
        let md = self.md(x)?;
        Ok(PointDescriptors {
            nbd: self.nbd(x)?,
            fr: self.fr(x)?,
            cfr: union_all(md.iter().copied()),
            md,
            max_d: self.max_d(x)?,
        })
    }

    /// A member is reducible when it is a maximal description of none of its
    /// points. Removing all of them leaves the inclusion-maximal members.
    pub fn is_reducible(&self, k: Subset) -> bool {
        k.iter().all(|x| self.max_d(x).map(|m| !m.contains(&k)).unwrap_or(true))
    }

    pub fn reduct(&self) -> CoverSpace {
        let members = self.members.iter().copied().filter(|&k| !self.is_reducible(k)).collect();
        CoverSpace { universe: self.universe.clone(), members }
    }

    /// `⋃{K ∈ 𝒞 : K ⊆ X}`.
    pub fn lower_l1(&self, x: Subset) -> Subset {
        union_all(self.members.iter().copied().filter(|k| k.is_subset(x)))
    }

    pub fn upper(&self, x: Subset, kind: UpperKind) -> Result<Subset> {
        let l1 = self.lower_l1(x);
        let md_union = |s: Subset| -> Result<Subset> {
            let mut acc = Subset::EMPTY;
            for p in s.iter() {
                acc = acc.union(self.cfr(p)?);
            }
            Ok(acc)
        };
        Ok(match kind {
            UpperKind::U1 => l1.union(md_union(x.difference(l1))?),
            UpperKind::U1Plus => l1.union(md_union(x)?),
            UpperKind::U2Plus => {
                let mut acc = Subset::EMPTY;
                for p in x.iter() {
                    acc = acc.union(self.fr(p)?);
                }
                acc
            }
            UpperKind::U3Plus => md_union(x)?,
            UpperKind::U4Plus => {
                if let Some(p) = x.iter().find(|&p| self.containing(p).next().is_none()) {
                    return Err(self.uncovered(p));
                }
                let rest = x.difference(l1);
                l1.union(union_all(self.members.iter().copied().filter(|k| k.meets(rest))))
            }
        })
    }

    /// Values of an upper operator on every subset, indexed by mask.
    pub fn upper_table(&self, kind: UpperKind) -> Result<Vec<Subset>> {
        self.universe.powerset().map(|x| self.upper(x, kind)).collect()
    }

    pub fn lower_table(&self) -> Vec<Subset> {
        self.universe.powerset().map(|x| self.lower_l1(x)).collect()
    }

    pub fn is_unary(&self) -> Result<UnaryVerdict> {
        self.require_proper()?;
        let mut witness = None;
        let mut by_md = true;
        for x in 0..self.universe.len() {
            let md = self.md(x)?;
            if md.len() != 1 {
                by_md = false;
                let shown: Vec<String> = md.iter().map(|m| self.universe.show(*m)).collect();
                witness.get_or_insert_with(|| {
                    format!("md({}) = {{{}}}", self.universe.label(x), shown.join(", "))
                });
                break;
            }
        }
        let mut by_int = true;
        'outer: for &k1 in &self.members {
            for &k2 in &self.members {
                let i = k1.intersection(k2);
                if self.lower_l1(i) != i {
                    by_int = false;
                    witness.get_or_insert_with(|| {
                        format!(
                            "{} ∩ {} = {} is not a union of members",
                            self.universe.show(k1),
                            self.universe.show(k2),
                            self.universe.show(i)
                        )
                    });
                    break 'outer;
                }
            }
        }
        Ok(UnaryVerdict { unary: by_md && by_int, by_minimal_descriptions: by_md, by_intersections: by_int, witness })
    }

    /// Base condition: every point of `K1 ∩ K2` lies in a member inside `K1 ∩ K2`.
    /// Returns the first violating triple.
    pub fn base_violation(&self) -> Option<(Subset, Subset, usize)> {
        for &k1 in &self.members {
            for &k2 in &self.members {
                let i = k1.intersection(k2);
                for x in i.iter() {
                    if !self.members.iter().any(|k| k.contains(x) && k.is_subset(i)) {
                        return Some((k1, k2, x));
                    }
                }
            }
        }
        None
    }

    /// The topology generated by the cover as a base: ∅, the universe and all
    /// unions of members.
    pub fn topology_from_base(&self) -> Result<Vec<Subset>> {
        self.require_proper()?;
        if let Some((k1, k2, x)) = self.base_violation() {
            return Err(Error::NotABase {
                k1: self.universe.show(k1),
                k2: self.universe.show(k2),
                x: self.universe.label(x).to_string(),
            });
        }
        let mut opens = vec![Subset::EMPTY, self.universe.full()];
        for x in self.universe.powerset() {
            if self.lower_l1(x) == x {
                opens.push(x);
            }
        }
        Ok(canonical(opens))
    }

    pub fn closure_diagnostics(&self, kind: UpperKind) -> Result<ClosureDiagnostics> {
        self.require_proper()?;
        let table = self.upper_table(kind)?;
        let (properties, mut witnesses) = closure_properties(&self.universe, &table);
        let closure = properties.topological();
        let (side_condition, side_condition_alt, side_witness) = self.side_condition(kind)?;
        witnesses.extend(side_witness);
        Ok(ClosureDiagnostics {
            kind,
            closure,
            properties,
            side_condition,
            side_condition_alt,
            agree: closure == side_condition && side_condition_alt.is_none_or(|a| a == side_condition),
            witnesses,
        })
    }

    fn side_condition(&self, kind: UpperKind) -> Result<(bool, Option<bool>, Option<String>)> {
        let u = &self.universe;
        let n = u.len();
        Ok(match kind {
            UpperKind::U1 => {
                let v = self.is_unary()?;
                let base = self.base_violation();
                let w = v.witness.clone().or_else(|| {
                    base.map(|(a, b, x)| format!("no member around {} inside {} ∩ {}", u.label(x), u.show(a), u.show(b)))
                });
                (v.unary, Some(base.is_none()), w)
            }
            UpperKind::U1Plus => (false, None, None),
            UpperKind::U2Plus => {
                let frs: Vec<Subset> = (0..n).map(|x| self.fr(x)).collect::<Result<_>>()?;
                let mut w = None;
                let mut partition = true;
                for &a in &frs {
                    for &b in &frs {
                        if a != b && a.meets(b) {
                            partition = false;
                            w.get_or_insert_with(|| format!("Fr-sets {} and {} overlap", u.show(a), u.show(b)));
                        }
                    }
                }
                let alt = (0..n).all(|a| (0..n).all(|b| !frs[a].meets(frs[b]) || frs[b].contains(a)));
                (partition, Some(alt), w)
            }
            UpperKind::U3Plus => {
                let cf: Vec<Subset> = (0..n).map(|x| self.cfr(x)).collect::<Result<_>>()?;
                let mut w = None;
                let ok = (0..n).all(|x| {
                    let good = cf.iter().all(|z| !z.contains(x) || cf[x].is_subset(*z));
                    if !good {
                        w = Some(format!("{} is not representative of cfr = {}", u.label(x), u.show(cf[x])));
                    }
                    good
                });
                (ok, None, w)
            }
            UpperKind::U4Plus => {
                let mut w = None;
                let mut ok = true;
                'outer: for &k1 in &self.members {
                    for &k2 in &self.members {
                        if k1 != k2 {
                            for x in k1.intersection(k2).iter() {
                                if !self.members.contains(&Subset::singleton(x)) {
                                    ok = false;
                                    w = Some(format!(
                                        "{} ∈ {} ∩ {} but {{{}}} is not a member",
                                        u.label(x),
                                        u.show(k1),
                                        u.show(k2),
                                        u.label(x)
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                (ok, None, w)
            }
        })
    }

    pub fn chain_verdict(&self) -> Result<ChainVerdict> {
        let closed = |k| -> Result<bool> {
            let t = self.upper_table(k)?;
            Ok(closure_properties(&self.universe, &t).0.topological())
        };
        Ok(ChainVerdict { u4_plus: closed(UpperKind::U4Plus)?, u1: closed(UpperKind::U1)?, u3_plus: closed(UpperKind::U3Plus)? })
    }

    /// The published list of equivalent forms of unarity, each compared with
    /// the minimal-description test.
    pub fn unary_characterizations(&self) -> Result<Report> {
        let u = &self.universe;
        let unary = self.is_unary()?.unary;
        let u1 = self.upper_table(UpperKind::U1)?;
        let u2 = self.upper_table(UpperKind::U2Plus)?;
        let u3 = self.upper_table(UpperKind::U3Plus)?;
        let u4 = self.upper_table(UpperKind::U4Plus)?;
        let at = |t: &[Subset], x: Subset| t[x.bits() as usize];
        let forms: Vec<(&str, bool)> = vec![
            ("unary iff u3+ = u1", u.powerset().all(|x| at(&u3, x) == at(&u1, x))),
            ("unary iff every nbd(x) is a member", (0..u.len()).all(|x| self.nbd(x).map(|n| self.members.contains(&n)).unwrap_or(false))),
            ("unary iff u3+ fixes every u4+ image", u.powerset().all(|x| at(&u3, at(&u4, x)) == at(&u4, x))),
            ("unary iff u3+ fixes every u2+ image", u.powerset().all(|x| at(&u3, at(&u2, x)) == at(&u2, x))),
        ];
        let mut rep = Report::new("unary-characterizations");
        rep.fact("unary", unary);
        for (law, v) in forms {
            let mut t = Tally::claim(law);
            t.check(v == unary, || format!("cover {} has unary = {unary} but the condition is {v}", show_family(u, &self.members)));
            rep.push(t.finish(true));
        }
        Ok(rep)
    }

    /// Order properties of l1 and the upper operators on this cover.
    pub fn operator_inclusions(&self, cfg: &SuiteConfig) -> Result<Report> {
        self.require_proper()?;
        let u = &self.universe;
        let exhaustive = u.len() <= cfg.pair_cap.max(10);
        let xs: Vec<Subset> = if exhaustive {
            u.powerset().collect()
        } else {
            cfg.tuples(u.len(), 1).0.into_iter().map(|t| t[0]).collect()
        };
        let mut contraction = Tally::asserted("l1(X) ⊆ X");
        let mut idem = Tally::asserted("l1 idempotent");
        let mut u1_in_u1p = Tally::asserted("u1(X) ⊆ u1+(X)");
        let mut u3_in_u2 = Tally::asserted("u3+(X) ⊆ u2+(X)");
        let mut ext = Tally::asserted("X ⊆ u(X) for every kind");
        for &x in &xs {
            let l = self.lower_l1(x);
            contraction.check(l.is_subset(x), || u.show(x));
            idem.check(self.lower_l1(l) == l, || u.show(x));
            let v1 = self.upper(x, UpperKind::U1)?;
            let v1p = self.upper(x, UpperKind::U1Plus)?;
            let v2 = self.upper(x, UpperKind::U2Plus)?;
            let v3 = self.upper(x, UpperKind::U3Plus)?;
            let v4 = self.upper(x, UpperKind::U4Plus)?;
            u1_in_u1p.check(v1.is_subset(v1p), || u.show(x));
            u3_in_u2.check(v3.is_subset(v2), || u.show(x));
            ext.check([v1, v1p, v2, v3, v4].iter().all(|v| x.is_subset(*v)), || u.show(x));
        }
        let mut rep = Report::new("cover-operators");
        for t in [contraction, idem, u1_in_u1p, u3_in_u2, ext] {
            rep.push(t.finish(exhaustive));
        }
        Ok(rep)
    }
}

/// Tests an operator given as a full table over `℘(S)`.
pub fn closure_properties(u: &Universe, table: &[Subset]) -> (ClosureProperties, Vec<String>) {
    let f = |x: Subset| table[x.bits() as usize];
    let mut w = Vec::new();
    let preserves_empty = f(Subset::EMPTY).is_empty();
    if !preserves_empty {
        w.push(format!("C(∅) = {}", u.show(f(Subset::EMPTY))));
    }
    let mut extensive = true;
    let mut idempotent = true;
    for x in u.powerset() {
        if extensive && !x.is_subset(f(x)) {
            extensive = false;
            w.push(format!("not extensive at {}", u.show(x)));
        }
        if idempotent && f(f(x)) != f(x) {
            idempotent = false;
            w.push(format!("not idempotent at {}: C = {}, CC = {}", u.show(x), u.show(f(x)), u.show(f(f(x)))));
        }
    }
    let mut monotone = true;
    let mut additive = true;
    'outer: for a in u.powerset() {
        for b in u.powerset() {
            if monotone && a.is_subset(b) && !f(a).is_subset(f(b)) {
                monotone = false;
                w.push(format!("not monotone at {} ⊆ {}", u.show(a), u.show(b)));
            }
            if additive && f(a.union(b)) != f(a).union(f(b)) {
                additive = false;
                w.push(format!("not additive at {}, {}", u.show(a), u.show(b)));
            }
            if !monotone && !additive {
                break 'outer;
            }
        }
    }
    (ClosureProperties { preserves_empty, extensive, monotone, idempotent, additive }, w)
}

pub fn show_family(u: &Universe, fam: &[Subset]) -> String {
    let parts: Vec<String> = fam.iter().map(|s| u.show(*s)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Convenience wrapper matching the relation-to-cover derivation.
pub fn cover_from_neighborhoods(r: &BinaryRelation) -> Result<CoverSpace> {
    CoverSpace::from_relation(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(n: usize, members: &[&[usize]]) -> CoverSpace {
        let u = Universe::range(n).unwrap();
        CoverSpace::new(u, members.iter().map(|m| Subset::from_indices(m.iter().copied())).collect()).unwrap()
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn f2_point_one() {
        let c = cover(3, &[&[0, 1], &[1, 2]]);
        let d = c.point_descriptors(1).unwrap();
        assert_eq!(d.nbd, s(&[1]));
        assert_eq!(d.md, vec![s(&[0, 1]), s(&[1, 2])]);
        assert_eq!(d.fr, s(&[0, 1, 2]));
        assert_eq!(d.cfr, s(&[0, 1, 2]));
    }

    #[test]
    fn f2_operators() {
        let c = cover(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(c.lower_l1(s(&[1])), Subset::EMPTY);
        assert_eq!(c.lower_l1(s(&[0, 1])), s(&[0, 1]));
        assert_eq!(c.upper(s(&[1]), UpperKind::U1).unwrap(), s(&[0, 1, 2]));
        assert_eq!(c.upper(s(&[1]), UpperKind::U2Plus).unwrap(), s(&[0, 1, 2]));
        for k in UpperKind::ALL {
            assert_eq!(c.upper(Subset::EMPTY, k).unwrap(), Subset::EMPTY);
        }
    }

    #[test]
    fn unary_verdicts() {
        let f2 = cover(3, &[&[0, 1], &[1, 2]]);
        let v = f2.is_unary().unwrap();
        assert!(!v.unary && !v.by_minimal_descriptions && !v.by_intersections);
        assert!(v.witness.unwrap().starts_with("md(1)"));
        let f3 = cover(3, &[&[0], &[0, 1], &[2]]);
        assert!(f3.is_unary().unwrap().unary);
        assert_eq!(f3.point_descriptors(1).unwrap().md, vec![s(&[0, 1])]);
    }

    #[test]
    fn base_and_topology() {
        let f2 = cover(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(
            f2.topology_from_base().unwrap_err(),
            Error::NotABase { k1: "{0,1}".into(), k2: "{1,2}".into(), x: "1".into() }
        );
        let f3 = cover(3, &[&[0], &[0, 1], &[2]]);
        let t = f3.topology_from_base().unwrap();
        assert_eq!(t, canonical(vec![Subset::EMPTY, s(&[0]), s(&[0, 1]), s(&[2]), s(&[0, 2]), s(&[0, 1, 2])]));
    }

    #[test]
    fn reduct_keeps_maximal_members() {
        let f3 = cover(3, &[&[0], &[0, 1], &[2]]);
        assert_eq!(f3.reduct().members(), &[s(&[0, 1]), s(&[2])]);
        let r = f3.reduct();
        assert_eq!(r.reduct(), r);
        let part = cover(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(part.reduct(), part);
    }

    #[test]
    fn uncovered_elements_are_errors() {
        let c = cover(3, &[&[0, 1]]);
        assert_eq!(c.nbd(2), Err(Error::UncoveredElement("2".into())));
        assert!(c.upper(s(&[2]), UpperKind::U4Plus).is_err());
        assert_eq!(c.is_unary().unwrap_err(), Error::ImproperCover);
    }

    #[test]
    fn closure_diagnostics_on_fixtures() {
        let f3 = cover(3, &[&[0], &[0, 1], &[2]]);
        let d = f3.closure_diagnostics(UpperKind::U1).unwrap();
        assert!(d.closure && d.side_condition && d.agree);
        let f2 = cover(3, &[&[0, 1], &[1, 2]]);
        // Fr(0) = {0,1} and Fr(1) = {0,1,2} overlap, and u2+ is not idempotent at {0}.
        let d = f2.closure_diagnostics(UpperKind::U2Plus).unwrap();
        assert!(!d.closure && !d.side_condition && d.agree);
        assert!(!d.properties.idempotent);
        let part = cover(4, &[&[0, 1], &[2, 3]]);
        for k in UpperKind::CHARACTERIZED {
            let d = part.closure_diagnostics(k).unwrap();
            assert!(d.closure && d.side_condition, "{k}");
        }
    }
}
