//! Tolerance spaces, blocks and squeezed blocks, the `l_s`/`u_s`/`u_sb`
//! approximations, the definable-object lattice with `→`/`⊖`, and the
//! presqueezed algebra of sets.

use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::granular::GranularOperatorSpace;
use crate::relation::{ApproximationSpace, BinaryRelation};
use crate::report::{Report, SuiteConfig, Tally};
use crate::tarski::{check_axioms, FiniteTarskiAlgebra, TarskiSet};
use crate::universe::{canonical, union_all, Subset, Universe};

/// Largest universe accepted by [`SqueezedSystem::build`]; `δ(S)` can reach `2^n` members.
pub const MAX_SQUEEZED_UNIVERSE: usize = 16;

/// A reflexive symmetric relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToleranceSpace {
    relation: BinaryRelation,
}

impl ToleranceSpace {
    /// Fails with [`Error::NotTolerance`] naming the first violated property.
    pub fn new(relation: BinaryRelation) -> Result<Self> {
        relation.require_tolerance()?;
        Ok(Self { relation })
    }

    /// Undirected pairs; reflexive pairs are implicit.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(universe: Universe, pairs: I) -> Result<Self> {
        let n = universe.len();
        let mut all: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        for (x, y) in pairs {
            all.push((x, y));
            all.push((y, x));
        }
        Self::new(BinaryRelation::from_pairs(universe, all)?)
    }

    pub fn identity(universe: Universe) -> Self {
        Self { relation: BinaryRelation::identity(universe) }
    }

    pub fn from_equivalence(space: &ApproximationSpace) -> Self {
        Self { relation: space.relation().clone() }
    }

    /// Each unordered pair of distinct elements is related with probability `density`.
    pub fn random<R: Rng>(universe: Universe, density: f64, rng: &mut R) -> Self {
        let n = universe.len();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen_bool(density) {
                    pairs.push((x, y));
                }
            }
        }
        Self::from_pairs(universe, pairs).expect("indices are in range")
    }

    pub fn universe(&self) -> &Universe {
        self.relation.universe()
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    /// Distinct related pairs with `x < y`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.relation.pairs().into_iter().filter(|&(x, y)| x < y).collect()
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), in mask order.
    pub fn blocks(&self) -> Vec<Subset> {
        let rows = self.relation.rows();
        let nbr: Vec<Subset> = rows.iter().enumerate().map(|(i, r)| r.without(i)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&nbr, Subset::EMPTY, self.universe().full(), Subset::EMPTY, &mut out);
        canonical(out)
    }
}

fn bron_kerbosch(nbr: &[Subset], r: Subset, p: Subset, x: Subset, out: &mut Vec<Subset>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| nbr[u].intersection(p).len()).expect("p ∪ x nonempty");
    let (mut p, mut x) = (p, x);
    for v in p.difference(nbr[pivot]).iter() {
        bron_kerbosch(nbr, r.with(v), p.intersection(nbr[v]), x.intersection(nbr[v]), out);
        p = p.without(v);
        x = x.with(v);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SqueezedKind {
    Lower,
    Upper,
    BittenUpper,
}

impl SqueezedKind {
    pub const ALL: [SqueezedKind; 3] = [Self::Lower, Self::Upper, Self::BittenUpper];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lower => "l_s",
            Self::Upper => "u_s",
            Self::BittenUpper => "u_sb",
        }
    }
}

/// Blocks, squeezed blocks `𝒯`, definable objects `δ(S)` and the atoms `A_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SqueezedSystem {
    universe: Universe,
    blocks: Vec<Subset>,
    squeezed: Vec<Subset>,
    definable: Vec<Subset>,
    atoms: Vec<Subset>,
}

impl SqueezedSystem {
    /// `𝒯` is the closure of the blocks under nonempty-family intersection
    /// (it may contain `∅`); `δ(S)` is every union of members of `𝒯`.
    pub fn build(t: &ToleranceSpace) -> Result<Self> {
        let universe = t.universe().clone();
        let n = universe.len();
        if n > MAX_SQUEEZED_UNIVERSE {
            return Err(Error::UniverseTooLarge { size: n, cap: MAX_SQUEEZED_UNIVERSE });
        }
        let blocks = t.blocks();
        let mut squeezed: BTreeSet<Subset> = blocks.iter().copied().collect();
        loop {
            let current: Vec<Subset> = squeezed.iter().copied().collect();
            let before = squeezed.len();
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    squeezed.insert(a.intersection(b));
                }
            }
            if squeezed.len() == before {
                break;
            }
        }
        let squeezed: Vec<Subset> = squeezed.into_iter().collect();
        let mut definable: BTreeSet<Subset> = BTreeSet::from([Subset::EMPTY]);
        for &a in &squeezed {
            let grown: Vec<Subset> = definable.iter().map(|d| d.union(a)).collect();
            definable.extend(grown);
        }
        let atoms = (0..n)
            .map(|x| {
                squeezed.iter().filter(|a| a.contains(x)).fold(universe.full(), |acc, &a| acc.intersection(a))
            })
            .collect();
        Ok(Self { universe, blocks, squeezed, definable: definable.into_iter().collect(), atoms })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn squeezed_blocks(&self) -> &[Subset] {
        &self.squeezed
    }

    /// `δ(S)` in mask order.
    pub fn definable(&self) -> &[Subset] {
        &self.definable
    }

    /// `A_x = ⋂{A ∈ 𝒯 : x ∈ A}`.
    pub fn atom(&self, x: usize) -> Subset {
        self.atoms[x]
    }

    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    pub fn is_definable(&self, x: Subset) -> bool {
        self.definable.binary_search(&x).is_ok()
    }

    pub fn lower(&self, x: Subset) -> Subset {
        union_all(self.squeezed.iter().copied().filter(|a| a.is_subset(x)))
    }

    pub fn upper(&self, x: Subset) -> Subset {
        union_all(self.squeezed.iter().copied().filter(|a| a.meets(x)))
    }

    /// `u_s(X) ∖ l_s(X^c)`.
    pub fn bitten_upper(&self, x: Subset) -> Subset {
        self.upper(x).difference(self.lower(self.universe.complement(x)))
    }

    pub fn approx(&self, x: Subset, kind: SqueezedKind) -> Subset {
        match kind {
            SqueezedKind::Lower => self.lower(x),
            SqueezedKind::Upper => self.upper(x),
            SqueezedKind::BittenUpper => self.bitten_upper(x),
        }
    }

    /// `l_s` and `u_sb` as a granular operator space over the nonempty members of 𝒯.
    pub fn granular_space(&self) -> Result<GranularOperatorSpace> {
        let granules: Vec<Subset> = self.squeezed.iter().copied().filter(|a| !a.is_empty()).collect();
        let (a, b) = (self.clone(), self.clone());
        GranularOperatorSpace::from_fns(self.universe.clone(), granules, "l_s/u_sb", move |x| a.lower(x), move |x| b.bitten_upper(x))
    }

    fn require_definable(&self, x: Subset) -> Result<()> {
        if self.is_definable(x) {
            Ok(())
        } else {
            Err(Error::NotDefinable(self.universe.show(x)))
        }
    }

    /// `X → Z = ⋃{B ∈ 𝒯 : X ∩ B ⊆ Z}`.
    pub fn arrow(&self, x: Subset, z: Subset) -> Result<Subset> {
        self.require_definable(x)?;
        self.require_definable(z)?;
        Ok(self.arrow_raw(x, z))
    }

    fn arrow_raw(&self, x: Subset, z: Subset) -> Subset {
        union_all(self.squeezed.iter().copied().filter(|b| x.intersection(*b).is_subset(z)))
    }

    /// The least definable `Q` with `X ⊆ Z ∪ Q`: `⋂{Q ∈ δ(S) : X ⊆ Z ∪ Q}`.
    pub fn ominus(&self, x: Subset, z: Subset) -> Result<Subset> {
        self.require_definable(x)?;
        self.require_definable(z)?;
        Ok(self.ominus_raw(x, z))
    }

    fn ominus_raw(&self, x: Subset, z: Subset) -> Subset {
        // δ(S) is closed under intersection and always contains S, so the family is nonempty.
        self.definable
            .iter()
            .copied()
            .filter(|q| x.is_subset(z.union(*q)))
            .fold(self.universe.full(), Subset::intersection)
    }

    /// `⋂{B ∈ 𝒯 : X ⊆ Z ∪ B}` with the intersection ranging over `𝒯` only.
    /// Returns the set and whether the candidate family was empty (then `S`).
    pub fn ominus_literal(&self, x: Subset, z: Subset) -> Result<(Subset, bool)> {
        self.require_definable(x)?;
        self.require_definable(z)?;
        Ok(self.ominus_literal_raw(x, z))
    }

    fn ominus_literal_raw(&self, x: Subset, z: Subset) -> (Subset, bool) {
        let mut empty = true;
        let mut acc = self.universe.full();
        for &b in &self.squeezed {
            if x.is_subset(z.union(b)) {
                empty = false;
                acc = acc.intersection(b);
            }
        }
        (acc, empty)
    }

    /// Heyting negation `X → ∅`.
    pub fn negation(&self, x: Subset) -> Result<Subset> {
        self.arrow(x, Subset::EMPTY)
    }

    /// Co-Heyting negation `S ⊖ X`.
    pub fn co_negation(&self, x: Subset) -> Result<Subset> {
        self.ominus(self.universe.full(), x)
    }

    /// Structural invariants of the system: maximal cliques, closure of `𝒯`
    /// and `δ(S)`, and the atom certificates.
    pub fn structure_report(&self, t: &ToleranceSpace) -> Report {
        let u = &self.universe;
        let full = u.full();
        let rel = t.relation();
        let mut rep = Report::new("squeezed-structure").param("universe", u.len());

        let mut clique = Tally::asserted("every block is a maximal clique");
        for &b in &self.blocks {
            let is_clique = b.iter().all(|x| b.is_subset(rel.successors(x)));
            let maximal = u.complement(b).iter().all(|y| !b.is_subset(rel.successors(y)));
            clique.check(is_clique && maximal, || u.show(b));
        }
        rep.push(clique.finish(true));

        let mut all_cliques = Tally::asserted("every maximal clique is a block");
        if u.len() <= 12 {
            for s in u.powerset() {
                let is_clique = !s.is_empty() && s.iter().all(|x| s.is_subset(rel.successors(x)));
                if is_clique && u.complement(s).iter().all(|y| !s.is_subset(rel.successors(y))) {
                    all_cliques.check(self.blocks.contains(&s), || u.show(s));
                }
            }
        }
        rep.push(all_cliques.finish(u.len() <= 12));

        let mut cap = Tally::asserted("𝒯 closed under ∩");
        for &a in &self.squeezed {
            for &b in &self.squeezed {
                cap.check(self.squeezed.binary_search(&a.intersection(b)).is_ok(), || {
                    format!("{} ∩ {}", u.show(a), u.show(b))
                });
            }
        }
        rep.push(cap.finish(true));

        let mut bounds = Tally::asserted("Bounds");
        bounds.check(self.is_definable(Subset::EMPTY) && self.is_definable(full), || "∅ or S missing".into());
        rep.push(bounds.finish(true));

        let mut closure = Tally::asserted("Closure");
        for &a in &self.definable {
            for &b in &self.definable {
                closure.check(self.is_definable(a.union(b)) && self.is_definable(a.intersection(b)), || {
                    format!("{}, {}", u.show(a), u.show(b))
                });
            }
        }
        rep.push(closure.finish(true));

        let mut least = Tally::asserted("A_x is the least definable set containing x");
        for x in 0..u.len() {
            let a = self.atoms[x];
            let ok = a.contains(x)
                && self.is_definable(a)
                && self.definable.iter().filter(|d| d.contains(x)).all(|d| a.is_subset(*d));
            least.check(ok, || format!("x = {}, A_x = {}", u.label(x), u.show(a)));
        }
        rep.push(least.finish(true));

        let mut atomistic = Tally::asserted("every definable set is the union of the A_x it contains");
        for &d in &self.definable {
            let rebuilt = union_all(self.atoms.iter().copied().filter(|a| a.is_subset(d)));
            atomistic.check(rebuilt == d, || u.show(d));
        }
        rep.push(atomistic.finish(true));

        let minimal: Vec<Subset> = self
            .definable
            .iter()
            .copied()
            .filter(|d| !d.is_empty() && !self.definable.iter().any(|e| !e.is_empty() && e.is_proper_subset(*d)))
            .collect();
        let mut atomic = Tally::asserted("every nonempty definable set contains a lattice atom");
        for &d in &self.definable {
            if !d.is_empty() {
                atomic.check(minimal.iter().any(|m| m.is_subset(d)), || u.show(d));
            }
        }
        rep.push(atomic.finish(true));

        let mut lattice_atoms = Tally::claim("every A_x is a lattice atom of δ(S)");
        for x in 0..u.len() {
            let a = self.atoms[x];
            lattice_atoms.check(minimal.contains(&a), || format!("A_{} = {}", u.label(x), u.show(a)));
        }
        rep.push(lattice_atoms.finish(true));

        let mut join_of_atoms = Tally::claim("every definable set is a union of lattice atoms");
        for &d in &self.definable {
            let rebuilt = union_all(minimal.iter().copied().filter(|m| m.is_subset(d)));
            join_of_atoms.check(rebuilt == d, || u.show(d));
        }
        rep.push(join_of_atoms.finish(true));

        rep.fact("blocks", self.blocks.iter().map(|&b| u.show(b)).collect::<Vec<_>>());
        rep.fact("squeezed_blocks", self.squeezed.iter().map(|&b| u.show(b)).collect::<Vec<_>>());
        rep.fact("definable", self.definable.iter().map(|&b| u.show(b)).collect::<Vec<_>>());
        rep.fact("atoms", self.atoms.iter().map(|&b| u.show(b)).collect::<Vec<_>>());
        rep
    }

    /// The eight modal laws plus a strictness search for L3.
    pub fn modal_law_suite(&self, cfg: &SuiteConfig) -> Report {
        let u = &self.universe;
        let n = u.len();
        let full = u.full();
        let c = |x: Subset| u.complement(x);
        let mut rep = Report::new("squeezed-modal").param("universe", n);

        let mut dual = Tally::asserted("S5-Dual");
        let mut reflexive = Tally::asserted("Reflexive");
        let mut idem = Tally::asserted("Idempotence");
        let (singles, ex1) = cfg.tuples(n, 1);
        for t in &singles {
            let a = t[0];
            let w = || u.show(a);
            let l = self.lower(a);
            dual.check(self.bitten_upper(a) == c(self.lower(c(a))), w);
            reflexive.check(l.is_subset(a) && a.is_subset(self.bitten_upper(a)), w);
            idem.check(self.lower(l) == l, w);
        }

        let mut bottom = Tally::asserted("Bottom");
        bottom.check(self.lower(Subset::EMPTY).is_empty() && self.bitten_upper(Subset::EMPTY).is_empty(), || "∅".into());
        let mut top = Tally::asserted("Top");
        top.check(self.lower(full) == full && self.bitten_upper(full) == full, || "S".into());

        let mut mono = Tally::asserted("Monotone");
        let mut l3 = Tally::asserted("L3");
        let mut l4 = Tally::asserted("L4");
        let mut strict = Tally::search("L3 strict: (a ∩ b)^{l_s} ⊊ a^{l_s} ∩ b^{l_s}");
        let (pairs, ex2) = cfg.tuples(n, 2);
        for t in &pairs {
            let (a, b) = (t[0], t[1]);
            let w = || format!("a = {}, b = {}", u.show(a), u.show(b));
            let (la, lb) = (self.lower(a), self.lower(b));
            if a.is_subset(b) {
                mono.check(la.is_subset(lb), w);
            }
            let lab = self.lower(a.intersection(b));
            l3.check(lab.is_subset(la.intersection(lb)), w);
            l4.check(la.union(lb).is_subset(self.lower(a.union(b))), w);
            if lab.is_proper_subset(la.intersection(lb)) {
                strict.hit(|| {
                    format!("{w}: {} ⊊ {}", u.show(lab), u.show(la.intersection(lb)), w = w())
                });
            } else {
                strict.miss();
            }
        }

        rep.push(dual.finish(ex1));
        rep.push(bottom.finish(true));
        rep.push(top.finish(true));
        rep.push(reflexive.finish(ex1));
        rep.push(idem.finish(ex1));
        for t in [mono, l3, l4, strict] {
            rep.push(t.finish(ex2));
        }
        rep
    }

    /// Residuation, dual residuation and distributivity over every triple of
    /// `δ(S)`, the literal `⊖` comparison, and regularity/WLEM failure searches.
    pub fn heyting_suite(&self) -> Report {
        let u = &self.universe;
        let full = u.full();
        let d = &self.definable;
        let m = d.len();
        let idx: HashMap<Subset, usize> = d.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut arrow = vec![Subset::EMPTY; m * m];
        let mut ominus = vec![Subset::EMPTY; m * m];
        for (i, &x) in d.iter().enumerate() {
            for (j, &z) in d.iter().enumerate() {
                arrow[i * m + j] = self.arrow_raw(x, z);
                ominus[i * m + j] = self.ominus_raw(x, z);
            }
        }
        let sh = |v: &[Subset]| v.iter().map(|&s| u.show(s)).collect::<Vec<_>>().join(", ");
        let mut rep = Report::new("squeezed-heyting").param("definable", m);

        let mut closed = Tally::asserted("→ and ⊖ stay in δ(S)");
        let mut res = Tally::asserted("residuation: X ∩ P ⊆ Z ⇔ P ⊆ X → Z");
        let mut dres = Tally::asserted("dual residuation: X ⊆ Q ∪ Z ⇔ X ⊖ Z ⊆ Q");
        let mut lit = Tally::claim("dual residuation with ⊖ over 𝒯");
        let mut lit_eq = Tally::claim("⊖ over 𝒯 = ⊖ over δ(S)");
        let mut dist = Tally::asserted("distributivity");
        let mut self_arrow = Tally::asserted("X → X = S");
        let mut bot_arrow = Tally::asserted("∅ → Z = S");
        let mut empty_literal = 0u64;

        for (i, &x) in d.iter().enumerate() {
            self_arrow.check(arrow[i * m + i] == full, || u.show(x));
            bot_arrow.check(arrow[idx[&Subset::EMPTY] * m + i] == full, || u.show(x));
            for (j, &z) in d.iter().enumerate() {
                let (ar, om) = (arrow[i * m + j], ominus[i * m + j]);
                closed.check(idx.contains_key(&ar) && idx.contains_key(&om), || sh(&[x, z]));
                let (ol, was_empty) = self.ominus_literal_raw(x, z);
                empty_literal += was_empty as u64;
                lit_eq.check(ol == om, || format!("X = {}, Z = {}: over 𝒯 {}, over δ(S) {}", u.show(x), u.show(z), u.show(ol), u.show(om)));
                for &p in d {
                    let w = || format!("X = {}, Z = {}, P = {}", u.show(x), u.show(z), u.show(p));
                    res.check(x.intersection(p).is_subset(z) == p.is_subset(ar), w);
                    dres.check(x.is_subset(p.union(z)) == om.is_subset(p), w);
                    lit.check(x.is_subset(p.union(z)) == ol.is_subset(p), w);
                    dist.check(
                        x.intersection(z.union(p)) == x.intersection(z).union(x.intersection(p))
                            && x.union(z.intersection(p)) == x.union(z).intersection(x.union(p)),
                        w,
                    );
                }
            }
        }

        let e = idx[&Subset::EMPTY];
        let neg = |i: usize| arrow[i * m + e];
        let coneg = |i: usize| ominus[idx[&full] * m + i];
        let mut irregular = Tally::search("¬¬X ≠ X");
        let mut double_reg = Tally::search("X ∩ ~X ⊄ Y ∪ ¬Y");
        let mut wlem = Tally::search("¬X ∪ ¬¬X ≠ S");
        for (i, &x) in d.iter().enumerate() {
            let nx = neg(i);
            let nnx = neg(idx[&nx]);
            if nnx != x {
                irregular.hit(|| format!("X = {}, ¬¬X = {}", u.show(x), u.show(nnx)));
            } else {
                irregular.miss();
            }
            if nx.union(nnx) != full {
                wlem.hit(|| format!("X = {}, ¬X ∪ ¬¬X = {}", u.show(x), u.show(nx.union(nnx))));
            } else {
                wlem.miss();
            }
            let lhs = x.intersection(coneg(i));
            for (j, &y) in d.iter().enumerate() {
                if !lhs.is_subset(y.union(neg(j))) {
                    double_reg.hit(|| format!("X = {}, Y = {}", u.show(x), u.show(y)));
                } else {
                    double_reg.miss();
                }
            }
        }

        for t in [closed, res, dres, dist, self_arrow, bot_arrow] {
            rep.push(t.finish(true));
        }
        rep.push(lit.finish(true).with_note(format!("{empty_literal} pairs had no member of 𝒯 in the family (read as S)")));
        rep.push(lit_eq.finish(true));
        for t in [irregular, double_reg, wlem] {
            rep.push(t.finish(true));
        }
        rep
    }

    /// `T_𝒯(S) = {W^c ∪ H : H ⊆ W ∈ 𝒯}` with `A·B = A^c ∪ B`.
    pub fn presqueezed(&self) -> Result<PresqueezedAlgebra> {
        let carrier = TarskiSet::new(self.universe.clone(), self.squeezed.clone())?.dual_family();
        Ok(PresqueezedAlgebra { universe: self.universe.clone(), carrier })
    }

    /// The presqueezed-algebra checks together with the `·`-closure witness
    /// searches for `𝒯` and `δ(S)`.
    pub fn tarski_report(&self) -> Result<Report> {
        let u = &self.universe;
        let alg = self.presqueezed()?;
        let mut rep = alg.axioms_report();
        rep.name = "squeezed-tarski".into();

        let mut wd = Tally::claim("l_s, u_s, u_sb images of carrier elements lie in T_𝒯(S)");
        for &a in &alg.carrier {
            for kind in SqueezedKind::ALL {
                let img = self.approx(a, kind);
                wd.check(alg.contains(img), || format!("{}({}) = {}", kind.name(), u.show(a), u.show(img)));
            }
        }
        rep.push(wd.finish(true));

        let full_in = self.squeezed.contains(&u.full());
        let boolean = alg.is_complement_closed();
        let mut triv = Tally::claim("S ∈ 𝒯 → carrier is a Boolean algebra of sets");
        if full_in {
            triv.check(boolean, || "S ∈ 𝒯 but the carrier is not complement-closed".into());
        }
        rep.push(triv.finish(true));

        let mut not_boolean = Tally::search("carrier not complement-closed");
        for &a in &alg.carrier {
            let ac = u.complement(a);
            if alg.contains(ac) {
                not_boolean.miss();
            } else {
                not_boolean.hit(|| format!("{} ∈ T_𝒯(S), complement {} ∉", u.show(a), u.show(ac)));
            }
        }
        rep.push(not_boolean.finish(true));

        for (name, family) in [("𝒯 not closed under ·", &self.squeezed), ("δ(S) not closed under ·", &self.definable)] {
            let mut t = Tally::search(name);
            for &a in family.iter() {
                for &b in family.iter() {
                    let c = u.complement(a).union(b);
                    if family.binary_search(&c).is_ok() {
                        t.miss();
                    } else {
                        t.hit(|| format!("{}·{} = {}", u.show(a), u.show(b), u.show(c)));
                    }
                }
            }
            rep.push(t.finish(true));
        }
        rep.fact("carrier", alg.carrier.iter().map(|&s| u.show(s)).collect::<Vec<_>>());
        rep.fact("boolean_definable", boolean);
        Ok(rep)
    }
}

/// The carrier of the presqueezed algebra as a sorted family of sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresqueezedAlgebra {
    universe: Universe,
    carrier: Vec<Subset>,
}

impl PresqueezedAlgebra {
    pub fn carrier(&self) -> &[Subset] {
        &self.carrier
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.carrier.binary_search(&s).is_ok()
    }

    pub fn is_complement_closed(&self) -> bool {
        self.carrier.iter().all(|&a| self.contains(self.universe.complement(a)))
    }

    /// `·`-closure and T1–T4 on the carrier, for any carrier size.
    pub fn axioms_report(&self) -> Report {
        let u = &self.universe;
        let idx: HashMap<Subset, usize> = self.carrier.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut closed = Tally::asserted("carrier closed under ·");
        let mut table = Vec::with_capacity(self.carrier.len() * self.carrier.len());
        for &a in &self.carrier {
            for &b in &self.carrier {
                let c = u.complement(a).union(b);
                match idx.get(&c) {
                    Some(&i) => {
                        closed.miss();
                        table.push(i);
                    }
                    None => {
                        closed.hit(|| format!("{}·{} = {}", u.show(a), u.show(b), u.show(c)));
                        table.push(0);
                    }
                }
            }
        }
        let closed = closed.finish(true);
        let mut rep = match (closed.holds(), idx.get(&u.full())) {
            (true, Some(&unit)) => {
                let labels: Vec<String> = self.carrier.iter().map(|&s| u.show(s)).collect();
                check_axioms(&labels, &table, unit)
            }
            _ => Report::new("tarski-axioms"),
        };
        rep.params.insert("elements".into(), self.carrier.len().to_string());
        rep.checks.insert(0, closed);
        rep
    }

    /// The carrier as a table-backed algebra (carriers up to the Tarski module's cap).
    pub fn to_algebra(&self) -> Result<FiniteTarskiAlgebra> {
        FiniteTarskiAlgebra::of_sets(&self.universe, &self.carrier)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::ApproximationSpace;

    fn f6() -> ToleranceSpace {
        ToleranceSpace::from_pairs(Universe::range(3).unwrap(), [(0, 1), (1, 2)]).unwrap()
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    #[test]
    fn f6_structure() {
        let sys = SqueezedSystem::build(&f6()).unwrap();
        assert_eq!(sys.blocks(), &[s(&[0, 1]), s(&[1, 2])]);
        assert_eq!(sys.squeezed_blocks(), &[s(&[1]), s(&[0, 1]), s(&[1, 2])]);
        assert_eq!(sys.definable(), &[s(&[]), s(&[1]), s(&[0, 1]), s(&[1, 2]), s(&[0, 1, 2])]);
        assert_eq!(sys.atoms(), &[s(&[0, 1]), s(&[1]), s(&[1, 2])]);
        assert!(sys.structure_report(&f6()).passed());
    }

    #[test]
    fn f6_approximations_and_ops() {
        let sys = SqueezedSystem::build(&f6()).unwrap();
        assert_eq!(sys.upper(s(&[0])), s(&[0, 1]));
        assert_eq!(sys.bitten_upper(s(&[0])), s(&[0]));
        assert_eq!(sys.lower(s(&[1, 2])), s(&[1, 2]));
        assert_eq!(sys.arrow(s(&[0, 1]), s(&[1])).unwrap(), s(&[1, 2]));
        assert_eq!(sys.ominus(s(&[0, 1]), s(&[1])).unwrap(), s(&[0, 1]));
        assert_eq!(sys.ominus_literal(s(&[0, 1]), s(&[1])).unwrap(), (s(&[0, 1]), false));
        assert_eq!(sys.arrow(Subset::EMPTY, s(&[1])).unwrap(), s(&[0, 1, 2]));
        assert!(matches!(sys.arrow(s(&[0]), s(&[1])), Err(Error::NotDefinable(_))));
        for kind in SqueezedKind::ALL {
            assert_eq!(sys.approx(Subset::EMPTY, kind), Subset::EMPTY);
        }
    }

    #[test]
    fn f6_suites() {
        let sys = SqueezedSystem::build(&f6()).unwrap();
        let modal = sys.modal_law_suite(&SuiteConfig::default());
        assert!(modal.passed(), "{}", modal.to_text());
        let h = sys.heyting_suite();
        assert!(h.passed(), "{}", h.to_text());
        assert!(h.check("¬¬X ≠ X").unwrap().found());
        // ⊖ over 𝒯 gives ⋂𝒯 = {1} for X = Z = {1}, but ∅ already works.
        assert!(!h.check("dual residuation with ⊖ over 𝒯").unwrap().holds());
        let t = sys.tarski_report().unwrap();
        assert!(t.passed(), "{}", t.to_text());
        let carrier = sys.presqueezed().unwrap();
        assert_eq!(carrier.carrier(), &[s(&[0]), s(&[0, 1]), s(&[2]), s(&[0, 2]), s(&[1, 2]), s(&[0, 1, 2])]);
        assert!(t.check("𝒯 not closed under ·").unwrap().found());
        assert!(t.check("δ(S) not closed under ·").unwrap().found());
        assert!(!t.check("l_s, u_s, u_sb images of carrier elements lie in T_𝒯(S)").unwrap().holds());
    }

    #[test]
    fn equivalence_and_identity_instances() {
        let u = Universe::range(4).unwrap();
        let eq = ApproximationSpace::from_partition(u.clone(), &[s(&[0, 1]), s(&[2]), s(&[3])]).unwrap();
        let sys = SqueezedSystem::build(&ToleranceSpace::from_equivalence(&eq)).unwrap();
        assert_eq!(sys.blocks(), eq.classes());
        for x in u.powerset() {
            assert_eq!(sys.lower(x), eq.lower(x));
            assert_eq!(sys.upper(x), eq.upper(x));
            assert_eq!(sys.bitten_upper(x), eq.upper(x));
            assert_eq!(sys.is_definable(x), eq.is_definite(x));
        }
        let id = SqueezedSystem::build(&ToleranceSpace::identity(u.clone())).unwrap();
        assert_eq!(id.definable().len(), 16);
        assert!(!id.heyting_suite().check("¬X ∪ ¬¬X ≠ S").unwrap().found());
    }

    #[test]
    fn rejects_non_tolerances() {
        let u = Universe::range(2).unwrap();
        let r = BinaryRelation::from_pairs(u.clone(), [(0, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(ToleranceSpace::new(r), Err(Error::NotTolerance("symmetry")));
        let r = BinaryRelation::from_pairs(u, [(0, 0)]).unwrap();
        assert_eq!(ToleranceSpace::new(r), Err(Error::NotTolerance("reflexivity")));
    }
}
