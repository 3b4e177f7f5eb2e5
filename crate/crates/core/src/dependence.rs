//! Rough dependence degrees over granular operator spaces.

use serde::{Deserialize, Serialize};

use crate::granular::GranularOperatorSpace;
use crate::relation::ApproximationSpace;
use crate::report::{Report, SuiteConfig, Tally};
use crate::universe::{union_all, Subset, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DependenceMode {
    Infimal,
    Supremal,
}

/// Which subsets count as crisp targets for the degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Crisp {
    /// `x^l = x`.
    LowerDefinite,
    /// `x^l = x = x^u`.
    Definite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceDegree {
    pub value: Subset,
    pub mode: DependenceMode,
    pub defined: bool,
}

impl DependenceDegree {
    pub fn get(&self) -> Option<Subset> {
        self.defined.then_some(self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PnVerdict {
    Independent,
    Dependent,
    Neither,
}

/// Precomputed β over a space. Both degrees depend on `A ∩ B` only, since a
/// granule lies in `A` and in `B` exactly when it lies in `A ∩ B`.
#[derive(Debug, Clone)]
pub struct DependenceEngine {
    universe: Universe,
    granules: Vec<Subset>,
    crisp: Vec<Subset>,
    infimal: Vec<Option<Subset>>,
    supremal: Vec<Option<Subset>>,
}

/// Greatest element of a family under inclusion, if it has one.
fn greatest(family: impl Iterator<Item = Subset>) -> Option<Subset> {
    let v: Vec<Subset> = family.collect();
    let top = union_all(v.iter().copied());
    v.contains(&top).then_some(top)
}

/// Least element of a family under inclusion, if it has one.
fn least(family: impl Iterator<Item = Subset>) -> Option<Subset> {
    let v: Vec<Subset> = family.collect();
    let bottom = v.iter().copied().reduce(Subset::intersection)?;
    v.contains(&bottom).then_some(bottom)
}

impl DependenceEngine {
    pub fn new(g: &GranularOperatorSpace, crisp: Crisp) -> Self {
        let u = g.universe().clone();
        let crisp_sets: Vec<Subset> = u
            .powerset()
            .filter(|&x| match crisp {
                Crisp::LowerDefinite => g.is_lower_definite(x),
                Crisp::Definite => g.is_definite(x),
            })
            .collect();
        let granules = g.granules().to_vec();
        let mut infimal = Vec::with_capacity(1 << u.len());
        let mut supremal = Vec::with_capacity(1 << u.len());
        for m in u.powerset() {
            let cover = union_all(granules.iter().copied().filter(|c| c.is_subset(m)));
            infimal.push(greatest(crisp_sets.iter().copied().filter(|d| d.is_subset(cover))));
            supremal.push(least(crisp_sets.iter().copied().filter(|d| cover.is_subset(*d))));
        }
        Self { universe: u, granules, crisp: crisp_sets, infimal, supremal }
    }

    /// Classical specialization: equivalence classes as granules, lower-definite targets.
    pub fn classical(space: &ApproximationSpace) -> Self {
        let g = GranularOperatorSpace::classical(space).expect("classical approximations satisfy the operator axioms");
        Self::new(&g, Crisp::LowerDefinite)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn granules(&self) -> &[Subset] {
        &self.granules
    }

    pub fn crisp_sets(&self) -> &[Subset] {
        &self.crisp
    }

    /// Union of the granules inside both arguments.
    pub fn common_granule_union(&self, a: Subset, b: Subset) -> Subset {
        let m = a.intersection(b);
        union_all(self.granules.iter().copied().filter(|c| c.is_subset(m)))
    }

    pub fn beta(&self, a: Subset, b: Subset, mode: DependenceMode) -> DependenceDegree {
        let k = a.intersection(b).bits() as usize;
        let v = match mode {
            DependenceMode::Infimal => self.infimal[k],
            DependenceMode::Supremal => self.supremal[k],
        };
        DependenceDegree { value: v.unwrap_or_default(), mode, defined: v.is_some() }
    }

    pub fn beta_i(&self, a: Subset, b: Subset) -> Option<Subset> {
        self.infimal[a.intersection(b).bits() as usize]
    }

    pub fn beta_s(&self, a: Subset, b: Subset) -> Option<Subset> {
        self.supremal[a.intersection(b).bits() as usize]
    }
}

/// One-shot β over a space with definite elements as targets.
pub fn beta(a: Subset, b: Subset, g: &GranularOperatorSpace, mode: DependenceMode) -> DependenceDegree {
    DependenceEngine::new(g, Crisp::Definite).beta(a, b, mode)
}

pub fn pn_dependence(x: Subset, y: Subset, g: &GranularOperatorSpace) -> PnVerdict {
    let u = g.universe();
    let a = g.lower(x).is_subset(u.complement(g.upper(y)));
    let b = g.lower(y).is_subset(u.complement(g.upper(x)));
    match (a, b) {
        (true, true) => PnVerdict::Independent,
        (false, false) => PnVerdict::Dependent,
        _ => PnVerdict::Neither,
    }
}

/// Operator tables rebuilt from β alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveredOperators {
    pub lower: Vec<Subset>,
    pub upper: Vec<Subset>,
    pub lower_matches: bool,
    pub upper_matches: bool,
    pub mismatches: Vec<String>,
}

/// `l'(x) = β(x, x)` and `u'(x) = β(x^c, x^c)^c`, compared with the native operators.
pub fn recover_approximations(space: &ApproximationSpace) -> RecoveredOperators {
    let eng = DependenceEngine::classical(space);
    let u = space.universe();
    let beta = |x: Subset| eng.beta_i(x, x).expect("lower-definite sets are closed under union");
    let mut out = RecoveredOperators {
        lower: Vec::new(),
        upper: Vec::new(),
        lower_matches: true,
        upper_matches: true,
        mismatches: Vec::new(),
    };
    for x in u.powerset() {
        let l = beta(x);
        let up = u.complement(beta(u.complement(x)));
        if l != space.lower(x) {
            out.lower_matches = false;
            out.mismatches.push(format!("l'({}) = {}", u.show(x), u.show(l)));
        }
        if up != space.upper(x) {
            out.upper_matches = false;
            out.mismatches.push(format!("u'({}) = {}", u.show(x), u.show(up)));
        }
        out.lower.push(l);
        out.upper.push(up);
    }
    out
}

/// The nine classical identities plus a search for a converse witness of
/// `x ∩ y = ∅ → β x y = ∅`.
pub fn classical_beta_suite(space: &ApproximationSpace, cfg: &SuiteConfig) -> Report {
    let eng = DependenceEngine::classical(space);
    let u = space.universe().clone();
    let l = |x: Subset| space.lower(x);
    let bi = |x: Subset, y: Subset| eng.beta_i(x, y);
    let b = |x: Subset, y: Subset| bi(x, y).expect("classical infimal degree is always defined");
    let show = |xs: &[Subset]| xs.iter().map(|s| u.show(*s)).collect::<Vec<_>>().join(", ");

    let (pairs, pairs_exh) = cfg.tuples(u.len(), 2);
    let (triples, triples_exh) = cfg.tuples(u.len(), 3);
    let mut t: Vec<Tally> = [
        "β_i x y = x^l ∩ y^l = β_s x y",
        "β x x = x^l; β x y = β y x",
        "β (β x y) x = β x y",
        "β x y ⊆ β x (y ∪ z)",
        "x ⊆ y → β x y = x^l",
        "x ∩ y = ∅ → β_i x y = ∅",
        "β ∅ x = ∅; β x S = x^l",
        "y^l ⊆ z → β x y ⊆ β x z",
        "β x y = β x^l y^l = β x y^l",
    ]
    .into_iter()
    .map(Tally::asserted)
    .collect();

    for p in &pairs {
        let (x, y) = (p[0], p[1]);
        let w = || show(&[x, y]);
        let meet = l(x).intersection(l(y));
        t[0].check(bi(x, y) == Some(meet) && eng.beta_s(x, y) == Some(meet), w);
        t[1].check(b(x, x) == l(x) && b(x, y) == b(y, x), w);
        t[2].check(b(b(x, y), x) == b(x, y), w);
        if x.is_subset(y) {
            t[4].check(b(x, y) == l(x), w);
        }
        if !x.meets(y) {
            t[5].check(b(x, y).is_empty(), w);
        }
        t[6].check(b(Subset::EMPTY, x).is_empty() && b(x, u.full()) == l(x), w);
        t[8].check(b(x, y) == b(l(x), l(y)) && b(x, y) == b(x, l(y)), w);
    }
    for tr in &triples {
        let (x, y, z) = (tr[0], tr[1], tr[2]);
        let w = || show(&[x, y, z]);
        t[3].check(b(x, y).is_subset(b(x, y.union(z))), w);
        if l(y).is_subset(z) {
            t[7].check(b(x, y).is_subset(b(x, z)), w);
        }
    }
    let mut converse = Tally::search("converse: β_i x y = ∅ → x ∩ y = ∅");
    for p in &pairs {
        let (x, y) = (p[0], p[1]);
        if b(x, y).is_empty() && x.meets(y) {
            converse.hit(|| show(&[x, y]));
        } else {
            converse.miss();
        }
    }

    let mut rep = Report::new("classical-beta").param("universe", u.len());
    for (i, tally) in t.into_iter().enumerate() {
        rep.push(tally.finish(if i == 3 || i == 7 { triples_exh } else { pairs_exh }));
    }
    rep.push(converse.finish(pairs_exh));
    rep
}

/// The five GOS laws for β_i plus searches for the three possible failures.
pub fn gos_beta_suite(g: &GranularOperatorSpace, cfg: &SuiteConfig) -> Report {
    let eng = DependenceEngine::new(g, Crisp::Definite);
    let u = g.universe().clone();
    let bi = |x: Subset, y: Subset| eng.beta_i(x, y);
    let bs = |x: Subset, y: Subset| eng.beta_s(x, y);
    let show = |xs: &[Subset]| xs.iter().map(|s| u.show(*s)).collect::<Vec<_>>().join(", ");
    let opt = |o: Option<Subset>| o.map_or_else(|| "undefined".to_string(), |s| u.show(s));

    let (pairs, pairs_exh) = cfg.tuples(u.len(), 2);
    let (triples, triples_exh) = cfg.tuples(u.len(), 3);
    let mut sym = Tally::asserted("β_i x y = β_i y x");
    let mut mono = Tally::asserted("β_i x y ⊆ β_i x (y ∪ z)");
    let mut sub = Tally::asserted("x ⊆ y → β_i x y = β_i x x");
    let mut disj = Tally::asserted("x ∩ y = ∅ → β_i x y = ∅");
    let mut ends = Tally::asserted("β_i ∅ x = ∅; β_i x S = β_i x x");
    let mut f1 = Tally::search("β_i x y ≠ (x ∩ y)^l");
    let mut f2 = Tally::search("β_s x y ⊄ x ∪ y");
    let mut f3 = Tally::search("β_i x x ≠ x^l ≠ β_s x x");
    let mut undefined_supremal = 0u64;

    for p in &pairs {
        let (x, y) = (p[0], p[1]);
        let w = || show(&[x, y]);
        sym.check(bi(x, y) == bi(y, x), w);
        if x.is_subset(y) {
            sub.check(bi(x, y) == bi(x, x), w);
        }
        if !x.meets(y) {
            disj.check(bi(x, y) == Some(Subset::EMPTY), w);
        }
        ends.check(bi(Subset::EMPTY, x) == Some(Subset::EMPTY) && bi(x, u.full()) == bi(x, x), w);
        let lxy = g.lower(x.intersection(y));
        if bi(x, y) != Some(lxy) {
            f1.hit(|| format!("{}: β_i = {}, (x ∩ y)^l = {}", w(), opt(bi(x, y)), u.show(lxy)));
        } else {
            f1.miss();
        }
        match bs(x, y) {
            Some(s) if !s.is_subset(x.union(y)) => f2.hit(|| format!("{}: β_s = {}", w(), u.show(s))),
            None => {
                undefined_supremal += 1;
                f2.miss();
            }
            _ => f2.miss(),
        }
    }
    for x in pairs.iter().map(|p| p[0]).collect::<std::collections::BTreeSet<_>>() {
        let lx = Some(g.lower(x));
        if bi(x, x) != lx && lx != bs(x, x) {
            f3.hit(|| format!("x = {}: β_i = {}, x^l = {}, β_s = {}", u.show(x), opt(bi(x, x)), u.show(g.lower(x)), opt(bs(x, x))));
        } else {
            f3.miss();
        }
    }
    for tr in &triples {
        let (x, y, z) = (tr[0], tr[1], tr[2]);
        match (bi(x, y), bi(x, y.union(z))) {
            (Some(a), Some(b)) => mono.check(a.is_subset(b), || show(&[x, y, z])),
            (a, b) => mono.check(a.is_none() && b.is_none(), || format!("{}: undefined degree", show(&[x, y, z]))),
        }
    }

    let mut rep = Report::new("gos-beta").param("recipe", g.recipe()).param("universe", u.len());
    rep.fact("crisp_sets", eng.crisp_sets().len());
    rep.fact("undefined_supremal_pairs", undefined_supremal);
    for tally in [sym, sub, disj, ends] {
        rep.push(tally.finish(pairs_exh));
    }
    rep.push(mono.finish(triples_exh));
    for tally in [f1, f2, f3] {
        rep.push(tally.finish(pairs_exh));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{CoverSpace, UpperKind};

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    fn f1() -> ApproximationSpace {
        ApproximationSpace::from_partition(Universe::range(4).unwrap(), &[s(&[0, 1]), s(&[2, 3])]).unwrap()
    }

    #[test]
    fn f1_examples() {
        let eng = DependenceEngine::classical(&f1());
        let d = eng.beta(s(&[0, 1, 2]), s(&[0, 1, 3]), DependenceMode::Infimal);
        assert_eq!(d.get(), Some(s(&[0, 1])));
        assert_eq!(eng.beta_s(s(&[0, 1, 2]), s(&[0, 1, 3])), Some(s(&[0, 1])));
        assert_eq!(eng.beta_i(s(&[0, 1, 2]), s(&[0, 3])), Some(Subset::EMPTY));
        assert_eq!(eng.beta_i(Subset::EMPTY, Subset::EMPTY), Some(Subset::EMPTY));
    }

    #[test]
    fn classical_suite_passes_on_f1() {
        let rep = classical_beta_suite(&f1(), &SuiteConfig::default());
        assert!(rep.passed(), "{}", rep.to_text());
        let conv = rep.check("converse: β_i x y = ∅ → x ∩ y = ∅").unwrap();
        assert!(conv.found());
        assert_eq!(conv.witnesses[0], "{0}, {0}");
    }

    #[test]
    fn recovery_matches_on_f1() {
        let r = recover_approximations(&f1());
        assert!(r.lower_matches && r.upper_matches);
        assert_eq!(r.lower[s(&[0, 1, 2]).bits() as usize], s(&[0, 1]));
        assert_eq!(r.upper[s(&[0]).bits() as usize], s(&[0, 1]));
    }

    #[test]
    fn pn_examples() {
        let g = GranularOperatorSpace::classical(&f1()).unwrap();
        assert_eq!(pn_dependence(s(&[0, 1]), s(&[2, 3]), &g), PnVerdict::Independent);
        assert_eq!(pn_dependence(s(&[0, 1]), s(&[0, 1]), &g), PnVerdict::Dependent);
        assert_eq!(pn_dependence(Subset::EMPTY, Subset::EMPTY, &g), PnVerdict::Independent);
    }

    #[test]
    fn classical_gos_has_no_failures() {
        let g = GranularOperatorSpace::classical(&f1()).unwrap();
        let rep = gos_beta_suite(&g, &SuiteConfig::default());
        assert!(rep.passed(), "{}", rep.to_text());
        for law in ["β_i x y ≠ (x ∩ y)^l", "β_s x y ⊄ x ∪ y", "β_i x x ≠ x^l ≠ β_s x x"] {
            assert!(!rep.check(law).unwrap().found(), "{law}");
        }
    }

    #[test]
    fn cover_gos_suite_runs() {
        let c = CoverSpace::new(Universe::range(3).unwrap(), vec![s(&[0, 1]), s(&[1, 2])]).unwrap();
        let g = GranularOperatorSpace::from_cover(&c, UpperKind::U2Plus).unwrap();
        let rep = gos_beta_suite(&g, &SuiteConfig::default());
        assert_eq!(rep.checks.len(), 8);
    }
}
