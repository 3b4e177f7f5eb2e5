//! Side-by-side comparison of rough and probabilistic dependence: aligned law
//! inventories, embeddings between implication algebras, and the search for
//! maps that fail to carry `β_i` across.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cover::{CoverSpace, UpperKind};
use crate::dependence::{Crisp, DependenceEngine};
use crate::deviant::{DeviancePolicy, DevianceSpace, EmptyCandidates};
use crate::error::{Error, Result};
use crate::granular::GranularOperatorSpace;
use crate::prob::FiniteProbSpace;
use crate::report::{LawCheck, Report, SuiteConfig, Tally};
use crate::tarski::FiniteTarskiAlgebra;
use crate::universe::{union_all, Subset, Universe};

/// Rough-side universes up to this size are compared exhaustively.
pub const MAX_ROUGH_COMPARE: usize = 6;
/// Probability spaces with at most this many atoms are compared exhaustively.
pub const MAX_PROB_COMPARE_ATOMS: usize = 4;

/// The laws both sides are claimed to share.
pub const CLAIMED_SHARED: [&str; 3] = ["Symmetry", "Bottom", "Almost Empty"];

/// The law names evaluated on both sides, in report order.
pub const ALIGNED_LAWS: [&str; 7] =
    ["Symmetry", "Bottom", "Top", "Almost Empty", "Idempotence", "Union monotonicity", "Containment in the meet"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Rough,
    Probabilistic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignedLaw {
    pub law: String,
    /// What the law says about `β_i`.
    pub rough_form: String,
    /// What the law says about `π_o` (or its defining valuation).
    pub prob_form: String,
    pub rough: LawCheck,
    pub prob: LawCheck,
    pub shared: bool,
    pub claimed_shared: bool,
}

impl AlignedLaw {
    pub fn agrees_with_claim(&self) -> bool {
        self.shared == self.claimed_shared
    }

    /// Witnesses from the side(s) where the law fails.
    pub fn witnesses(&self) -> Vec<(Side, String)> {
        let mut out = Vec::new();
        for (side, c) in [(Side::Rough, &self.rough), (Side::Probabilistic, &self.prob)] {
            out.extend(c.witnesses.iter().map(|w| (side, w.clone())));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub rough_recipe: String,
    pub policy: DeviancePolicy,
    pub laws: Vec<AlignedLaw>,
    pub shared: Vec<String>,
    pub unshared: Vec<String>,
}

impl ComparisonReport {
    pub fn law(&self, name: &str) -> Option<&AlignedLaw> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn to_report(&self) -> Report {
        let mut rep = Report::new("shared-properties").param("rough", &self.rough_recipe).param("policy", self.policy);
        let mut cert = Tally::asserted("every unshared law carries a witness");
        let mut agree = Tally::claim("shared set is exactly Symmetry, Bottom, Almost Empty");
        for l in &self.laws {
            let mut r = l.rough.clone();
            r.law = format!("rough/{}", l.law);
            let mut p = l.prob.clone();
            p.law = format!("prob/{}", l.law);
            rep.push(r);
            rep.push(p);
            if !l.shared {
                cert.check(!l.witnesses().is_empty(), || l.law.clone());
            }
            agree.check(l.agrees_with_claim(), || {
                format!("{}: {}", l.law, if l.shared { "shared" } else { "not shared" })
            });
        }
        rep.push(cert.finish(true));
        rep.push(agree.finish(true));
        rep.fact("shared", &self.shared);
        rep.fact("unshared", &self.unshared);
        rep
    }
}

/// Evaluates the aligned law list for `β_i` on `rough` and `π_o` on `prob`.
pub fn shared_property_report(
    rough: &GranularOperatorSpace,
    prob: &FiniteProbSpace,
    policy: DeviancePolicy,
) -> Result<ComparisonReport> {
    let u = rough.universe();
    if u.len() > MAX_ROUGH_COMPARE {
        return Err(Error::UniverseTooLarge { size: u.len(), cap: MAX_ROUGH_COMPARE });
    }
    if prob.atoms().len() > MAX_PROB_COMPARE_ATOMS {
        return Err(Error::UniverseTooLarge { size: prob.atoms().len(), cap: MAX_PROB_COMPARE_ATOMS });
    }
    let rough_side = rough_inventory(rough);
    let prob_side = prob_inventory(prob, policy)?;
    let mut laws = Vec::new();
    for ((law, rough_form, r), (_, prob_form, p)) in rough_side.into_iter().zip(prob_side) {
        let shared = r.holds() && p.holds();
        laws.push(AlignedLaw {
            law: law.to_string(),
            rough_form: rough_form.to_string(),
            prob_form: prob_form.to_string(),
            rough: r,
            prob: p,
            shared,
            claimed_shared: CLAIMED_SHARED.contains(&law),
        });
    }
    let shared = laws.iter().filter(|l| l.shared).map(|l| l.law.clone()).collect();
    let unshared = laws.iter().filter(|l| !l.shared).map(|l| l.law.clone()).collect();
    Ok(ComparisonReport { rough_recipe: rough.recipe().to_string(), policy, laws, shared, unshared })
}

type Inventory = Vec<(&'static str, &'static str, LawCheck)>;

fn rough_inventory(g: &GranularOperatorSpace) -> Inventory {
    let u = g.universe();
    let e = DependenceEngine::new(g, Crisp::LowerDefinite);
    let full = u.full();
    let all: Vec<Subset> = u.powerset().collect();
    // An undefined degree never satisfies an equation unless both sides are undefined.
    let b = |x, y| e.beta_i(x, y);
    let sh = |v: &[Subset]| v.iter().map(|&s| u.show(s)).collect::<Vec<_>>().join(", ");

    let mut sym = Tally::claim("Symmetry");
    let mut bottom = Tally::claim("Bottom");
    let mut top = Tally::claim("Top");
    let mut almost = Tally::claim("Almost Empty");
    let mut idem = Tally::claim("Idempotence");
    let mut union = Tally::claim("Union monotonicity");
    let mut meet = Tally::claim("Containment in the meet");
    for &x in &all {
        let w = || sh(&[x]);
        bottom.check(b(x, Subset::EMPTY) == Some(Subset::EMPTY), w);
        top.check(b(x, full) == Some(Subset::EMPTY), || format!("x = {}: β_i(x, S) = {:?}", u.show(x), b(x, full)));
        if b(x, x) == Some(Subset::EMPTY) {
            almost.check(g.lower(x).is_empty(), || format!("x = {}: x^l = {}", u.show(x), u.show(g.lower(x))));
        }
        idem.check(b(x, x) == Some(g.lower(x)), || format!("x = {}: β_i(x, x) = {:?}, x^l = {}", u.show(x), b(x, x), u.show(g.lower(x))));
        for &y in &all {
            let w = || sh(&[x, y]);
            sym.check(b(x, y) == b(y, x), w);
            meet.check(b(x, y).is_some_and(|v| v.is_subset(x.intersection(y))), w);
            for &z in &all {
                let ok = match (b(x, y), b(x, y.union(z))) {
                    (Some(p), Some(q)) => p.is_subset(q),
                    (None, None) => true,
                    _ => false,
                };
                union.check(ok, || sh(&[x, y, z]));
            }
        }
    }
    vec![
        ("Symmetry", "β_i(x, y) = β_i(y, x)", sym.finish(true)),
        ("Bottom", "β_i(x, ∅) = ∅", bottom.finish(true)),
        ("Top", "β_i(x, S) = ∅", top.finish(true)),
        ("Almost Empty", "β_i(x, x) = ∅ → x^l = ∅", almost.finish(true)),
        ("Idempotence", "β_i(x, x) = x^l", idem.finish(true)),
        ("Union monotonicity", "β_i(x, y) ⊆ β_i(x, y ∪ z)", union.finish(true)),
        ("Containment in the meet", "β_i(x, y) ⊆ x ∩ y", meet.finish(true)),
    ]
}

fn prob_inventory(sp: &FiniteProbSpace, policy: DeviancePolicy) -> Result<Inventory> {
    let u = sp.universe();
    let dev = DevianceSpace::new(sp, policy);
    let events = sp.events();
    let full = u.full();
    let pi = |x, y| -> Result<Subset> {
        Ok(dev.pi_o(x, y, EmptyCandidates::Convention)?.expect("convention mode is total").event)
    };
    let sh = |v: &[Subset]| v.iter().map(|&s| u.show(s)).collect::<Vec<_>>().join(", ");

    let mut sym = Tally::claim("Symmetry");
    let mut bottom = Tally::claim("Bottom");
    let mut top = Tally::claim("Top");
    let mut almost = Tally::claim("Almost Empty");
    let mut idem = Tally::claim("Idempotence");
    let mut union = Tally::claim("Union monotonicity");
    let mut meet = Tally::claim("Containment in the meet");
    for &x in &events {
        let w = || sh(&[x]);
        bottom.check(dev.deviant_equiv(pi(x, Subset::EMPTY)?, Subset::EMPTY)?, w);
        top.check(dev.deviant_equiv(pi(x, full)?, Subset::EMPTY)?, w);
        if sp.delta(x, x)?.is_zero() {
            let p = sp.p(x)?;
            almost.check(p.is_zero() || p.is_one(), || format!("x = {}: p(x) = {p}", u.show(x)));
        }
        let pxx = pi(x, x)?;
        idem.check(pxx == x, || format!("x = {}: π_o(x, x) = {}", u.show(x), u.show(pxx)));
        for &y in &events {
            let pxy = pi(x, y)?;
            sym.check(pxy == pi(y, x)?, || sh(&[x, y]));
            meet.check(pxy.is_subset(x.intersection(y)), || sh(&[x, y]));
            for &z in &events {
                let q = pi(x, y.union(z))?;
                union.check(pxy.is_subset(q), || {
                    format!("x = {}, y = {}, z = {}: π_o(x, y) = {}, π_o(x, y ∪ z) = {}", u.show(x), u.show(y), u.show(z), u.show(pxy), u.show(q))
                });
            }
        }
    }
    Ok(vec![
        ("Symmetry", "π_o(x, y) = π_o(y, x)", sym.finish(true)),
        ("Bottom", "π_o(x, ∅) ≈ ∅", bottom.finish(true)),
        ("Top", "π_o(x, S) ≈ ∅", top.finish(true)),
        ("Almost Empty", "δ(x, x) = 0 → p(x) ∈ {0, 1}", almost.finish(true)),
        ("Idempotence", "π_o(x, x) = x", idem.finish(true)),
        ("Union monotonicity", "π_o(x, y) ⊆ π_o(x, y ∪ z)", union.finish(true)),
        ("Containment in the meet", "π_o(x, y) ⊆ x ∩ y", meet.finish(true)),
    ])
}

/// Injective structure-preserving maps between two finite implication algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embeddings {
    pub source_size: usize,
    pub target_size: usize,
    /// Injective semi-morphisms, images by element index.
    pub semi_morphisms: Vec<Vec<usize>>,
    /// The homomorphisms among them.
    pub homomorphisms: Vec<Vec<usize>>,
    /// Set when injectivity was ruled out by cardinality alone.
    pub cardinality_bound: bool,
}

/// All injective semi-morphisms and homomorphisms from `rough` into `measurable`.
pub fn embed_rough_into_measurable(
    rough: &FiniteTarskiAlgebra,
    measurable: &FiniteTarskiAlgebra,
    budget: u128,
) -> Result<Embeddings> {
    let (n, m) = (rough.len(), measurable.len());
    if n > m {
        return Ok(Embeddings {
            source_size: n,
            target_size: m,
            semi_morphisms: Vec::new(),
            homomorphisms: Vec::new(),
            cardinality_bound: true,
        });
    }
    let semi: Vec<Vec<usize>> = rough
        .semi_morphisms(measurable, budget)?
        .into_iter()
        .filter(|f| f.iter().collect::<BTreeSet<_>>().len() == f.len())
        .collect();
    let homomorphisms = semi.iter().filter(|f| rough.is_homomorphism(measurable, f)).cloned().collect();
    Ok(Embeddings { source_size: n, target_size: m, semi_morphisms: semi, homomorphisms, cardinality_bound: false })
}

/// A map `℘(S) → ℘(W)` tabulated by source mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetMap {
    source: Universe,
    target: Universe,
    image: Vec<Subset>,
}

impl SetMap {
    /// Checks that the map is a semi-morphism of the power-set implication algebras.
    pub fn certified(source: Universe, target: Universe, image: Vec<Subset>) -> Result<Self> {
        if image.len() != 1 << source.len() || image.iter().any(|s| !s.is_subset(target.full())) {
            return Err(Error::UniverseMismatch);
        }
        let (ps, pt) = (powerset_algebra(&source)?, powerset_algebra(&target)?);
        let f: Vec<usize> = image.iter().map(|s| s.bits() as usize).collect();
        if let Some(v) = ps.semi_morphism_violation(&pt, &f) {
            return Err(Error::NotSemiMorphism(v));
        }
        Ok(Self { source, target, image })
    }

    pub fn identity(universe: Universe) -> Self {
        let image = universe.powerset().collect();
        Self { source: universe.clone(), target: universe, image }
    }

    pub fn source(&self) -> &Universe {
        &self.source
    }

    pub fn target(&self) -> &Universe {
        &self.target
    }

    pub fn apply(&self, s: Subset) -> Subset {
        self.image[s.bits() as usize]
    }
}

/// The implication algebra on `℘(S)`; element `i` is the subset with mask `i`.
pub fn powerset_algebra(u: &Universe) -> Result<FiniteTarskiAlgebra> {
    FiniteTarskiAlgebra::of_sets(u, &u.powerset().collect::<Vec<_>>())
}

/// How `β_i` is read on the codomain, which carries no granulation of its own.
#[derive(Debug, Clone)]
pub enum TargetBeta<'a> {
    /// Images of the source granules act as granules; `β'(U, V)` is the union
    /// of image granules inside `U ∩ V`.
    ImageGranule,
    /// `β'(U, V) = π_o(U, V)` on a probability space over the codomain.
    Deviance(&'a DevianceSpace<'a>),
}

impl TargetBeta<'_> {
    pub fn label(&self) -> &'static str {
        match self {
            Self::ImageGranule => "image-granule",
            Self::Deviance(_) => "deviance",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreservationOutcome {
    pub mode: String,
    pub pairs_checked: u64,
    /// Pairs skipped because `β_i` is undefined on the source.
    pub undefined: u64,
    pub witness: Option<String>,
}

impl PreservationOutcome {
    pub fn preserved(&self) -> bool {
        self.witness.is_none()
    }
}

/// Scans all pairs `(A, B)` for `φ(β_i(A, B)) ≠ β'(φA, φB)`; stops at the first witness.
pub fn beta_preservation_hunt(g: &GranularOperatorSpace, phi: &SetMap, target: &TargetBeta) -> Result<PreservationOutcome> {
    let u = g.universe();
    if u.len() != phi.source.len() {
        return Err(Error::UniverseMismatch);
    }
    if let TargetBeta::Deviance(d) = target {
        if d.space().universe().len() != phi.target.len() {
            return Err(Error::UniverseMismatch);
        }
    }
    let e = DependenceEngine::new(g, Crisp::LowerDefinite);
    let image_granules: Vec<Subset> = g.granules().iter().map(|&k| phi.apply(k)).collect();
    let w = &phi.target;
    let mut out = PreservationOutcome { mode: target.label().into(), pairs_checked: 0, undefined: 0, witness: None };
    for a in u.powerset() {
        for b in u.powerset() {
            let Some(beta) = e.beta_i(a, b) else {
                out.undefined += 1;
                continue;
            };
            out.pairs_checked += 1;
            let (fa, fb) = (phi.apply(a), phi.apply(b));
            let lhs = phi.apply(beta);
            let rhs = match target {
                TargetBeta::ImageGranule => {
                    union_all(image_granules.iter().copied().filter(|k| k.is_subset(fa.intersection(fb))))
                }
                TargetBeta::Deviance(d) => d.pi_o(fa, fb, EmptyCandidates::Convention)?.expect("convention mode is total").event,
            };
            if lhs != rhs {
                out.witness = Some(format!(
                    "A = {}, B = {}: φ(β_i(A, B)) = {}, β'(φA, φB) = {}",
                    u.show(a),
                    u.show(b),
                    w.show(lhs),
                    w.show(rhs)
                ));
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Every proper cover of the universe (families of nonempty subsets whose union is `S`).
pub fn proper_covers(u: &Universe) -> Vec<CoverSpace> {
    let nonempty: Vec<Subset> = u.powerset().filter(|s| !s.is_empty()).collect();
    assert!(nonempty.len() < 16, "cover enumeration is only for tiny universes");
    (1u32..1 << nonempty.len())
        .map(|sel| nonempty.iter().enumerate().filter(|(i, _)| sel >> i & 1 == 1).map(|(_, &s)| s).collect::<Vec<_>>())
        .filter(|fam| union_all(fam.iter().copied()) == u.full())
        .map(|fam| CoverSpace::new(u.clone(), fam).expect("members are nonempty"))
        .collect()
}

/// Runs the preservation hunt over every proper cover of an `n`-set (granules =
/// cover members, `l1`/`u1`) and every semi-morphism `℘(n) → ℘(w)`, in both
/// target modes. A found witness certifies that `β_i` need not be preserved;
/// otherwise the facts record the exhaustive scan.
pub fn beta_preservation_sweep(n: usize, w: usize, policy: DeviancePolicy, budget: u128) -> Result<Report> {
    let su = Universe::range(n)?;
    let wu = Universe::letters(w)?;
    let (ps, pw) = (powerset_algebra(&su)?, powerset_algebra(&wu)?);
    let maps: Vec<SetMap> = ps
        .semi_morphisms(&pw, budget)?
        .into_iter()
        .map(|f| SetMap { source: su.clone(), target: wu.clone(), image: f.into_iter().map(|i| Subset::from_bits(i as u32)).collect() })
        .collect();
    let wspace = FiniteProbSpace::uniform(wu.clone())?;
    let dev = DevianceSpace::new(&wspace, policy);
    let covers = proper_covers(&su);

    let mut image_mode = Tally::search("β_i not preserved (image-granule)");
    let mut dev_mode = Tally::search("β_i not preserved (deviance)");
    let mut identity = Tally::asserted("identity map preserves β_i");
    let mut skipped = 0u64;
    let mut pairs = 0u64;
    for k in &covers {
        let g = match GranularOperatorSpace::from_cover(k, UpperKind::U1) {
            Ok(g) => g,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let id = beta_preservation_hunt(&g, &SetMap::identity(su.clone()), &TargetBeta::ImageGranule)?;
        identity.check(id.preserved(), || id.witness.clone().unwrap_or_default());
        for (mi, phi) in maps.iter().enumerate() {
            for (tally, target) in [(&mut image_mode, TargetBeta::ImageGranule), (&mut dev_mode, TargetBeta::Deviance(&dev))] {
                let o = beta_preservation_hunt(&g, phi, &target)?;
                pairs += o.pairs_checked;
                match o.witness {
                    Some(wit) => tally.hit(|| format!("cover {}, map #{mi}: {wit}", crate::cover::show_family(&su, k.members()))),
                    None => tally.miss(),
                }
            }
        }
    }
    let mut rep = Report::new("beta-preservation")
        .param("source_size", n)
        .param("target_size", w)
        .param("policy", policy);
    rep.push(identity.finish(true));
    let note = "a hit certifies that β_i need not be preserved by a semi-morphism";
    rep.push(image_mode.finish(true).with_note(note));
    rep.push(dev_mode.finish(true).with_note(note));
    rep.fact("covers", covers.len());
    rep.fact("covers_without_operator_space", skipped);
    rep.fact("semi_morphisms", maps.len());
    rep.fact("pairs_scanned", pairs);
    Ok(rep)
}

/// Runs the aligned comparison and the sweep and merges them into one report.
pub fn bridge_report(
    rough: &GranularOperatorSpace,
    prob: &FiniteProbSpace,
    policy: DeviancePolicy,
    budget: u128,
    _cfg: &SuiteConfig,
) -> Result<Report> {
    let mut rep = Report::new("bridge").param("policy", policy);
    rep.absorb(shared_property_report(rough, prob, policy)?.to_report());
    let sweep = beta_preservation_sweep(3, 2, policy, budget)?;
    let exhausted = !sweep.checks.iter().any(|c| c.found());
    rep.absorb(sweep);
    rep.fact("corpus_enlargement_needed", exhausted);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::ApproximationSpace;
    use crate::tarski::TarskiSet;

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    fn f1() -> GranularOperatorSpace {
        let sp = ApproximationSpace::from_partition(Universe::range(4).unwrap(), &[s(&[0, 1]), s(&[2, 3])]).unwrap();
        GranularOperatorSpace::classical(&sp).unwrap()
    }

    #[test]
    fn f1_against_f4() {
        let f4 = FiniteProbSpace::uniform(Universe::letters(4).unwrap()).unwrap();
        let c = shared_property_report(&f1(), &f4, DeviancePolicy::default()).unwrap();
        for law in CLAIMED_SHARED {
            assert!(c.law(law).unwrap().shared, "{law}");
        }
        let top = c.law("Top").unwrap();
        assert!(!top.shared);
        assert!(!top.witnesses().is_empty());
        assert!(c.to_report().passed());
    }

    #[test]
    fn identity_preserves_and_collapse_is_scanned() {
        let g = f1();
        let id = beta_preservation_hunt(&g, &SetMap::identity(g.universe().clone()), &TargetBeta::ImageGranule).unwrap();
        assert!(id.preserved());
        assert_eq!(id.pairs_checked, 256);

        // Collapse each class to one point of W = {a, b}.
        let w = Universe::letters(2).unwrap();
        let image: Vec<Subset> = g
            .universe()
            .powerset()
            .map(|x| Subset::from_indices([(s(&[0, 1]), 0), (s(&[2, 3]), 1)].into_iter().filter(|(c, _)| c.is_subset(x)).map(|(_, i)| i)))
            .collect();
        let phi = SetMap::certified(g.universe().clone(), w, image).unwrap();
        let o = beta_preservation_hunt(&g, &phi, &TargetBeta::ImageGranule).unwrap();
        assert!(o.preserved());
    }

    #[test]
    fn uncertified_maps_are_rejected() {
        let u = Universe::range(1).unwrap();
        let bad = SetMap::certified(u.clone(), u, vec![Subset::EMPTY, Subset::EMPTY]);
        assert!(matches!(bad, Err(Error::NotSemiMorphism(_))));
    }

    #[test]
    fn embeddings() {
        let x = Universe::range(3).unwrap();
        let f5 = TarskiSet::new(x.clone(), vec![s(&[0, 1]), s(&[2])]).unwrap().delta_dual().unwrap();
        let p3 = powerset_algebra(&x).unwrap();
        let e = embed_rough_into_measurable(&f5, &p3, 10_000_000).unwrap();
        let inclusion: Vec<usize> = f5.elements().unwrap().iter().map(|s| s.bits() as usize).collect();
        assert!(e.homomorphisms.contains(&inclusion));
        for f in &e.semi_morphisms {
            assert!(f5.semi_morphism_violation(&p3, f).is_none());
        }
        let p2 = powerset_algebra(&Universe::range(2).unwrap()).unwrap();
        let none = embed_rough_into_measurable(&f5, &p2, 10_000_000).unwrap();
        assert!(none.cardinality_bound && none.semi_morphisms.is_empty());
        let own = embed_rough_into_measurable(&p3, &p3, 10_000_000).unwrap();
        assert!(own.homomorphisms.contains(&(0..8).collect::<Vec<_>>()));
    }

    #[test]
    fn sweep_runs() {
        let rep = beta_preservation_sweep(3, 2, DeviancePolicy::default(), 10_000_000).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert_eq!(rep.facts["covers"], 109);
    }
}
