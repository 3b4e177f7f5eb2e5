//! Granular operator spaces: a granulation with lower/upper operators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cover::{CoverSpace, UpperKind};
use crate::error::{Error, Result};
use crate::field::SetField;
use crate::relation::{ratio, ApproximationSpace};
use crate::report::{Report, SuiteConfig, Tally};
use crate::universe::{intersect_all, union_all, Subset, Universe};

/// Universes up to this size get their operator tables precomputed.
const MATERIALIZE_CAP: usize = 16;
/// Operator axioms are checked over all of `℘(S)` (or all comparable pairs) up to this size.
const AXIOM_EXHAUSTIVE_CAP: usize = 10;

type Op = Arc<dyn Fn(Subset) -> Subset + Send + Sync>;

#[derive(Clone)]
enum Operator {
    Table(Arc<[Subset]>),
    Lazy(Op),
}

impl Operator {
    fn apply(&self, x: Subset) -> Subset {
        match self {
            Operator::Table(t) => t[x.bits() as usize],
            Operator::Lazy(f) => f(x),
        }
    }
}

/// A universe, a granulation, and lower/upper operators satisfying the
/// operator axioms (checked at construction).
#[derive(Clone)]
pub struct GranularOperatorSpace {
    universe: Universe,
    granules: Vec<Subset>,
    recipe: String,
    lower: Operator,
    upper: Operator,
}

impl fmt::Debug for GranularOperatorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GranularOperatorSpace")
            .field("universe", &self.universe)
            .field("granules", &self.granules)
            .field("recipe", &self.recipe)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaKind {
    Cap,
    Cup,
    Choice,
    CapU,
    CupL,
    PCap,
}

impl GammaKind {
    pub const ALL: [GammaKind; 6] = [Self::Cap, Self::Cup, Self::Choice, Self::CapU, Self::CupL, Self::PCap];
}

impl fmt::Display for GammaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for GammaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Malformed { location: "gamma kind".into(), message: format!("unknown kind `{s}`") })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definability {
    RoughlyDefinable,
    ExternallyUndefinable,
    InternallyUndefinable,
    TotallyUndefinable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regions {
    pub pos: Subset,
    pub neg: Subset,
    pub sneg: Subset,
    pub class: Definability,
}

/// Per-subset rough-object flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughFlags {
    pub subset: Subset,
    pub rl: bool,
    pub ru: bool,
    pub rw: bool,
    pub rb: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughObjectReport {
    pub subsets: usize,
    pub rl: usize,
    pub ru: usize,
    pub rw: usize,
    pub rb: usize,
    pub definite: Vec<Subset>,
    /// Pairs `a ⊊ b` of definite elements.
    pub rd: usize,
    /// Distinct pairs `(x^l, x^u)` with `x^l ≠ x^u`.
    pub rp: usize,
    /// Distinct intervals `[x^l, x^u]`.
    pub ria: usize,
    /// Pairs `a ⊆ b` of definite elements.
    pub ri: usize,
    /// Distinct triples `(x^l, x^lu, x^u)`.
    pub et: usize,
    /// Distinct orthopairs `(x^l, x^uc)`.
    pub rop: usize,
    pub definability: BTreeMap<String, usize>,
    pub flags: Vec<RoughFlags>,
}

/// The quotient `℘(S)/≈` under the basic rough order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoughOrder {
    /// Classes keyed by `(lower, upper)`, in canonical order.
    pub classes: Vec<(Subset, Subset)>,
    pub bottom: (Subset, Subset),
    pub top: (Subset, Subset),
    pub reflexive: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    pub bounded: bool,
}

/// One quotient: value classes of a rough-membership equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueClass<T> {
    pub value: String,
    pub members: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedRelations {
    pub kind: GammaKind,
    /// `R_A` classes on S for each A, ordered by membership value.
    pub by_subset: Vec<(Subset, Vec<ValueClass<usize>>)>,
    /// `∼_x` classes on ℘(S) for each x.
    pub by_point: Vec<(usize, Vec<ValueClass<Subset>>)>,
    /// `⋍` class sizes on S × ℘(S), keyed by value.
    pub global: Vec<(String, usize)>,
    pub all_equivalences: bool,
}

impl GranularOperatorSpace {
    /// Builds a space from operator functions, verifying the operator axioms.
    pub fn from_fns<L, U>(universe: Universe, granules: Vec<Subset>, recipe: &str, lower: L, upper: U) -> Result<Self>
    where
        L: Fn(Subset) -> Subset + Send + Sync + 'static,
        U: Fn(Subset) -> Subset + Send + Sync + 'static,
    {
        let (lower, upper) = if universe.len() <= MATERIALIZE_CAP {
            let lt: Arc<[Subset]> = universe.powerset().map(&lower).collect();
            let ut: Arc<[Subset]> = universe.powerset().map(&upper).collect();
            (Operator::Table(lt), Operator::Table(ut))
        } else {
            (Operator::Lazy(Arc::new(lower)), Operator::Lazy(Arc::new(upper)))
        };
        let g = Self { universe, granules: dedup(granules), recipe: recipe.to_string(), lower, upper };
        g.verify_axioms()?;
        Ok(g)
    }

    /// Explicit operator tables indexed by subset mask.
    pub fn from_tables(universe: Universe, granules: Vec<Subset>, lower: Vec<Subset>, upper: Vec<Subset>) -> Result<Self> {
        let expected = 1usize << universe.len();
        for t in [&lower, &upper] {
            if t.len() != expected {
                return Err(Error::PartialTable { expected, found: t.len() });
            }
        }
        let full = universe.full();
        if lower.iter().chain(&upper).chain(&granules).any(|s| !s.is_subset(full)) {
            return Err(Error::UniverseMismatch);
        }
        let g = Self {
            universe,
            granules: dedup(granules),
            recipe: "explicit".into(),
            lower: Operator::Table(lower.into()),
            upper: Operator::Table(upper.into()),
        };
        g.verify_axioms()?;
        Ok(g)
    }

    /// Classical approximations with the equivalence classes as granules.
    pub fn classical(space: &ApproximationSpace) -> Result<Self> {
        let (a, b) = (space.clone(), space.clone());
        Self::from_fns(space.universe().clone(), space.classes().to_vec(), "classical", move |x| a.lower(x), move |x| b.upper(x))
    }

    /// `l1` with the chosen upper operator of a proper cover; members are the granules.
    pub fn from_cover(cover: &CoverSpace, upper: UpperKind) -> Result<Self> {
        if !cover.is_proper() {
            return Err(Error::ImproperCover);
        }
        let (a, b) = (cover.clone(), cover.clone());
        let recipe = format!("l1{}", upper.name());
        Self::from_fns(
            cover.universe().clone(),
            cover.members().to_vec(),
            &recipe,
            move |x| a.lower_l1(x),
            move |x| b.upper(x, upper).expect("proper cover covers every point"),
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn granules(&self) -> &[Subset] {
        &self.granules
    }

    pub fn recipe(&self) -> &str {
        &self.recipe
    }

    pub fn lower(&self, x: Subset) -> Subset {
        self.lower.apply(x)
    }

    pub fn upper(&self, x: Subset) -> Subset {
        self.upper.apply(x)
    }

    pub fn is_lower_definite(&self, x: Subset) -> bool {
        self.lower(x) == x
    }

    pub fn is_definite(&self, x: Subset) -> bool {
        self.lower(x) == x && self.upper(x) == x
    }

    /// Subsets to scan: all of `℘(S)` for small universes, else a seeded sample.
    fn scan_range(&self, cap: usize) -> (Vec<Subset>, bool) {
        if self.universe.len() <= cap {
            (self.universe.powerset().collect(), true)
        } else {
            let cfg = SuiteConfig::default();
            (cfg.tuples(self.universe.len(), 1).0.into_iter().map(|t| t[0]).collect(), false)
        }
    }

    fn verify_axioms(&self) -> Result<()> {
        let u = &self.universe;
        let fail = |axiom: &'static str, w: String| Err(Error::GosAxiom { axiom, witness: w });
        if !self.lower(Subset::EMPTY).is_empty() {
            return fail("∅^l = ∅", u.show(self.lower(Subset::EMPTY)));
        }
        if !self.upper(Subset::EMPTY).is_empty() {
            return fail("∅^u = ∅", u.show(self.upper(Subset::EMPTY)));
        }
        let (xs, exhaustive) = self.scan_range(AXIOM_EXHAUSTIVE_CAP);
        for &a in &xs {
            let l = self.lower(a);
            if !l.is_subset(a) {
                return fail("a^l ⊆ a", u.show(a));
            }
            if self.lower(l) != l {
                return fail("a^ll = a^l", u.show(a));
            }
            let up = self.upper(a);
            if !up.is_subset(u.full()) {
                return fail("a^u ⊆ S", u.show(a));
            }
            if !up.is_subset(self.upper(up)) {
                return fail("a^u ⊆ a^uu", u.show(a));
            }
            // Monotonicity over every superset when enumerable, else over one-point extensions.
            let comp = u.complement(a);
            let supersets: Vec<Subset> = if exhaustive {
                comp.subsets().map(|e| a.union(e)).collect()
            } else {
                comp.iter().map(|i| a.with(i)).collect()
            };
            for b in supersets {
                if !l.is_subset(self.lower(b)) {
                    return fail("monotone l", format!("{} ⊆ {}", u.show(a), u.show(b)));
                }
                if !up.is_subset(self.upper(b)) {
                    return fail("monotone u", format!("{} ⊆ {}", u.show(a), u.show(b)));
                }
            }
        }
        Ok(())
    }

    /// Weak representability, lower stability and full underlap of the granulation.
    pub fn validate_admissible(&self) -> Report {
        let u = &self.universe;
        let nonempty: Vec<Subset> = self.granules.iter().copied().filter(|g| !g.is_empty()).collect();
        let field = SetField::generated_by(u.clone(), &nonempty).expect("granules are nonempty here");
        let (xs, exhaustive) = self.scan_range(AXIOM_EXHAUSTIVE_CAP);

        let mut wra = Tally::claim("WRA");
        for &a in &xs {
            let (l, up) = (self.lower(a), self.upper(a));
            wra.check(field.contains(l), || format!("a = {}: a^l = {} is not a term in the granules", u.show(a), u.show(l)));
            wra.check(field.contains(up), || format!("a = {}: a^u = {} is not a term in the granules", u.show(a), u.show(up)));
        }
        let mut ls = Tally::claim("LS");
        for &b in &self.granules {
            let comp = u.complement(b);
            let supersets: Vec<Subset> = if exhaustive {
                comp.subsets().map(|e| b.union(e)).collect()
            } else {
                xs.iter().map(|x| x.union(b)).collect()
            };
            for a in supersets {
                ls.check(b.is_subset(self.lower(a)), || format!("b = {}, a = {}", u.show(b), u.show(a)));
            }
        }
        let mut fu = Tally::claim("FU");
        for (i, &a) in self.granules.iter().enumerate() {
            for &b in &self.granules[i + 1..] {
                let base = a.union(b);
                let found = u.complement(base).subsets().any(|e| self.is_definite(base.union(e)));
                fu.check(found, || format!("no definite set above {} and {}", u.show(a), u.show(b)));
            }
        }
        let mut rep = Report::new("admissibility").param("recipe", &self.recipe);
        rep.push(wra.finish(exhaustive));
        rep.push(ls.finish(exhaustive));
        rep.push(fu.finish(true).with_note("quantified over distinct granule pairs with ⊆"));
        rep
    }

    fn containing(&self, x: usize) -> Vec<Subset> {
        self.granules.iter().copied().filter(|g| g.contains(x)).collect()
    }

    /// Granular neighbourhood of `x`. `Ok(None)` means the partial `PCap` map is undefined at `x`.
    pub fn gamma(&self, x: usize, kind: GammaKind) -> Result<Option<Subset>> {
        if x >= self.universe.len() {
            return Err(Error::ElementOutOfRange { index: x, size: self.universe.len() });
        }
        let cont = self.containing(x);
        let cap = intersect_all(cont.iter().copied())
            .ok_or_else(|| Error::UncoveredElement(self.universe.label(x).to_string()))?;
        let cup = union_all(cont.iter().copied());
        Ok(match kind {
            GammaKind::Cap => Some(cap),
            GammaKind::Cup => Some(cup),
            GammaKind::Choice => cont.iter().copied().min_by(|a, b| a.lex_cmp(*b)),
            GammaKind::CapU => Some(self.upper(cap)),
            GammaKind::CupL => Some(self.lower(cup)),
            GammaKind::PCap => self.granules.contains(&cap).then_some(cap),
        })
    }

    fn gamma_required(&self, x: usize, kind: GammaKind) -> Result<Subset> {
        match self.gamma(x, kind)? {
            Some(g) if !g.is_empty() => Ok(g),
            _ => Err(Error::UndefinedGranule(self.universe.label(x).to_string())),
        }
    }

    /// `|γ(x) ∩ A| / |γ(x)|`.
    pub fn omega(&self, x: usize, a: Subset, kind: GammaKind) -> Result<BigRational> {
        let g = self.gamma_required(x, kind)?;
        Ok(ratio(g.intersection(a).len(), g.len()))
    }

    pub fn induced_relations(&self, kind: GammaKind) -> Result<InducedRelations> {
        let u = &self.universe;
        let n = u.len();
        let gammas: Vec<Subset> = (0..n).map(|x| self.gamma_required(x, kind)).collect::<Result<_>>()?;
        let w = |x: usize, a: Subset| ratio(gammas[x].intersection(a).len(), gammas[x].len());
        let mut by_subset = Vec::new();
        let mut global: BTreeMap<BigRational, usize> = BTreeMap::new();
        let mut all_eq = true;
        for a in u.powerset() {
            let mut classes: BTreeMap<BigRational, Vec<usize>> = BTreeMap::new();
            for x in 0..n {
                let v = w(x, a);
                *global.entry(v.clone()).or_default() += 1;
                classes.entry(v).or_default().push(x);
            }
            all_eq &= classes.values().map(Vec::len).sum::<usize>() == n;
            by_subset.push((a, to_classes(classes)));
        }
        let mut by_point = Vec::new();
        for x in 0..n {
            let mut classes: BTreeMap<BigRational, Vec<Subset>> = BTreeMap::new();
            for a in u.powerset() {
                classes.entry(w(x, a)).or_default().push(a);
            }
            all_eq &= classes.values().map(Vec::len).sum::<usize>() == 1 << n;
            by_point.push((x, to_classes(classes)));
        }
        all_eq &= global.values().sum::<usize>() == n << n;
        Ok(InducedRelations {
            kind,
            by_subset,
            by_point,
            global: global.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            all_equivalences: all_eq,
        })
    }

    /// Properties of the general rough membership function.
    pub fn omega_property_check(&self, kind: GammaKind, cfg: &SuiteConfig) -> Report {
        let u = &self.universe;
        let n = u.len();
        let gammas: Vec<Option<Subset>> =
            (0..n).map(|x| self.gamma_required(x, kind).ok()).collect();
        let defined: Vec<usize> = (0..n).filter(|&x| gammas[x].is_some()).collect();
        let w = |x: usize, a: Subset| {
            let g = gammas[x].expect("defined");
            ratio(g.intersection(a).len(), g.len())
        };
        let (pairs, exhaustive) = cfg.tuples(n, 2);
        let mut mono = Tally::asserted("Monotony");
        let mut empty = Tally::asserted("Empty Set");
        let mut top = Tally::asserted("Top");
        let mut geq = Tally::asserted("Granular Equality");
        let mut gmono = Tally::claim("G-Monotony");
        let mut one = Tally::asserted("ω = 1 iff γ(x) ⊆ A");
        let mut zero = Tally::asserted("ω = 0 iff γ(x) ∩ A = ∅");
        for &x in &defined {
            empty.check(w(x, Subset::EMPTY).is_zero(), || u.label(x).to_string());
            top.check(w(x, u.full()).is_one(), || u.label(x).to_string());
        }
        let singles: Vec<Subset> = if exhaustive { u.powerset().collect() } else { pairs.iter().map(|p| p[0]).collect() };
        for &x in &defined {
            let g = gammas[x].expect("defined");
            for &a in &singles {
                let v = w(x, a);
                one.check(v.is_one() == g.is_subset(a), || format!("x = {}, A = {}", u.label(x), u.show(a)));
                zero.check(v.is_zero() == !g.meets(a), || format!("x = {}, A = {}", u.label(x), u.show(a)));
            }
        }
        for p in &pairs {
            let (a, b) = (p[0], p[1]);
            if a.is_subset(b) {
                for &x in &defined {
                    mono.check(w(x, a) <= w(x, b), || format!("x = {}, A = {}, B = {}", u.label(x), u.show(a), u.show(b)));
                }
            }
        }
        for &x in &defined {
            for &y in &defined {
                let (gx, gy) = (gammas[x].expect("defined"), gammas[y].expect("defined"));
                if gx == gy || gx.is_subset(gy) {
                    for &a in &singles {
                        let (vx, vy) = (w(x, a), w(y, a));
                        if gx == gy {
                            geq.check(vx == vy, || format!("x = {}, y = {}, A = {}", u.label(x), u.label(y), u.show(a)));
                        }
                        gmono.check(vx <= vy, || {
                            format!(
                                "γ({}) = {} ⊆ γ({}) = {}, A = {}: {} > {}",
                                u.label(x),
                                u.show(gx),
                                u.label(y),
                                u.show(gy),
                                u.show(a),
                                vx,
                                vy
                            )
                        });
                    }
                }
            }
        }
        let mut rep = Report::new("omega-properties").param("gamma", kind).param("recipe", &self.recipe);
        rep.fact("undefined_points", (0..n).filter(|x| gammas[*x].is_none()).map(|x| u.label(x).to_string()).collect::<Vec<_>>());
        for t in [mono, empty, top, geq, one, zero] {
            rep.push(t.finish(exhaustive));
        }
        rep.push(gmono.finish(exhaustive).with_note("diagnostic: witnesses are reported, the property is not asserted"));
        rep
    }

    pub fn regions(&self, x: Subset) -> Regions {
        let pos = self.lower(x);
        let up = self.upper(x);
        let neg = self.universe.complement(up);
        let sneg = self.universe.complement(self.upper(up));
        let class = match (pos.is_empty(), neg.is_empty()) {
            (false, false) => Definability::RoughlyDefinable,
            (false, true) => Definability::ExternallyUndefinable,
            (true, false) => Definability::InternallyUndefinable,
            (true, true) => Definability::TotallyUndefinable,
        };
        Regions { pos, neg, sneg, class }
    }

    pub fn definite_elements(&self) -> Vec<Subset> {
        self.universe.powerset().filter(|&x| self.is_definite(x)).collect()
    }

    pub fn rough_object_census(&self) -> RoughObjectReport {
        let u = &self.universe;
        let mut flags = Vec::new();
        let (mut rl, mut ru, mut rw, mut rb) = (0, 0, 0, 0);
        let mut rp = BTreeSet::new();
        let mut ria = BTreeSet::new();
        let mut et = BTreeSet::new();
        let mut rop = BTreeSet::new();
        let mut definability: BTreeMap<String, usize> = BTreeMap::new();
        for x in u.powerset() {
            let l = self.lower(x);
            let up = self.upper(x);
            let f = RoughFlags { subset: x, rl: l != x, ru: x != up, rw: up != self.upper(up), rb: l != up };
            rl += f.rl as usize;
            ru += f.ru as usize;
            rw += f.rw as usize;
            rb += f.rb as usize;
            if f.rb {
                rp.insert((l, up));
            }
            ria.insert((l, up));
            et.insert((l, self.upper(l), up));
            rop.insert((l, u.complement(up)));
            let class = serde_json::to_value(self.regions(x).class).expect("enum");
            *definability.entry(class.as_str().unwrap_or_default().to_string()).or_default() += 1;
            flags.push(f);
        }
        let definite = self.definite_elements();
        let mut rd = 0;
        let mut ri = 0;
        for &a in &definite {
            for &b in &definite {
                if a.is_subset(b) {
                    ri += 1;
                    rd += (a != b) as usize;
                }
            }
        }
        RoughObjectReport {
            subsets: 1 << u.len(),
            rl,
            ru,
            rw,
            rb,
            definite,
            rd,
            rp: rp.len(),
            ria: ria.len(),
            ri,
            et: et.len(),
            rop: rop.len(),
            definability,
            flags,
        }
    }

    pub fn basic_rough_order(&self) -> RoughOrder {
        let u = &self.universe;
        let classes: Vec<(Subset, Subset)> =
            u.powerset().map(|x| (self.lower(x), self.upper(x))).collect::<BTreeSet<_>>().into_iter().collect();
        let le = |a: &(Subset, Subset), b: &(Subset, Subset)| a.0.is_subset(b.0) && a.1.is_subset(b.1);
        let reflexive = classes.iter().all(|a| le(a, a));
        let antisymmetric = classes.iter().all(|a| classes.iter().all(|b| !(le(a, b) && le(b, a)) || a == b));
        let transitive = classes
            .iter()
            .all(|a| classes.iter().all(|b| !le(a, b) || classes.iter().all(|c| !le(b, c) || le(a, c))));
        let bottom = (Subset::EMPTY, Subset::EMPTY);
        let top = (self.lower(u.full()), self.upper(u.full()));
        let bounded = classes.contains(&bottom)
            && classes.contains(&top)
            && classes.iter().all(|c| le(&bottom, c) && le(c, &top));
        RoughOrder { classes, bottom, top, reflexive, antisymmetric, transitive, bounded }
    }

    /// Rough equality `≈` as a partition of `℘(S)`.
    pub fn rough_equality_partition(&self) -> Vec<Vec<Subset>> {
        let mut classes: BTreeMap<(Subset, Subset), Vec<Subset>> = BTreeMap::new();
        for x in self.universe.powerset() {
            classes.entry((self.lower(x), self.upper(x))).or_default().push(x);
        }
        classes.into_values().collect()
    }
}

fn to_classes<T: Clone>(m: BTreeMap<BigRational, Vec<T>>) -> Vec<ValueClass<T>> {
    m.into_iter().map(|(k, v)| ValueClass { value: k.to_string(), members: v }).collect()
}

fn dedup(v: Vec<Subset>) -> Vec<Subset> {
    let mut out: Vec<Subset> = Vec::with_capacity(v.len());
    for s in v {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Verdict of the dependence-space test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceVerdict {
    pub congruence: bool,
    /// `(x, x', y)`: `x F x'` but `(x ∪ y)` and `(x' ∪ y)` are in different blocks.
    pub witness: Option<(Subset, Subset, Subset)>,
}

/// Tests whether a partition of `℘(A)` is a congruence of `(℘(A), ∪)`.
pub fn check_dependence_space(universe: &Universe, blocks: &[Vec<Subset>]) -> Result<CongruenceVerdict> {
    let size = 1usize << universe.len();
    let mut block_of = vec![usize::MAX; size];
    for (i, b) in blocks.iter().enumerate() {
        for s in b {
            let k = s.bits() as usize;
            if k >= size || block_of[k] != usize::MAX {
                return Err(Error::NotAPartition);
            }
            block_of[k] = i;
        }
    }
    if block_of.contains(&usize::MAX) {
        return Err(Error::NotAPartition);
    }
    for b in blocks {
        for &x in b {
            for &x2 in b {
                for y in universe.powerset() {
                    if block_of[x.union(y).bits() as usize] != block_of[x2.union(y).bits() as usize] {
                        return Ok(CongruenceVerdict { congruence: false, witness: Some((x, x2, y)) });
                    }
                }
            }
        }
    }
    Ok(CongruenceVerdict { congruence: true, witness: None })
}
