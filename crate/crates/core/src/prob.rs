//! Finite probability spaces with exact rational weights and the
//! dependence function `δ(x, y) = p(x ∩ y) − p(x)·p(y)`.
//!
//! Events are unions of atoms, so internally an event is addressed by its
//! atom-selection mask: intersection, union and complement of events are the
//! bitwise operations on selections.

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::SetField;
use crate::report::{Report, SuiteConfig, Tally};
use crate::universe::{Subset, Universe};

/// Spaces with more atoms than this are rejected (the event lattice is materialized).
pub const MAX_ATOMS: usize = 12;
/// Event-set operations (ideals, spectra as sets) need `|𝒮| ≤ 64`.
pub const MAX_IDEAL_ATOMS: usize = 6;
/// Exhaustive law checks up to this many atoms; sampled above.
const LAW_EXHAUSTIVE_ATOMS: usize = 4;
const SIGN_TABLE_ATOMS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dependence {
    Pi,
    Sigma,
    Neither,
}

#[derive(Debug, Clone)]
pub struct FiniteProbSpace {
    field: SetField,
    weights: Vec<BigRational>,
    probs: Vec<BigRational>,
    index: HashMap<Subset, usize>,
    /// Sign of `δ` for every event pair, when the lattice is small enough.
    signs: Option<Vec<i8>>,
}

/// Clause-by-clause verdict for ideal and filter predicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseVerdict {
    pub holds: bool,
    /// 1 = closure clause, 2 = common-spectrum clause.
    pub failed_clause: Option<u8>,
    pub witness: Option<String>,
}

impl ClauseVerdict {
    fn ok() -> Self {
        Self { holds: true, failed_clause: None, witness: None }
    }

    fn fail(clause: u8, witness: String) -> Self {
        Self { holds: false, failed_clause: Some(clause), witness: Some(witness) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiSupremums {
    pub spectrum: Vec<Subset>,
    pub supremums: Vec<Subset>,
    pub union_in_spectrum: bool,
    pub union_is_supremum: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealGeneration {
    pub generators: Vec<Subset>,
    /// The fixed point of `Q ↦ Ξ(λ(Q))`.
    pub fixed_point: Vec<Subset>,
    /// Events added by each iteration.
    pub trace: Vec<Vec<Subset>>,
    pub verdict: ClauseVerdict,
}

impl IdealGeneration {
    /// The generated π-ideal, or `None` when no π-ideal contains the generators.
    pub fn ideal(&self) -> Option<&[Subset]> {
        self.verdict.holds.then_some(&self.fixed_point)
    }
}

/// A set of events as a bit mask over event indices.
type EventSet = u64;

fn parse_weight(s: &str) -> Result<BigRational> {
    let bad = || Error::BadWeight(s.to_string());
    let s = s.trim();
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(bad());
    }
    BigRational::from_str(s).map_err(|_| bad())
}

impl FiniteProbSpace {
    /// Weights are given per atom, in the order the atoms are supplied.
    pub fn new(universe: Universe, atoms: Vec<Subset>, weights: Vec<BigRational>) -> Result<Self> {
        if atoms.len() != weights.len() {
            return Err(Error::Malformed {
                location: "weights".into(),
                message: format!("{} weights for {} atoms", weights.len(), atoms.len()),
            });
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::BudgetExceeded { required: atoms.len() as u128, budget: MAX_ATOMS as u128 });
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(w.to_string()));
        }
        let total = weights.iter().fold(BigRational::zero(), |a, w| a + w);
        if !total.is_one() {
            return Err(Error::WeightsDoNotSumToOne(total.to_string()));
        }
        let field = SetField::from_atoms(universe, atoms.clone())?;
        // `from_atoms` sorts atoms; carry each weight along with its atom.
        let weights: Vec<BigRational> = field
            .atoms()
            .iter()
            .map(|a| weights[atoms.iter().position(|b| b == a).expect("same atoms")].clone())
            .collect();
        let k = field.atoms().len();
        let mut probs = Vec::with_capacity(1 << k);
        let mut index = HashMap::with_capacity(1 << k);
        for sel in 0..1u32 << k {
            let p = (0..k).filter(|i| sel >> i & 1 == 1).fold(BigRational::zero(), |a, i| a + &weights[i]);
            probs.push(p);
            index.insert(field.event_of_selection(sel), sel as usize);
        }
        let mut sp = Self { field, weights, probs, index, signs: None };
        if k <= SIGN_TABLE_ATOMS {
            let n = sp.event_count();
            let signs = (0..n * n)
                .map(|ij| {
                    let d = sp.d(ij / n, ij % n);
                    if d.is_positive() {
                        1
                    } else if d.is_negative() {
                        -1
                    } else {
                        0
                    }
                })
                .collect();
            sp.signs = Some(signs);
        }
        Ok(sp)
    }

    /// Weights given as strings such as `"1/4"`; decimals are rejected.
    pub fn from_strs<S: AsRef<str>>(universe: Universe, atoms: Vec<Subset>, weights: &[S]) -> Result<Self> {
        let w = weights.iter().map(|s| parse_weight(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(universe, atoms, w)
    }

    /// Every point its own atom, with the given weights.
    pub fn discrete(universe: Universe, weights: Vec<BigRational>) -> Result<Self> {
        let atoms = (0..universe.len()).map(Subset::singleton).collect();
        Self::new(universe, atoms, weights)
    }

    /// Uniform weights over singleton atoms.
    pub fn uniform(universe: Universe) -> Result<Self> {
        let n = universe.len();
        let w = vec![BigRational::new(1.into(), (n as i64).into()); n];
        Self::discrete(universe, w)
    }

    pub fn universe(&self) -> &Universe {
        self.field.universe()
    }

    pub fn field(&self) -> &SetField {
        &self.field
    }

    pub fn atoms(&self) -> &[Subset] {
        self.field.atoms()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn event_count(&self) -> usize {
        self.probs.len()
    }

    /// All events, indexed by atom selection.
    pub fn events(&self) -> Vec<Subset> {
        (0..self.event_count()).map(|i| self.event(i)).collect()
    }

    pub fn event(&self, i: usize) -> Subset {
        self.field.event_of_selection(i as u32)
    }

    pub fn event_index(&self, s: Subset) -> Result<usize> {
        self.index.get(&s).copied().ok_or_else(|| Error::NotAnEvent(self.universe().show(s)))
    }

    pub(crate) fn full_index(&self) -> usize {
        self.event_count() - 1
    }

    pub(crate) fn comp(&self, i: usize) -> usize {
        !i & self.full_index()
    }

    pub(crate) fn pr(&self, i: usize) -> &BigRational {
        &self.probs[i]
    }

    pub(crate) fn d(&self, i: usize, j: usize) -> BigRational {
        &self.probs[i & j] - &self.probs[i] * &self.probs[j]
    }

    fn sign(&self, i: usize, j: usize) -> i8 {
        match &self.signs {
            Some(t) => t[i * self.event_count() + j],
            None => {
                let d = self.d(i, j);
                if d.is_positive() {
                    1
                } else if d.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub(crate) fn classify_idx(&self, i: usize, j: usize) -> Dependence {
        match self.sign(i, j) {
            1 => Dependence::Pi,
            -1 => Dependence::Sigma,
            _ => Dependence::Neither,
        }
    }

    pub(crate) fn pi_idx(&self, i: usize, j: usize) -> bool {
        self.sign(i, j) > 0
    }

    pub(crate) fn sigma_idx(&self, i: usize, j: usize) -> bool {
        self.sign(i, j) < 0
    }

    pub(crate) fn show_idx(&self, i: usize) -> String {
        self.universe().show(self.event(i))
    }

    pub fn p(&self, x: Subset) -> Result<BigRational> {
        Ok(self.probs[self.event_index(x)?].clone())
    }

    pub fn delta(&self, x: Subset, y: Subset) -> Result<BigRational> {
        Ok(self.d(self.event_index(x)?, self.event_index(y)?))
    }

    pub fn classify(&self, x: Subset, y: Subset) -> Result<Dependence> {
        Ok(self.classify_idx(self.event_index(x)?, self.event_index(y)?))
    }

    pub fn weakly_mutually_exclusive(&self, x: Subset, y: Subset) -> Result<bool> {
        Ok(self.p(x.intersection(y))?.is_zero())
    }

    /// `ϱ(A, B) = p(A Δ B)`.
    pub fn symdiff_pseudometric(&self, a: Subset, b: Subset) -> Result<BigRational> {
        let (i, j) = (self.event_index(a)?, self.event_index(b)?);
        Ok(self.probs[i ^ j].clone())
    }

    fn law_events(&self, cfg: &SuiteConfig, arity: usize) -> (Vec<Vec<usize>>, bool) {
        let idx: Vec<usize> = (0..self.event_count()).collect();
        if self.atoms().len() <= LAW_EXHAUSTIVE_ATOMS {
            (crate::report::cartesian(&idx, arity), true)
        } else {
            cfg.tuples_from(&idx, arity)
        }
    }

    pub fn delta_law_suite(&self, cfg: &SuiteConfig) -> Report {
        let full = self.full_index();
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        let four = BigRational::from_integer(4.into());
        let sh = |v: &[usize]| v.iter().map(|&i| self.show_idx(i)).collect::<Vec<_>>().join(", ");
        let (pairs, pe) = self.law_events(cfg, 2);
        let (triples, te) = self.law_events(cfg, 3);
        let (quads, qe) = self.law_events(cfg, 4);

        let mut zero1 = Tally::asserted("Zero1");
        let mut zero2 = Tally::asserted("Zero2");
        let mut symmetry = Tally::asserted("Symmetry");
        let mut comp1 = Tally::asserted("Complement1");
        let mut comp2 = Tally::asserted("Complement2");
        let mut identity = Tally::asserted("Identity");
        let mut unity = Tally::asserted("Unity");
        let mut subset = Tally::asserted("Subset");
        let mut subset_radical = Tally::asserted("Subset (radical form)");
        let mut radical = Tally::asserted("(2p(x) − 1)² = 1 − 4δ(x, x)");
        let mut mex = Tally::asserted("MEx");
        let mut mex_radical = Tally::asserted("MEx (radical form)");
        let mut union = Tally::asserted("Union");
        let mut chaff = Tally::asserted("Chaff");

        // √(1 − 4δ(x,x)) = |2p(x) − 1| exactly.
        let root = |i: usize| (&two * self.pr(i) - &one).abs();
        let radical_products = |i: usize, j: usize| {
            let (ri, rj) = (root(i), root(j));
            let mut out = Vec::new();
            for a in [&one + &ri, &one - &ri] {
                for b in [&one + &rj, &one - &rj] {
                    out.push(&a * &b / &four);
                }
            }
            out
        };
        for i in 0..self.event_count() {
            let w = || sh(&[i]);
            let p = self.pr(i);
            identity.check(self.d(i, i) == p - p * p, w);
            unity.check(self.d(i, 0).is_zero() && self.d(i, full).is_zero(), w);
            let lhs = (&two * p - &one) * (&two * p - &one);
            radical.check(lhs == &one - &four * self.d(i, i), w);
        }
        for v in &pairs {
            let (i, j) = (v[0], v[1]);
            let w = || sh(v);
            let d = self.d(i, j);
            zero1.check(d.is_zero() == (self.pr(i & j) == &(self.pr(i) * self.pr(j))), w);
            if self.pr(i).is_zero() {
                zero2.check(d.is_zero(), w);
            }
            symmetry.check(d == self.d(j, i), w);
            comp1.check(d == -self.d(i, self.comp(j)), w);
            comp2.check(d == self.d(self.comp(i), self.comp(j)), w);
            if i & j == i && i != j {
                subset.check(d == self.pr(i) * self.pr(self.comp(j)), w);
                subset_radical.check(radical_products(i, j).contains(&d), w);
            }
            if i & j == 0 {
                mex.check(d == -(self.pr(i) * self.pr(j)), w);
                mex_radical.check(radical_products(i, j).iter().any(|r| -r == d), w);
            }
        }
        for v in &triples {
            let (x, y, z) = (v[0], v[1], v[2]);
            let lhs = self.d(x | y, z);
            let rhs = self.d(x, z) + self.d(y, z) - self.d(x & y, z);
            union.check(lhs == rhs, || sh(v));
        }
        for v in &quads {
            let (x, y, f, b) = (v[0], v[1], v[2], v[3]);
            // x ⊂ f, y ⊆ b, x ∩ y = f ∩ b
            if x & f == x && x != f && y & b == y && x & y == f & b {
                chaff.check(self.d(f, b) <= self.d(x, y), || sh(v));
            }
        }
        let mut rep = Report::new("delta-laws").param("atoms", self.atoms().len());
        for t in [zero1, zero2, symmetry, comp1, comp2, identity, unity, radical] {
            rep.push(t.finish(true));
        }
        for t in [subset, subset_radical, mex, mex_radical] {
            rep.push(t.finish(pe));
        }
        rep.push(union.finish(te));
        rep.push(chaff.finish(qe));
        rep
    }

    fn proper_nonempty(&self) -> Vec<usize> {
        (1..self.full_index()).collect()
    }

    pub fn pi_sigma_law_suite(&self, cfg: &SuiteConfig) -> Report {
        let sh = |v: &[usize]| v.iter().map(|&i| self.show_idx(i)).collect::<Vec<_>>().join(", ");
        let proper = self.proper_nonempty();
        let exh = self.atoms().len() <= LAW_EXHAUSTIVE_ATOMS;
        let tuples = |arity: usize| {
            if exh {
                (crate::report::cartesian(&proper, arity), true)
            } else {
                cfg.tuples_from(&proper, arity)
            }
        };
        let (pairs, pe) = tuples(2);
        let (triples, te) = tuples(3);
        let pi = |i: usize, j: usize| self.pi_idx(i, j);
        let sigma = |i: usize, j: usize| self.sigma_idx(i, j);

        let mut trichotomy = Tally::asserted("exactly one of π, σ, independent");
        let mut prop = Tally::claim("π x y or σ x y");
        let mut identity = Tally::claim("Identity");
        let mut co_identity = Tally::claim("Co-Identity");
        let mut sum1 = Tally::claim("Sum1");
        let mut mutual = Tally::claim("Mutual Complementation");
        let mut symmetry = Tally::claim("Symmetry");
        let mut incompat = Tally::search("Incompatibility");
        let mut nonext = Tally::claim("NonExtensionality");
        let mut sum2 = Tally::claim("Sum2");
        let mut co_sum = Tally::claim("Co-Sum");
        let mut coh1 = Tally::claim("Set coherence-1");
        let mut coh2 = Tally::claim("Set coherence-2");

        for &x in &proper {
            identity.check(pi(x, x), || format!("{}: δ = {}", sh(&[x]), self.d(x, x)));
            if pi(x, x) {
                co_identity.check(sigma(x, self.comp(x)), || sh(&[x]));
            }
        }
        for v in &pairs {
            let (x, y) = (v[0], v[1]);
            let w = || sh(v);
            let d = self.d(x, y);
            let (p, s) = (pi(x, y), sigma(x, y));
            trichotomy.check(
                (p && d.is_positive() && !s) || (s && d.is_negative() && !p) || (!p && !s && d.is_zero()),
                w,
            );
            prop.check(p || s, || format!("{}: δ = 0", w()));
            mutual.check(pi(x, self.comp(y)) == sigma(y, x), w);
            symmetry.check(p == pi(y, x), w);
            if x & y == x {
                coh1.check(p, || format!("{}: δ = {}", w(), d));
            }
            if x & y == 0 {
                coh2.check(s, || format!("{}: δ = {}", w(), d));
            }
            // b ⊄ x → ∃c. π b c ∧ ¬π c x, with (b, x) = (x, y) here.
            let (b, xx) = (x, y);
            if b & xx != b {
                let ok = proper.iter().any(|&c| pi(b, c) && !pi(c, xx));
                nonext.check(ok, || format!("b = {}, x = {}", self.show_idx(b), self.show_idx(xx)));
            }
        }
        for v in &triples {
            let (x, y, z) = (v[0], v[1], v[2]);
            let w = || sh(v);
            if pi(x, z | y) {
                sum1.check(pi(x, z) || pi(x, y), || format!("x, y, z = {}", w()));
            }
            // (x, y, a) = (x, y, z)
            if pi(x, y) && y & z == y && y != z {
                if pi(x, z) {
                    incompat.miss();
                } else {
                    incompat.hit(|| format!("x, y, a = {}", w()));
                }
            }
            if x & y != 0 {
                if pi(x, z) && pi(y, z) {
                    sum2.check(pi(x | y, z), || format!("x, y, a = {}", w()));
                }
                if sigma(x, z) && sigma(y, z) {
                    co_sum.check(sigma(x | y, z), || format!("x, y, a = {}", w()));
                }
            }
        }
        let mut rep = Report::new("pi-sigma-laws").param("atoms", self.atoms().len());
        rep.push(trichotomy.finish(pe));
        rep.push(prop.finish(pe).with_note("independent pairs (δ = 0) refute the dichotomy"));
        for t in [identity, co_identity] {
            rep.push(t.finish(true));
        }
        for t in [mutual, symmetry, coh1, coh2, nonext] {
            rep.push(t.finish(pe));
        }
        rep.push(sum1.finish(te));
        rep.push(incompat.finish(te).with_note("non-implication: a witness shows π x y ∧ y ⊂ a without π x a"));
        rep.push(sum2.finish(te));
        rep.push(co_sum.finish(te));
        rep
    }

    fn require_small(&self) -> Result<()> {
        if self.atoms().len() > MAX_IDEAL_ATOMS {
            return Err(Error::BudgetExceeded { required: self.atoms().len() as u128, budget: MAX_IDEAL_ATOMS as u128 });
        }
        Ok(())
    }

    fn set_of(&self, xs: &[Subset]) -> Result<EventSet> {
        self.require_small()?;
        xs.iter().try_fold(0u64, |acc, &s| Ok(acc | 1 << self.event_index(s)?))
    }

    fn members(&self, k: EventSet) -> Vec<Subset> {
        (0..self.event_count()).filter(|i| k >> i & 1 == 1).map(|i| self.event(i)).collect()
    }

    fn upper_spectrum(&self, a: usize, b: usize) -> EventSet {
        (0..self.event_count()).filter(|&x| self.pi_idx(a, x) && self.pi_idx(b, x)).fold(0, |acc, x| acc | 1 << x)
    }

    fn lower_spectrum(&self, a: usize, b: usize) -> EventSet {
        (0..self.event_count()).filter(|&x| self.sigma_idx(x, a) && self.sigma_idx(x, b)).fold(0, |acc, x| acc | 1 << x)
    }

    /// `U(a, b)` and `L(a, b)`.
    pub fn spectra(&self, a: Subset, b: Subset) -> Result<(Vec<Subset>, Vec<Subset>)> {
        self.require_small()?;
        let (i, j) = (self.event_index(a)?, self.event_index(b)?);
        Ok((self.members(self.upper_spectrum(i, j)), self.members(self.lower_spectrum(i, j))))
    }

    fn ideal_check(&self, k: EventSet) -> ClauseVerdict {
        let n = self.event_count();
        let inside: Vec<usize> = (0..n).filter(|i| k >> i & 1 == 1).collect();
        for &z in &inside {
            for x in 0..n {
                if self.pi_idx(z, x) && k >> x & 1 == 0 {
                    return ClauseVerdict::fail(1, format!("π {} {} but {} is outside", self.show_idx(z), self.show_idx(x), self.show_idx(x)));
                }
            }
        }
        for &z in &inside {
            for &b in &inside {
                if self.upper_spectrum(z, b) & k == 0 {
                    return ClauseVerdict::fail(2, format!("U({}, {}) misses the set", self.show_idx(z), self.show_idx(b)));
                }
            }
        }
        ClauseVerdict::ok()
    }

    fn filter_check(&self, f: EventSet) -> ClauseVerdict {
        let n = self.event_count();
        let inside: Vec<usize> = (0..n).filter(|i| f >> i & 1 == 1).collect();
        for &z in &inside {
            for x in 0..n {
                if self.sigma_idx(x, z) && f >> x & 1 == 0 {
                    return ClauseVerdict::fail(1, format!("σ {} {} but {} is outside", self.show_idx(x), self.show_idx(z), self.show_idx(x)));
                }
            }
        }
        for &z in &inside {
            for &b in &inside {
                if self.lower_spectrum(z, b) & f == 0 {
                    return ClauseVerdict::fail(2, format!("L({}, {}) misses the set", self.show_idx(z), self.show_idx(b)));
                }
            }
        }
        ClauseVerdict::ok()
    }

    pub fn is_pi_ideal(&self, k: &[Subset]) -> Result<ClauseVerdict> {
        Ok(self.ideal_check(self.set_of(k)?))
    }

    pub fn is_sigma_filter(&self, f: &[Subset]) -> Result<ClauseVerdict> {
        Ok(self.filter_check(self.set_of(f)?))
    }

    fn supremums_idx(&self, x: usize, z: usize) -> (EventSet, EventSet) {
        let u = self.upper_spectrum(x, z);
        let inside: Vec<usize> = (0..self.event_count()).filter(|i| u >> i & 1 == 1).collect();
        let sups = inside
            .iter()
            .copied()
            .filter(|&c| inside.iter().all(|&h| h == c || self.pi_idx(c, h)))
            .fold(0, |acc, c| acc | 1 << c);
        (u, sups)
    }

    pub fn pi_supremums(&self, x: Subset, z: Subset) -> Result<PiSupremums> {
        self.require_small()?;
        let (i, j) = (self.event_index(x)?, self.event_index(z)?);
        let (u, sups) = self.supremums_idx(i, j);
        let union = i | j;
        Ok(PiSupremums {
            spectrum: self.members(u),
            supremums: self.members(sups),
            union_in_spectrum: u >> union & 1 == 1,
            union_is_supremum: sups >> union & 1 == 1,
        })
    }

    /// Over every event pair: whether `x ∪ z` lies in `U(x, z)`, whether some
    /// π-supremum exists, and the pairs where `p(x ∪ z) = 1` keeps the union out.
    pub fn supremum_suite(&self) -> Result<Report> {
        self.require_small()?;
        let n = self.event_count();
        let mut union_in = Tally::claim("x ∪ z ∈ U(x, z)");
        let mut exists = Tally::claim("U(x, z) ≠ ∅ → some π-supremum exists");
        let mut gap = Tally::search("x ∪ z ∉ U(x, z) with p(x ∪ z) = 1");
        let mut other = Tally::search("x ∪ z ∉ U(x, z) with p(x ∪ z) < 1");
        for i in 0..n {
            for j in 0..n {
                let w = || format!("x = {}, z = {}", self.show_idx(i), self.show_idx(j));
                let (u, sups) = self.supremums_idx(i, j);
                let inside = u >> (i | j) & 1 == 1;
                union_in.check(inside, w);
                if u != 0 {
                    exists.check(sups != 0, w);
                }
                let full = self.pr(i | j).is_one();
                if !inside && full {
                    gap.hit(w);
                } else {
                    gap.miss();
                }
                if !inside && !full {
                    other.hit(w);
                } else {
                    other.miss();
                }
            }
        }
        let mut rep = Report::new("pi-supremum").param("atoms", self.atoms().len());
        for t in [union_in, exists, gap, other] {
            rep.push(t.finish(true));
        }
        Ok(rep)
    }

    /// `λ(Q) = Q ∪ {x : ∃b ∈ Q. π x b}`.
    fn lambda(&self, q: EventSet) -> EventSet {
        let n = self.event_count();
        let inside: Vec<usize> = (0..n).filter(|i| q >> i & 1 == 1).collect();
        (0..n).filter(|&x| inside.iter().any(|&b| self.pi_idx(x, b))).fold(q, |acc, x| acc | 1 << x)
    }

    /// `Ξ(Q) = Q ∪ {every π-supremum of a pair from Q}`.
    fn xi(&self, q: EventSet) -> EventSet {
        let n = self.event_count();
        let inside: Vec<usize> = (0..n).filter(|i| q >> i & 1 == 1).collect();
        let mut out = q;
        for &a in &inside {
            for &b in &inside {
                out |= self.supremums_idx(a, b).1;
            }
        }
        out
    }

    /// Iterates `Q ↦ Ξ(λ(Q))` from the generators to its fixed point and
    /// checks both π-ideal clauses there.
    pub fn ideal_generated(&self, generators: &[Subset]) -> Result<IdealGeneration> {
        if generators.is_empty() {
            return Err(Error::EmptyEventFamily);
        }
        let b = self.set_of(generators)?;
        let mut q = b;
        let mut trace = Vec::new();
        loop {
            let next = self.xi(self.lambda(q));
            if next == q {
                break;
            }
            trace.push(self.members(next & !q));
            q = next;
        }
        let verdict = self.ideal_check(q);
        Ok(IdealGeneration { generators: self.members(b), fixed_point: self.members(q), trace, verdict })
    }
}

/// Canonical list of the events in a family, sorted by mask.
pub fn canonical_events(xs: &[Subset]) -> Vec<Subset> {
    xs.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn f4() -> FiniteProbSpace {
        FiniteProbSpace::uniform(Universe::letters(4).unwrap()).unwrap()
    }

    fn f4w() -> FiniteProbSpace {
        FiniteProbSpace::from_strs(
            Universe::letters(4).unwrap(),
            (0..4).map(Subset::singleton).collect(),
            &["1/16", "7/16", "4/16", "4/16"],
        )
        .unwrap()
    }

    fn ev(sp: &FiniteProbSpace, labels: &str) -> Subset {
        sp.universe().subset_of_labels(labels.chars().map(|c| c.to_string())).unwrap()
    }

    #[test]
    fn delta_examples() {
        let sp = f4();
        assert_eq!(sp.delta(ev(&sp, "ab"), ev(&sp, "ac")).unwrap(), r(0, 1));
        assert_eq!(sp.delta(ev(&sp, "ab"), ev(&sp, "ab")).unwrap(), r(1, 4));
        assert_eq!(sp.delta(ev(&sp, "ab"), Subset::EMPTY).unwrap(), r(0, 1));
        assert_eq!(sp.symdiff_pseudometric(ev(&sp, "a"), ev(&sp, "b")).unwrap(), r(1, 2));
    }

    #[test]
    fn weights_are_validated() {
        let u = Universe::letters(2).unwrap();
        let atoms = vec![Subset::singleton(0), Subset::singleton(1)];
        assert_eq!(FiniteProbSpace::from_strs(u.clone(), atoms.clone(), &["0.5", "1/2"]).unwrap_err(), Error::BadWeight("0.5".into()));
        assert_eq!(
            FiniteProbSpace::from_strs(u.clone(), atoms.clone(), &["1/2", "1/3"]).unwrap_err(),
            Error::WeightsDoNotSumToOne("5/6".into())
        );
        assert_eq!(FiniteProbSpace::from_strs(u.clone(), atoms, &["3/2", "-1/2"]).unwrap_err(), Error::NegativeWeight("-1/2".into()));
        let sp = FiniteProbSpace::from_strs(u, vec![Subset::full(2)], &["1"]).unwrap();
        assert!(matches!(sp.p(Subset::singleton(0)), Err(Error::NotAnEvent(_))));
    }

    #[test]
    fn law_suites_on_fixtures() {
        let cfg = SuiteConfig::default();
        for sp in [f4(), f4w()] {
            let rep = sp.delta_law_suite(&cfg);
            assert!(rep.checks.iter().all(|c| c.holds() && c.exhaustive), "{}", rep.to_text());
        }
        let rep = f4().pi_sigma_law_suite(&cfg);
        assert!(rep.check("Identity").unwrap().holds());
        assert!(!rep.check("π x y or σ x y").unwrap().holds());
        assert!(rep.passed());
    }

    #[test]
    fn classification() {
        let sp = f4();
        assert_eq!(sp.classify(ev(&sp, "ab"), ev(&sp, "a")).unwrap(), Dependence::Pi);
        assert_eq!(sp.classify(ev(&sp, "a"), ev(&sp, "b")).unwrap(), Dependence::Sigma);
        assert_eq!(sp.classify(ev(&sp, "ab"), ev(&sp, "ac")).unwrap(), Dependence::Neither);
    }

    #[test]
    fn two_atom_ideals() {
        let sp = FiniteProbSpace::uniform(Universe::letters(2).unwrap()).unwrap();
        let (a, b) = (ev(&sp, "a"), ev(&sp, "b"));
        assert_eq!(sp.spectra(a, a).unwrap().0, vec![a]);
        assert!(sp.is_pi_ideal(&[a]).unwrap().holds);
        let g = sp.ideal_generated(&[a]).unwrap();
        assert_eq!(g.ideal(), Some(&[a][..]));
        let g = sp.ideal_generated(&[a, b]).unwrap();
        assert_eq!(g.verdict.failed_clause, Some(2));
        let full = sp.universe().full();
        let g = sp.ideal_generated(&[full]).unwrap();
        assert_eq!(g.fixed_point, vec![full]);
        let s = sp.pi_supremums(a, b).unwrap();
        assert!(!s.union_in_spectrum);
        assert!(matches!(sp.ideal_generated(&[]), Err(Error::EmptyEventFamily)));
    }

    #[test]
    fn supremum_gap_only_at_probability_one() {
        let sp = FiniteProbSpace::uniform(Universe::letters(2).unwrap()).unwrap();
        let rep = sp.supremum_suite().unwrap();
        let gap = rep.check("x ∪ z ∉ U(x, z) with p(x ∪ z) = 1").unwrap();
        assert!(gap.found());
        assert!(gap.witnesses.contains(&"x = {a}, z = {b}".to_string()), "{:?}", gap.witnesses);
        // brute force: the union is in U(x, z) iff π (x ∪ z) x and π (x ∪ z) z
        let ev = sp.events();
        let mut expected_gap = 0;
        for &x in &ev {
            for &z in &ev {
                let h = x.union(z);
                let inside = sp.delta(x, h).unwrap().is_positive() && sp.delta(z, h).unwrap().is_positive();
                if !inside && sp.p(h).unwrap().is_one() {
                    expected_gap += 1;
                }
            }
        }
        assert_eq!(gap.witness_count, expected_gap);
    }
}
