//! Set-valued deviance functions `π_o`/`σ_o`, deviant equivalence and
//! dependence trails.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prob::FiniteProbSpace;
use crate::report::{Report, SuiteConfig, Tally};
use crate::universe::Subset;

/// Tie-break rule used by the choice functions after probability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DeviancePolicy {
    /// Cardinality (larger first for `π_o`, smaller first for `σ_o`), then lex-least.
    #[default]
    #[serde(rename = "p-card-lex")]
    ProbCardLex,
    /// Lex-least directly after probability.
    #[serde(rename = "p-lex")]
    ProbLex,
    /// Lowest subset mask directly after probability.
    #[serde(rename = "p-mask")]
    ProbMask,
}

impl DeviancePolicy {
    pub const ALL: [DeviancePolicy; 3] = [Self::ProbCardLex, Self::ProbLex, Self::ProbMask];

    pub fn name(self) -> &'static str {
        match self {
            Self::ProbCardLex => "p-card-lex",
            Self::ProbLex => "p-lex",
            Self::ProbMask => "p-mask",
        }
    }
}

impl fmt::Display for DeviancePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeviancePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Malformed { location: "policy".into(), message: format!("unknown policy `{s}`") })
    }
}

/// How empty candidate sets are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyCandidates {
    /// Return `∅` and flag the result.
    #[default]
    Convention,
    /// Leave the value undefined.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deviance {
    pub event: Subset,
    /// The candidate set was empty and `∅` was returned by convention.
    pub by_convention: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceTrail {
    pub source: (Subset, Subset),
    /// `π_0, π_1, …, π_{n+1}`: the sequence up to and including the first repeat.
    pub steps: Vec<Subset>,
    /// The first `n` with `π_n = π_{n+1}`.
    pub length: usize,
}

impl DependenceTrail {
    /// Step `j` of the eventually constant sequence.
    pub fn at(&self, j: usize) -> Subset {
        self.steps[j.min(self.steps.len() - 1)]
    }
}

/// Deviance engine over a probability space, with `π_o`/`σ_o` tabulated for
/// every event pair.
#[derive(Debug, Clone)]
pub struct DevianceSpace<'a> {
    space: &'a FiniteProbSpace,
    policy: DeviancePolicy,
    pi: Vec<Option<usize>>,
    sigma: Vec<Option<usize>>,
}

impl<'a> DevianceSpace<'a> {
    pub fn new(space: &'a FiniteProbSpace, policy: DeviancePolicy) -> Self {
        let n = space.event_count();
        let mut pi = Vec::with_capacity(n * n);
        let mut sigma = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                pi.push(Self::compute_pi(space, policy, i, j));
                sigma.push(Self::compute_sigma(space, policy, i, j));
            }
        }
        Self { space, policy, pi, sigma }
    }

    pub fn space(&self) -> &FiniteProbSpace {
        self.space
    }

    pub fn policy(&self) -> DeviancePolicy {
        self.policy
    }

    /// Orders candidates so the chosen one comes first.
    fn rank(space: &FiniteProbSpace, policy: DeviancePolicy, maximize: bool, a: usize, b: usize) -> Ordering {
        let (ea, eb) = (space.event(a), space.event(b));
        let by_p = space.pr(a).cmp(space.pr(b));
        let by_card = ea.len().cmp(&eb.len());
        let (by_p, by_card) = if maximize { (by_p.reverse(), by_card.reverse()) } else { (by_p, by_card) };
        match policy {
            DeviancePolicy::ProbCardLex => by_p.then(by_card).then(ea.lex_cmp(eb)),
            DeviancePolicy::ProbLex => by_p.then(ea.lex_cmp(eb)),
            DeviancePolicy::ProbMask => by_p.then(ea.cmp(&eb)),
        }
    }

    /// Proper sub-events of `m` (as selections).
    fn proper_subevents(m: usize) -> impl Iterator<Item = usize> {
        Subset::from_bits(m as u32).subsets().map(|s| s.bits() as usize).filter(move |&z| z != m)
    }

    fn compute_pi(space: &FiniteProbSpace, policy: DeviancePolicy, x: usize, y: usize) -> Option<usize> {
        let d = space.d(x, y);
        Self::proper_subevents(x & y)
            .filter(|&z| space.pr(z) <= &d)
            .min_by(|&a, &b| Self::rank(space, policy, true, a, b))
    }

    fn compute_sigma(space: &FiniteProbSpace, policy: DeviancePolicy, x: usize, y: usize) -> Option<usize> {
        let threshold = -space.d(x, y);
        Self::proper_subevents(space.comp(x & y))
            .filter(|&z| space.pr(z) >= &threshold)
            .min_by(|&a, &b| Self::rank(space, policy, false, a, b))
    }

    fn n(&self) -> usize {
        self.space.event_count()
    }

    pub(crate) fn pi_idx(&self, x: usize, y: usize) -> usize {
        self.pi[x * self.n() + y].unwrap_or(0)
    }

    pub(crate) fn sigma_idx(&self, x: usize, y: usize) -> usize {
        self.sigma[x * self.n() + y].unwrap_or(0)
    }

    fn outcome(&self, v: Option<usize>, mode: EmptyCandidates) -> Option<Deviance> {
        match (v, mode) {
            (Some(i), _) => Some(Deviance { event: self.space.event(i), by_convention: false }),
            (None, EmptyCandidates::Convention) => Some(Deviance { event: Subset::EMPTY, by_convention: true }),
            (None, EmptyCandidates::Strict) => None,
        }
    }

    /// Positive deviance. `Ok(None)` only in strict mode with no candidates.
    pub fn pi_o(&self, x: Subset, y: Subset, mode: EmptyCandidates) -> Result<Option<Deviance>> {
        let (i, j) = (self.space.event_index(x)?, self.space.event_index(y)?);
        Ok(self.outcome(self.pi[i * self.n() + j], mode))
    }

    pub fn sigma_o(&self, x: Subset, y: Subset, mode: EmptyCandidates) -> Result<Option<Deviance>> {
        let (i, j) = (self.space.event_index(x)?, self.space.event_index(y)?);
        Ok(self.outcome(self.sigma[i * self.n() + j], mode))
    }

    pub(crate) fn equiv_idx(&self, x: usize, y: usize) -> bool {
        let p = self.pi_idx(x, y);
        let s = self.sigma_idx(x, y);
        self.pi_idx(p, x) == self.pi_idx(p, y) && self.sigma_idx(s, x) == self.sigma_idx(s, y)
    }

    /// Deviant equivalence under the `∅`-convention.
    pub fn deviant_equiv(&self, x: Subset, y: Subset) -> Result<bool> {
        Ok(self.equiv_idx(self.space.event_index(x)?, self.space.event_index(y)?))
    }

    pub(crate) fn trail_idx(&self, x: usize, z: usize) -> Vec<usize> {
        let mut steps = vec![self.pi_idx(x, z)];
        loop {
            let last = *steps.last().expect("nonempty");
            let next = self.pi_idx(last, x);
            steps.push(next);
            if next == last || steps.len() > self.n() + 1 {
                return steps;
            }
        }
    }

    pub fn dependence_trail(&self, x: Subset, z: Subset) -> Result<DependenceTrail> {
        let (i, j) = (self.space.event_index(x)?, self.space.event_index(z)?);
        let steps = self.trail_idx(i, j);
        let length = steps.windows(2).position(|w| w[0] == w[1]).unwrap_or(steps.len() - 1);
        Ok(DependenceTrail { source: (x, z), steps: steps.into_iter().map(|s| self.space.event(s)).collect(), length })
    }

    /// `a ≼ b` iff `p(a_j) ≤ p(b_j)` for every `j` (sequences padded by their last step).
    pub fn trail_le(&self, a: &DependenceTrail, b: &DependenceTrail) -> bool {
        let len = a.steps.len().max(b.steps.len());
        (0..len).all(|j| {
            let (pa, pb) = (self.space.p(a.at(j)), self.space.p(b.at(j)));
            matches!((pa, pb), (Ok(pa), Ok(pb)) if pa <= pb)
        })
    }

    pub fn law_suite(&self, cfg: &SuiteConfig) -> Report {
        let sp = self.space;
        let n = self.n();
        let full = sp.full_index();
        let sh = |v: &[usize]| v.iter().map(|&i| sp.show_idx(i)).collect::<Vec<_>>().join(", ");
        let pi = |x, y| self.pi_idx(x, y);
        let sg = |x, y| self.sigma_idx(x, y);
        let eq = |x, y| self.equiv_idx(x, y);

        let mut symmetry = Tally::asserted("Symmetry");
        let mut bottom = Tally::asserted("Bottom");
        let mut top = Tally::asserted("Top");
        let mut s_symmetry = Tally::asserted("S-Symmetry");
        let mut s_bottom = Tally::asserted("S-Bottom");
        let mut s_top = Tally::asserted("S-Top");
        let mut identity2 = Tally::asserted("Identity2");
        let mut almost = Tally::claim("Almost Empty");
        let mut s_almost = Tally::claim("S-Almost Empty");
        let mut almost_val = Tally::asserted("Almost Empty (valuation form)");
        let mut nonassoc = Tally::search("Non-associativity");
        let mut s_nonassoc = Tally::search("S-Non-associativity");
        let mut domain = Tally::search("Domain");
        let mut mixed_pi = Tally::claim("p(π_o(x, y)) = 0 → p(σ_o(x, y)) > 0");
        let mut mixed_sigma = Tally::claim("p(σ_o(x, y)) = 0 → p(π_o(x, y)) > 0");
        let mut convention_pi = 0u64;
        let mut convention_sigma = 0u64;

        for x in 0..n {
            let w = || sh(&[x]);
            bottom.check(eq(pi(x, 0), 0), w);
            top.check(eq(pi(x, full), 0), w);
            s_bottom.check(eq(sg(x, 0), 0), w);
            s_top.check(eq(sg(x, full), 0), w);
            identity2.check(eq(x, x), w);
            let p0 = sp.pr(x).is_zero();
            if eq(pi(x, x), 0) {
                almost.check(p0, || format!("x = {}: π_o(x, x) = {} ≈ ∅, p(x) = {}", w(), sp.show_idx(pi(x, x)), sp.pr(x)));
            }
            if eq(sg(x, x), 0) {
                s_almost.check(p0, || format!("x = {}: σ_o(x, x) = {} ≈ ∅, p(x) = {}", w(), sp.show_idx(sg(x, x)), sp.pr(x)));
            }
            // The proof's own step: a zero-weight self-deviance threshold forces p(x) ∈ {0, 1}.
            if sp.d(x, x).is_zero() {
                almost_val.check(p0 || sp.pr(full - x).is_zero(), w);
            }
        }
        for x in 0..n {
            for y in 0..n {
                let w = || sh(&[x, y]);
                symmetry.check(pi(x, y) == pi(y, x), w);
                s_symmetry.check(sg(x, y) == sg(y, x), w);
                let (pu, su) = (self.pi[x * n + y].is_none(), self.sigma[x * n + y].is_none());
                convention_pi += pu as u64;
                convention_sigma += su as u64;
                if pu && su {
                    domain.hit(|| format!("{}: both candidate sets empty", w()));
                } else {
                    domain.miss();
                }
                let (p, s) = (pi(x, y), sg(x, y));
                if sp.pr(p).is_zero() {
                    mixed_pi.check(sp.pr(s).is_positive(), || format!("{}: σ_o = {}", w(), sp.show_idx(s)));
                }
                if sp.pr(s).is_zero() {
                    mixed_sigma.check(sp.pr(p).is_positive(), || format!("{}: π_o = {}", w(), sp.show_idx(p)));
                }
            }
        }
        let idx: Vec<usize> = (0..n).collect();
        let (triples, texh) = if n <= 16 { (crate::report::cartesian(&idx, 3), true) } else { cfg.tuples_from(&idx, 3) };
        for t in &triples {
            let (x, y, z) = (t[0], t[1], t[2]);
            let w = || sh(t);
            if !eq(pi(x, pi(y, z)), pi(pi(x, y), z)) {
                nonassoc.hit(w);
            } else {
                nonassoc.miss();
            }
            if !eq(sg(x, sg(y, z)), sg(sg(x, y), z)) {
                s_nonassoc.hit(w);
            } else {
                s_nonassoc.miss();
            }
        }

        let mut rep = Report::new("deviance-laws").param("policy", self.policy).param("atoms", sp.atoms().len());
        rep.fact("pi_o_by_convention", convention_pi);
        rep.fact("sigma_o_by_convention", convention_sigma);
        for t in [symmetry, bottom, top, s_symmetry, s_bottom, s_top, identity2, almost_val] {
            rep.push(t.finish(true));
        }
        rep.push(almost.finish(true).with_note("literal form: ≈ ∅ compared by deviant equivalence"));
        rep.push(s_almost.finish(true).with_note("literal form: ≈ ∅ compared by deviant equivalence"));
        rep.push(nonassoc.finish(texh));
        rep.push(s_nonassoc.finish(texh));
        rep.push(domain.finish(true).with_note("pairs where the ∅-convention fired for both functions"));
        rep.push(mixed_pi.finish(true));
        rep.push(mixed_sigma.finish(true));
        rep
    }

    /// Trail monotonicity, termination and the trail quasi-order over every source pair.
    pub fn trail_suite(&self) -> Report {
        let sp = self.space;
        let n = self.n();
        let mut mono = Tally::asserted("p(π_r) ≤ p(π_{r−1})");
        let mut term = Tally::asserted("trail stops within |𝒮| steps");
        let mut refl = Tally::asserted("≼ reflexive");
        let mut trans = Tally::asserted("≼ transitive");
        let mut antisym = Tally::search("≼ antisymmetry failure");
        let mut trails: Vec<(usize, usize, Vec<usize>)> = Vec::with_capacity(n * n);
        let mut max_len = 0;
        for x in 0..n {
            for z in 0..n {
                let steps = self.trail_idx(x, z);
                let w = || format!("x = {}, z = {}", sp.show_idx(x), sp.show_idx(z));
                mono.check(steps.windows(2).all(|s| sp.pr(s[1]) <= sp.pr(s[0])), w);
                let stop = steps.windows(2).position(|s| s[0] == s[1]);
                term.check(stop.is_some_and(|k| k < n), w);
                max_len = max_len.max(stop.unwrap_or(steps.len()));
                trails.push((x, z, steps));
            }
        }
        // Distinct trails only: the order is on sequences, not on source pairs.
        trails.sort_by(|a, b| a.2.cmp(&b.2));
        trails.dedup_by(|a, b| a.2 == b.2);
        let len = trails.iter().map(|t| t.2.len()).max().unwrap_or(1);
        let probs: Vec<Vec<&BigRational>> = trails
            .iter()
            .map(|t| (0..len).map(|j| sp.pr(t.2[j.min(t.2.len() - 1)])).collect())
            .collect();
        let m = trails.len();
        let le: Vec<bool> =
            (0..m * m).map(|ij| probs[ij / m].iter().zip(&probs[ij % m]).all(|(a, b)| a <= b)).collect();
        let show = |k: usize| {
            let t = &trails[k];
            let steps: Vec<String> = t.2.iter().map(|&s| sp.show_idx(s)).collect();
            format!("Tr({}, {}) = ({})", sp.show_idx(t.0), sp.show_idx(t.1), steps.join(", "))
        };
        for a in 0..m {
            refl.check(le[a * m + a], || show(a));
            for b in 0..m {
                if a < b && le[a * m + b] && le[b * m + a] {
                    antisym.hit(|| format!("{} and {}", show(a), show(b)));
                } else if a < b {
                    antisym.miss();
                }
                if le[a * m + b] {
                    for c in 0..m {
                        if le[b * m + c] {
                            trans.check(le[a * m + c], || format!("{} / {} / {}", show(a), show(b), show(c)));
                        }
                    }
                }
            }
        }
        let mut rep = Report::new("dependence-trails").param("policy", self.policy).param("atoms", sp.atoms().len());
        rep.fact("distinct_trails", m);
        rep.fact("longest_length", max_len);
        for t in [mono, term, refl, trans, antisym] {
            rep.push(t.finish(true));
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

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
    fn deviance_examples() {
        let conv = EmptyCandidates::Convention;
        let sp = f4w();
        let d = DevianceSpace::new(&sp, DeviancePolicy::default());
        assert_eq!(d.pi_o(ev(&sp, "ab"), ev(&sp, "abc"), conv).unwrap().unwrap().event, ev(&sp, "a"));
        assert_eq!(d.sigma_o(ev(&sp, "a"), ev(&sp, "b"), conv).unwrap().unwrap().event, ev(&sp, "a"));
        let strict = d.pi_o(ev(&sp, "a"), ev(&sp, "b"), EmptyCandidates::Strict).unwrap();
        assert_eq!(strict, None);
        let by_conv = d.pi_o(ev(&sp, "a"), ev(&sp, "b"), conv).unwrap().unwrap();
        assert!(by_conv.by_convention && by_conv.event.is_empty());

        let sp = f4();
        let d = DevianceSpace::new(&sp, DeviancePolicy::default());
        assert_eq!(d.pi_o(ev(&sp, "ab"), ev(&sp, "a"), conv).unwrap().unwrap().event, Subset::EMPTY);
        assert_eq!(d.sigma_o(ev(&sp, "a"), ev(&sp, "a"), conv).unwrap().unwrap().event, Subset::EMPTY);
    }

    #[test]
    fn trail_on_f4w() {
        let sp = f4w();
        let d = DevianceSpace::new(&sp, DeviancePolicy::default());
        let t = d.dependence_trail(ev(&sp, "ab"), ev(&sp, "abc")).unwrap();
        assert_eq!(t.steps, vec![ev(&sp, "a"), Subset::EMPTY, Subset::EMPTY]);
        assert_eq!(t.length, 1);
        let t = d.dependence_trail(ev(&sp, "a"), ev(&sp, "b")).unwrap();
        assert_eq!((t.steps.len(), t.length), (2, 0));
        assert!(d.trail_le(&t, &d.dependence_trail(ev(&sp, "ab"), ev(&sp, "abc")).unwrap()));
    }

    #[test]
    fn suites_on_fixtures() {
        let cfg = SuiteConfig::default();
        for sp in [f4(), f4w()] {
            let d = DevianceSpace::new(&sp, DeviancePolicy::default());
            let rep = d.law_suite(&cfg);
            assert!(rep.passed(), "{}", rep.to_text());
            let rep = d.trail_suite();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn policy_does_not_change_chosen_probability() {
        let sp = f4w();
        let spaces: Vec<DevianceSpace> = DeviancePolicy::ALL.iter().map(|&p| DevianceSpace::new(&sp, p)).collect();
        for x in 0..sp.event_count() {
            for y in 0..sp.event_count() {
                let ps: Vec<_> = spaces.iter().map(|d| sp.pr(d.pi_idx(x, y)).clone()).collect();
                assert!(ps.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
