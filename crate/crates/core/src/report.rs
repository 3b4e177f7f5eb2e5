//! Law-check records and reports.
//!
//! Every suite in the crate returns a [`Report`]: a list of [`LawCheck`]s plus
//! free-form facts. A check is one of three kinds:
//!
//! * [`LawKind::Asserted`]: an invariant the library guarantees. A refutation
//!   is a bug and makes the CLI exit with status 2.
//! * [`LawKind::Claim`]: a published statement whose status on the instance
//!   is being measured. Refutations are findings, not failures.
//! * [`LawKind::Search`]: a witness hunt; the verdict is found / not found.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::universe::Subset;

/// Number of witnesses kept verbatim per check. The total count is always kept.
pub const WITNESS_CAP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LawKind {
    Asserted,
    Claim,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Refuted,
    Found,
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawCheck {
    pub law: String,
    pub kind: LawKind,
    pub verdict: Verdict,
    /// Number of instances of the quantifier range that were evaluated.
    pub checked: u64,
    /// `true` when the whole quantifier range was enumerated.
    pub exhaustive: bool,
    pub witness_count: u64,
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawCheck {
    pub fn is_failure(&self) -> bool {
        self.kind == LawKind::Asserted && self.verdict == Verdict::Refuted
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn found(&self) -> bool {
        self.verdict == Verdict::Found
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Accumulates evaluations of one law.
#[derive(Debug, Clone)]
pub struct Tally {
    law: String,
    kind: LawKind,
    checked: u64,
    witness_count: u64,
    witnesses: Vec<String>,
}

impl Tally {
    pub fn new(law: impl Into<String>, kind: LawKind) -> Self {
        Self { law: law.into(), kind, checked: 0, witness_count: 0, witnesses: Vec::new() }
    }

    pub fn asserted(law: impl Into<String>) -> Self {
        Self::new(law, LawKind::Asserted)
    }

    pub fn claim(law: impl Into<String>) -> Self {
        Self::new(law, LawKind::Claim)
    }

    pub fn search(law: impl Into<String>) -> Self {
        Self::new(law, LawKind::Search)
    }

    /// Records one evaluation. For laws, `ok = false` is a counterexample; for
    /// searches, pass `ok = false` when the sought pattern was found.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.witness_count += 1;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(witness());
            }
        }
    }

    /// Records a hit for a search (or a counterexample for a law).
    pub fn hit(&mut self, witness: impl FnOnce() -> String) {
        self.check(false, witness)
    }

    pub fn miss(&mut self) {
        self.checked += 1;
    }

    pub fn witness_count(&self) -> u64 {
        self.witness_count
    }

    pub fn merge(&mut self, other: &LawCheck) {
        self.checked += other.checked;
        self.witness_count += other.witness_count;
        for w in &other.witnesses {
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w.clone());
            }
        }
    }

    pub fn finish(self, exhaustive: bool) -> LawCheck {
        let verdict = match (self.kind, self.witness_count) {
            (LawKind::Search, 0) => Verdict::NotFound,
            (LawKind::Search, _) => Verdict::Found,
            (_, 0) => Verdict::Holds,
            _ => Verdict::Refuted,
        };
        LawCheck {
            law: self.law,
            kind: self.kind,
            verdict,
            checked: self.checked,
            exhaustive,
            witness_count: self.witness_count,
            witnesses: self.witnesses,
            note: None,
        }
    }
}

/// A named collection of checks and facts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<LawCheck>,
    pub facts: BTreeMap<String, serde_json::Value>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), params: BTreeMap::new(), checks: Vec::new(), facts: BTreeMap::new() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, check: LawCheck) {
        self.checks.push(check);
    }

    pub fn fact(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("facts are plain data");
        self.facts.insert(key.to_string(), v);
    }

    pub fn check(&self, law: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }

    pub fn failures(&self) -> Vec<&LawCheck> {
        self.checks.iter().filter(|c| c.is_failure()).collect()
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    /// Appends another report's checks with its name as a prefix.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            c.law = format!("{}/{}", other.name, c.law);
            self.checks.push(c);
        }
        for (k, v) in other.facts {
            self.facts.insert(format!("{}/{}", other.name, k), v);
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.name);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let verdict = match c.verdict {
                Verdict::Holds => "holds",
                Verdict::Refuted => "REFUTED",
                Verdict::Found => "found",
                Verdict::NotFound => "not found",
            };
            let kind = match c.kind {
                LawKind::Asserted => "asserted",
                LawKind::Claim => "claim",
                LawKind::Search => "search",
            };
            let scope = if c.exhaustive { "exhaustive" } else { "sampled" };
            let _ = writeln!(
                out,
                "  [{kind:8}] {:<44} {verdict:<9} ({} checked, {scope}, {} witnesses)",
                c.law, c.checked, c.witness_count
            );
            for w in &c.witnesses {
                let _ = writeln!(out, "      - {w}");
            }
            if let Some(n) = &c.note {
                let _ = writeln!(out, "      note: {n}");
            }
        }
        for (k, v) in &self.facts {
            let _ = writeln!(out, "  {k}: {v}");
        }
        out
    }
}

/// Controls exhaustive-versus-sampled evaluation of law suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Pair laws are enumerated over `℘(S)²` when `|S|` is at most this.
    pub pair_cap: usize,
    /// Triple laws are enumerated over `℘(S)³` when `|S|` is at most this.
    pub triple_cap: usize,
    /// Number of random tuples drawn when a range is too large to enumerate.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { pair_cap: 8, triple_cap: 5, samples: 4000, seed: 0 }
    }
}

impl SuiteConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Tuples of subsets of `{0..n}` of the given arity: every tuple when the
    /// range is small enough, otherwise `samples` random ones. The flag says
    /// whether the enumeration was exhaustive.
    pub fn tuples(&self, n: usize, arity: usize) -> (Vec<Vec<Subset>>, bool) {
        let cap = if arity <= 2 { self.pair_cap } else { self.triple_cap };
        if n <= cap {
            (cartesian(&Subset::powerset(n).collect::<Vec<_>>(), arity), true)
        } else {
            let mut rng = self.rng();
            let full = Subset::full(n).bits();
            let tuples = (0..self.samples)
                .map(|_| (0..arity).map(|_| Subset::from_bits(rng.gen::<u32>() & full)).collect())
                .collect();
            (tuples, false)
        }
    }

    /// Tuples drawn from an explicit finite range (events, carriers, …).
    pub fn tuples_from<T: Clone>(&self, items: &[T], arity: usize) -> (Vec<Vec<T>>, bool) {
        let total = (items.len() as f64).powi(arity as i32);
        let limit = (1usize << (self.pair_cap.max(self.triple_cap) * 2).min(30)) as f64;
        if total <= limit.max(self.samples as f64) {
            (cartesian(items, arity), true)
        } else {
            let mut rng = self.rng();
            let tuples = (0..self.samples)
                .map(|_| (0..arity).map(|_| items.choose(&mut rng).expect("nonempty").clone()).collect())
                .collect();
            (tuples, false)
        }
    }
}

/// All `arity`-tuples over `items`, in lexicographic index order.
pub fn cartesian<T: Clone>(items: &[T], arity: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(arity)];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for prefix in &out {
            for it in items {
                let mut t = prefix.clone();
                t.push(it.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_verdicts_follow_kind() {
        let mut t = Tally::asserted("law");
        t.check(true, || unreachable!());
        assert_eq!(t.clone().finish(true).verdict, Verdict::Holds);
        t.check(false, || "x".into());
        let c = t.finish(true);
        assert_eq!(c.verdict, Verdict::Refuted);
        assert!(c.is_failure());

        let mut s = Tally::search("hunt");
        s.miss();
        assert_eq!(s.clone().finish(true).verdict, Verdict::NotFound);
        s.hit(|| "w".into());
        let c = s.finish(true);
        assert_eq!(c.verdict, Verdict::Found);
        assert!(!c.is_failure());
    }

    #[test]
    fn witnesses_are_capped_but_counted() {
        let mut t = Tally::claim("c");
        for i in 0..20 {
            t.check(false, || i.to_string());
        }
        let c = t.finish(false);
        assert_eq!(c.witness_count, 20);
        assert_eq!(c.witnesses.len(), WITNESS_CAP);
    }

    #[test]
    fn cartesian_sizes() {
        assert_eq!(cartesian(&[1, 2, 3], 2).len(), 9);
        assert_eq!(cartesian(&[1, 2], 3).len(), 8);
        let cfg = SuiteConfig::default();
        let (t, ex) = cfg.tuples(3, 2);
        assert!(ex);
        assert_eq!(t.len(), 64);
        let (t, ex) = cfg.tuples(12, 3);
        assert!(!ex);
        assert_eq!(t.len(), cfg.samples);
    }
}
