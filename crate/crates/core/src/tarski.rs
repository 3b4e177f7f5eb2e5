//! Finite Tarski (implication) algebras and their duality with Tarski sets.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::SetField;
use crate::report::{Report, Tally};
use crate::universe::{Subset, Universe};

/// Carriers are limited to 64 elements so element sets fit in a `u64`.
pub const MAX_CARRIER: usize = 64;
/// Default cap on candidate-map evaluations during semi-morphism enumeration.
pub const DEFAULT_MORPHISM_BUDGET: u128 = 10_000_000;

/// A set of carrier elements, bit `i` for element `i`.
pub type ElemSet = u64;

fn elems(s: ElemSet) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| s >> i & 1 == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteTarskiAlgebra {
    labels: Vec<String>,
    /// Row-major `n × n` implication table.
    table: Vec<usize>,
    unit: usize,
    /// Set realization, for algebras of sets.
    elements: Option<Vec<Subset>>,
}

/// A magma given by its table; used for the poset-groupoid laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    n: usize,
    table: Vec<usize>,
}

impl Groupoid {
    pub fn new(n: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::PartialTable { expected: n * n, found: table.len() });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(Error::ElementOutOfRange { index: bad, size: n });
        }
        Ok(Self { n, table })
    }

    /// `a ⊙ b = a` if `a ⊴ b`, else `b`.
    pub fn from_poset(le: &[Vec<bool>]) -> Result<Self> {
        let n = le.len();
        if le.iter().any(|r| r.len() != n) {
            return Err(Error::PartialTable { expected: n * n, found: le.iter().map(Vec::len).sum() });
        }
        let reflexive = (0..n).all(|a| le[a][a]);
        let antisym = (0..n).all(|a| (0..n).all(|b| a == b || !(le[a][b] && le[b][a])));
        let trans = (0..n).all(|a| (0..n).all(|b| !le[a][b] || (0..n).all(|c| !le[b][c] || le[a][c])));
        if !(reflexive && antisym && trans) {
            return Err(Error::Malformed { location: "poset".into(), message: "relation is not a partial order".into() });
        }
        let table = (0..n * n).map(|ab| if le[ab / n][ab % n] { ab / n } else { ab % n }).collect();
        Ok(Self { n, table })
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn laws(&self, names: &[&'static str], labels: &dyn Fn(usize) -> String) -> Vec<crate::report::LawCheck> {
        let m = |a, b| self.op(a, b);
        let n = self.n;
        let mut out = Vec::new();
        for &name in names {
            let mut t = Tally::asserted(name);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let ok = match name {
                            "O1" => m(a, a) == a,
                            "O2" => m(m(a, b), a) == m(b, a),
                            "O3" => m(m(a, b), b) == m(a, b),
                            "O4" | "TO2" => m(a, m(m(a, b), c)) == m(a, m(b, c)),
                            "O5" => m(m(m(a, b), c), b) == m(m(a, c), b),
                            "TO1" => m(m(a, a), a) == a,
                            "TO3" => m(a, m(a, b)) == m(a, b),
                            _ => unreachable!("unknown law"),
                        };
                        t.check(ok, || format!("a = {}, b = {}, c = {}", labels(a), labels(b), labels(c)));
                    }
                }
            }
            out.push(t.finish(true));
        }
        out
    }

    /// O1–O5 and TO1–TO3.
    pub fn poset_groupoid_report(&self) -> Report {
        let mut rep = Report::new("poset-groupoid").param("elements", self.n);
        for c in self.laws(&["O1", "O2", "O3", "O4", "O5", "TO1", "TO2", "TO3"], &|i| i.to_string()) {
            rep.push(c);
        }
        rep
    }
}

/// Verdict-valued check of T1–T4 for a raw table.
pub fn check_axioms(labels: &[String], table: &[usize], unit: usize) -> Report {
    let n = labels.len();
    let m = |a: usize, b: usize| table[a * n + b];
    let l = |i: usize| labels[i].clone();
    let mut t1 = Tally::asserted("T1");
    let mut t2 = Tally::asserted("T2");
    let mut t3 = Tally::asserted("T3");
    let mut t4 = Tally::asserted("T4");
    for a in 0..n {
        t1.check(m(unit, a) == a, || format!("a = {}", l(a)));
        t2.check(m(a, a) == unit, || format!("a = {}", l(a)));
        for b in 0..n {
            t4.check(m(m(a, b), b) == m(m(b, a), a), || format!("a = {}, b = {}", l(a), l(b)));
            for c in 0..n {
                t3.check(m(a, m(b, c)) == m(m(a, b), m(a, c)), || format!("a = {}, b = {}, c = {}", l(a), l(b), l(c)));
            }
        }
    }
    let mut rep = Report::new("tarski-axioms").param("elements", n);
    for t in [t1, t2, t3, t4] {
        rep.push(t.finish(true));
    }
    rep
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecReport {
    pub coatoms: Vec<usize>,
    /// Maximal filters as element sets, from the coatom formula `(x↓)^c`.
    pub spec: Vec<ElemSet>,
    /// Maximal proper filters found by scanning the filter lattice.
    pub scanned: Vec<ElemSet>,
    pub agree: bool,
    pub all_prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaEmbedding {
    /// `σ(x)` for each carrier element, as a subset of `Spec` (indexed as in [`SpecReport::spec`]).
    pub image: Vec<Subset>,
    pub injective: bool,
    pub preserves_implication: bool,
    /// The associated Tarski set `⟨Spec, {σ(x)^c}⟩`.
    pub associated: TarskiSet,
    /// `σ(S) = Δ(Spec(S))` as sets of subsets.
    pub image_is_dual: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiMap {
    /// `ξ(x)` for each point, as an element set of `Δ(X)`.
    pub images: Vec<ElemSet>,
    pub injective: bool,
    pub surjective: bool,
    pub spec_size: usize,
}

impl XiMap {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

impl FiniteTarskiAlgebra {
    /// Builds an algebra from a table, rejecting it with the first failing axiom.
    pub fn new(labels: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        if n > MAX_CARRIER {
            return Err(Error::BudgetExceeded { required: n as u128, budget: MAX_CARRIER as u128 });
        }
        if table.len() != n * n {
            return Err(Error::PartialTable { expected: n * n, found: table.len() });
        }
        if let Some(&bad) = table.iter().chain([&unit]).find(|&&v| v >= n) {
            return Err(Error::ElementOutOfRange { index: bad, size: n });
        }
        let rep = check_axioms(&labels, &table, unit);
        if let Some(f) = rep.failures().first() {
            let axiom = match f.law.as_str() {
                "T1" => "T1",
                "T2" => "T2",
                "T3" => "T3",
                _ => "T4",
            };
            return Err(Error::TarskiAxiom { axiom, witness: f.witnesses.first().cloned().unwrap_or_default() });
        }
        Ok(Self { labels, table, unit, elements: None })
    }

    /// The algebra of sets on a `·`-closed family containing the universe, with `A·B = A^c ∪ B`.
    pub fn of_sets(universe: &Universe, family: &[Subset]) -> Result<Self> {
        let elements: Vec<Subset> = family.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if elements.len() > MAX_CARRIER {
            return Err(Error::BudgetExceeded { required: elements.len() as u128, budget: MAX_CARRIER as u128 });
        }
        let pos: HashMap<Subset, usize> = elements.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let full = universe.full();
        let unit = *pos.get(&full).ok_or_else(|| Error::NotClosed { operation: "unit", witness: "the universe is missing".into() })?;
        let mut table = Vec::with_capacity(elements.len() * elements.len());
        for &a in &elements {
            for &b in &elements {
                let c = universe.complement(a).union(b);
                match pos.get(&c) {
                    Some(&i) => table.push(i),
                    None => {
                        return Err(Error::NotClosed {
                            operation: "·",
                            witness: format!("{}·{} = {}", universe.show(a), universe.show(b), universe.show(c)),
                        })
                    }
                }
            }
        }
        let labels = elements.iter().map(|&s| universe.show(s)).collect();
        let mut alg = Self::new(labels, table, unit)?;
        alg.elements = Some(elements);
        Ok(alg)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Set realization, when built from sets.
    pub fn elements(&self) -> Option<&[Subset]> {
        self.elements.as_deref()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.len() + b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.op(a, b) == self.unit
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.op(self.op(a, b), b)
    }

    pub fn axioms_report(&self) -> Report {
        check_axioms(&self.labels, &self.table, self.unit)
    }

    pub fn as_groupoid(&self) -> Groupoid {
        Groupoid { n: self.len(), table: self.table.clone() }
    }

    /// TO1–TO3 plus the order facts: `≤` is a partial order with top `1`, and `(ab)b` is the least upper bound.
    pub fn order_report(&self) -> Report {
        let n = self.len();
        let mut rep = Report::new("tarski-order").param("elements", n);
        for c in self.as_groupoid().laws(&["TO1", "TO2", "TO3"], &|i| self.labels[i].clone()) {
            rep.push(c);
        }
        let l = |i: usize| self.labels[i].clone();
        let mut po = Tally::asserted("≤ is a partial order with top 1");
        let mut lub = Tally::asserted("(ab)b is the least upper bound");
        for a in 0..n {
            po.check(self.le(a, a) && self.le(a, self.unit), || l(a));
            for b in 0..n {
                po.check(a == b || !(self.le(a, b) && self.le(b, a)), || format!("{}, {}", l(a), l(b)));
                for c in 0..n {
                    if self.le(a, b) && self.le(b, c) {
                        po.check(self.le(a, c), || format!("{}, {}, {}", l(a), l(b), l(c)));
                    }
                }
                let j = self.join(a, b);
                let upper = self.le(a, j) && self.le(b, j);
                let least = (0..n).all(|c| !(self.le(a, c) && self.le(b, c)) || self.le(j, c));
                lub.check(upper && least, || format!("{}, {}", l(a), l(b)));
            }
        }
        rep.push(po.finish(true));
        rep.push(lub.finish(true));
        rep
    }

    /// `(a1 (a2 (… an)))` equals `(a1 a2)(a1 (a3 (… an)))` for every sequence of length `3..=k`.
    pub fn t3plus_check(&self, k: usize, budget: u128) -> Result<Report> {
        let n = self.len();
        let required: u128 = (3..=k.max(3) as u32).map(|len| (n as u128).saturating_pow(len)).sum();
        if required > budget {
            return Err(Error::BudgetExceeded { required, budget });
        }
        let nest = |seq: &[usize]| seq.iter().rev().copied().reduce(|acc, a| self.op(a, acc)).expect("nonempty");
        let mut t = Tally::asserted("T3+");
        for len in 3..=k {
            let mut seq = vec![0usize; len];
            loop {
                let lhs = nest(&seq);
                let mut rest = vec![seq[0]];
                rest.extend_from_slice(&seq[2..]);
                let rhs = self.op(self.op(seq[0], seq[1]), nest(&rest));
                t.check(lhs == rhs, || seq.iter().map(|&i| self.labels[i].clone()).collect::<Vec<_>>().join(", "));
                // odometer increment
                let mut i = len;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    seq[i] += 1;
                    if seq[i] < n {
                        break;
                    }
                    seq[i] = 0;
                }
                if seq.iter().all(|&v| v == 0) {
                    break;
                }
            }
        }
        let mut rep = Report::new("t3plus").param("max_length", k);
        rep.push(t.finish(true));
        Ok(rep)
    }

    /// Least filter containing `seed`.
    pub fn filter_closure(&self, seed: ElemSet) -> ElemSet {
        let n = self.len();
        let mut k = seed | 1 << self.unit;
        loop {
            let mut next = k;
            for a in elems(k) {
                for b in 0..n {
                    if k >> self.op(a, b) & 1 == 1 {
                        next |= 1 << b;
                    }
                }
            }
            if next == k {
                return k;
            }
            k = next;
        }
    }

    pub fn is_filter(&self, k: ElemSet) -> bool {
        self.filter_closure(k) == k
    }

    /// All filters, as element sets in increasing order.
    pub fn filters(&self) -> Vec<ElemSet> {
        let n = self.len();
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.filter_closure(0)];
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            for a in 0..n {
                if f >> a & 1 == 0 {
                    stack.push(self.filter_closure(f | 1 << a));
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| x != self.unit && (0..n).all(|y| y == x || y == self.unit || !self.le(x, y)))
            .collect()
    }

    fn full_set(&self) -> ElemSet {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Prime filters via coatoms, cross-checked against a scan of all filters.
    pub fn spec(&self) -> SpecReport {
        let n = self.len();
        let coatoms = self.coatoms();
        let mut spec: Vec<ElemSet> = coatoms
            .iter()
            .map(|&x| (0..n).filter(|&a| !self.le(a, x)).fold(0, |acc, a| acc | 1 << a))
            .collect();
        spec.sort();
        let full = self.full_set();
        let proper: Vec<ElemSet> = self.filters().into_iter().filter(|&f| f != full).collect();
        let scanned: Vec<ElemSet> =
            proper.iter().copied().filter(|&f| !proper.iter().any(|&g| g != f && g & f == f)).collect();
        let all_prime = spec.iter().all(|&k| {
            self.is_filter(k)
                && (0..n).all(|a| (0..n).all(|b| k >> self.join(a, b) & 1 == 0 || k >> a & 1 == 1 || k >> b & 1 == 1))
        });
        SpecReport { agree: spec == scanned, coatoms, spec, scanned, all_prime }
    }

    /// `σ(x) = {K ∈ Spec : x ∈ K}` with the round-trip `σ(S) = Δ(Spec(S))`.
    pub fn sigma_embed(&self) -> Result<SigmaEmbedding> {
        if self.len() < 2 {
            return Err(Error::TrivialAlgebra);
        }
        let spec = self.spec().spec;
        let m = spec.len();
        let su = Universe::new((0..m).map(|i| format!("K{i}")))?;
        let image: Vec<Subset> = (0..self.len())
            .map(|x| Subset::from_indices((0..m).filter(|&k| spec[k] >> x & 1 == 1)))
            .collect();
        let injective = image.iter().collect::<BTreeSet<_>>().len() == image.len();
        let n = self.len();
        let preserves = (0..n).all(|a| (0..n).all(|b| image[self.op(a, b)] == su.complement(image[a]).union(image[b])));
        let family: Vec<Subset> = image.iter().map(|&s| su.complement(s)).collect::<BTreeSet<_>>().into_iter().collect();
        let associated = TarskiSet::new(su, family)?;
        let dual: BTreeSet<Subset> = associated.dual_family().into_iter().collect();
        let img: BTreeSet<Subset> = image.iter().copied().collect();
        Ok(SigmaEmbedding { image, injective, preserves_implication: preserves, associated, image_is_dual: img == dual })
    }

    /// Whether `f` (images by element index) is a semi-morphism into `target`; `Err` carries the failing condition.
    pub fn semi_morphism_violation(&self, target: &FiniteTarskiAlgebra, f: &[usize]) -> Option<String> {
        let n = self.len();
        if f[self.unit] != target.unit {
            return Some("f(1) ≠ 1".into());
        }
        for a in 0..n {
            for b in 0..n {
                if self.le(a, b) && !target.le(f[a], f[b]) {
                    return Some(format!("not monotone at {} ≤ {}", self.labels[a], self.labels[b]));
                }
                if !target.le(f[self.op(a, b)], target.op(f[a], f[b])) {
                    return Some(format!("f(ab) ≰ f(a)f(b) at a = {}, b = {}", self.labels[a], self.labels[b]));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self, target: &FiniteTarskiAlgebra, f: &[usize]) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == target.op(f[a], f[b])))
    }

    /// Every semi-morphism into `target`, by backtracking with pruning.
    pub fn semi_morphisms(&self, target: &FiniteTarskiAlgebra, budget: u128) -> Result<Vec<Vec<usize>>> {
        let (n, m) = (self.len(), target.len());
        let required = (m as u128).saturating_pow(n.saturating_sub(1) as u32);
        if required > budget {
            return Err(Error::BudgetExceeded { required, budget });
        }
        let mut f = vec![usize::MAX; n];
        f[self.unit] = target.unit;
        let order: Vec<usize> = (0..n).filter(|&x| x != self.unit).collect();
        let mut out = Vec::new();
        self.extend(target, &order, 0, &mut f, &mut out);
        Ok(out)
    }

    fn consistent(&self, target: &FiniteTarskiAlgebra, f: &[usize], x: usize) -> bool {
        let n = self.len();
        let set = |v: usize| v != usize::MAX;
        for a in 0..n {
            if !set(f[a]) {
                continue;
            }
            for (p, q) in [(a, x), (x, a)] {
                if self.le(p, q) && !target.le(f[p], f[q]) {
                    return false;
                }
            }
            for b in 0..n {
                if !set(f[b]) {
                    continue;
                }
                let ab = self.op(a, b);
                if set(f[ab]) && (a == x || b == x || ab == x) && !target.le(f[ab], target.op(f[a], f[b])) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, target: &FiniteTarskiAlgebra, order: &[usize], i: usize, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == order.len() {
            out.push(f.clone());
            return;
        }
        let x = order[i];
        for v in 0..target.len() {
            f[x] = v;
            if self.consistent(target, f, x) {
                self.extend(target, order, i + 1, f, out);
            }
        }
        f[x] = usize::MAX;
    }

    /// Index of a set element, for algebras of sets.
    pub fn index_of_set(&self, s: Subset) -> Option<usize> {
        self.elements()?.iter().position(|&e| e == s)
    }
}

/// A universe with a nonempty family of subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TarskiSet {
    universe: Universe,
    family: Vec<Subset>,
}

impl TarskiSet {
    pub fn new(universe: Universe, family: Vec<Subset>) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::EmptyEventFamily);
        }
        if family.iter().any(|s| !s.is_subset(universe.full())) {
            return Err(Error::UniverseMismatch);
        }
        let family = family.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Self { universe, family })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    pub fn is_dense(&self) -> bool {
        crate::universe::union_all(self.family.iter().copied()) == self.universe.full()
    }

    /// `{W^c ∪ H : H ⊆ W ∈ 𝒮}`, sorted by mask.
    pub fn dual_family(&self) -> Vec<Subset> {
        let mut out = BTreeSet::new();
        for &w in &self.family {
            let wc = self.universe.complement(w);
            for h in w.subsets() {
                out.insert(wc.union(h));
            }
        }
        out.into_iter().collect()
    }

    /// `Δ(X)` as an algebra of sets.
    pub fn delta_dual(&self) -> Result<FiniteTarskiAlgebra> {
        FiniteTarskiAlgebra::of_sets(&self.universe, &self.dual_family())
    }

    /// `ξ(x) = {U ∈ Δ(X) : x ∈ U}`; requires a dense family.
    pub fn xi_map(&self) -> Result<XiMap> {
        if let Some(x) = (0..self.universe.len()).find(|&x| !self.family.iter().any(|s| s.contains(x))) {
            return Err(Error::UncoveredElement(self.universe.label(x).to_string()));
        }
        let alg = self.delta_dual()?;
        let elements = alg.elements().expect("set algebra").to_vec();
        let spec = alg.spec().spec;
        let images: Vec<ElemSet> = (0..self.universe.len())
            .map(|x| elements.iter().enumerate().filter(|(_, u)| u.contains(x)).fold(0u64, |acc, (i, _)| acc | 1 << i))
            .collect();
        let distinct: BTreeSet<ElemSet> = images.iter().copied().collect();
        let injective = distinct.len() == images.len();
        let surjective = spec.iter().all(|k| distinct.contains(k)) && distinct.iter().all(|k| spec.contains(k));
        Ok(XiMap { images, injective, surjective, spec_size: spec.len() })
    }
}

/// The implication algebra on a field of sets (`A·B = A^c ∪ B`).
pub fn sia_from_field(field: &SetField) -> Result<FiniteTarskiAlgebra> {
    FiniteTarskiAlgebra::of_sets(field.universe(), &field.events())
}

/// As [`sia_from_field`], for a family that must already be closed under ∪, ∩ and complement.
pub fn sia_from_family(universe: &Universe, family: &[Subset]) -> Result<FiniteTarskiAlgebra> {
    let set: BTreeSet<Subset> = family.iter().copied().collect();
    for &a in &set {
        let c = universe.complement(a);
        if !set.contains(&c) {
            return Err(Error::NotClosed { operation: "complement", witness: universe.show(a) });
        }
        for &b in &set {
            if !set.contains(&a.union(b)) {
                return Err(Error::NotClosed { operation: "∪", witness: format!("{} ∪ {}", universe.show(a), universe.show(b)) });
            }
            if !set.contains(&a.intersection(b)) {
                return Err(Error::NotClosed { operation: "∩", witness: format!("{} ∩ {}", universe.show(a), universe.show(b)) });
            }
        }
    }
    FiniteTarskiAlgebra::of_sets(universe, family)
}

/// `h_R(U) = {x : R(x) ⊆ U}` for `R ⊆ X × W`, tabulated over `℘(W)` by mask.
pub fn h_r(rows: &[Subset], w: &Universe) -> Vec<Subset> {
    w.powerset()
        .map(|u| Subset::from_indices((0..rows.len()).filter(|&x| rows[x].is_subset(u))))
        .collect()
}

/// Checks `h_R` is a semi-morphism `℘(W) → ℘(X)`; `None` means certified.
pub fn h_r_certificate(rows: &[Subset], x: &Universe, w: &Universe) -> Result<Option<String>> {
    let pw = FiniteTarskiAlgebra::of_sets(w, &w.powerset().collect::<Vec<_>>())?;
    let px = FiniteTarskiAlgebra::of_sets(x, &x.powerset().collect::<Vec<_>>())?;
    let table = h_r(rows, w);
    // of_sets sorts by mask, so element i of a powerset algebra is mask i.
    let f: Vec<usize> = table.iter().map(|s| s.bits() as usize).collect();
    Ok(pw.semi_morphism_violation(&px, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::ApproximationSpace;

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    fn f5() -> TarskiSet {
        TarskiSet::new(Universe::range(3).unwrap(), vec![s(&[0, 1]), s(&[2])]).unwrap()
    }

    #[test]
    fn powerset_algebra() {
        let u = Universe::range(2).unwrap();
        let a = FiniteTarskiAlgebra::of_sets(&u, &u.powerset().collect::<Vec<_>>()).unwrap();
        assert!(a.axioms_report().passed());
        assert!(a.order_report().passed());
        assert_eq!(a.spec().spec.len(), 2);
        assert!(a.spec().agree);
    }

    #[test]
    fn corrupted_table_names_axiom() {
        let u = Universe::range(2).unwrap();
        let a = FiniteTarskiAlgebra::of_sets(&u, &u.powerset().collect::<Vec<_>>()).unwrap();
        let mut t = a.table().to_vec();
        t[0] = 0; // ∅·∅ should be the unit
        let err = FiniteTarskiAlgebra::new(a.labels().to_vec(), t, a.unit()).unwrap_err();
        assert!(matches!(err, Error::TarskiAxiom { axiom: "T2", .. }), "{err:?}");
    }

    #[test]
    fn f5_dual() {
        let t = f5();
        assert_eq!(t.dual_family(), vec![s(&[0, 1]), s(&[2]), s(&[0, 2]), s(&[1, 2]), s(&[0, 1, 2])]);
        let d = t.delta_dual().unwrap();
        let sp = d.spec();
        assert_eq!(sp.coatoms.len(), 3);
        assert!(sp.agree && sp.all_prime);
        let e = d.sigma_embed().unwrap();
        assert!(e.injective && e.preserves_implication && e.image_is_dual);
        assert_eq!(e.image.len(), 5);
        let xi = t.xi_map().unwrap();
        assert!(xi.bijective());
        assert_eq!(xi.spec_size, 3);
    }

    #[test]
    fn boolean_and_non_dense_cases() {
        let u = Universe::range(2).unwrap();
        let t = TarskiSet::new(u.clone(), vec![s(&[0]), s(&[0, 1])]).unwrap();
        assert_eq!(t.dual_family().len(), 4);
        let t = TarskiSet::new(Universe::range(3).unwrap(), vec![s(&[0, 1])]).unwrap();
        assert_eq!(t.xi_map().unwrap_err(), Error::UncoveredElement("2".into()));
        let one = FiniteTarskiAlgebra::new(vec!["1".into()], vec![0], 0).unwrap();
        assert!(one.spec().spec.is_empty());
        assert_eq!(one.sigma_embed().unwrap_err(), Error::TrivialAlgebra);
    }

    #[test]
    fn chain_poset_groupoid() {
        let g = Groupoid::from_poset(&[vec![true, true], vec![false, true]]).unwrap();
        assert!(g.poset_groupoid_report().passed());
    }

    #[test]
    fn semi_morphisms_and_h_r() {
        let u = Universe::range(2).unwrap();
        let a = FiniteTarskiAlgebra::of_sets(&u, &u.powerset().collect::<Vec<_>>()).unwrap();
        let maps = a.semi_morphisms(&a, DEFAULT_MORPHISM_BUDGET).unwrap();
        let id: Vec<usize> = (0..a.len()).collect();
        assert!(maps.contains(&id));
        assert!(maps.contains(&vec![a.unit(); a.len()]));
        assert!(maps.iter().all(|f| a.semi_morphism_violation(&a, f).is_none()));
        assert!(matches!(a.semi_morphisms(&a, 2), Err(Error::BudgetExceeded { .. })));

        let f1 = ApproximationSpace::from_partition(Universe::range(4).unwrap(), &[s(&[0, 1]), s(&[2, 3])]).unwrap();
        let rows: Vec<Subset> = (0..4).map(|x| f1.class_of(x)).collect();
        let h = h_r(&rows, f1.universe());
        assert!(f1.universe().powerset().all(|x| h[x.bits() as usize] == f1.lower(x)));
        assert_eq!(h_r_certificate(&rows, f1.universe(), f1.universe()).unwrap(), None);
    }

    #[test]
    fn sia_and_t3plus() {
        let u = Universe::range(3).unwrap();
        let f = SetField::generated_by(u.clone(), &[s(&[0, 1]), s(&[1, 2])]).unwrap();
        let a = sia_from_field(&f).unwrap();
        assert_eq!(a.len(), 8);
        assert!(a.t3plus_check(4, DEFAULT_MORPHISM_BUDGET).unwrap().passed());
        assert!(matches!(sia_from_family(&u, &[s(&[0]), u.full()]), Err(Error::NotClosed { .. })));
        let two = sia_from_family(&u, &[Subset::EMPTY, u.full()]).unwrap();
        assert_eq!(two.len(), 2);
    }
}
