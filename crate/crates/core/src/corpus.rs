//! Instance corpora for the sweeps: exhaustive enumerations plus seeded
//! random generators. What to generate lives in [`CorpusConfig`], which can
//! be loaded from JSON.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cover::CoverSpace;
use crate::deviant::DeviancePolicy;
use crate::error::Result;
use crate::prob::FiniteProbSpace;
use crate::relation::ApproximationSpace;
use crate::report::SuiteConfig;
use crate::squeezed::ToleranceSpace;
use crate::tarski::TarskiSet;
use crate::universe::{canonical, Subset, Universe};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub seed: u64,
    pub suite: SuiteConfig,
    pub policy: DeviancePolicy,
    /// Enumeration budget for semi-morphism searches.
    pub budget: u128,
    /// All equivalences on this many points, plus `random_equivalences` on up to `max_random_universe`.
    pub exhaustive_equivalence_size: usize,
    pub random_equivalences: usize,
    pub max_random_universe: usize,
    /// Random spaces with 1 to `max_random_atoms` atoms.
    pub random_prob_spaces: usize,
    pub max_random_atoms: usize,
    /// Weights are `k / total` with `k` drawn from `1..=max_weight_numerator`.
    pub max_weight_numerator: u32,
    /// Atom counts over which ideal generation is checked for every generator set.
    pub ideal_atom_counts: Vec<usize>,
    pub random_ideal_spaces: usize,
    /// Every dense family on up to this many points.
    pub exhaustive_tarski_size: usize,
    pub random_tarski_sets: usize,
    pub random_tarski_size: usize,
    pub exhaustive_cover_size: usize,
    pub sampled_covers: usize,
    pub sampled_cover_size: usize,
    pub cover_member_density: f64,
    pub random_tolerances: usize,
    pub max_tolerance_universe: usize,
    pub tolerance_density: (f64, f64),
    /// Source and target sizes of the β-preservation sweep.
    pub preservation_source: usize,
    pub preservation_target: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            suite: SuiteConfig::default(),
            policy: DeviancePolicy::default(),
            budget: crate::tarski::DEFAULT_MORPHISM_BUDGET,
            exhaustive_equivalence_size: 3,
            random_equivalences: 200,
            max_random_universe: 8,
            random_prob_spaces: 50,
            max_random_atoms: 4,
            max_weight_numerator: 9,
            ideal_atom_counts: vec![2, 3],
            random_ideal_spaces: 10,
            exhaustive_tarski_size: 3,
            random_tarski_sets: 100,
            random_tarski_size: 4,
            exhaustive_cover_size: 3,
            sampled_covers: 1000,
            sampled_cover_size: 4,
            cover_member_density: 0.3,
            random_tolerances: 200,
            max_tolerance_universe: 8,
            tolerance_density: (0.2, 0.9),
            preservation_source: 3,
            preservation_target: 2,
        }
    }
}

/// Independent random streams, so adding draws to one generator leaves the others unchanged.
#[derive(Debug, Clone, Copy)]
enum Stream {
    Equivalence = 1,
    Prob = 2,
    Ideal = 3,
    Tarski = 4,
    Cover = 5,
    Tolerance = 6,
}

impl CorpusConfig {
    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Same corpus shape with a different seed (also reseeds the suite sampler).
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.suite.seed = seed;
        self
    }

    fn rng(&self, stream: Stream) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream as u64);
        rng
    }

    /// Every partition of the exhaustive size, then the random ones.
    pub fn equivalences(&self) -> Result<Vec<ApproximationSpace>> {
        let u = Universe::range(self.exhaustive_equivalence_size)?;
        let mut out = all_partitions(self.exhaustive_equivalence_size)
            .into_iter()
            .map(|p| ApproximationSpace::from_partition(u.clone(), &p))
            .collect::<Result<Vec<_>>>()?;
        let mut rng = self.rng(Stream::Equivalence);
        for _ in 0..self.random_equivalences {
            let n = rng.gen_range(1..=self.max_random_universe);
            out.push(random_equivalence(n, &mut rng)?);
        }
        Ok(out)
    }

    /// Random spaces of 1 to `max_random_atoms` atoms, each atom a single point.
    pub fn prob_spaces(&self) -> Result<Vec<FiniteProbSpace>> {
        let mut rng = self.rng(Stream::Prob);
        (0..self.random_prob_spaces)
            .map(|_| {
                let k = rng.gen_range(1..=self.max_random_atoms);
                random_prob_space(k, self.max_weight_numerator, &mut rng)
            })
            .collect()
    }

    /// For each configured atom count: the uniform space, then random ones.
    pub fn ideal_spaces(&self) -> Result<Vec<FiniteProbSpace>> {
        let mut rng = self.rng(Stream::Ideal);
        let mut out = Vec::new();
        for &k in &self.ideal_atom_counts {
            out.push(FiniteProbSpace::uniform(Universe::letters(k)?)?);
            for _ in 0..self.random_ideal_spaces {
                out.push(random_prob_space(k, self.max_weight_numerator, &mut rng)?);
            }
        }
        Ok(out)
    }

    /// Every dense family on 1 to `exhaustive_tarski_size` points, then random dense ones.
    pub fn tarski_sets(&self) -> Result<Vec<TarskiSet>> {
        let mut out = Vec::new();
        for n in 1..=self.exhaustive_tarski_size {
            let u = Universe::range(n)?;
            for fam in dense_families(n) {
                out.push(TarskiSet::new(u.clone(), fam)?);
            }
        }
        let mut rng = self.rng(Stream::Tarski);
        let u = Universe::range(self.random_tarski_size)?;
        for _ in 0..self.random_tarski_sets {
            out.push(TarskiSet::new(u.clone(), random_dense_family(self.random_tarski_size, &mut rng))?);
        }
        Ok(out)
    }

    /// Every proper cover on the exhaustive size, then sampled ones.
    pub fn covers(&self) -> Result<Vec<CoverSpace>> {
        let mut out = crate::bridge::proper_covers(&Universe::range(self.exhaustive_cover_size)?);
        let u = Universe::range(self.sampled_cover_size)?;
        let mut rng = self.rng(Stream::Cover);
        for _ in 0..self.sampled_covers {
            out.push(CoverSpace::new(u.clone(), random_cover(self.sampled_cover_size, self.cover_member_density, &mut rng))?);
        }
        Ok(out)
    }

    pub fn tolerances(&self) -> Result<Vec<ToleranceSpace>> {
        let mut rng = self.rng(Stream::Tolerance);
        let (lo, hi) = self.tolerance_density;
        (0..self.random_tolerances)
            .map(|_| {
                let n = rng.gen_range(1..=self.max_tolerance_universe);
                let d = if hi > lo { rng.gen_range(lo..hi) } else { lo };
                Ok(ToleranceSpace::random(Universe::range(n)?, d, &mut rng))
            })
            .collect()
    }
}

/// All set partitions of `{0..n}` as canonical block lists (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<Vec<Subset>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
        if i == n {
            out.push(canonical(blocks.clone()));
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] = blocks[b].with(i);
            go(i + 1, n, blocks, out);
            blocks[b] = blocks[b].without(i);
        }
        blocks.push(Subset::singleton(i));
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn random_equivalence<R: Rng>(n: usize, rng: &mut R) -> Result<ApproximationSpace> {
    let mut blocks = vec![Subset::EMPTY; n];
    for x in 0..n {
        let b = rng.gen_range(0..n);
        blocks[b] = blocks[b].with(x);
    }
    blocks.retain(|b| !b.is_empty());
    ApproximationSpace::from_partition(Universe::range(n)?, &canonical(blocks))
}

/// `k` singleton atoms labelled `a, b, …` with weights `w_i / Σw`, `w_i ∈ 1..=max`.
pub fn random_prob_space<R: Rng>(k: usize, max: u32, rng: &mut R) -> Result<FiniteProbSpace> {
    let raw: Vec<u32> = (0..k).map(|_| rng.gen_range(1..=max.max(1))).collect();
    let total: u32 = raw.iter().sum();
    let weights = raw.iter().map(|&w| BigRational::new(BigInt::from(w), BigInt::from(total))).collect();
    FiniteProbSpace::discrete(Universe::letters(k)?, weights)
}

/// Every family of nonempty subsets of `{0..n}` whose union is the whole set.
pub fn dense_families(n: usize) -> Vec<Vec<Subset>> {
    let sets: Vec<Subset> = Subset::powerset(n).filter(|s| !s.is_empty()).collect();
    let full = Subset::full(n);
    (1u64..1 << sets.len())
        .map(|sel| (0..sets.len()).filter(|i| sel >> i & 1 == 1).map(|i| sets[i]).collect::<Vec<_>>())
        .filter(|fam| crate::universe::union_all(fam.iter().copied()) == full)
        .collect()
}

/// A random family of nonempty subsets, patched with a random set through each uncovered point.
pub fn random_dense_family<R: Rng>(n: usize, rng: &mut R) -> Vec<Subset> {
    let full = Subset::full(n).bits();
    let size = rng.gen_range(1..=n.max(1) + 1);
    let mut fam: Vec<Subset> =
        (0..size).map(|_| Subset::from_bits(rng.gen::<u32>() & full)).filter(|s| !s.is_empty()).collect();
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    for x in points {
        if !fam.iter().any(|s| s.contains(x)) {
            fam.push(Subset::from_bits(rng.gen::<u32>() & full).with(x));
        }
    }
    canonical(fam)
}

/// Each nonempty subset is a member with probability `density`; redrawn until the family covers.
pub fn random_cover<R: Rng>(n: usize, density: f64, rng: &mut R) -> Vec<Subset> {
    let full = Subset::full(n);
    loop {
        let fam: Vec<Subset> = Subset::powerset(n).filter(|s| !s.is_empty()).filter(|_| rng.gen_bool(density)).collect();
        if crate::universe::union_all(fam.iter().copied()) == full {
            return fam;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(all_partitions(n).len(), b);
        }
    }

    #[test]
    fn dense_family_counts() {
        // brute force over all families of the power set, empty set allowed nowhere
        for n in 1..=3 {
            let sets: Vec<Subset> = Subset::powerset(n).collect();
            let mut count = 0;
            for sel in 0u64..1 << sets.len() {
                let fam: Vec<Subset> = (0..sets.len()).filter(|i| sel >> i & 1 == 1).map(|i| sets[i]).collect();
                let dense = (0..n).all(|x| fam.iter().any(|s| s.contains(x)));
                if dense && !fam.iter().any(|s| s.is_empty()) {
                    count += 1;
                }
            }
            assert_eq!(dense_families(n).len(), count);
        }
    }

    #[test]
    fn default_corpus_shape() {
        let cfg = CorpusConfig::default();
        assert_eq!(cfg.equivalences().unwrap().len(), 5 + 200);
        assert_eq!(cfg.prob_spaces().unwrap().len(), 50);
        assert_eq!(cfg.covers().unwrap().len(), 109 + 1000);
        assert_eq!(cfg.tolerances().unwrap().len(), 200);
        assert!(cfg.tarski_sets().unwrap().iter().all(|t| t.is_dense()));
        assert!(cfg.prob_spaces().unwrap().iter().all(|p| p.atoms().len() <= 4));
    }

    #[test]
    fn deterministic_and_round_trips() {
        let cfg = CorpusConfig::default();
        let again = CorpusConfig::from_json_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
        assert_eq!(cfg, again);
        let a: Vec<_> = cfg.tolerances().unwrap().iter().map(|t| t.edges()).collect();
        let b: Vec<_> = again.tolerances().unwrap().iter().map(|t| t.edges()).collect();
        assert_eq!(a, b);
        let other = cfg.clone().with_seed(7);
        let c: Vec<_> = other.tolerances().unwrap().iter().map(|t| t.edges()).collect();
        assert_ne!(a, c);
    }
}
