use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use roughdep::cover::{CoverSpace, UpperKind};
use roughdep::prob::FiniteProbSpace;
use roughdep::relation::ApproximationSpace;
use roughdep::squeezed::{SqueezedSystem, ToleranceSpace};
use roughdep::tarski::TarskiSet;
use roughdep::{Subset, Universe};

fn model(s: Subset) -> BTreeSet<usize> {
    (0..32).filter(|&i| s.bits() >> i & 1 == 1).collect()
}

/// Block label per point, turned into classes.
fn partition(labels: &[usize]) -> Vec<Subset> {
    let distinct: BTreeSet<usize> = labels.iter().copied().collect();
    distinct
        .into_iter()
        .map(|l| Subset::from_indices(labels.iter().enumerate().filter(|(_, &m)| m == l).map(|(i, _)| i)))
        .collect()
}

fn arb_partition() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, n)))
}

proptest! {
    #[test]
    fn subset_ops_match_a_set_model(a in 0u32..1 << 10, b in 0u32..1 << 10) {
        let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
        let (mx, my) = (model(x), model(y));
        prop_assert_eq!(model(x.union(y)), mx.union(&my).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(model(x.intersection(y)), mx.intersection(&my).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(model(x.difference(y)), mx.difference(&my).copied().collect::<BTreeSet<_>>());
        prop_assert_eq!(x.is_subset(y), mx.is_subset(&my));
        prop_assert_eq!(x.len(), mx.len());
        let full: BTreeSet<usize> = (0..10).collect();
        prop_assert_eq!(model(x.complement(10)), full.difference(&mx).copied().collect::<BTreeSet<_>>());
        let (vx, vy): (Vec<_>, Vec<_>) = (mx.into_iter().collect(), my.into_iter().collect());
        prop_assert_eq!(x.lex_cmp(y), vx.cmp(&vy));
    }

    #[test]
    fn approximations_agree_with_pointwise_classes((n, labels) in arb_partition(), a in 0u32..64) {
        let u = Universe::range(n).unwrap();
        let a = Subset::from_bits(a & ((1 << n) - 1));
        let sp = ApproximationSpace::from_partition(u.clone(), &partition(&labels)).unwrap();
        let class = |x: usize| (0..n).filter(|&y| labels[y] == labels[x]).collect::<BTreeSet<_>>();
        let ma = model(a);
        let lower: BTreeSet<usize> = (0..n).filter(|&x| class(x).is_subset(&ma)).collect();
        let upper: BTreeSet<usize> = (0..n).filter(|&x| !class(x).is_disjoint(&ma)).collect();
        prop_assert_eq!(model(sp.lower(a)), lower);
        prop_assert_eq!(model(sp.upper(a)), upper);
        prop_assert_eq!(sp.upper(a), u.complement(sp.lower(u.complement(a))));
        for x in 0..n {
            let c = class(x);
            let expect = BigRational::new((c.intersection(&ma).count() as i64).into(), (c.len() as i64).into());
            prop_assert_eq!(sp.rough_membership(x, a), expect);
        }
    }

    #[test]
    fn delta_matches_weight_sums(ws in prop::collection::vec(0u32..6, 1..=5), a in 0u32..32, b in 0u32..32) {
        prop_assume!(ws.iter().any(|&w| w > 0));
        let n = ws.len();
        let total: u32 = ws.iter().sum();
        let weights: Vec<BigRational> = ws.iter().map(|&w| BigRational::new(w.into(), total.into())).collect();
        let sp = FiniteProbSpace::discrete(Universe::range(n).unwrap(), weights.clone()).unwrap();
        let mask = (1u32 << n) - 1;
        let (x, y) = (Subset::from_bits(a & mask), Subset::from_bits(b & mask));
        let p = |s: Subset| model(s).into_iter().fold(BigRational::zero(), |acc, i| acc + &weights[i]);
        let d = p(x.intersection(y)) - p(x) * p(y);
        prop_assert_eq!(sp.p(x).unwrap(), p(x));
        prop_assert_eq!(sp.delta(x, y).unwrap(), d.clone());
        prop_assert_eq!(sp.delta(y, x).unwrap(), d.clone());
        prop_assert_eq!(sp.delta(x, y.complement(n)).unwrap(), -d);
    }

    #[test]
    fn blocks_are_exactly_the_maximal_cliques(n in 1usize..=6, edges in prop::collection::vec((0usize..6, 0usize..6), 0..12)) {
        let pairs: Vec<(usize, usize)> = edges.into_iter().filter(|&(a, b)| a < n && b < n).collect();
        let t = ToleranceSpace::from_pairs(Universe::range(n).unwrap(), pairs.clone()).unwrap();
        let adj = |a: usize, b: usize| a == b || pairs.contains(&(a, b)) || pairs.contains(&(b, a));
        let cliques: Vec<u32> = (1u32..1 << n)
            .filter(|&m| (0..n).all(|a| (0..n).all(|b| m >> a & 1 == 0 || m >> b & 1 == 0 || adj(a, b))))
            .collect();
        let maximal: BTreeSet<u32> =
            cliques.iter().copied().filter(|&m| !cliques.iter().any(|&c| c != m && m & !c == 0)).collect();
        let got: BTreeSet<u32> = t.blocks().iter().map(|b| b.bits()).collect();
        prop_assert_eq!(&got, &maximal);
        let sys = SqueezedSystem::build(&t).unwrap();
        for x in 0..1u32 << n {
            let x = Subset::from_bits(x);
            prop_assert!(sys.lower(x).is_subset(x));
            prop_assert!(sys.is_definable(sys.lower(x)));
        }
    }

    #[test]
    fn cover_operators_are_ordered(n in 1usize..=4, picks in prop::collection::vec(1u32..16, 1..6), x in 0u32..16) {
        let mask = (1u32 << n) - 1;
        let mut members: Vec<Subset> = picks.iter().map(|&m| m & mask).filter(|&m| m != 0).map(Subset::from_bits).collect();
        // Singletons complete the cover.
        members.extend((0..n).map(Subset::singleton));
        let c = CoverSpace::new(Universe::range(n).unwrap(), members.clone()).unwrap();
        let x = Subset::from_bits(x & mask);
        let l1 = c.lower_l1(x);
        prop_assert!(l1.is_subset(x));
        let up = |k| c.upper(x, k).unwrap();
        prop_assert!(x.is_subset(up(UpperKind::U1)));
        prop_assert!(up(UpperKind::U1).is_subset(up(UpperKind::U1Plus)));
        prop_assert!(up(UpperKind::U3Plus).is_subset(up(UpperKind::U2Plus)));
        let fr: Subset = (0..n)
            .filter(|&p| x.contains(p))
            .flat_map(|p| members.iter().copied().filter(move |m| m.contains(p)))
            .fold(Subset::EMPTY, Subset::union);
        prop_assert_eq!(up(UpperKind::U2Plus), fr);
    }

    #[test]
    fn xi_is_a_bijection_for_dense_families(n in 1usize..=4, picks in prop::collection::vec(1u32..16, 0..5)) {
        let mask = (1u32 << n) - 1;
        let mut family: BTreeSet<u32> = picks.iter().map(|&m| m & mask).filter(|&m| m != 0).collect();
        let covered = family.iter().fold(0, |a, &m| a | m);
        if covered != mask {
            family.insert(mask & !covered);
        }
        let u = Universe::range(n).unwrap();
        let ts = TarskiSet::new(u.clone(), family.iter().map(|&m| Subset::from_bits(m)).collect()).unwrap();
        let mut dual = BTreeSet::new();
        for &w in &family {
            for h in 0..=w {
                if h & !w == 0 {
                    dual.insert((mask & !w) | h);
                }
            }
        }
        let got: BTreeSet<u32> = ts.dual_family().iter().map(|s| s.bits()).collect();
        prop_assert_eq!(got, dual);
        prop_assert!(ts.xi_map().unwrap().bijective());
        prop_assert!(ts.delta_dual().unwrap().axioms_report().passed());
    }
}
