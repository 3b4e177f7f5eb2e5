//! Exact δ, the π/σ predicates, spectra and generated π-ideals.

use roughdep::fixtures;
use roughdep::prob::FiniteProbSpace;
use roughdep::Universe;

fn main() -> roughdep::Result<()> {
    let sp = fixtures::f4w();
    let u = sp.universe().clone();
    let ev = |labels: &[&str]| u.subset_of_labels(labels.iter().copied());

    let (x, y) = (ev(&["a", "b"])?, ev(&["a", "b", "c"])?);
    println!("p({}) = {}, δ({}, {}) = {} ({:?})", u.show(x), sp.p(x)?, u.show(x), u.show(y), sp.delta(x, y)?, sp.classify(x, y)?);

    let (a, b) = (ev(&["a"])?, ev(&["b"])?);
    let (upper, lower) = sp.spectra(a, b)?;
    println!("U({{a}}, {{b}}) has {} events, L has {}", upper.len(), lower.len());

    let fam = |f: &[roughdep::Subset]| roughdep::cover::show_family(&u, f);
    let s = sp.pi_supremums(x, a)?;
    println!("π-supremums of {} and {}: {}, union in spectrum {}", u.show(x), u.show(a), fam(&s.supremums), s.union_in_spectrum);

    // π-ideals are rare; a fair coin has some.
    let coin = FiniteProbSpace::uniform(Universe::letters(2)?)?;
    let cu = coin.universe().clone();
    let show = |f: &[roughdep::Subset]| roughdep::cover::show_family(&cu, f);
    for gens in [vec![cu.subset_of_labels(["a"])?], vec![cu.full()], vec![cu.subset_of_labels(["a"])?, cu.subset_of_labels(["b"])?]] {
        let g = coin.ideal_generated(&gens)?;
        match g.ideal() {
            Some(k) => println!("ideal generated by {}: {} after {} rounds", show(&gens), show(k), g.trace.len()),
            None => println!("no π-ideal contains {}: {}", show(&gens), g.verdict.witness.unwrap_or_default()),
        }
    }

    let rep = sp.supremum_suite()?;
    let gap = rep.check("x ∪ z ∉ U(x, z) with p(x ∪ z) = 1").expect("reported");
    println!("union-not-in-spectrum at probability one: {} pairs, e.g. {:?}", gap.witness_count, gap.witnesses.first());
    Ok(())
}
