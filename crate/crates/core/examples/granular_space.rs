//! Granular operator spaces: regions, rough objects and rough membership.

use roughdep::fixtures;
use roughdep::granular::GammaKind;
use roughdep::report::SuiteConfig;

fn main() -> roughdep::Result<()> {
    let g = fixtures::f1_gos();
    let u = g.universe().clone();
    println!("recipe {}, granules {}", g.recipe(), roughdep::cover::show_family(&u, g.granules()));

    let x = u.subset_of_labels(["0", "1", "2"])?;
    let r = g.regions(x);
    println!("regions of {}: pos {} neg {} class {:?}", u.show(x), u.show(r.pos), u.show(r.neg), r.class);
    let census = g.rough_object_census();
    println!(
        "{} subsets, {} definite, definability classes {:?}",
        census.subsets,
        census.definite.len(),
        census.definability
    );
    println!("admissible granulation:\n{}", g.validate_admissible().to_text());

    let a = u.subset_of_labels(["0", "2"])?;
    println!("ω_Cap(0, {}) = {}", u.show(a), g.omega(0, a, GammaKind::Cap)?);

    // Nested granules make granular monotony fail; the scan lists the witnesses.
    let nested = fixtures::g_monotony();
    let rep = nested.omega_property_check(GammaKind::Cap, &SuiteConfig::default());
    let c = rep.check("G-Monotony").expect("always reported");
    println!("G-Monotony on nested granules: {:?}, witnesses {:?}", c.verdict, c.witnesses);
    Ok(())
}
