//! Rough dependence degrees and recovering approximations from them.

use roughdep::dependence::{gos_beta_suite, pn_dependence, recover_approximations, DependenceEngine};
use roughdep::fixtures;
use roughdep::report::SuiteConfig;

fn main() -> roughdep::Result<()> {
    let space = fixtures::f1();
    let u = space.universe().clone();
    let eng = DependenceEngine::classical(&space);
    let pairs = [(["0", "1", "2"].as_slice(), ["0", "1", "3"].as_slice()), (&["0", "1", "2"], &["0", "3"])];
    for (a, b) in pairs {
        let (a, b) = (u.subset_of_labels(a.iter().copied())?, u.subset_of_labels(b.iter().copied())?);
        let show = |s: Option<roughdep::Subset>| s.map(|s| u.show(s)).unwrap_or_else(|| "undefined".into());
        println!("β_i({}, {}) = {}, β_s = {}", u.show(a), u.show(b), show(eng.beta_i(a, b)), show(eng.beta_s(a, b)));
    }

    let rec = recover_approximations(&space);
    println!("l and u recovered from β alone: {} {}", rec.lower_matches, rec.upper_matches);

    let g = fixtures::f1_gos();
    let x = u.subset_of_labels(["0", "1"])?;
    let y = u.subset_of_labels(["2", "3"])?;
    println!("PN verdict for {} and {}: {:?}", u.show(x), u.show(y), pn_dependence(x, y, &g));

    // A cover-based space, where the classical identities no longer all hold.
    let f3 = fixtures::f3_gos()?;
    print!("{}", gos_beta_suite(&f3, &SuiteConfig::default()).to_text());
    Ok(())
}
