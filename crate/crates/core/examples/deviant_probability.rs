//! Set-valued dependence π_o/σ_o and dependence trails.

use roughdep::deviant::{DeviancePolicy, DevianceSpace, EmptyCandidates};
use roughdep::fixtures;

fn main() -> roughdep::Result<()> {
    let sp = fixtures::f4w();
    let u = sp.universe().clone();
    let d = DevianceSpace::new(&sp, DeviancePolicy::ProbCardLex);
    let ev = |labels: &[&str]| u.subset_of_labels(labels.iter().copied());

    for (x, y) in [(ev(&["a", "b"])?, ev(&["a", "b", "c"])?), (ev(&["a"])?, ev(&["b"])?)] {
        let pi = d.pi_o(x, y, EmptyCandidates::Convention)?.expect("convention always yields a value");
        let sg = d.sigma_o(x, y, EmptyCandidates::Convention)?.expect("convention always yields a value");
        println!("π_o({}, {}) = {}{}", u.show(x), u.show(y), u.show(pi.event), if pi.by_convention { " (by convention)" } else { "" });
        println!("σ_o({}, {}) = {}{}", u.show(x), u.show(y), u.show(sg.event), if sg.by_convention { " (by convention)" } else { "" });
    }

    let trail = d.dependence_trail(ev(&["a", "b"])?, ev(&["a", "b", "c"])?)?;
    let steps: Vec<String> = trail.steps.iter().map(|s| u.show(*s)).collect();
    println!("trail {} of length {}", steps.join(" → "), trail.length);

    print!("{}", d.trail_suite().to_text());
    Ok(())
}
