//! Compare rough dependence with deviant probabilistic dependence.

use roughdep::bridge::{beta_preservation_sweep, shared_property_report};
use roughdep::deviant::DeviancePolicy;
use roughdep::fixtures;
use roughdep::tarski::DEFAULT_MORPHISM_BUDGET;

fn main() -> roughdep::Result<()> {
    let cmp = shared_property_report(&fixtures::f1_gos(), &fixtures::f4(), DeviancePolicy::default())?;
    for law in &cmp.laws {
        println!("{:<26} rough {:<5} prob {:<5} shared {}", law.law, law.rough.holds(), law.prob.holds(), law.shared);
        for (side, w) in law.witnesses().into_iter().take(1) {
            println!("    {side:?} witness: {w}");
        }
    }
    println!("shared: {:?}", cmp.shared);

    let sweep = beta_preservation_sweep(3, 2, DeviancePolicy::default(), DEFAULT_MORPHISM_BUDGET)?;
    print!("{}", sweep.to_text());
    Ok(())
}
