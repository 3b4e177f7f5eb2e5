//! Tolerance blocks, squeezed blocks, definable objects and their operations.

use roughdep::cover::show_family;
use roughdep::fixtures;
use roughdep::squeezed::SqueezedSystem;

fn main() -> roughdep::Result<()> {
    let t = fixtures::f6();
    let s = SqueezedSystem::build(&t)?;
    let u = s.universe().clone();
    println!("blocks {}", show_family(&u, s.blocks()));
    println!("squeezed blocks {}", show_family(&u, s.squeezed_blocks()));
    println!("definable {}", show_family(&u, s.definable()));

    for x in u.powerset() {
        println!(
            "  X = {:<8} l_s {:<8} u_s {:<8} u_sb {}",
            u.show(x),
            u.show(s.lower(x)),
            u.show(s.upper(x)),
            u.show(s.bitten_upper(x))
        );
    }

    let x = u.subset_of_labels(["0", "1"])?;
    let z = u.subset_of_labels(["1", "2"])?;
    println!("{} → {} = {}", u.show(x), u.show(z), u.show(s.arrow(x, z)?));
    println!("{} ⊖ {} = {}", u.show(x), u.show(z), u.show(s.ominus(x, z)?));
    println!("¬{} = {}, ~{} = {}", u.show(x), u.show(s.negation(x)?), u.show(x), u.show(s.co_negation(x)?));

    let pre = s.presqueezed()?;
    println!("presqueezed carrier {} (complement closed: {})", show_family(&u, pre.carrier()), pre.is_complement_closed());
    print!("{}", s.tarski_report()?.to_text());
    Ok(())
}
