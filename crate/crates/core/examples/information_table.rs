//! Load the medical diagnostics table, derive relations from it and
//! approximate a decision class.
//!
//! Run with `cargo run --example information_table`.

use roughdep::fixtures;
use roughdep::relation::ApproximationSpace;
use roughdep::table::RaggedPolicy;

fn main() -> roughdep::Result<()> {
    // Row G is one cell short; strict mode refuses the table.
    match fixtures::table1(RaggedPolicy::Strict) {
        Err(e) => println!("strict: {e}"),
        Ok(_) => println!("strict: accepted"),
    }
    let table = fixtures::table1(RaggedPolicy::PadNa)?;
    let u = table.universe()?;
    println!("objects {:?}, attributes {:?}", table.objects, table.attributes);

    let eq = table.indiscernibility(&["Temp.", "H.ache"])?;
    let space = ApproximationSpace::new(eq)?;
    println!("classes on Temp. + H.ache: {}", roughdep::cover::show_family(&u, space.classes()));

    // Patients diagnosed F0.
    let f0 = u.subset_of_labels(["A", "B"])?;
    let a = space.approximations(f0);
    println!("F0: lower {} upper {}", u.show(a.lower), u.show(a.upper));
    for x in 0..u.len() {
        println!("  membership of {} = {}", u.label(x), space.rough_membership(x, f0));
    }

    // NA never matches, so C and G only meet others through their known values.
    let tol = table.tolerance(&["Skin", "Dress"])?;
    for x in 0..u.len() {
        println!("  {} ~ {}", u.label(x), u.show(tol.successors(x)));
    }
    Ok(())
}
