//! Tarski sets, their dual algebras and the Spec round trip.

use roughdep::bridge::powerset_algebra;
use roughdep::cover::show_family;
use roughdep::fixtures;
use roughdep::tarski::{h_r_certificate, DEFAULT_MORPHISM_BUDGET};
use roughdep::Universe;

fn main() -> roughdep::Result<()> {
    let ts = fixtures::f5();
    let u = ts.universe().clone();
    println!("family {}", show_family(&u, ts.family()));
    println!("Δ(X) = {}", show_family(&u, &ts.dual_family()));

    let alg = ts.delta_dual()?;
    println!("axioms hold: {}", alg.axioms_report().passed());
    let xi = ts.xi_map()?;
    println!("ξ bijective onto a Spec of size {}: {}", xi.spec_size, xi.bijective());
    let sigma = alg.sigma_embed()?;
    println!("σ injective {}, image = Δ(Spec) {}", sigma.injective, sigma.image_is_dual);

    let two = powerset_algebra(&Universe::range(2)?)?;
    let maps = two.semi_morphisms(&alg, DEFAULT_MORPHISM_BUDGET)?;
    let homs = maps.iter().filter(|f| two.is_homomorphism(&alg, f)).count();
    println!("semi-morphisms ℘(2) → Δ(X): {} ({} homomorphisms)", maps.len(), homs);

    // h_R for the equivalence of F1 is the lower approximation.
    let f1 = fixtures::f1();
    let rows = f1.relation().rows().to_vec();
    let cert = h_r_certificate(&rows, f1.universe(), f1.universe())?;
    println!("h_R semi-morphism certificate: {}", cert.unwrap_or_else(|| "passes".into()));
    Ok(())
}
