//! Cover-based upper approximations and when they are closure operators.

use roughdep::cover::{show_family, UpperKind};
use roughdep::fixtures;
use roughdep::report::SuiteConfig;

fn main() -> roughdep::Result<()> {
    for (name, cover) in [("F2", fixtures::f2()), ("F3", fixtures::f3())] {
        let u = cover.universe();
        println!("{name}: members {}", show_family(u, cover.members()));
        let v = cover.is_unary()?;
        println!("  unary: {} (minimal descriptions {}, intersections {})", v.unary, v.by_minimal_descriptions, v.by_intersections);
        for x in u.powerset() {
            let row: Vec<String> = UpperKind::ALL
                .iter()
                .map(|&k| format!("{k}={}", u.show(cover.upper(x, k).expect("proper cover"))))
                .collect();
            println!("  X = {:<8} l1 = {:<8} {}", u.show(x), u.show(cover.lower_l1(x)), row.join(" "));
        }
        for k in UpperKind::CHARACTERIZED {
            let d = cover.closure_diagnostics(k)?;
            println!("  {k}: closure {} side condition {} agree {}", d.closure, d.side_condition, d.agree);
        }
        println!("  chain: {:?}", cover.chain_verdict()?);
        let inclusions = cover.operator_inclusions(&SuiteConfig::default())?;
        println!("  operator inclusions pass: {}", inclusions.passed());
    }
    Ok(())
}
