//! Run every corpus sweep from a configuration and summarize.

use roughdep::corpus::CorpusConfig;
use roughdep::report::LawKind;

fn main() -> roughdep::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cfg = CorpusConfig::default().with_seed(seed);
    for rep in roughdep::sweep::run_all(&cfg)? {
        let asserted = rep.checks.iter().filter(|c| c.kind == LawKind::Asserted).count();
        let found = rep.checks.iter().filter(|c| c.found()).count();
        let refuted_claims = rep.checks.iter().filter(|c| c.kind == LawKind::Claim && !c.holds()).count();
        println!(
            "{:<18} {} asserted ({}), {} searches found, {} claims refuted",
            rep.name,
            asserted,
            if rep.passed() { "all hold" } else { "FAILURES" },
            found,
            refuted_claims
        );
    }
    Ok(())
}
