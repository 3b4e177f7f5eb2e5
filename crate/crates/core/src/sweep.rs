//! Corpus sweeps: run a suite on every instance of a corpus and merge the
//! per-law results into one report.

use std::collections::BTreeSet;

use crate::bridge::bridge_report;
use crate::corpus::CorpusConfig;
use crate::cover::UpperKind;
use crate::dependence::{classical_beta_suite, recover_approximations};
use crate::deviant::DevianceSpace;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::granular::GammaKind;
use crate::prob::FiniteProbSpace;
use crate::report::{LawCheck, LawKind, Report, Tally};
use crate::squeezed::SqueezedSystem;
use crate::table::RaggedPolicy;
use crate::universe::Subset;

/// Merges checks by law name, keeping first-seen order. A merged check is
/// exhaustive only if every contribution was.
#[derive(Debug, Default)]
pub struct Merger {
    laws: Vec<(String, LawKind, Tally, bool, Option<String>)>,
}

impl Merger {
    pub fn add(&mut self, c: &LawCheck) {
        match self.laws.iter_mut().find(|(law, ..)| *law == c.law) {
            Some((_, _, t, exh, _)) => {
                t.merge(c);
                *exh &= c.exhaustive;
            }
            None => {
                let mut t = Tally::new(c.law.clone(), c.kind);
                t.merge(c);
                self.laws.push((c.law.clone(), c.kind, t, c.exhaustive, c.note.clone()));
            }
        }
    }

    pub fn add_report(&mut self, r: &Report) {
        for c in &r.checks {
            self.add(c);
        }
    }

    /// Appends the merged checks to `rep`.
    pub fn finish_into(self, rep: &mut Report) {
        for (_, _, t, exh, note) in self.laws {
            let mut c = t.finish(exh);
            c.note = note;
            rep.push(c);
        }
    }
}

/// Classical β identities and the β-representation of `l` and `u` over every equivalence.
pub fn classical_beta_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let spaces = cfg.equivalences()?;
    let mut m = Merger::default();
    let mut lower = Tally::asserted("l recovered as β(x, x)");
    let mut upper = Tally::asserted("u recovered as β(x^c, x^c)^c");
    for sp in &spaces {
        m.add_report(&classical_beta_suite(sp, &cfg.suite));
        let rec = recover_approximations(sp);
        let classes = || crate::cover::show_family(sp.universe(), sp.classes());
        lower.check(rec.lower_matches, || format!("{}: {}", classes(), rec.mismatches.join("; ")));
        upper.check(rec.upper_matches, || format!("{}: {}", classes(), rec.mismatches.join("; ")));
    }
    let mut rep = Report::new("classical-beta").param("instances", spaces.len());
    m.finish_into(&mut rep);
    rep.push(lower.finish(true));
    rep.push(upper.finish(true));
    Ok(rep)
}

fn named_prob_spaces(cfg: &CorpusConfig) -> Result<Vec<(String, FiniteProbSpace)>> {
    let mut out = vec![("F4".to_string(), fixtures::f4()), ("F4w".to_string(), fixtures::f4w())];
    for (i, sp) in cfg.prob_spaces()?.into_iter().enumerate() {
        out.push((format!("random-{i}"), sp));
    }
    Ok(out)
}

/// δ laws, π/σ laws and the π-supremum scan over F4, F4w and the random spaces.
pub fn probability_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let spaces = named_prob_spaces(cfg)?;
    let (mut delta, mut pisig, mut sup) = (Merger::default(), Merger::default(), Merger::default());
    for (_, sp) in &spaces {
        delta.add_report(&sp.delta_law_suite(&cfg.suite));
        pisig.add_report(&sp.pi_sigma_law_suite(&cfg.suite));
        sup.add_report(&sp.supremum_suite()?);
    }
    let mut rep = Report::new("probability").param("instances", spaces.len());
    for (name, m) in [("delta", delta), ("pi-sigma", pisig), ("pi-supremum", sup)] {
        let mut r = Report::new(name);
        m.finish_into(&mut r);
        rep.absorb(r);
    }
    Ok(rep)
}

/// Ideal generation against a scan of every event family, for every nonempty generator set.
pub fn ideal_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let spaces = cfg.ideal_spaces()?;
    let mut contains = Tally::asserted("fixed point contains the generators");
    let mut least = Tally::asserted("generated ideal is the least π-ideal containing B");
    let mut none = Tally::asserted("nonexistence reported only when no π-ideal contains B");
    let mut missing = Tally::search("generator set with no π-ideal");
    for sp in &spaces {
        let events = sp.events();
        let n = events.len();
        if n > 16 {
            return Err(Error::BudgetExceeded { required: 1 << n, budget: 1 << 16 });
        }
        let family = |mask: u32| -> Vec<Subset> { (0..n).filter(|i| mask >> i & 1 == 1).map(|i| events[i]).collect() };
        let mut ideals = Vec::new();
        for k in 1u32..1 << n {
            if sp.is_pi_ideal(&family(k))?.holds {
                ideals.push(k);
            }
        }
        for b in 1u32..1 << n {
            let gens = family(b);
            let show = || format!("{:?} in {} atoms", gens, sp.atoms().len());
            let g = sp.ideal_generated(&gens)?;
            let fixed: BTreeSet<Subset> = g.fixed_point.iter().copied().collect();
            contains.check(gens.iter().all(|x| fixed.contains(x)), show);
            let containing: Vec<u32> = ideals.iter().copied().filter(|&k| k & b == b).collect();
            let least_mask = containing.iter().copied().find(|&k| containing.iter().all(|&j| j & k == k));
            match g.ideal() {
                Some(ideal) => {
                    let mask = ideal.iter().map(|x| 1u32 << events.iter().position(|e| e == x).expect("event")).fold(0, |a, b| a | b);
                    least.check(Some(mask) == least_mask, show);
                    missing.miss();
                }
                None => {
                    none.check(containing.is_empty(), show);
                    missing.hit(show);
                }
            }
        }
    }
    let mut rep = Report::new("ideal-generation").param("instances", spaces.len());
    for t in [contains, least, none] {
        rep.push(t.finish(true));
    }
    rep.push(missing.finish(true));
    Ok(rep)
}

/// Deviance laws and dependence trails on F4 and F4w.
pub fn deviance_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let mut rep = Report::new("deviance").param("policy", cfg.policy);
    for (name, sp) in [("F4", fixtures::f4()), ("F4w", fixtures::f4w())] {
        let d = DevianceSpace::new(&sp, cfg.policy);
        let mut r = d.law_suite(&cfg.suite);
        r.name = format!("{name}/laws");
        rep.absorb(r);
        let mut t = d.trail_suite();
        t.name = format!("{name}/trails");
        rep.absorb(t);
    }
    Ok(rep)
}

/// `Δ(X)` axioms, `ξ_X` and the `σ` round trip for every Tarski set of the corpus.
pub fn tarski_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let sets = cfg.tarski_sets()?;
    let mut m = Merger::default();
    let mut xi = Tally::asserted("ξ_X is a bijection onto Spec(Δ(X))");
    let mut sigma = Tally::asserted("σ(Δ(X)) = Δ(Spec(Δ(X)))");
    let mut sigma_hom = Tally::asserted("σ is an injective ·-homomorphism");
    let mut spec = Tally::asserted("coatom filters are exactly the maximal filters");
    for ts in &sets {
        let w = || crate::cover::show_family(ts.universe(), ts.family());
        let alg = ts.delta_dual()?;
        m.add_report(&alg.axioms_report());
        xi.check(ts.xi_map()?.bijective(), w);
        spec.check(alg.spec().agree, w);
        if alg.len() >= 2 {
            let e = alg.sigma_embed()?;
            sigma.check(e.image_is_dual, w);
            sigma_hom.check(e.injective && e.preserves_implication, w);
        }
    }
    let mut rep = Report::new("tarski-duality").param("instances", sets.len());
    m.finish_into(&mut rep);
    for t in [xi, sigma, sigma_hom, spec] {
        rep.push(t.finish(true));
    }
    Ok(rep)
}

/// Side condition versus direct closure test, and the closure chain, over every corpus cover.
pub fn cover_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let covers = cfg.covers()?;
    let mut agree: Vec<Tally> =
        UpperKind::CHARACTERIZED.iter().map(|k| Tally::asserted(format!("{k}: side condition ⇔ closure"))).collect();
    let mut chain_a = Tally::asserted("u4+ closure ⇒ u1 closure");
    let mut chain_b = Tally::asserted("u1 closure ⇒ u3+ closure");
    let mut rev_a = Tally::search("u1 closure without u4+ closure");
    let mut rev_b = Tally::search("u3+ closure without u1 closure");
    for c in &covers {
        let w = || crate::cover::show_family(c.universe(), c.members());
        for (t, &k) in agree.iter_mut().zip(UpperKind::CHARACTERIZED.iter()) {
            let d = c.closure_diagnostics(k)?;
            t.check(d.agree, || format!("{}: {}", w(), d.witnesses.join("; ")));
        }
        let v = c.chain_verdict()?;
        chain_a.check(!v.u4_plus || v.u1, w);
        chain_b.check(!v.u1 || v.u3_plus, w);
        rev_a.check(!(v.u1 && !v.u4_plus), w);
        rev_b.check(!(v.u3_plus && !v.u1), w);
    }
    let mut rep = Report::new("cover-closure").param("instances", covers.len());
    for t in agree {
        rep.push(t.finish(false));
    }
    for t in [chain_a, chain_b, rev_a, rev_b] {
        rep.push(t.finish(false));
    }
    Ok(rep)
}

/// Every squeezed-semantics suite over the random tolerances.
pub fn squeezed_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let tols = cfg.tolerances()?;
    let mut m = Merger::default();
    let mut pre = Merger::default();
    let mut max_carrier = 0;
    for t in &tols {
        let s = SqueezedSystem::build(t)?;
        m.add_report(&s.structure_report(t));
        m.add_report(&s.modal_law_suite(&cfg.suite));
        m.add_report(&s.heyting_suite());
        m.add_report(&s.tarski_report()?);
        let p = s.presqueezed()?;
        max_carrier = max_carrier.max(p.carrier().len());
        pre.add_report(&p.axioms_report());
    }
    let mut rep = Report::new("squeezed").param("instances", tols.len());
    m.finish_into(&mut rep);
    let mut p = Report::new("presqueezed");
    pre.finish_into(&mut p);
    rep.absorb(p);
    rep.fact("largest_presqueezed_carrier", max_carrier);
    Ok(rep)
}

/// The granular rough-membership properties on F1 and on nested granules, every γ kind.
pub fn membership_sweep(cfg: &CorpusConfig) -> Result<Report> {
    let mut rep = Report::new("rough-membership");
    for (name, g) in [("F1", fixtures::f1_gos()), ("nested", fixtures::g_monotony())] {
        for kind in GammaKind::ALL {
            let mut r = g.omega_property_check(kind, &cfg.suite);
            r.name = format!("{name}/{kind}");
            rep.absorb(r);
        }
    }
    Ok(rep)
}

/// The symptom table fixture under both ragged-row policies.
pub fn ingestion_check() -> Report {
    let mut strict = Tally::asserted("strict ingestion rejects the short row G");
    let mut pad = Tally::asserted("pad-NA ingestion accepts every row");
    let s = fixtures::table1(RaggedPolicy::Strict);
    strict.check(matches!(&s, Err(Error::RaggedRow { row, .. }) if row == "G"), || format!("{s:?}"));
    let p = fixtures::table1(RaggedPolicy::PadNa);
    pad.check(p.as_ref().is_ok_and(|t| t.universe().is_ok_and(|u| u.len() == 6)), || format!("{:?}", p.as_ref().err()));
    let mut rep = Report::new("table-ingestion");
    rep.push(strict.finish(true));
    rep.push(pad.finish(true));
    rep
}

/// Every sweep, in a fixed order.
pub fn run_all(cfg: &CorpusConfig) -> Result<Vec<Report>> {
    let f1 = fixtures::f1_gos();
    let f4 = fixtures::f4();
    Ok(vec![
        ingestion_check(),
        classical_beta_sweep(cfg)?,
        probability_sweep(cfg)?,
        ideal_sweep(cfg)?,
        deviance_sweep(cfg)?,
        tarski_sweep(cfg)?,
        cover_sweep(cfg)?,
        squeezed_sweep(cfg)?,
        bridge_report(&f1, &f4, cfg.policy, cfg.budget, &cfg.suite)?,
        membership_sweep(cfg)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merger_sums_and_keeps_order() {
        let mut a = Tally::asserted("x");
        a.check(true, String::new);
        let mut b = Tally::search("y");
        b.hit(|| "w".into());
        let mut m = Merger::default();
        m.add(&a.clone().finish(true));
        m.add(&b.finish(false));
        m.add(&a.finish(true));
        let mut rep = Report::new("r");
        m.finish_into(&mut rep);
        assert_eq!(rep.checks.len(), 2);
        assert_eq!(rep.checks[0].law, "x");
        assert_eq!(rep.checks[0].checked, 2);
        assert!(rep.checks[0].exhaustive);
        assert!(rep.checks[1].found() && !rep.checks[1].exhaustive);
    }

    #[test]
    fn ingestion_contract() {
        assert!(ingestion_check().passed());
    }
}
