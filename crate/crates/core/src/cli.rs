//! Command-line front end: argument types, command dispatch and report output.
//! The binary is a thin wrapper around [`run`] and [`emit`].

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bridge::bridge_report;
use crate::corpus::CorpusConfig;
use crate::cover::{show_family, CoverSpace, UpperKind};
use crate::dependence::{classical_beta_suite, gos_beta_suite, recover_approximations};
use crate::deviant::{DeviancePolicy, DevianceSpace};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::granular::{GammaKind, GranularOperatorSpace};
use crate::io::{read_document, Document};
use crate::prob::{FiniteProbSpace, MAX_IDEAL_ATOMS};
use crate::relation::ApproximationSpace;
use crate::report::{Report, Tally};
use crate::squeezed::{SqueezedSystem, ToleranceSpace, MAX_SQUEEZED_UNIVERSE};
use crate::sweep;
use crate::table::{InformationTable, RaggedPolicy};
use crate::tarski::{FiniteTarskiAlgebra, TarskiSet, MAX_CARRIER};
use crate::universe::DEFAULT_UNIVERSE_CAP;

#[derive(Debug, Parser)]
#[command(name = "roughdep", version, about = "Rough and probabilistic dependence workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Read tables, covers, spaces or algebras and print what they induce.
    Ingest,
    /// Cover approximation operators and their closure characterizations.
    Approx,
    /// Granular operator space checks and rough membership properties.
    Gos,
    /// Rough dependence degrees β_i and β_s.
    Beta,
    /// δ, π/σ and ideal generation on probability spaces.
    Prob,
    /// Deviant dependence π_o/σ_o and dependence trails.
    Deviant,
    /// Tarski algebras, Δ(X) and the Spec round trip.
    Tarski,
    /// Tolerance blocks, squeezed blocks and definable objects.
    Squeeze,
    /// Compare rough and probabilistic dependence.
    Bridge,
    /// Every corpus sweep.
    All,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Self::Ingest => "ingest",
            Self::Approx => "approx",
            Self::Gos => "gos",
            Self::Beta => "beta",
            Self::Prob => "prob",
            Self::Deviant => "deviant",
            Self::Tarski => "tarski",
            Self::Squeeze => "squeeze",
            Self::Bridge => "bridge",
            Self::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// The bundled fixtures, or the `--input` documents.
    #[default]
    Fixtures,
    /// The configured random and exhaustive corpus.
    Corpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Toggle {
    #[default]
    On,
    Off,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Input documents (JSON or CSV); for `all`, a corpus configuration.
    #[arg(long, global = true)]
    pub input: Vec<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub suite: Suite,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_UNIVERSE_CAP)]
    pub max_universe: usize,
    /// Enumeration budget for morphism searches.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Tie-break policy of the deviant choice functions.
    #[arg(long, global = true)]
    pub policy: Option<DeviancePolicy>,
    /// Directory for `<command>.json` and `<command>.txt`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    /// Reject short table rows instead of padding them with NA.
    #[arg(long, global = true, value_enum, default_value_t)]
    pub strict_ingest: Toggle,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            input: Vec::new(),
            suite: Suite::Fixtures,
            seed: 0,
            max_universe: DEFAULT_UNIVERSE_CAP,
            budget: None,
            policy: None,
            out: None,
            format: Format::Text,
            strict_ingest: Toggle::On,
        }
    }
}

impl RunConfig {
    fn ragged(&self) -> RaggedPolicy {
        match self.strict_ingest {
            Toggle::On => RaggedPolicy::Strict,
            Toggle::Off => RaggedPolicy::PadNa,
        }
    }

    /// The corpus configuration with command-line overrides applied.
    pub fn corpus(&self) -> Result<CorpusConfig> {
        let mut cfg = match self.input.as_slice() {
            [path] => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                CorpusConfig::from_json_str(&text).map_err(|e| located(path, e))?
            }
            [] => fixtures::corpus(),
            _ => return Err(usage("`all` takes at most one corpus configuration")),
        }
        .with_seed(self.seed);
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        if let Some(p) = self.policy {
            cfg.policy = p;
        }
        Ok(cfg)
    }
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Malformed { location, message } => Error::Malformed { location: format!("{}: {location}", path.display()), message },
        other => other,
    }
}

fn usage(message: &str) -> Error {
    Error::Malformed { location: "arguments".into(), message: message.into() }
}

/// The reports of one command run, serialized as the JSON contract.
#[derive(Debug, Clone, Serialize)]
pub struct RunOutput {
    pub command: &'static str,
    pub suite: Suite,
    pub seed: u64,
    pub reports: Vec<Report>,
    pub passed: bool,
    /// `report/law` for every refuted asserted law.
    pub failures: Vec<String>,
}

impl RunOutput {
    fn new(command: Command, cfg: &RunConfig, reports: Vec<Report>) -> Self {
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures().into_iter().map(move |c| format!("{}/{}", r.name, c.law)))
            .collect();
        Self { command: command.name(), suite: cfg.suite, seed: cfg.seed, passed: failures.is_empty(), failures, reports }
    }

    /// 0 when every asserted law holds, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain data") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        if self.passed {
            out.push_str("all asserted laws hold\n");
        } else {
            out.push_str(&format!("{} asserted law(s) refuted:\n", self.failures.len()));
            for f in &self.failures {
                out.push_str(&format!("  {f}\n"));
            }
        }
        out
    }
}

impl fmt::Display for RunOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct Named<T> {
    label: String,
    value: T,
}

fn named<T>(label: &str, value: T) -> Named<T> {
    Named { label: label.to_string(), value }
}

fn renamed(mut r: Report, label: &str) -> Report {
    r.name = format!("{label}/{}", r.name);
    r
}

fn load_inputs(cfg: &RunConfig) -> Result<Vec<Named<Document>>> {
    cfg.input
        .iter()
        .map(|p| {
            let label = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| p.display().to_string());
            Ok(Named { label, value: read_document(p, cfg.max_universe, cfg.ragged())? })
        })
        .collect()
}

fn wrong_kind(cmd: Command, label: &str, doc: &Document) -> Error {
    Error::Malformed {
        location: label.to_string(),
        message: format!("`{}` does not accept a {} document", cmd.name(), doc.kind()),
    }
}

/// Runs one command. `Err` is a usage or input error (exit status 1).
pub fn run(command: Command, cfg: &RunConfig) -> Result<RunOutput> {
    let reports = if command == Command::All {
        sweep::run_all(&cfg.corpus()?)?
    } else if cfg.suite == Suite::Corpus {
        if !cfg.input.is_empty() {
            return Err(usage("--suite corpus takes its instances from the corpus configuration, not --input"));
        }
        corpus_command(command, &CorpusConfig::default().with_seed(cfg.seed), cfg)?
    } else {
        fixture_command(command, cfg)?
    };
    Ok(RunOutput::new(command, cfg, reports))
}

fn corpus_command(command: Command, corpus: &CorpusConfig, cfg: &RunConfig) -> Result<Vec<Report>> {
    let mut corpus = corpus.clone();
    if let Some(p) = cfg.policy {
        corpus.policy = p;
    }
    if let Some(b) = cfg.budget {
        corpus.budget = b;
    }
    Ok(match command {
        Command::Ingest => vec![sweep::ingestion_check()],
        Command::Approx => vec![sweep::cover_sweep(&corpus)?],
        Command::Gos => vec![sweep::membership_sweep(&corpus)?],
        Command::Beta => vec![sweep::classical_beta_sweep(&corpus)?],
        Command::Prob => vec![sweep::probability_sweep(&corpus)?, sweep::ideal_sweep(&corpus)?],
        Command::Deviant => vec![sweep::deviance_sweep(&corpus)?],
        Command::Tarski => vec![sweep::tarski_sweep(&corpus)?],
        Command::Squeeze => vec![sweep::squeezed_sweep(&corpus)?],
        Command::Bridge => {
            vec![bridge_report(&fixtures::f1_gos(), &fixtures::f4(), corpus.policy, corpus.budget, &corpus.suite)?]
        }
        Command::All => sweep::run_all(&corpus)?,
    })
}

fn fixture_command(command: Command, cfg: &RunConfig) -> Result<Vec<Report>> {
    let suite = crate::report::SuiteConfig { seed: cfg.seed, ..Default::default() };
    let policy = cfg.policy.unwrap_or_default();
    let budget = cfg.budget.unwrap_or(crate::tarski::DEFAULT_MORPHISM_BUDGET);
    let inputs = load_inputs(cfg)?;
    let given = !inputs.is_empty();
    let mut out = Vec::new();
    match command {
        Command::Ingest => {
            if given {
                for d in &inputs {
                    out.push(ingest_report(&d.label, &d.value));
                }
            } else {
                let t = fixtures::table1(cfg.ragged())?;
                out.push(ingest_report("table1", &Document::Table(t)));
            }
        }
        Command::Approx => {
            let covers = if given {
                inputs
                    .into_iter()
                    .map(|d| match d.value {
                        Document::Cover(c) => Ok(named(&d.label, c)),
                        Document::Partition(p) => Ok(named(&d.label, CoverSpace::new(p.universe().clone(), p.classes().to_vec())?)),
                        other => Err(wrong_kind(command, &d.label, &other)),
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                vec![named("F2", fixtures::f2()), named("F3", fixtures::f3())]
            };
            for c in covers {
                out.push(approx_report(&c.label, &c.value, &suite)?);
            }
        }
        Command::Gos => {
            let spaces = if given { rough_inputs(command, inputs)? } else { default_rough() };
            for g in spaces {
                let mut rep = Report::new(format!("{}/gos", g.label)).param("recipe", g.value.recipe());
                rep.absorb(g.value.validate_admissible());
                rep.fact("rough_objects", g.value.rough_object_census());
                for kind in GammaKind::ALL {
                    let mut r = g.value.omega_property_check(kind, &suite);
                    r.name = format!("{}/{kind}", r.name);
                    rep.absorb(r);
                }
                out.push(rep);
            }
        }
        Command::Beta => {
            if given {
                for d in inputs {
                    match d.value {
                        Document::Partition(p) => out.extend(classical_beta_reports(&d.label, &p, &suite)),
                        other => {
                            let g = rough_inputs(command, vec![Named { label: d.label.clone(), value: other }])?;
                            out.push(renamed(gos_beta_suite(&g[0].value, &suite), &d.label));
                        }
                    }
                }
            } else {
                out.extend(classical_beta_reports("F1", &fixtures::f1(), &suite));
                out.push(renamed(gos_beta_suite(&fixtures::f1_gos(), &suite), "F1"));
                out.push(renamed(gos_beta_suite(&fixtures::f3_gos()?, &suite), "F3"));
            }
        }
        Command::Prob => {
            for p in prob_inputs(command, inputs)? {
                out.push(renamed(p.value.delta_law_suite(&suite), &p.label));
                out.push(renamed(p.value.pi_sigma_law_suite(&suite), &p.label));
                if p.value.atoms().len() <= MAX_IDEAL_ATOMS {
                    out.push(renamed(p.value.supremum_suite()?, &p.label));
                    out.push(ideal_report(&p.label, &p.value)?);
                }
            }
        }
        Command::Deviant => {
            for p in prob_inputs(command, inputs)? {
                let d = DevianceSpace::new(&p.value, policy);
                out.push(renamed(d.law_suite(&suite), &p.label));
                out.push(renamed(d.trail_suite(), &p.label));
            }
        }
        Command::Tarski => {
            if given {
                for d in inputs {
                    match d.value {
                        Document::TarskiSet(t) => out.push(tarski_set_report(&d.label, &t)?),
                        Document::Algebra(a) => out.push(algebra_report(&d.label, &a, budget)?),
                        other => return Err(wrong_kind(command, &d.label, &other)),
                    }
                }
            } else {
                out.push(tarski_set_report("F5", &fixtures::f5())?);
            }
        }
        Command::Squeeze => {
            let tols = if given {
                inputs
                    .into_iter()
                    .map(|d| match d.value {
                        Document::Tolerance(t) => Ok(named(&d.label, t)),
                        Document::Partition(p) => Ok(named(&d.label, ToleranceSpace::from_equivalence(&p))),
                        other => Err(wrong_kind(command, &d.label, &other)),
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                vec![named("F6", fixtures::f6())]
            };
            for t in tols {
                out.push(squeeze_report(&t.label, &t.value, &suite)?);
            }
        }
        Command::Bridge => {
            let (rough, prob) = if given {
                let mut rough = None;
                let mut prob = None;
                for d in inputs {
                    match d.value {
                        Document::Prob(p) if prob.is_none() => prob = Some(p),
                        other if rough.is_none() => {
                            rough = Some(rough_inputs(command, vec![Named { label: d.label, value: other }])?.remove(0).value)
                        }
                        other => return Err(wrong_kind(command, &d.label, &other)),
                    }
                }
                match (rough, prob) {
                    (Some(r), Some(p)) => (r, p),
                    _ => return Err(usage("`bridge` needs one rough document and one probability space")),
                }
            } else {
                (fixtures::f1_gos(), fixtures::f4())
            };
            out.push(bridge_report(&rough, &prob, policy, budget, &suite)?);
        }
        Command::All => unreachable!("handled by run"),
    }
    Ok(out)
}

fn default_rough() -> Vec<Named<GranularOperatorSpace>> {
    vec![named("F1", fixtures::f1_gos()), named("nested", fixtures::g_monotony())]
}

/// Partitions become classical spaces, covers use `l1` with `u2+`.
fn rough_inputs(command: Command, inputs: Vec<Named<Document>>) -> Result<Vec<Named<GranularOperatorSpace>>> {
    inputs
        .into_iter()
        .map(|d| {
            let g = match &d.value {
                Document::Gos(doc) => doc.build(DEFAULT_UNIVERSE_CAP)?,
                Document::Partition(p) => GranularOperatorSpace::classical(p)?,
                Document::Cover(c) => GranularOperatorSpace::from_cover(c, UpperKind::U2Plus)?,
                Document::Tolerance(t) => SqueezedSystem::build(t)?.granular_space()?,
                other => return Err(wrong_kind(command, &d.label, other)),
            };
            Ok(Named { label: d.label, value: g })
        })
        .collect()
}

fn prob_inputs(command: Command, inputs: Vec<Named<Document>>) -> Result<Vec<Named<FiniteProbSpace>>> {
    if inputs.is_empty() {
        return Ok(vec![named("F4", fixtures::f4()), named("F4w", fixtures::f4w())]);
    }
    inputs
        .into_iter()
        .map(|d| match d.value {
            Document::Prob(p) => Ok(named(&d.label, p)),
            other => Err(wrong_kind(command, &d.label, &other)),
        })
        .collect()
}

fn classical_beta_reports(label: &str, sp: &ApproximationSpace, suite: &crate::report::SuiteConfig) -> Vec<Report> {
    let mut rep = renamed(classical_beta_suite(sp, suite), label);
    let rec = recover_approximations(sp);
    let mut lower = Tally::asserted("l recovered as β(x, x)");
    lower.check(rec.lower_matches, || rec.mismatches.join("; "));
    let mut upper = Tally::asserted("u recovered as β(x^c, x^c)^c");
    upper.check(rec.upper_matches, || rec.mismatches.join("; "));
    rep.push(lower.finish(true));
    rep.push(upper.finish(true));
    vec![rep]
}

fn ingest_report(label: &str, doc: &Document) -> Report {
    let mut rep = Report::new(format!("{label}/ingest")).param("kind", doc.kind());
    match doc {
        Document::Table(t) => table_facts(&mut rep, t),
        Document::Cover(c) => {
            rep.fact("members", show_family(c.universe(), c.members()));
            rep.fact("proper", c.is_proper());
            rep.fact("reduct", show_family(c.universe(), c.reduct().members()));
            if let Ok(v) = c.is_unary() {
                rep.fact("unary", v.unary);
            }
        }
        Document::Partition(p) => rep.fact("classes", show_family(p.universe(), p.classes())),
        Document::Tolerance(t) => rep.fact("blocks", show_family(t.universe(), &t.blocks())),
        Document::Prob(p) => {
            rep.fact("atoms", show_family(p.universe(), p.atoms()));
            rep.fact("weights", p.weights().iter().map(ToString::to_string).collect::<Vec<_>>());
        }
        Document::Gos(g) => {
            rep.fact("recipe", &g.0.recipe);
            rep.fact("granules", &g.0.granules);
        }
        Document::TarskiSet(t) => {
            rep.fact("family", show_family(t.universe(), t.family()));
            rep.fact("dense", t.is_dense());
        }
        Document::Algebra(a) => {
            rep.fact("elements", a.labels());
            rep.absorb(a.axioms_report());
        }
    }
    rep
}

fn table_facts(rep: &mut Report, t: &InformationTable) {
    rep.fact("objects", &t.objects);
    rep.fact("attributes", &t.attributes);
    rep.fact("deterministic", t.is_deterministic());
    let u = match t.universe() {
        Ok(u) => u,
        Err(e) => {
            rep.fact("error", e.to_string());
            return;
        }
    };
    if let Ok(r) = t.indiscernibility(&t.attributes) {
        if let Ok(classes) = r.classes() {
            rep.fact("indiscernibility_classes", show_family(&u, &classes));
        }
    }
    if let Ok(r) = t.tolerance(&t.attributes) {
        let rows: Vec<String> = (0..u.len()).map(|x| format!("{}: {}", u.label(x), u.show(r.successors(x)))).collect();
        rep.fact("tolerance_neighbourhoods", rows);
    }
}

fn approx_report(label: &str, c: &CoverSpace, suite: &crate::report::SuiteConfig) -> Result<Report> {
    let mut rep = Report::new(format!("{label}/approx")).param("members", show_family(c.universe(), c.members()));
    if c.is_proper() {
        let mut agree = Tally::asserted("side condition ⇔ closure");
        for kind in UpperKind::ALL {
            let d = c.closure_diagnostics(kind)?;
            if UpperKind::CHARACTERIZED.contains(&kind) {
                agree.check(d.agree, || format!("{kind}: {}", d.witnesses.join("; ")));
            }
            rep.fact(&format!("{kind}"), d);
        }
        rep.push(agree.finish(true));
        rep.fact("closure_chain", c.chain_verdict()?);
        rep.absorb(c.unary_characterizations()?);
        rep.absorb(c.operator_inclusions(suite)?);
    } else {
        rep.fact("proper", false);
    }
    Ok(rep)
}

fn ideal_report(label: &str, sp: &FiniteProbSpace) -> Result<Report> {
    let mut rep = Report::new(format!("{label}/ideals"));
    let u = sp.universe();
    let mut generated = Vec::new();
    for x in sp.events() {
        let g = sp.ideal_generated(&[x])?;
        let shown = match g.ideal() {
            Some(k) => show_family(u, k),
            None => format!("none (clause {} fails)", g.verdict.failed_clause.unwrap_or(0)),
        };
        generated.push(format!("⟨{}⟩ = {shown}", u.show(x)));
    }
    rep.fact("generated_by_one_event", generated);
    Ok(rep)
}

fn tarski_set_report(label: &str, t: &TarskiSet) -> Result<Report> {
    let alg = t.delta_dual()?;
    let mut rep = Report::new(format!("{label}/tarski")).param("family", show_family(t.universe(), t.family()));
    rep.fact("dual_family", show_family(t.universe(), &t.dual_family()));
    rep.absorb(alg.axioms_report());
    let mut xi = Tally::asserted("ξ_X is a bijection onto Spec(Δ(X))");
    let map = t.xi_map()?;
    xi.check(map.bijective(), || format!("{map:?}"));
    rep.push(xi.finish(true));
    if alg.len() >= 2 {
        round_trip(&mut rep, &alg)?;
    }
    Ok(rep)
}

fn round_trip(rep: &mut Report, alg: &FiniteTarskiAlgebra) -> Result<()> {
    let e = alg.sigma_embed()?;
    let mut sigma = Tally::asserted("σ(S) = Δ(Spec(S))");
    sigma.check(e.image_is_dual, || format!("{:?}", e.image));
    let mut hom = Tally::asserted("σ is an injective ·-homomorphism");
    hom.check(e.injective && e.preserves_implication, || format!("{:?}", e.image));
    rep.push(sigma.finish(true));
    rep.push(hom.finish(true));
    rep.fact("spec", alg.spec());
    Ok(())
}

fn algebra_report(label: &str, a: &FiniteTarskiAlgebra, budget: u128) -> Result<Report> {
    let mut rep = Report::new(format!("{label}/tarski")).param("elements", a.len());
    rep.absorb(a.axioms_report());
    if rep.passed() && a.len() >= 2 {
        rep.absorb(a.order_report());
        round_trip(&mut rep, a)?;
        rep.fact("endo_semi_morphisms", a.semi_morphisms(a, budget)?.len());
    }
    Ok(rep)
}

fn squeeze_report(label: &str, t: &ToleranceSpace, suite: &crate::report::SuiteConfig) -> Result<Report> {
    if t.universe().len() > MAX_SQUEEZED_UNIVERSE {
        return Err(Error::UniverseTooLarge { size: t.universe().len(), cap: MAX_SQUEEZED_UNIVERSE });
    }
    let s = SqueezedSystem::build(t)?;
    let u = s.universe();
    let mut rep = Report::new(format!("{label}/squeeze"));
    rep.fact("blocks", show_family(u, s.blocks()));
    rep.fact("squeezed_blocks", show_family(u, s.squeezed_blocks()));
    rep.fact("definable", show_family(u, s.definable()));
    rep.absorb(s.structure_report(t));
    rep.absorb(s.modal_law_suite(suite));
    rep.absorb(s.heyting_suite());
    rep.absorb(s.tarski_report()?);
    let pre = s.presqueezed()?;
    if pre.carrier().len() <= MAX_CARRIER {
        rep.absorb(pre.axioms_report());
    }
    Ok(rep)
}

/// Prints the run in the chosen format and writes `<command>.json` and
/// `<command>.txt` when `--out` is set.
pub fn emit(output: &RunOutput, cfg: &RunConfig) -> Result<String> {
    if let Some(dir) = &cfg.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{}.json", output.command)), output.to_json())?;
        std::fs::write(dir.join(format!("{}.txt", output.command)), output.to_text())?;
    }
    Ok(match cfg.format {
        Format::Json => output.to_json(),
        Format::Text => output.to_text(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn every_fixture_command_passes() {
        for cmd in [Command::Approx, Command::Gos, Command::Beta, Command::Prob, Command::Deviant, Command::Tarski, Command::Squeeze] {
            let out = run(cmd, &cfg()).unwrap();
            assert!(out.passed, "{}: {:?}", cmd.name(), out.failures);
        }
    }

    #[test]
    fn strict_ingest_names_row_g() {
        let e = run(Command::Ingest, &cfg()).unwrap_err();
        assert!(e.to_string().contains("`G`"), "{e}");
        let padded = RunConfig { strict_ingest: Toggle::Off, ..cfg() };
        assert!(run(Command::Ingest, &padded).unwrap().passed);
    }

    #[test]
    fn parses_flags() {
        let cli = Cli::try_parse_from(["roughdep", "prob", "--seed", "3", "--policy", "p-lex", "--format", "json", "--strict-ingest", "off"]).unwrap();
        assert_eq!(cli.command, Command::Prob);
        assert_eq!(cli.config.seed, 3);
        assert_eq!(cli.config.policy, Some(DeviancePolicy::ProbLex));
        assert_eq!(cli.config.format, Format::Json);
        assert_eq!(cli.config.strict_ingest, Toggle::Off);
        assert!(Cli::try_parse_from(["roughdep", "prob", "--policy", "nope"]).is_err());
    }
}
