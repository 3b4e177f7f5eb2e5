//! Small named instances bundled with the crate. The same files live in
//! `fixtures/` for use with the command-line tool.

use crate::corpus::CorpusConfig;
use crate::cover::CoverSpace;
use crate::error::Result;
use crate::granular::GranularOperatorSpace;
use crate::io::{self, CoverDoc, GosDoc, PartitionDoc, ProbDoc, TarskiSetDoc, ToleranceDoc};
use crate::prob::FiniteProbSpace;
use crate::relation::ApproximationSpace;
use crate::squeezed::ToleranceSpace;
use crate::table::{InformationTable, RaggedPolicy};
use crate::tarski::TarskiSet;
use crate::universe::DEFAULT_UNIVERSE_CAP;

pub const F1: &str = include_str!("../fixtures/f1.json");
pub const F2: &str = include_str!("../fixtures/f2.json");
pub const F3: &str = include_str!("../fixtures/f3.json");
pub const F4: &str = include_str!("../fixtures/f4.json");
pub const F4W: &str = include_str!("../fixtures/f4w.json");
pub const F5: &str = include_str!("../fixtures/f5.json");
pub const F6: &str = include_str!("../fixtures/f6.json");
pub const G_MONOTONY: &str = include_str!("../fixtures/g-monotony.json");
pub const TABLE1: &str = include_str!("../fixtures/table1.csv");
pub const CORPUS: &str = include_str!("../fixtures/corpus.json");

fn doc<T: serde::de::DeserializeOwned>(text: &str) -> T {
    serde_json::from_str(text).expect("bundled fixture parses")
}

/// Four points, classes `{0,1}` and `{2,3}`.
pub fn f1() -> ApproximationSpace {
    io::partition_from_doc(&doc::<PartitionDoc>(F1), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// `f1` with classical approximations as a granular operator space.
pub fn f1_gos() -> GranularOperatorSpace {
    GranularOperatorSpace::classical(&f1()).expect("classical spaces satisfy the axioms")
}

/// Cover `{0,1}, {1,2}`.
pub fn f2() -> CoverSpace {
    io::cover_from_doc(&doc::<CoverDoc>(F2), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// Cover `{0}, {0,1}, {2}`.
pub fn f3() -> CoverSpace {
    io::cover_from_doc(&doc::<CoverDoc>(F3), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// `f3` with `l1` and `u2+`.
pub fn f3_gos() -> Result<GranularOperatorSpace> {
    GranularOperatorSpace::from_cover(&f3(), crate::cover::UpperKind::U2Plus)
}

/// Four equally likely atoms `a..d`.
pub fn f4() -> FiniteProbSpace {
    io::prob_from_doc(&doc::<ProbDoc>(F4), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// Atoms `a..d` weighted 1/16, 7/16, 4/16, 4/16.
pub fn f4w() -> FiniteProbSpace {
    io::prob_from_doc(&doc::<ProbDoc>(F4W), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// Tarski set on `{0,1,2}` with family `{0,1}, {2}`.
pub fn f5() -> TarskiSet {
    io::tarski_set_from_doc(&doc::<TarskiSetDoc>(F5), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// Path tolerance `0 ∼ 1 ∼ 2`.
pub fn f6() -> ToleranceSpace {
    io::tolerance_from_doc(&doc::<ToleranceDoc>(F6), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// Granules `{0}, {0,1}`: nested granules for the granular-monotony scan.
pub fn g_monotony() -> GranularOperatorSpace {
    io::gos_from_doc(&doc::<GosDoc>(G_MONOTONY), DEFAULT_UNIVERSE_CAP).expect("bundled fixture")
}

/// The medical diagnostics table. Row `G` is short, so strict ingestion fails.
pub fn table1(policy: RaggedPolicy) -> Result<InformationTable> {
    InformationTable::from_csv(TABLE1.as_bytes(), policy)
}

pub fn corpus() -> CorpusConfig {
    CorpusConfig::from_json_str(CORPUS).expect("bundled corpus config")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn fixtures_load() {
        assert_eq!(f1().classes().len(), 2);
        assert_eq!(f1_gos().granules().len(), 2);
        assert_eq!(f2().members().len(), 2);
        assert_eq!(f3().members().len(), 3);
        assert_eq!(f4().event_count(), 16);
        assert_eq!(f4w().weights()[1].to_string(), "7/16");
        assert_eq!(f5().family().len(), 2);
        assert_eq!(f6().blocks().len(), 2);
        assert_eq!(g_monotony().granules().len(), 2);
        assert_eq!(corpus(), CorpusConfig::default());
    }

    #[test]
    fn table1_policies() {
        let e = table1(RaggedPolicy::Strict).unwrap_err();
        assert_eq!(e, Error::RaggedRow { row: "G".into(), found: 5, expected: 7 });
        let t = table1(RaggedPolicy::PadNa).unwrap();
        assert_eq!(t.universe().unwrap().len(), 6);
    }
}
