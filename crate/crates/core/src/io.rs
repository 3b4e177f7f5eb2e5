//! JSON input documents. Every document carries its universe as a label list
//! and names elements by label.

use serde::{Deserialize, Serialize};

use crate::cover::{CoverSpace, UpperKind};
use crate::error::{Error, Result};
use crate::granular::GranularOperatorSpace;
use crate::prob::FiniteProbSpace;
use crate::relation::ApproximationSpace;
use crate::squeezed::{SqueezedSystem, ToleranceSpace};
use crate::table::{InformationTable, RaggedPolicy};
use crate::tarski::{FiniteTarskiAlgebra, TarskiSet};
use crate::universe::{Subset, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    pub universe: Vec<String>,
    pub members: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionDoc {
    pub universe: Vec<String>,
    pub classes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceDoc {
    pub universe: Vec<String>,
    /// Undirected pairs; reflexive pairs are implicit.
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbDoc {
    pub universe: Vec<String>,
    pub atoms: Vec<Vec<String>>,
    /// Exact rationals such as `"1/4"`; decimals are rejected.
    pub weights: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GosDoc {
    pub universe: Vec<String>,
    pub granules: Vec<Vec<String>>,
    /// `classical`, `l1` followed by an upper kind (`l1u1`, `l1u2+`, …),
    /// `l_s/u_sb`, or `explicit`.
    pub recipe: String,
    /// For `explicit`: operator values indexed by subset mask.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<Vec<String>>>,
    /// For `l_s/u_sb`: the tolerance pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TarskiSetDoc {
    pub universe: Vec<String>,
    pub family: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub labels: Vec<String>,
    /// Row-major: `table[a][b]` is the label of `a·b`.
    pub table: Vec<Vec<String>>,
    pub unit: String,
}

/// Any accepted input, recognized by its field names.
#[derive(Debug, Clone)]
pub enum Document {
    Table(InformationTable),
    Cover(CoverSpace),
    Partition(ApproximationSpace),
    Tolerance(ToleranceSpace),
    Prob(FiniteProbSpace),
    Gos(GranularOperatorSpaceDoc),
    TarskiSet(TarskiSet),
    Algebra(FiniteTarskiAlgebra),
}

/// A parsed GOS document; the space itself is not `PartialEq`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GranularOperatorSpaceDoc(pub GosDoc);

impl GranularOperatorSpaceDoc {
    pub fn build(&self, cap: usize) -> Result<GranularOperatorSpace> {
        gos_from_doc(&self.0, cap)
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Table(_) => "table",
            Self::Cover(_) => "cover",
            Self::Partition(_) => "partition",
            Self::Tolerance(_) => "tolerance",
            Self::Prob(_) => "probability space",
            Self::Gos(_) => "granular operator space",
            Self::TarskiSet(_) => "Tarski set",
            Self::Algebra(_) => "algebra",
        }
    }
}

fn universe(labels: &[String], cap: usize) -> Result<Universe> {
    Universe::with_cap(labels.iter().cloned(), cap)
}

fn family(u: &Universe, sets: &[Vec<String>]) -> Result<Vec<Subset>> {
    sets.iter().map(|s| u.subset_of_labels(s.iter())).collect()
}

fn pairs(u: &Universe, ps: &[(String, String)]) -> Result<Vec<(usize, usize)>> {
    ps.iter().map(|(a, b)| Ok((u.index_of(a)?, u.index_of(b)?))).collect()
}

pub fn cover_from_doc(d: &CoverDoc, cap: usize) -> Result<CoverSpace> {
    let u = universe(&d.universe, cap)?;
    let members = family(&u, &d.members)?;
    CoverSpace::new(u, members)
}

pub fn partition_from_doc(d: &PartitionDoc, cap: usize) -> Result<ApproximationSpace> {
    let u = universe(&d.universe, cap)?;
    let classes = family(&u, &d.classes)?;
    ApproximationSpace::from_partition(u, &classes)
}

pub fn tolerance_from_doc(d: &ToleranceDoc, cap: usize) -> Result<ToleranceSpace> {
    let u = universe(&d.universe, cap)?;
    let ps = pairs(&u, &d.pairs)?;
    ToleranceSpace::from_pairs(u, ps)
}

pub fn prob_from_doc(d: &ProbDoc, cap: usize) -> Result<FiniteProbSpace> {
    let u = universe(&d.universe, cap)?;
    let atoms = family(&u, &d.atoms)?;
    FiniteProbSpace::from_strs(u, atoms, &d.weights)
}

pub fn tarski_set_from_doc(d: &TarskiSetDoc, cap: usize) -> Result<TarskiSet> {
    let u = universe(&d.universe, cap)?;
    let fam = family(&u, &d.family)?;
    TarskiSet::new(u, fam)
}

pub fn algebra_from_doc(d: &AlgebraDoc) -> Result<FiniteTarskiAlgebra> {
    let n = d.labels.len();
    let pos = |l: &str| {
        d.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };
    if d.table.len() != n || d.table.iter().any(|r| r.len() != n) {
        let found = d.table.iter().map(Vec::len).sum();
        return Err(Error::PartialTable { expected: n * n, found });
    }
    let table = d.table.iter().flatten().map(|l| pos(l)).collect::<Result<Vec<_>>>()?;
    FiniteTarskiAlgebra::new(d.labels.clone(), table, pos(&d.unit)?)
}

pub fn gos_from_doc(d: &GosDoc, cap: usize) -> Result<GranularOperatorSpace> {
    let u = universe(&d.universe, cap)?;
    let granules = family(&u, &d.granules)?;
    match d.recipe.as_str() {
        "classical" => GranularOperatorSpace::classical(&ApproximationSpace::from_partition(u, &granules)?),
        "explicit" => {
            let missing = || Error::Malformed { location: "recipe".into(), message: "explicit recipe needs lower and upper tables".into() };
            let lower = family(&u, d.lower.as_ref().ok_or_else(missing)?)?;
            let upper = family(&u, d.upper.as_ref().ok_or_else(missing)?)?;
            GranularOperatorSpace::from_tables(u, granules, lower, upper)
        }
        "l_s/u_sb" => {
            let ps = d.pairs.as_ref().ok_or_else(|| Error::Malformed {
                location: "recipe".into(),
                message: "l_s/u_sb recipe needs the tolerance pairs".into(),
            })?;
            let ps = pairs(&u, ps)?;
            SqueezedSystem::build(&ToleranceSpace::from_pairs(u, ps)?)?.granular_space()
        }
        r => match r.strip_prefix("l1") {
            Some(kind) => GranularOperatorSpace::from_cover(&CoverSpace::new(u, granules)?, kind.parse::<UpperKind>()?),
            None => Err(Error::Malformed { location: "recipe".into(), message: format!("unknown recipe `{r}`") }),
        },
    }
}

fn has(v: &serde_json::Value, key: &str) -> bool {
    v.get(key).is_some()
}

/// Parses a JSON document, recognizing its kind by field names. Field errors
/// carry the line and column of the original text.
pub fn parse_json(text: &str, cap: usize, policy: RaggedPolicy) -> Result<Document> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    if !v.is_object() {
        return Err(Error::Malformed { location: "document".into(), message: "expected a JSON object".into() });
    }
    Ok(if has(&v, "objects") {
        let t = InformationTable::from_json_str(text, policy)?;
        t.universe_with_cap(cap)?;
        Document::Table(t)
    } else if has(&v, "weights") {
        Document::Prob(prob_from_doc(&serde_json::from_str(text)?, cap)?)
    } else if has(&v, "recipe") {
        let d: GosDoc = serde_json::from_str(text)?;
        gos_from_doc(&d, cap)?;
        Document::Gos(GranularOperatorSpaceDoc(d))
    } else if has(&v, "members") {
        Document::Cover(cover_from_doc(&serde_json::from_str(text)?, cap)?)
    } else if has(&v, "classes") {
        Document::Partition(partition_from_doc(&serde_json::from_str(text)?, cap)?)
    } else if has(&v, "pairs") {
        Document::Tolerance(tolerance_from_doc(&serde_json::from_str(text)?, cap)?)
    } else if has(&v, "family") {
        Document::TarskiSet(tarski_set_from_doc(&serde_json::from_str(text)?, cap)?)
    } else if has(&v, "table") {
        Document::Algebra(algebra_from_doc(&serde_json::from_str(text)?)?)
    } else {
        return Err(Error::Malformed {
            location: "document".into(),
            message: "unrecognized document: expected one of objects, weights, recipe, members, classes, pairs, family, table".into(),
        });
    })
}

/// Reads a file: `.csv` as an information table, anything else as JSON.
pub fn read_document(path: &std::path::Path, cap: usize, policy: RaggedPolicy) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let located = |e: Error| match e {
        Error::Malformed { location, message } => {
            Error::Malformed { location: format!("{}: {location}", path.display()), message }
        }
        other => other,
    };
    if is_csv {
        let t = InformationTable::from_csv(text.as_bytes(), policy).map_err(located)?;
        t.universe_with_cap(cap)?;
        Ok(Document::Table(t))
    } else {
        parse_json(&text, cap, policy).map_err(located)
    }
}
