//! Information tables and the relations derived from them.
//!
//! Cells hold finite value sets. An empty set is a missing value (NA). In CSV
//! form a cell `v1|v2` is the set `{v1, v2}` and an empty cell is NA.

use std::collections::BTreeSet;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::BinaryRelation;
use crate::universe::{Subset, Universe, DEFAULT_UNIVERSE_CAP};

pub type Cell = BTreeSet<String>;

/// What to do with a row that has fewer cells than there are attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RaggedPolicy {
    /// Reject the table, naming the short row.
    #[default]
    Strict,
    /// Fill the missing trailing cells with NA.
    PadNa,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InformationTable {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl InformationTable {
    pub fn new(objects: Vec<String>, attributes: Vec<String>, rows: Vec<Vec<Cell>>, policy: RaggedPolicy) -> Result<Self> {
        if objects.len() != rows.len() {
            return Err(Error::Malformed {
                location: "rows".into(),
                message: format!("{} objects but {} rows", objects.len(), rows.len()),
            });
        }
        let mut seen = BTreeSet::new();
        for a in &attributes {
            if !seen.insert(a) {
                return Err(Error::Malformed { location: "header".into(), message: format!("duplicate attribute `{a}`") });
            }
        }
        let width = attributes.len();
        let mut padded = Vec::with_capacity(rows.len());
        for (name, mut row) in objects.iter().zip(rows) {
            let short = row.len() < width;
            if row.len() > width || (short && policy == RaggedPolicy::Strict) {
                return Err(Error::RaggedRow { row: name.clone(), found: row.len(), expected: width });
            }
            row.resize(width, Cell::new());
            padded.push(row);
        }
        // Validates label uniqueness; the size cap is applied by `universe_with_cap`.
        Universe::with_cap(objects.clone(), usize::MAX)?;
        Ok(Self { objects, attributes, rows: padded })
    }

    /// Parses CSV: header row of attributes (first header cell names the
    /// object column), then one row per object.
    pub fn from_csv<R: Read>(reader: R, policy: RaggedPolicy) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().flexible(true).has_headers(true).from_reader(reader);
        let header = rdr.headers().map_err(csv_error)?.clone();
        if header.len() < 2 {
            return Err(Error::Malformed { location: "line 1".into(), message: "need an object column and at least one attribute".into() });
        }
        let attributes: Vec<String> = header.iter().skip(1).map(|s| s.trim().to_string()).collect();
        let mut objects = Vec::new();
        let mut rows = Vec::new();
        for rec in rdr.records() {
            let rec = rec.map_err(csv_error)?;
            let mut cells = rec.iter();
            let name = cells.next().unwrap_or("").trim().to_string();
            if name.is_empty() {
                let line = rec.position().map(|p| p.line()).unwrap_or(0);
                return Err(Error::Malformed { location: format!("line {line}"), message: "missing object name".into() });
            }
            rows.push(cells.map(parse_cell).collect());
            objects.push(name);
        }
        Self::new(objects, attributes, rows, policy)
    }

    pub fn from_json_str(s: &str, policy: RaggedPolicy) -> Result<Self> {
        let raw: InformationTable = serde_json::from_str(s)?;
        Self::new(raw.objects, raw.attributes, raw.rows, policy)
    }

    pub fn universe(&self) -> Result<Universe> {
        self.universe_with_cap(DEFAULT_UNIVERSE_CAP)
    }

    pub fn universe_with_cap(&self, cap: usize) -> Result<Universe> {
        Universe::with_cap(self.objects.clone(), cap)
    }

    /// Every cell holds exactly one value.
    pub fn is_deterministic(&self) -> bool {
        self.rows.iter().flatten().all(|c| c.len() == 1)
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attributes.iter().position(|a| a == name).ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    fn attribute_indices<S: AsRef<str>>(&self, b: &[S]) -> Result<Vec<usize>> {
        if b.is_empty() {
            return Err(Error::EmptyAttributeSet);
        }
        b.iter().map(|a| self.attribute_index(a.as_ref())).collect()
    }

    pub fn cell(&self, object: usize, attribute: usize) -> &Cell {
        &self.rows[object][attribute]
    }

    /// Rows agreeing on every attribute of `b` (value sets compared for equality;
    /// two NA cells agree).
    pub fn indiscernibility<S: AsRef<str>>(&self, b: &[S]) -> Result<BinaryRelation> {
        let idx = self.attribute_indices(b)?;
        let u = self.universe()?;
        let n = u.len();
        let rows = (0..n)
            .map(|x| {
                Subset::from_indices((0..n).filter(|&w| idx.iter().all(|&a| self.rows[x][a] == self.rows[w][a])))
            })
            .collect();
        let r = BinaryRelation::from_rows(u, rows)?;
        debug_assert!(r.is_equivalence());
        Ok(r)
    }

    /// `x ∼ w` iff some attribute of `b` has overlapping, defined value sets,
    /// plus the reflexive pairs. NA overlaps nothing.
    pub fn tolerance<S: AsRef<str>>(&self, b: &[S]) -> Result<BinaryRelation> {
        let idx = self.attribute_indices(b)?;
        let u = self.universe()?;
        let n = u.len();
        let rows = (0..n)
            .map(|x| {
                Subset::from_indices((0..n).filter(|&w| {
                    w == x || idx.iter().any(|&a| !self.rows[x][a].is_disjoint(&self.rows[w][a]))
                }))
            })
            .collect();
        BinaryRelation::from_rows(u, rows)
    }
}

fn parse_cell(raw: &str) -> Cell {
    raw.split('|').map(str::trim).filter(|v| !v.is_empty()).map(str::to_string).collect()
}

fn csv_error(e: csv::Error) -> Error {
    let location = e.position().map(|p| format!("line {}", p.line())).unwrap_or_else(|| "input".into());
    Error::Malformed { location, message: e.to_string() }
}

/// Derives the indiscernibility equivalence over attribute set `b`.
pub fn derive_indiscernibility<S: AsRef<str>>(table: &InformationTable, b: &[S]) -> Result<BinaryRelation> {
    table.indiscernibility(b)
}

/// Derives the overlap tolerance over attribute set `b`.
pub fn derive_tolerance<S: AsRef<str>>(table: &InformationTable, b: &[S]) -> Result<BinaryRelation> {
    table.tolerance(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "name,colour,size\nx,red|blue,1\ny,blue,2\nz,,2\n";

    #[test]
    fn parses_set_and_na_cells() {
        let t = InformationTable::from_csv(SMALL.as_bytes(), RaggedPolicy::Strict).unwrap();
        assert_eq!(t.attributes, vec!["colour", "size"]);
        assert_eq!(t.cell(0, 0).len(), 2);
        assert!(t.cell(2, 0).is_empty());
        assert!(!t.is_deterministic());
    }

    #[test]
    fn tolerance_ignores_na() {
        let t = InformationTable::from_csv(SMALL.as_bytes(), RaggedPolicy::Strict).unwrap();
        let r = t.tolerance(&["colour"]).unwrap();
        assert!(r.related(0, 1));
        assert_eq!(r.successors(2), Subset::singleton(2));
        assert!(r.require_tolerance().is_ok());
    }

    #[test]
    fn ragged_rows_follow_policy() {
        let csv = "n,a,b\nx,1,2\ny,1\n";
        let err = InformationTable::from_csv(csv.as_bytes(), RaggedPolicy::Strict).unwrap_err();
        assert_eq!(err, Error::RaggedRow { row: "y".into(), found: 1, expected: 2 });
        let t = InformationTable::from_csv(csv.as_bytes(), RaggedPolicy::PadNa).unwrap();
        assert!(t.cell(1, 1).is_empty());
    }

    #[test]
    fn attribute_errors() {
        let t = InformationTable::from_csv(SMALL.as_bytes(), RaggedPolicy::Strict).unwrap();
        assert_eq!(t.indiscernibility::<&str>(&[]).unwrap_err(), Error::EmptyAttributeSet);
        assert_eq!(t.indiscernibility(&["weight"]).unwrap_err(), Error::UnknownAttribute("weight".into()));
    }

    #[test]
    fn json_round_trip() {
        let t = InformationTable::from_csv(SMALL.as_bytes(), RaggedPolicy::Strict).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(InformationTable::from_json_str(&s, RaggedPolicy::Strict).unwrap(), t);
    }
}
