//! Reference data for type E compiled into the library: class tables
//! (polynomial and member count per derived equivalence class), the 21 E6
//! representative Cartan matrices, labeled E7/E8 quivers given by arrow
//! lists, good-mutation table rows, and opposite-algebra pairings.
//!
//! Labels such as "A13" are the reference numbering of algebras within one
//! Dynkin type. All vertex data in the tables is 1-based and converted to
//! 0-based here.

use crate::error::{Error, Result};
use crate::invariants::normalize_text;
use crate::mutation_class::DynkinType;
use crate::path_algebra::CartanMatrix;
use crate::quiver::Quiver;

const CLASS_TABLES: &str = include_str!("../fixtures/class_tables.tsv");
const E6_CARTANS: &str = include_str!("../fixtures/e6_cartans.tsv");
const E6_GOOD: &str = include_str!("../fixtures/e6_good_mutations.tsv");
const E7_QUIVERS: &str = include_str!("../fixtures/e7_quivers.tsv");
const E7_GOOD: &str = include_str!("../fixtures/e7_good_mutations.tsv");
const E7_OPPOSITES: &str = include_str!("../fixtures/e7_opposites.tsv");
const E8_QUIVERS: &str = include_str!("../fixtures/e8_quivers.tsv");
const E8_GOOD: &str = include_str!("../fixtures/e8_good_mutations.tsv");
const E8_OPPOSITES: &str = include_str!("../fixtures/e8_opposites.tsv");

fn records(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').map(str::trim).collect())
}

fn field<'a>(rec: &[&'a str], i: usize, what: &str) -> Result<&'a str> {
    rec.get(i)
        .copied()
        .ok_or_else(|| Error::parse(format!("fixture record {rec:?} lacks {what}")))
}

/// Parses "1 1 0; 0 1 0; 0 0 1".
pub fn parse_matrix(s: &str) -> Result<CartanMatrix> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| {
            r.split_whitespace()
                .map(|x| x.parse::<i64>().map_err(|e| Error::parse(format!("{x:?}: {e}"))))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::parse(format!("matrix {s:?} is not square")));
    }
    Ok(rows)
}

/// Parses a 1-based vertex list "3,6,7" into sorted 0-based vertices.
fn parse_vertices(s: &str) -> Result<Vec<usize>> {
    let mut v = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .ok()
                .filter(|&x| x >= 1)
                .map(|x| x - 1)
                .ok_or_else(|| Error::parse(format!("bad vertex {x:?}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    v.sort_unstable();
    Ok(v)
}

fn parse_vertex(s: &str) -> Result<usize> {
    let v = parse_vertices(s)?;
    match v.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::parse(format!("expected one vertex, got {s:?}"))),
    }
}

/// One row of a class table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassTableRow {
    /// Normalized (whitespace-free) associated polynomial.
    pub polynomial: String,
    pub count: usize,
}

/// Reference derived equivalence classes of a type-E mutation class.
pub fn class_table(t: DynkinType) -> Result<Vec<ClassTableRow>> {
    let tag = t.to_string();
    let mut out = Vec::new();
    for rec in records(CLASS_TABLES) {
        if field(&rec, 0, "type")? != tag {
            continue;
        }
        let count = field(&rec, 2, "count")?
            .parse()
            .map_err(|e| Error::parse(format!("class count: {e}")))?;
        out.push(ClassTableRow { polynomial: normalize_text(field(&rec, 1, "polynomial")?), count });
    }
    Ok(out)
}

/// A reference E6 algebra given by its Cartan matrix.
#[derive(Clone, Debug)]
pub struct CartanFixture {
    pub label: String,
    pub polynomial: String,
    pub cartan: CartanMatrix,
}

/// The 21 E6 sink/source orbit representatives.
pub fn e6_cartans() -> Result<Vec<CartanFixture>> {
    records(E6_CARTANS)
        .map(|rec| {
            Ok(CartanFixture {
                label: field(&rec, 0, "label")?.to_string(),
                polynomial: normalize_text(field(&rec, 1, "polynomial")?),
                cartan: parse_matrix(field(&rec, 2, "matrix")?)?,
            })
        })
        .collect()
}

/// A reference algebra given by its labeled quiver.
#[derive(Clone, Debug)]
pub struct QuiverFixture {
    pub label: String,
    pub polynomial: String,
    pub quiver: Quiver,
}

/// Labeled reference quivers (E7 and E8; empty for other types).
pub fn labeled_quivers(t: DynkinType) -> Result<Vec<QuiverFixture>> {
    let (text, n) = match t {
        DynkinType::E7 => (E7_QUIVERS, 7),
        DynkinType::E8 => (E8_QUIVERS, 8),
        _ => return Ok(Vec::new()),
    };
    records(text)
        .map(|rec| {
            Ok(QuiverFixture {
                label: field(&rec, 0, "label")?.to_string(),
                polynomial: normalize_text(field(&rec, 1, "polynomial")?),
                quiver: Quiver::parse_tuples(field(&rec, 2, "arrows")?, Some(n))?,
            })
        })
        .collect()
}

/// One good-mutation table row "source (k; incoming) ∼ target permutation".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodMutationRow {
    pub source: String,
    /// The row is about the opposite algebra of `source`.
    pub opposite: bool,
    /// Marked as needing a sink/source change of some arrow directions.
    pub adjusted: bool,
    /// 0-based vertex k.
    pub vertex: usize,
    /// Sorted 0-based tails of the arrows ending at k.
    pub incoming: Vec<usize>,
    pub target: String,
    /// Relabeling in cycle notation (E7/E8 tables).
    pub permutation: Option<String>,
    /// Normalized polynomial of the group the row belongs to (E7/E8 tables).
    pub polynomial: Option<String>,
    /// Printed Cartan matrix of the endomorphism algebra (E6 rows).
    pub endomorphism_cartan: Option<CartanMatrix>,
}

impl GoodMutationRow {
    /// The row in table shorthand, e.g. "A5 (4;3,6) ~ A3 (457)".
    pub fn describe(&self) -> String {
        let inc: Vec<String> = self.incoming.iter().map(|v| (v + 1).to_string()).collect();
        format!(
            "{}{}{} ({};{}) ~ {}{}",
            self.source,
            if self.opposite { "^op" } else { "" },
            if self.adjusted { " (*)" } else { "" },
            self.vertex + 1,
            inc.join(","),
            self.target,
            self.permutation.as_deref().map(|p| format!(" {p}")).unwrap_or_default()
        )
    }
}

/// Good-mutation table rows of a type (E6, E7 or E8).
pub fn good_mutation_rows(t: DynkinType) -> Result<Vec<GoodMutationRow>> {
    match t {
        DynkinType::E6 => records(E6_GOOD)
            .map(|rec| {
                Ok(GoodMutationRow {
                    source: field(&rec, 0, "source")?.to_string(),
                    opposite: false,
                    adjusted: false,
                    vertex: parse_vertex(field(&rec, 1, "vertex")?)?,
                    incoming: parse_vertices(field(&rec, 2, "incoming")?)?,
                    target: field(&rec, 3, "target")?.to_string(),
                    permutation: None,
                    polynomial: None,
                    endomorphism_cartan: Some(parse_matrix(field(&rec, 4, "matrix")?)?),
                })
            })
            .collect(),
        DynkinType::E7 | DynkinType::E8 => {
            let text = if t == DynkinType::E7 { E7_GOOD } else { E8_GOOD };
            records(text)
                .map(|rec| {
                    Ok(GoodMutationRow {
                        polynomial: Some(normalize_text(field(&rec, 0, "polynomial")?)),
                        source: field(&rec, 1, "source")?.to_string(),
                        opposite: field(&rec, 2, "opposite flag")? == "op",
                        adjusted: field(&rec, 3, "adjustment flag")? == "*",
                        vertex: parse_vertex(field(&rec, 4, "vertex")?)?,
                        incoming: parse_vertices(field(&rec, 5, "incoming")?)?,
                        target: field(&rec, 6, "target")?.to_string(),
                        permutation: Some(field(&rec, 7, "permutation")?.to_string()),
                        endomorphism_cartan: None,
                    })
                })
                .collect()
        }
        _ => Ok(Vec::new()),
    }
}

/// How the opposite of an algebra relates to a labeled algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OppositeRelation {
    /// Sink/source equivalent.
    SinkSource,
    /// Isomorphic.
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppositePair {
    pub polynomial: String,
    pub label: String,
    pub relation: OppositeRelation,
    pub opposite_label: String,
}

/// Opposite-algebra pairings "A^op ∼ B" of a type (E7 and E8).
pub fn opposite_pairs(t: DynkinType) -> Result<Vec<OppositePair>> {
    let text = match t {
        DynkinType::E7 => E7_OPPOSITES,
        DynkinType::E8 => E8_OPPOSITES,
        _ => return Ok(Vec::new()),
    };
    records(text)
        .map(|rec| {
            let relation = match field(&rec, 2, "relation")? {
                "ss" => OppositeRelation::SinkSource,
                "eq" => OppositeRelation::Equal,
                other => return Err(Error::parse(format!("unknown relation {other:?}"))),
            };
            Ok(OppositePair {
                polynomial: normalize_text(field(&rec, 0, "polynomial")?),
                label: field(&rec, 1, "label")?.to_string(),
                relation,
                opposite_label: field(&rec, 3, "opposite label")?.to_string(),
            })
        })
        .collect()
}
