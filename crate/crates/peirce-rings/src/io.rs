//! File formats: the raw structure-constant document (schema version 1) and
//! the block-ring construction document consumed by `GenMatrixRef`.

use crate::construct::{BimoduleSpec, GenMatrixSpec};
use crate::error::RingError;
use crate::ring::{AxiomReport, FiniteRing};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Schema version 1 of the structure-constant document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StructureDoc {
    pub version: u32,
    pub name: String,
    pub basis: Vec<BasisEntry>,
    pub one: Vec<u64>,
    pub mul: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BasisEntry {
    pub name: String,
    pub order: u64,
}

/// A loaded ring together with its axiom sweep.  Loading succeeds even when
/// the axioms fail; the report flags the document as invalid.
#[derive(Clone, Debug)]
pub struct LoadedStructure {
    pub ring: FiniteRing,
    pub axioms: AxiomReport,
}

fn schema_error(path: &str, msg: impl std::fmt::Display) -> RingError {
    RingError::Structure(format!("schema error at {path}: {msg}"))
}

/// Parses and validates a structure document, then runs the axiom sweep.
pub fn parse_structure(text: &str) -> Result<LoadedStructure, RingError> {
    let doc: StructureDoc =
        serde_json::from_str(text).map_err(|e| schema_error("document", e))?;
    if doc.version != 1 {
        return Err(schema_error(
            "version",
            format!("unsupported version {}", doc.version),
        ));
    }
    let k = doc.basis.len();
    for (i, b) in doc.basis.iter().enumerate() {
        if b.order < 2 {
            return Err(schema_error(
                &format!("basis[{i}].order"),
                format!("order {} must be at least 2", b.order),
            ));
        }
    }
    if doc.one.len() != k {
        return Err(schema_error(
            "one",
            format!("length {} but basis has {k} entries", doc.one.len()),
        ));
    }
    if doc.mul.len() != k {
        return Err(schema_error(
            "mul",
            format!("{} rows but basis has {k} entries", doc.mul.len()),
        ));
    }
    for (i, row) in doc.mul.iter().enumerate() {
        if row.len() != k {
            return Err(schema_error(
                &format!("mul[{i}]"),
                format!("{} entries, expected {k}", row.len()),
            ));
        }
        for (j, entry) in row.iter().enumerate() {
            if entry.len() != k {
                return Err(schema_error(
                    &format!("mul[{i}][{j}]"),
                    format!("length {}, expected {k}", entry.len()),
                ));
            }
        }
    }
    let ring = FiniteRing::new(
        doc.name,
        doc.basis.into_iter().map(|b| (b.name, b.order)).collect(),
        doc.one,
        doc.mul,
    )?;
    let axioms = ring.verify_axioms();
    Ok(LoadedStructure { ring, axioms })
}

pub fn load_structure(path: &str) -> Result<LoadedStructure, RingError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RingError::Structure(format!("cannot read {path}: {e}")))?;
    parse_structure(&text)
}

/// Serializes a ring to the version-1 document.  Byte-deterministic:
/// identical rings produce identical documents.
pub fn structure_to_string(ring: &FiniteRing) -> String {
    let doc = StructureDoc {
        version: 1,
        name: ring.name().to_string(),
        basis: ring
            .basis_names()
            .iter()
            .zip(ring.orders())
            .map(|(name, &order)| BasisEntry {
                name: name.clone(),
                order,
            })
            .collect(),
        one: ring.one().coords,
        mul: (0..ring.rank())
            .map(|i| {
                (0..ring.rank())
                    .map(|j| ring.table_entry(i, j).to_vec())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("structure documents serialize")
}

pub fn save_structure(ring: &FiniteRing, path: &str) -> Result<(), RingError> {
    std::fs::write(path, structure_to_string(ring))
        .map_err(|e| RingError::Structure(format!("cannot write {path}: {e}")))
}

/// Block-ring construction document, version 1.  Diagonal rings are given
/// as construction expressions; module indices are 1-based in the file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenMatrixDoc {
    pub version: u32,
    #[serde(default)]
    pub name: String,
    pub blocks: usize,
    pub diagonal: Vec<String>,
    #[serde(default)]
    pub modules: Vec<ModuleDoc>,
    #[serde(default)]
    pub pairings: Vec<PairingDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub row: usize,
    pub col: usize,
    pub orders: Vec<u64>,
    pub left: Vec<Vec<Vec<u64>>>,
    pub right: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairingDoc {
    pub from: usize,
    pub via: usize,
    pub to: usize,
    pub table: Vec<Vec<Vec<u64>>>,
}

pub fn parse_gen_matrix_spec(text: &str) -> Result<GenMatrixSpec, RingError> {
    let doc: GenMatrixDoc =
        serde_json::from_str(text).map_err(|e| schema_error("document", e))?;
    if doc.version != 1 {
        return Err(schema_error(
            "version",
            format!("unsupported version {}", doc.version),
        ));
    }
    if doc.diagonal.len() != doc.blocks {
        return Err(schema_error(
            "diagonal",
            format!("{} entries for {} blocks", doc.diagonal.len(), doc.blocks),
        ));
    }
    let mut diagonal = Vec::with_capacity(doc.blocks);
    for (i, text) in doc.diagonal.iter().enumerate() {
        let ast = crate::expr::parse_expr(text)
            .map_err(|e| schema_error(&format!("diagonal[{i}]"), e))?;
        diagonal.push(crate::expr::build(&ast)?);
    }
    let mut modules = BTreeMap::new();
    for (idx, m) in doc.modules.iter().enumerate() {
        if m.row == 0 || m.col == 0 || m.row > doc.blocks || m.col > doc.blocks || m.row == m.col {
            return Err(schema_error(
                &format!("modules[{idx}]"),
                format!("invalid block pair ({}, {})", m.row, m.col),
            ));
        }
        modules.insert(
            (m.row - 1, m.col - 1),
            BimoduleSpec {
                orders: m.orders.clone(),
                left: m.left.clone(),
                right: m.right.clone(),
            },
        );
    }
    let mut pairings = BTreeMap::new();
    for (idx, p) in doc.pairings.iter().enumerate() {
        if p.from == 0
            || p.via == 0
            || p.to == 0
            || p.from > doc.blocks
            || p.via > doc.blocks
            || p.to > doc.blocks
            || p.from == p.via
            || p.via == p.to
        {
            return Err(schema_error(
                &format!("pairings[{idx}]"),
                format!("invalid index triple ({}, {}, {})", p.from, p.via, p.to),
            ));
        }
        pairings.insert((p.from - 1, p.via - 1, p.to - 1), p.table.clone());
    }
    Ok(GenMatrixSpec {
        n: doc.blocks,
        diagonal,
        modules,
        pairings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::gen_matrix;
    use crate::ring::zmod;

    #[test]
    fn structure_round_trip() {
        let r = zmod(6);
        let text = structure_to_string(&r);
        let loaded = parse_structure(&text).unwrap();
        assert!(loaded.axioms.is_ok());
        assert_eq!(loaded.ring, r);
        // Byte-identical second round.
        assert_eq!(structure_to_string(&loaded.ring), text);
    }

    #[test]
    fn schema_error_names_path() {
        let text = r#"{
            "version": 1,
            "name": "bad",
            "basis": [{"name": "a", "order": 2}, {"name": "b", "order": 2}],
            "one": [1, 0],
            "mul": [[[1, 0], [0]], [[0, 1], [0, 0]]]
        }"#;
        let err = parse_structure(text).unwrap_err();
        assert!(err.to_string().contains("mul[0][1]"), "got: {err}");
    }

    #[test]
    fn axiom_failure_still_loads() {
        let text = r#"{
            "version": 1,
            "name": "not-a-ring",
            "basis": [{"name": "a", "order": 6}],
            "one": [1],
            "mul": [[[2]]]
        }"#;
        let loaded = parse_structure(text).unwrap();
        assert!(!loaded.axioms.is_ok());
        assert_eq!(loaded.ring.size(), 6);
    }

    #[test]
    fn gen_matrix_doc() {
        let text = r#"{
            "version": 1,
            "name": "morita-trivial",
            "blocks": 2,
            "diagonal": ["GF(2)", "GF(2)"],
            "modules": [
                {"row": 1, "col": 2, "orders": [2], "left": [[[1]]], "right": [[[1]]]},
                {"row": 2, "col": 1, "orders": [2], "left": [[[1]]], "right": [[[1]]]}
            ],
            "pairings": []
        }"#;
        let spec = parse_gen_matrix_spec(text).unwrap();
        let ring = gen_matrix(&spec).unwrap();
        assert_eq!(ring.size(), 16);
    }

    #[test]
    fn gen_matrix_doc_rejects_bad_indices() {
        let text = r#"{
            "version": 1,
            "blocks": 2,
            "diagonal": ["GF(2)", "GF(2)"],
            "modules": [
                {"row": 1, "col": 1, "orders": [2], "left": [[[1]]], "right": [[[1]]]}
            ]
        }"#;
        let err = parse_gen_matrix_spec(text).unwrap_err();
        assert!(err.to_string().contains("modules[0]"));
    }
}
