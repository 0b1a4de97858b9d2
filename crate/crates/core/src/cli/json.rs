//! JSON encodings of the core types.
//!
//! Integers that can grow without bound (matrix entries, invariant factors) are written
//! as decimal strings; readers also accept plain JSON integers.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::abgrp::FgAbGroup;
use crate::error::{input, Error, Result};
use crate::exactla::IntMatrix;
use crate::grouphom::{FiniteGroupTable, FpGroupPresentation};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub free_rank: usize,
    pub invariant_factors: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableJson {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
}

/// A presentation plus where each generator goes in the accompanying table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub assignment: Vec<usize>,
}

/// A group file: a table and any number of presentations of it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFileJson {
    #[serde(default)]
    pub name: Option<String>,
    pub table: TableJson,
    #[serde(default)]
    pub presentations: Vec<PresentationJson>,
}

fn big_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("'{s}' is not a decimal integer"))),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(x), _) => Ok(x.into()),
            (_, Some(x)) => Ok(x.into()),
            _ => input(format!("{n} is not an integer")),
        },
        other => input(format!("expected an integer, found {other}")),
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|x| Value::String(x.to_string()))
                    .collect()
            })
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<IntMatrix> {
    if j.entries.len() != j.rows {
        return input(format!(
            "matrix declares {} rows but lists {}",
            j.rows,
            j.entries.len()
        ));
    }
    let mut data = Vec::with_capacity(j.rows * j.cols);
    for (i, row) in j.entries.iter().enumerate() {
        if row.len() != j.cols {
            return input(format!(
                "row {i} has {} entries, expected {}",
                row.len(),
                j.cols
            ));
        }
        for v in row {
            data.push(big_from_value(v)?);
        }
    }
    IntMatrix::from_vec(j.rows, j.cols, data)
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let j: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("matrix JSON: {e}")))?;
    matrix_from_json(&j)
}

pub fn group_to_json(a: &FgAbGroup) -> GroupJson {
    GroupJson {
        free_rank: a.free_rank(),
        invariant_factors: a
            .invariant_factors()
            .iter()
            .map(|d| d.to_string())
            .collect(),
    }
}

/// Reads any list of positive cyclic orders and canonicalizes it.
pub fn group_from_json(j: &GroupJson) -> Result<FgAbGroup> {
    let orders = j
        .invariant_factors
        .iter()
        .map(|s| big_from_value(&Value::String(s.clone())))
        .collect::<Result<Vec<_>>>()?;
    if orders.iter().any(|d| d <= &BigInt::from(0)) {
        return input("cyclic orders must be positive");
    }
    Ok(FgAbGroup::from_cyclic_orders(j.free_rank, &orders))
}

pub fn table_to_json(t: &FiniteGroupTable) -> TableJson {
    TableJson {
        order: t.order(),
        mult: t.mult_table().to_vec(),
    }
}

pub fn table_from_json(j: &TableJson) -> Result<FiniteGroupTable> {
    if j.mult.len() != j.order {
        return input(format!(
            "table declares order {} but has {} rows",
            j.order,
            j.mult.len()
        ));
    }
    FiniteGroupTable::new(j.mult.clone())
}

pub fn presentation_to_json(p: &FpGroupPresentation) -> PresentationJson {
    PresentationJson {
        generators: p.generators().to_vec(),
        relators: p.relators().iter().map(|r| p.format_word(r)).collect(),
        assignment: p.assignment().to_vec(),
    }
}

pub fn presentation_from_json(
    j: &PresentationJson,
    table: Arc<FiniteGroupTable>,
) -> Result<FpGroupPresentation> {
    for g in &j.generators {
        let mut chars = g.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => {}
            _ => return input(format!("generator '{g}' is not a single lowercase letter")),
        }
    }
    let gens: Vec<&str> = j.generators.iter().map(String::as_str).collect();
    let rels: Vec<&str> = j.relators.iter().map(String::as_str).collect();
    FpGroupPresentation::from_strings(&gens, &rels, table, j.assignment.clone())
}
