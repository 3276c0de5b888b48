//! Saturated chains of full columns, used for the determinant factors of
//! special linear semiinvariants.

use serde::{Deserialize, Serialize};
use stanley_core::{Column, Error, Result};

use crate::classical::{enumerate_gl_facets_from_columns, Facet, Orientation};

/// A saturated chain (1..k) = A_0 < A_1 < ... < A_r in the full columns,
/// each step raising one entry by one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnChain {
    pub columns: Vec<Column>,
    /// Positions (into `columns`) of the corner elements.
    pub corners: Vec<usize>,
}

impl ColumnChain {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn corner_count(&self) -> usize {
        self.corners.len()
    }
}

/// Every saturated chain from (1, ..., k) up to `target`.
pub fn enumerate_column_chains(target: &Column) -> Vec<ColumnChain> {
    let k = target.len();
    let t = target.entries();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    if cur.iter().zip(t).any(|(a, b)| a > b) {
        return out;
    }
    let mut columns = vec![Column::new(cur.clone()).expect("initial column")];
    let mut steps: Vec<usize> = Vec::new();
    fn rec(t: &[usize], cur: &mut Vec<usize>, columns: &mut Vec<Column>, steps: &mut Vec<usize>, out: &mut Vec<ColumnChain>) {
        if cur.as_slice() == t {
            // B = A_s is a corner when the step into it uses a smaller index than the step out
            let corners = (1..steps.len()).filter(|&s| steps[s - 1] < steps[s]).collect();
            out.push(ColumnChain { columns: columns.clone(), corners });
            return;
        }
        for i in 0..cur.len() {
            let raised = cur[i] + 1;
            if raised > t[i] || (i + 1 < cur.len() && raised >= cur[i + 1]) {
                continue;
            }
            cur[i] = raised;
            columns.push(Column::new(cur.clone()).expect("strictly increasing"));
            steps.push(i);
            rec(t, cur, columns, steps, out);
            steps.pop();
            columns.pop();
            cur[i] -= 1;
        }
    }
    rec(t, &mut cur, &mut columns, &mut steps, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Determinants in the dual copies: columns index starting rows.
    Starred,
    /// Determinants in the vector copies: columns index starting columns.
    Unstarred,
}

/// A chain facet F ending at a column together with a path facet f it feeds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlFacet {
    pub chain: ColumnChain,
    pub column: Column,
    pub facet: Facet,
}

/// All pairs (F, f) with F a chain ending at I and f a path family starting at I.
pub fn enumerate_sl_hyperedge_facets(p: usize, q: usize, k: usize, side: Side) -> Result<Vec<SlFacet>> {
    let (n, orientation) = match side {
        Side::Starred => (p, Orientation::Rows),
        Side::Unstarred => (q, Orientation::Columns),
    };
    if k == 0 || k > p.min(q) {
        return Err(Error::domain(format!("k={k} must lie in 1..=min(p,q)")));
    }
    let mut out = Vec::new();
    for col in Column::all(n, k) {
        let chains = enumerate_column_chains(&col);
        let facets = enumerate_gl_facets_from_columns(p, q, &col, orientation)?;
        for chain in &chains {
            for f in &facets {
                out.push(SlFacet { chain: chain.clone(), column: col.clone(), facet: f.clone() });
            }
        }
    }
    Ok(out)
}
