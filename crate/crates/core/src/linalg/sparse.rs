use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::arith::PrimeField;

/// Sparse row-major matrix over `F_p`. Rows are sorted by column and hold
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseModMatrix {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<(u32, u64)>>,
}

impl SparseModMatrix {
    pub fn new(field: PrimeField, cols: usize) -> SparseModMatrix {
        SparseModMatrix {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(u32, u64)] {
        &self.rows[i]
    }

    /// Appends a row given as `(column, value)` pairs in any order; repeated
    /// columns are summed and values are reduced mod `p`.
    pub fn push_row(&mut self, mut entries: Vec<(usize, u64)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut row: Vec<(u32, u64)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            let v = self.field.reduce_u64(v);
            match row.last_mut() {
                Some(last) if last.0 as usize == c => last.1 = self.field.add(last.1, v),
                _ => row.push((c as u32, v)),
            }
        }
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
    }

    /// Drops duplicate rows, keeping first occurrences.
    pub fn dedup_rows(&mut self) {
        let mut seen = std::collections::HashSet::new();
        self.rows.retain(|r| seen.insert(r.clone()));
    }

    /// Rank over `F_p`.
    ///
    /// Rows are inserted into an echelon basis shortest first (ties by
    /// index), each reduced on its leading entry until it either vanishes or
    /// opens a new pivot column. The order is fixed up front, so the result
    /// and the work done are deterministic.
    pub fn rank(&self) -> usize {
        let order = self.order_by_length((0..self.rows.len()).collect());
        rank_of_rows(&self.field, order.iter().map(|&i| self.rows[i].as_slice()))
    }

    fn order_by_length(&self, mut idx: Vec<usize>) -> Vec<usize> {
        idx.sort_by_key(|&i| (self.rows[i].len(), i));
        idx
    }

    /// Row sets of the connected components of the row/column incidence
    /// graph. Rows in different components share no column, so the rank is
    /// the sum of the component ranks. Components are listed by smallest
    /// row index; empty rows are omitted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::<u32>::new(self.cols);
        for row in &self.rows {
            if let Some(&(first, _)) = row.first() {
                for &(c, _) in &row[1..] {
                    uf.union(first, c);
                }
            }
        }
        let mut by_root: HashMap<u32, usize> = HashMap::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(&(c, _)) = row.first() {
                let root = uf.find(c);
                let g = *by_root.entry(root).or_insert_with(|| {
                    groups.push(Vec::new());
                    groups.len() - 1
                });
                groups[g].push(i);
            }
        }
        groups
    }

    /// Rank computed component by component, in parallel.
    pub fn rank_by_components(&self) -> usize {
        self.components()
            .into_par_iter()
            .map(|g| {
                let order = self.order_by_length(g);
                rank_of_rows(&self.field, order.iter().map(|&i| self.rows[i].as_slice()))
            })
            .sum()
    }
}

fn rank_of_rows<'a>(field: &PrimeField, rows: impl Iterator<Item = &'a [(u32, u64)]>) -> usize {
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for row in rows {
        let mut cur = row.to_vec();
        while let Some(&(lead, v)) = cur.first() {
            match pivots.get(&lead) {
                Some(prow) => cur = axpy(field, &cur, field.neg(v), prow),
                None => {
                    let inv = field.inv(v);
                    for e in cur.iter_mut() {
                        e.1 = field.mul(e.1, inv);
                    }
                    pivots.insert(lead, cur);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x + a*y` for sorted sparse rows.
fn axpy(field: &PrimeField, x: &[(u32, u64)], a: u64, y: &[(u32, u64)]) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = y.get(j).map_or(u32::MAX, |e| e.0);
        if cx < cy {
            out.push(x[i]);
            i += 1;
        } else if cy < cx {
            out.push((cy, field.mul(a, y[j].1)));
            j += 1;
        } else {
            let v = field.add(x[i].1, field.mul(a, y[j].1));
            if v != 0 {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
