use super::scalar::{Field, Scalar};

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

/// `a - t * b` for sorted sparse rows.
pub(crate) fn sub_scaled(a: &[(usize, Scalar)], t: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = -&(t * &b[j].1);
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 - &(t * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &[(usize, Scalar)], col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|k| &row[k].1)
}

/// Incrementally maintained reduced row echelon form of a row space.
///
/// Every stored row has coefficient one at its pivot and zeros at all other
/// pivot columns and to the left of its pivot, so the pivot set depends only
/// on the row space.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl RowEchelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        RowEchelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    /// Row-reduces `rows`, inserting sparsest rows first to keep fill-in low.
    pub fn from_rows(field: Field, ncols: usize, mut rows: Vec<SparseRow>) -> Self {
        rows.retain(|r| !r.is_empty());
        rows.sort_by_key(|r| r.len());
        let mut e = RowEchelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Normal form of `row` modulo the row space: the unique representative
    /// supported on non-pivot columns.
    pub fn reduce(&self, row: &[(usize, Scalar)]) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter_map(|(c, v)| self.pivot_row[*c].map(|k| (k, v.clone())))
            .collect();
        let mut out: SparseRow = row.to_vec();
        for (k, t) in hits {
            out = sub_scaled(&out, &t, &self.rows[k]);
        }
        out
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut w = self.reduce(&row);
        if w.is_empty() {
            return false;
        }
        let lead = w[0].0;
        let inv = w[0].1.inv();
        for e in w.iter_mut() {
            e.1 = &e.1 * &inv;
        }
        for r in self.rows.iter_mut() {
            if let Some(t) = entry(r, lead).cloned() {
                *r = sub_scaled(r, &t, &w);
            }
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(w);
        true
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.is_pivot(*c)).collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Reduced rows sorted by pivot column.
    pub fn reduced_rows(&self) -> Vec<&SparseRow> {
        let mut v: Vec<&SparseRow> = self.rows.iter().collect();
        v.sort_by_key(|r| r[0].0);
        v
    }

    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of `{ v : r . v = 0 for every row r }`, one vector per free
    /// column, as dense vectors.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let zero = self.field.zero();
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![zero.clone(); self.ncols];
                v[f] = self.field.one();
                for r in &self.rows {
                    if let Some(t) = entry(r, f) {
                        v[r[0].0] = -t;
                    }
                }
                v
            })
            .collect()
    }
}
