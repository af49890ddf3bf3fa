use std::collections::BTreeMap;

use super::echelon::{RowEchelon, SparseRow};
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// An immutable sparse matrix over a single [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<SparseRow>,
}

impl SparseMatrix {
    /// Builds a matrix from `(row, col, value)` triplets. Zero values are
    /// dropped; duplicate positions, out-of-range indices and values from a
    /// different field are structural errors.
    pub fn new(
        rows: usize,
        cols: usize,
        field: Field,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut data: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Structure(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            if v.is_zero() {
                continue;
            }
            if data[r].insert(c, v).is_some() {
                return Err(Error::Structure(format!("duplicate entry at ({r}, {c})")));
            }
        }
        Ok(SparseMatrix {
            rows,
            cols,
            field,
            data: data.into_iter().map(|m| m.into_iter().collect()).collect(),
        })
    }

    /// Like [`SparseMatrix::new`] but sums repeated positions.
    pub fn accumulate(
        rows: usize,
        cols: usize,
        field: Field,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (r, c, v) in entries {
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            match acc.get_mut(&(r, c)) {
                Some(s) => *s = &*s + &v,
                None => {
                    acc.insert((r, c), v);
                }
            }
        }
        SparseMatrix::new(
            rows,
            cols,
            field,
            acc.into_iter().map(|((r, c), v)| (r, c, v)),
        )
    }

    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        SparseMatrix {
            rows,
            cols,
            field,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            field,
            data: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    /// Dense integer constructor, mostly for tests and examples.
    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, v)| (r, c, field.from_i64(*v)))
        });
        SparseMatrix::new(rows.len(), cols, field, entries).expect("dense input is well formed")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        let row = &self.data[r];
        row.binary_search_by_key(&c, |(k, _)| *k)
            .ok()
            .map(|k| &row[k].1)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            data[c].push((r, v.clone()));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data,
        }
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(Error::Structure(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    let p = a * b;
                    match acc.get_mut(c) {
                        Some(s) => *s = &*s + &p,
                        None => {
                            acc.insert(*c, p);
                        }
                    }
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            field: self.field,
            data,
        })
    }

    /// `self * v` for a dense column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Structure(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        if let Some(bad) = v.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch(self.field, bad.field()));
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .fold(self.field.zero(), |acc, (c, a)| &acc + &(a * &v[*c]))
            })
            .collect())
    }

    /// Reduced row echelon form of the row space.
    pub fn echelon(&self) -> RowEchelon {
        RowEchelon::from_rows(self.field, self.cols, self.data.clone())
    }

    pub fn rank(&self) -> usize {
        // Eliminating along the shorter side does less work.
        if self.cols < self.rows {
            self.transpose().echelon().rank()
        } else {
            self.echelon().rank()
        }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.echelon().null_space()
    }

    /// Sub-matrix on the given rows and columns, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (k, c) in cols.iter().enumerate() {
            col_pos[*c] = k;
        }
        let data = rows
            .iter()
            .map(|r| {
                let mut row: SparseRow = self.data[*r]
                    .iter()
                    .filter(|(c, _)| col_pos[*c] != usize::MAX)
                    .map(|(c, v)| (col_pos[*c], v.clone()))
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        SparseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            field: self.field,
            data,
        }
    }
}

/// Rank over the matrix's field.
pub fn rank(m: &SparseMatrix) -> usize {
    m.rank()
}

/// A basis of the right kernel; `cols - rank` vectors.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}

/// `dim ker(d_out) - rank(d_in)` for a composable pair `d_out . d_in = 0`.
pub fn homology_dim(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Structure(format!(
            "differentials do not compose: {} columns vs {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::NotAComplex);
    }
    Ok(d_out.cols() - d_out.rank() - d_in.rank())
}
