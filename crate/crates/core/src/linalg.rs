//! Dense linear algebra over `F_p`: reduced row echelon form, rank and
//! kernel dimension.

use crate::gf::FieldSpec;

/// Row-major dense matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    field: FieldSpec,
}

impl MatrixGF {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn identity(field: FieldSpec, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows of (not necessarily reduced) residues.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % field.p());
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &MatrixGF) -> MatrixGF {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            m.data[i * m.cols..i * m.cols + self.cols].copy_from_slice(self.row(i));
            m.data[i * m.cols + self.cols..(i + 1) * m.cols].copy_from_slice(other.row(i));
        }
        m
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form and its pivot columns. Pivots are chosen as
    /// the first nonzero entry scanning columns left to right and rows top to
    /// bottom; zero rows end up at the bottom, so the shape is preserved.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut support: Vec<usize> = Vec::with_capacity(cols);
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for k in c..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            support.clear();
            for k in c..cols {
                let v = self.data[r * cols + k];
                if v != 0 {
                    self.data[r * cols + k] = f.mul(v, inv);
                    support.push(k);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let a = row[c];
                if a == 0 {
                    return;
                }
                let factor = p - a as u64;
                for &k in &support {
                    row[k] = ((row[k] as u64 + factor * pivot_row[k] as u64) % p) as u32;
                }
            };
            before.chunks_exact_mut(cols).for_each(eliminate);
            after.chunks_exact_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduces a vector against the rows of a matrix in RREF with the given
    /// pivots; the result is zero iff the vector lies in the row space.
    pub fn reduce_against_rref(&self, pivots: &[usize], v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v: Vec<u32> = v.iter().map(|x| x % f.p()).collect();
        for (r, &c) in pivots.iter().enumerate() {
            let a = v[c];
            if a == 0 {
                continue;
            }
            for k in c..self.cols {
                v[k] = f.sub(v[k], f.mul(a, self.get(r, k)));
            }
        }
        v
    }
}
