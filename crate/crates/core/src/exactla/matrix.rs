use crate::error::{Error, Result};

use super::field::Field;

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug)]
pub struct ExactMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(ExactMatrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(field: F, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| field.from_i64(x)))
            .collect();
        ExactMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F::Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    fn row_is_zero(&self, r: usize) -> bool {
        self.row(r).iter().all(|x| self.field.is_zero(x))
    }

    /// Rows that are not identically zero.
    pub fn nonzero_rows(&self) -> Self {
        let keep: Vec<Vec<F::Elem>> = (0..self.rows)
            .filter(|&r| !self.row_is_zero(r))
            .map(|r| self.row(r).to_vec())
            .collect();
        Self::from_rows(self.field.clone(), self.cols, keep).expect("same width")
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Columns `start..end`.
    pub fn column_range(&self, start: usize, end: usize) -> Self {
        let rows = (0..self.rows).map(|r| self.row(r)[start..end].to_vec()).collect();
        Self::from_rows(self.field.clone(), end - start, rows).expect("same width")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let v = f.add(out.get(i, j), &f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form by Gauss-Jordan elimination, with zero rows
    /// kept at the bottom, plus the rank.
    pub fn rcf(&self) -> (Self, usize) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            m.swap_rows(rank, p);
            let inv = f.inv(m.get(rank, c)).expect("nonzero pivot");
            f.scale_row(m.row_mut(rank), &inv);
            let pivot_row = m.row(rank).to_vec();
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let coef = m.get(r, c).clone();
                if !f.is_zero(&coef) {
                    f.eliminate(m.row_mut(r), &[(coef, &pivot_row)]);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rcf().1
    }

    /// Column of the leading entry of each nonzero row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|r| self.row(r).iter().position(|x| !self.field.is_zero(x)))
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * c);
        head[lo * c..(lo + 1) * c].swap_with_slice(&mut tail[..c]);
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = Self::zeros(f.clone(), n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, f.one());
        }
        let (red, _) = aug.rcf();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { f.one() } else { f.zero() };
                if *red.get(i, j) != want {
                    return Err(Error::Singular);
                }
            }
        }
        Ok(red.column_range(n, 2 * n))
    }

    /// Whether `v` reduces to zero against this matrix, assumed in RCF.
    pub fn rcf_contains_row(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for r in 0..self.rows {
            let row = self.row(r);
            let Some(p) = row.iter().position(|x| !f.is_zero(x)) else {
                continue;
            };
            let coef = v[p].clone();
            if !f.is_zero(&coef) {
                f.eliminate(&mut v, &[(coef, row)]);
            }
        }
        v.iter().all(|x| f.is_zero(x))
    }

    /// Converts every entry to another field through its rational value.
    pub fn convert<G: Field>(&self, target: G) -> Result<ExactMatrix<G>> {
        let data = self
            .data
            .iter()
            .map(|x| target.from_rational(&self.field.to_rational(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            field: target,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// True iff every row of `a` lies in the row space of `b`.
pub fn row_space_contains<F: Field>(a: &ExactMatrix<F>, b: &ExactMatrix<F>) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            expected: b.cols(),
            found: a.cols(),
        });
    }
    let (rb, _) = b.rcf();
    Ok(a.row_iter().all(|row| rb.rcf_contains_row(row)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::{PrimeField, Rationals};
    use crate::rat;

    #[test]
    fn rcf_small_rational() {
        let m = ExactMatrix::from_i64(Rationals, &[vec![2, 4], vec![1, 2]]);
        let (r, rank) = m.rcf();
        assert_eq!(rank, 1);
        assert_eq!(r, ExactMatrix::from_i64(Rationals, &[vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn rcf_identity() {
        let id = ExactMatrix::identity(Rationals, 4);
        assert_eq!(id.rcf(), (id.clone(), 4));
    }

    #[test]
    fn containment_edge_cases() {
        let f = PrimeField::new(101).unwrap();
        let id = ExactMatrix::identity(f, 3);
        let zero = ExactMatrix::zeros(f, 2, 3);
        assert!(row_space_contains(&id, &id).unwrap());
        assert!(!row_space_contains(&id, &zero).unwrap());
        assert!(row_space_contains(&zero, &id).unwrap());
        assert!(row_space_contains(&id, &ExactMatrix::zeros(f, 2, 4)).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_i64(Rationals, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat(-2, 1));
        assert_eq!(inv.get(1, 0), &rat(3, 2));
        assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(Rationals, 2));
        let sing = ExactMatrix::from_i64(Rationals, &[vec![1, 2], vec![2, 4]]);
        assert!(matches!(sing.inverse(), Err(Error::Singular)));
    }
}
