use rayon::prelude::*;

use crate::error::{Error, Result};

use super::field::Field;
use super::matrix::ExactMatrix;

const NO_PIVOT: u32 = u32::MAX;

/// Maintains the row canonical form of everything appended so far.
///
/// Basis rows are kept fully reduced, so reducing an incoming row needs one
/// pass over the pivot columns where that row is nonzero.
#[derive(Clone, Debug)]
pub struct IncrementalReducer<F: Field> {
    field: F,
    cols: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
    max_rows: Option<usize>,
}

impl<F: Field> IncrementalReducer<F> {
    pub fn new(field: F, cols: usize) -> Self {
        IncrementalReducer {
            field,
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![NO_PIVOT; cols],
            max_rows: None,
        }
    }

    /// Caps the number of basis rows kept in memory.
    pub fn with_max_rows(mut self, cap: usize) -> Self {
        self.max_rows = Some(cap);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` in place against the current basis.
    pub fn reduce(&self, row: &mut [F::Elem]) {
        let f = &self.field;
        let ops: Vec<(F::Elem, &[F::Elem])> = row
            .iter()
            .zip(&self.pivot_row)
            .filter(|(x, &p)| p != NO_PIVOT && !f.is_zero(x))
            .map(|(x, &p)| (x.clone(), self.basis[p as usize].as_slice()))
            .collect();
        if !ops.is_empty() {
            f.eliminate(row, &ops);
        }
    }

    pub fn contains(&self, row: &[F::Elem]) -> Result<bool> {
        self.check_width(row.len())?;
        let mut v = row.to_vec();
        self.reduce(&mut v);
        Ok(v.iter().all(|x| self.field.is_zero(x)))
    }

    /// Appends one row; returns whether the rank grew.
    pub fn append_row(&mut self, mut row: Vec<F::Elem>) -> Result<bool> {
        self.check_width(row.len())?;
        self.reduce(&mut row);
        let f = self.field.clone();
        let Some(pivot) = row.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        if let Some(cap) = self.max_rows {
            if self.basis.len() >= cap {
                return Err(Error::ResourceCap(format!("more than {cap} basis rows")));
            }
        }
        let inv = f.inv(&row[pivot]).expect("nonzero pivot");
        f.scale_row(&mut row[pivot..], &inv);
        let clear = |b: &mut Vec<F::Elem>| {
            let coef = b[pivot].clone();
            if !f.is_zero(&coef) {
                f.eliminate(&mut b[pivot..], &[(coef, &row[pivot..])]);
            }
        };
        if self.basis.len() * (self.cols - pivot) > 1 << 18 {
            self.basis.par_iter_mut().for_each(clear);
        } else {
            self.basis.iter_mut().for_each(clear);
        }
        self.pivot_row[pivot] = self.basis.len() as u32;
        self.pivots.push(pivot);
        self.basis.push(row);
        Ok(true)
    }

    /// Appends every row of `m`; returns the rank increase.
    pub fn append(&mut self, m: &ExactMatrix<F>) -> Result<usize> {
        self.check_width(m.cols())?;
        let before = self.rank();
        for r in m.row_iter() {
            self.append_row(r.to_vec())?;
        }
        Ok(self.rank() - before)
    }

    /// The row canonical form of everything appended (nonzero rows only).
    pub fn snapshot(&self) -> ExactMatrix<F> {
        self.rows_with_pivot_from(0)
    }

    /// Basis rows whose pivot lies at or after `start`, restricted to the
    /// columns from `start` on. In canonical form these rows vanish before
    /// `start`, and they span the part of the row space supported there.
    pub fn rows_with_pivot_from(&self, start: usize) -> ExactMatrix<F> {
        let mut order: Vec<usize> = (0..self.basis.len())
            .filter(|&i| self.pivots[i] >= start)
            .collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let rows = order
            .into_iter()
            .map(|i| self.basis[i][start..].to_vec())
            .collect();
        ExactMatrix::from_rows(self.field.clone(), self.cols - start, rows).expect("same width")
    }

    fn check_width(&self, w: usize) -> Result<()> {
        if w != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: w,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::PrimeField;

    #[test]
    fn duplicate_rows_do_not_grow_rank() {
        let f = PrimeField::new(101).unwrap();
        let mut r = IncrementalReducer::new(f, 3);
        assert!(r.append_row(vec![1, 2, 3]).unwrap());
        let before = r.snapshot();
        assert!(!r.append_row(vec![1, 2, 3]).unwrap());
        assert!(!r.append_row(vec![2, 4, 6]).unwrap());
        assert_eq!(r.snapshot(), before);
        assert!(r.append_row(vec![1, 2]).is_err());
    }

    #[test]
    fn snapshot_is_rcf() {
        let f = PrimeField::new(101).unwrap();
        let mut r = IncrementalReducer::new(f, 3);
        r.append_row(vec![0, 1, 1]).unwrap();
        r.append_row(vec![1, 1, 0]).unwrap();
        let s = r.snapshot();
        assert_eq!(s, ExactMatrix::from_i64(f, &[vec![1, 0, 100], vec![0, 1, 1]]));
        let tail = r.rows_with_pivot_from(1);
        assert_eq!(tail, ExactMatrix::from_i64(f, &[vec![1, 1]]));
    }

    #[test]
    fn row_cap() {
        let f = PrimeField::new(101).unwrap();
        let mut r = IncrementalReducer::new(f, 3).with_max_rows(1);
        r.append_row(vec![1, 0, 0]).unwrap();
        assert!(matches!(
            r.append_row(vec![0, 1, 0]),
            Err(Error::ResourceCap(_))
        ));
    }
}
