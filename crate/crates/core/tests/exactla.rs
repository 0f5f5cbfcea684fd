use proptest::prelude::*;

use ly_polyid::exactla::{row_space_contains, ExactMatrix, Field, IncrementalReducer, PrimeField, Rationals};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..7, 1usize..8).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

/// A random invertible combination of the rows, built from elementary steps.
fn mix<F: Field>(m: &ExactMatrix<F>, steps: &[(usize, usize, i64)]) -> ExactMatrix<F> {
    let f = m.field().clone();
    let mut out = m.clone();
    let r = m.rows();
    for &(i, j, c) in steps {
        let (i, j) = (i % r, j % r);
        if i == j {
            continue;
        }
        let src = out.row(j).to_vec();
        let c = f.from_i64(c);
        for (x, y) in out.row_mut(i).iter_mut().zip(src) {
            *x = f.add(x, &f.mul(&c, &y));
        }
    }
    out
}

fn check_field<F: Field>(f: F, rows: &[Vec<i64>], steps: &[(usize, usize, i64)]) -> Result<(), TestCaseError> {
    let m = ExactMatrix::from_i64(f.clone(), rows);
    let (r, rank) = m.rcf();
    let (rr, rank2) = r.rcf();
    prop_assert_eq!(&rr, &r);
    prop_assert_eq!(rank, rank2);
    prop_assert_eq!(rank, m.rank());
    // Same row space gives the same canonical form.
    let mixed = mix(&m, steps);
    prop_assert_eq!(mixed.rcf().0, r.clone());
    prop_assert!(row_space_contains(&m, &mixed).unwrap());
    prop_assert!(row_space_contains(&mixed, &m).unwrap());
    // Incremental and batch reduction agree.
    let mut red = IncrementalReducer::new(f.clone(), m.cols());
    red.append(&m).unwrap();
    prop_assert_eq!(red.rank(), rank);
    prop_assert_eq!(red.snapshot(), r.nonzero_rows());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rcf_properties_over_the_rationals(rows in matrix(), steps in prop::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..12)) {
        check_field(Rationals, &rows, &steps)?;
    }

    #[test]
    fn rcf_properties_over_f101(rows in matrix(), steps in prop::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..12)) {
        check_field(PrimeField::new(101).unwrap(), &rows, &steps)?;
    }

    #[test]
    fn rational_rank_bounds_modular_rank(rows in matrix()) {
        let q = ExactMatrix::from_i64(Rationals, &rows).rank();
        let p = ExactMatrix::from_i64(PrimeField::new(101).unwrap(), &rows).rank();
        prop_assert!(p <= q);
    }
}
