//! Small algebras used as semantic oracles.

use num_traits::Zero;

use crate::exactla::{ExactMatrix, Rationals};
use crate::{rat, Rational};

use super::algebra::{from_leibniz, from_lie, AlgebraSC, LeibnizSC};

/// A named test algebra.
#[derive(Clone, Debug)]
pub struct Bundled {
    pub name: &'static str,
    pub algebra: AlgebraSC,
}

/// Every bundled algebra; each passes `validate`.
pub fn bundled_algebras() -> Vec<Bundled> {
    vec![
        Bundled {
            name: "zero",
            algebra: AlgebraSC::zero(3),
        },
        Bundled {
            name: "cross-product",
            algebra: cross_product(),
        },
        Bundled {
            name: "leibniz-2",
            algebra: from_leibniz(&nilpotent_leibniz()).expect("Leibniz"),
        },
        Bundled {
            name: "leibniz-3",
            algebra: from_leibniz(&leibniz_3()).expect("Leibniz"),
        },
        Bundled {
            name: "reductive-sl4",
            algebra: reductive_sl4(),
        },
    ]
}

fn cross_entries() -> Vec<(usize, usize, usize, Rational)> {
    let mut e = Vec::new();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        e.push((i, j, k, rat(1, 1)));
        e.push((j, i, k, rat(-1, 1)));
    }
    e
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2` with zero triple product.
pub fn cross_product() -> AlgebraSC {
    from_lie(3, &cross_entries()).expect("in range")
}

/// The cross-product algebra as a Leibniz algebra.
pub fn cross_product_leibniz() -> LeibnizSC {
    LeibnizSC::from_entries(3, &cross_entries()).expect("in range")
}

/// `{e1,e1} = e2`, all other products zero.
pub fn nilpotent_leibniz() -> LeibnizSC {
    LeibnizSC::from_entries(2, &[(0, 0, 1, rat(1, 1))]).expect("in range")
}

/// The 3-dimensional non-Lie Leibniz algebra returned by
/// [`search_leibniz_3`], stored so tests need not repeat the search.
pub fn leibniz_3() -> LeibnizSC {
    let entries: Vec<_> = [(0, 0, 1, 1), (0, 2, 2, -1), (2, 0, 2, 1)]
        .into_iter()
        .map(|(i, j, k, v)| (i, j, k, rat(v, 1)))
        .collect();
    LeibnizSC::from_entries(3, &entries).expect("in range")
}

/// Searches sparse tables with entries in {-1, 1} on up to `max_support`
/// structure constants, in a fixed order, for the first Leibniz algebra on
/// three generators whose derived Lie-Yamaguti algebra has both operations
/// nonzero.
pub fn search_leibniz_3(max_support: usize) -> Option<LeibnizSC> {
    const D: usize = 3;
    let slots: Vec<(usize, usize, usize)> = (0..D * D * D).map(|x| (x / (D * D), (x / D) % D, x % D)).collect();
    for size in 1..=max_support {
        let mut chosen: Vec<usize> = (0..size).collect();
        loop {
            for signs in 0u32..(1 << size) {
                let mut l = LeibnizSC::zero(D);
                for (bit, &s) in chosen.iter().enumerate() {
                    let (i, j, k) = slots[s];
                    let v = if signs >> bit & 1 == 1 { -1 } else { 1 };
                    l.set(i, j, k, rat(v, 1));
                }
                if l.validate().is_err() || l.is_lie() {
                    continue;
                }
                let a = from_leibniz(&l).expect("validated");
                if !a.bilinear_is_zero() && !a.trilinear_is_zero() {
                    return Some(l);
                }
            }
            if !next_combination(&mut chosen, slots.len()) {
                break;
            }
        }
    }
    None
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

type Mat4 = [[Rational; 4]; 4];

fn mat_zero() -> Mat4 {
    std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()))
}

fn unit_mat(i: usize, j: usize) -> Mat4 {
    let mut m = mat_zero();
    m[i][j] = rat(1, 1);
    m
}

fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut m = mat_zero();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    m[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    m
}

fn commutator(a: &Mat4, b: &Mat4) -> Mat4 {
    let (x, y) = (mat_mul(a, b), mat_mul(b, a));
    std::array::from_fn(|i| std::array::from_fn(|j| &x[i][j] - &y[i][j]))
}

fn trace_form(a: &Mat4, b: &Mat4) -> Rational {
    let m = mat_mul(a, b);
    (0..4).map(|i| m[i][i].clone()).sum()
}

fn combine(coeffs: &[Rational], basis: &[Mat4]) -> Mat4 {
    let mut m = mat_zero();
    for (c, b) in coeffs.iter().zip(basis) {
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] += c * &b[i][j];
            }
        }
    }
    m
}

/// Coordinates in 4x4 matrices; the last diagonal entry is dropped since
/// everything is traceless.
fn flatten(m: &Mat4) -> Vec<Rational> {
    m.iter().flatten().take(15).cloned().collect()
}

/// The Lie-Yamaguti algebra on the 12-dimensional complement `m` of a
/// principal `sl2` subalgebra `h` in `sl4`, orthogonal for the trace form:
/// `[a,b] = p_m [a,b]` and `<a,b,c> = [p_h [a,b], c]`.
pub fn reductive_sl4() -> AlgebraSC {
    let q = Rationals;
    let e = combine(&[rat(1, 1), rat(1, 1), rat(1, 1)], &[unit_mat(0, 1), unit_mat(1, 2), unit_mat(2, 3)]);
    let f = combine(&[rat(3, 1), rat(4, 1), rat(3, 1)], &[unit_mat(1, 0), unit_mat(2, 1), unit_mat(3, 2)]);
    let h = commutator(&e, &f);
    let sub = [e, f, h];

    // sl4 basis: off-diagonal units and consecutive diagonal differences.
    let mut sl4 = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                sl4.push(unit_mat(i, j));
            }
        }
    }
    for k in 0..3 {
        let mut d = unit_mat(k, k);
        d[k + 1][k + 1] = rat(-1, 1);
        sl4.push(d);
    }

    // The complement is the kernel of X -> (tr(Xe), tr(Xf), tr(Xh)).
    let gram: Vec<Vec<Rational>> = sub.iter().map(|s| sl4.iter().map(|b| trace_form(s, b)).collect()).collect();
    let (r, _) = ExactMatrix::from_rows(q, 15, gram).expect("shape").rcf();
    let pivots = r.pivot_columns();
    let mut comp = Vec::new();
    for free in (0..15).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); 15];
        v[free] = rat(1, 1);
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        comp.push(combine(&v, &sl4));
    }
    debug_assert_eq!(comp.len(), 12);

    // Columns 0..12 are coordinates in m, 12..15 in h.
    let all: Vec<Mat4> = comp.iter().chain(sub.iter()).cloned().collect();
    let basis = ExactMatrix::from_rows(q, 15, all.iter().map(flatten).collect()).expect("shape");
    let inv = basis.inverse().expect("h and m are complementary");
    let coords = |m: &Mat4| -> Vec<Rational> {
        let row = ExactMatrix::from_rows(q, 15, vec![flatten(m)]).expect("shape");
        row.mul(&inv).expect("shape").row(0).to_vec()
    };

    let dim = comp.len();
    let mut a = AlgebraSC::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            let c = coords(&commutator(&comp[i], &comp[j]));
            for k in 0..dim {
                a.set_c(i, j, k, c[k].clone());
            }
            let hpart = combine(&c[dim..], &sub);
            for k in 0..dim {
                let t = coords(&commutator(&hpart, &comp[k]));
                for l in 0..dim {
                    a.set_t(i, j, k, l, t[l].clone());
                }
            }
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evallab::validate;

    #[test]
    fn every_bundled_algebra_is_valid() {
        for b in bundled_algebras() {
            let v = validate(&b.algebra);
            assert!(v.is_empty(), "{}: {:?}", b.name, v);
        }
    }

    #[test]
    fn search_finds_the_stored_algebra() {
        let found = search_leibniz_3(3).expect("a small example exists");
        assert_eq!(found, leibniz_3());
        assert!(!found.is_lie());
    }

    #[test]
    fn reductive_algebra_uses_both_operations() {
        let a = reductive_sl4();
        assert_eq!(a.dim(), 12);
        assert!(!a.bilinear_is_zero());
        assert!(!a.trilinear_is_zero());
    }
}
