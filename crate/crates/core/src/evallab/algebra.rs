use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{rat, Rational};

pub type Vector = Vec<Rational>;

/// Structure constants of a bilinear and a trilinear operation.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSC {
    dim: usize,
    /// `[e_i, e_j] = Σ_k bilinear[(i·d + j)·d + k] e_k`.
    bilinear: Vec<Rational>,
    /// `<e_i, e_j, e_k> = Σ_l trilinear[((i·d + j)·d + k)·d + l] e_l`.
    trilinear: Vec<Rational>,
}

impl AlgebraSC {
    pub fn zero(dim: usize) -> Self {
        AlgebraSC {
            dim,
            bilinear: vec![Rational::zero(); dim.pow(3)],
            trilinear: vec![Rational::zero(); dim.pow(4)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `[e_i, e_j]` (0-based).
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.bilinear[(i * self.dim + j) * self.dim + k]
    }

    /// Coefficient of `e_l` in `<e_i, e_j, e_k>` (0-based).
    pub fn t(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.trilinear[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    pub fn set_c(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let d = self.dim;
        self.bilinear[(i * d + j) * d + k] = v;
    }

    pub fn set_t(&mut self, i: usize, j: usize, k: usize, l: usize, v: Rational) {
        let d = self.dim;
        self.trilinear[((i * d + j) * d + k) * d + l] = v;
    }

    pub fn bilinear_is_zero(&self) -> bool {
        self.bilinear.iter().all(Zero::is_zero)
    }

    pub fn trilinear_is_zero(&self) -> bool {
        self.trilinear.iter().all(Zero::is_zero)
    }

    /// Nonzero bilinear constants as `(i, j, k, value)`, 0-based.
    pub fn bilinear_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim;
        let mut out = Vec::new();
        for (idx, v) in self.bilinear.iter().enumerate() {
            if !v.is_zero() {
                out.push((idx / (d * d), idx / d % d, idx % d, v.clone()));
            }
        }
        out
    }

    /// Nonzero trilinear constants as `(i, j, k, l, value)`, 0-based.
    pub fn trilinear_entries(&self) -> Vec<(usize, usize, usize, usize, Rational)> {
        let d = self.dim;
        let mut out = Vec::new();
        for (idx, v) in self.trilinear.iter().enumerate() {
            if !v.is_zero() {
                out.push((idx / (d * d * d), idx / (d * d) % d, idx / d % d, idx % d, v.clone()));
            }
        }
        out
    }

    fn check(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = rat(1, 1);
        v
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.check(u)?;
        self.check(v)?;
        let d = self.dim;
        let mut out = vec![Rational::zero(); d];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ui * vj;
                let base = (i * d + j) * d;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.bilinear[base + k];
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn triple(&self, u: &[Rational], v: &[Rational], w: &[Rational]) -> Result<Vector> {
        self.check(u)?;
        self.check(v)?;
        self.check(w)?;
        let d = self.dim;
        let mut out = vec![Rational::zero(); d];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ui * vj;
                for (k, wk) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let s2 = &s * wk;
                    let base = ((i * d + j) * d + k) * d;
                    for (l, o) in out.iter_mut().enumerate() {
                        let c = &self.trilinear[base + l];
                        if !c.is_zero() {
                            *o += &s2 * c;
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Structure constants of a product `{e_i, e_j} = Σ_k p[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizSC {
    dim: usize,
    product: Vec<Rational>,
}

impl LeibnizSC {
    pub fn zero(dim: usize) -> Self {
        LeibnizSC {
            dim,
            product: vec![Rational::zero(); dim.pow(3)],
        }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut l = Self::zero(dim);
        for (i, j, k, v) in entries {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: (*i).max(*j).max(*k) + 1,
                });
            }
            l.set(*i, *j, *k, v.clone());
        }
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.product[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let d = self.dim;
        self.product[(i * d + j) * d + k] = v;
    }

    /// `{e_i, e_j}` as a vector.
    fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let d = self.dim;
        &self.product[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let d = self.dim;
        let mut out = vec![Rational::zero(); d];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let s = ui * vj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vector {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = rat(1, 1);
        v
    }

    /// Checks `{{a,b},c} = {{a,c},b} + {a,{b,c}}` on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim;
        for a in 0..d {
            for b in 0..d {
                let ab = self.basis_product(a, b).to_vec();
                for c in 0..d {
                    let ec = self.unit(c);
                    let lhs = self.mul(&ab, &ec);
                    let ac = self.basis_product(a, c).to_vec();
                    let bc = self.basis_product(b, c).to_vec();
                    let r1 = self.mul(&ac, &self.unit(b));
                    let r2 = self.mul(&self.unit(a), &bc);
                    if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (x, y))| *l != x + y) {
                        return Err(Error::NotLeibniz(a + 1, b + 1, c + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// True when the product is anticommutative, i.e. a Lie algebra.
    pub fn is_lie(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                self.basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .all(|(x, y)| (x + y).is_zero())
            })
        })
    }
}

/// The axioms of a Lie-Yamaguti algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    LY1,
    LY2,
    LY3,
    LY4,
    LY5,
    LY6,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A violated axiom with the first basis tuple (1-based) that fails it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|i| format!("e{i}")).collect();
        write!(f, "{} fails at ({})", self.axiom, w.join(", "))
    }
}

fn add_all(vs: &[Vector]) -> Vector {
    let mut out = vs[0].clone();
    for v in &vs[1..] {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Checks LY1 to LY6 on all basis tuples; returns the first witness of each
/// violated axiom (empty when the algebra is Lie-Yamaguti).
pub fn validate(a: &AlgebraSC) -> Vec<Violation> {
    let d = a.dim();
    let e: Vec<Vector> = (0..d).map(|i| a.basis_vector(i)).collect();
    let br = |x: &[Rational], y: &[Rational]| a.bracket(x, y).expect("dimension");
    let tr = |x: &[Rational], y: &[Rational], z: &[Rational]| a.triple(x, y, z).expect("dimension");
    let mut out = Vec::new();
    let mut record = |axiom: Axiom, w: &[usize]| {
        out.push(Violation {
            axiom,
            witness: w.iter().map(|i| i + 1).collect(),
        });
    };

    // The polarized forms of LY1 and LY2 on basis vectors.
    'ly1: for i in 0..d {
        for j in i..d {
            let s = add_all(&[br(&e[i], &e[j]), br(&e[j], &e[i])]);
            if !is_zero(&s) {
                record(Axiom::LY1, &[i, j]);
                break 'ly1;
            }
        }
    }
    'ly2: for i in 0..d {
        for j in i..d {
            for k in 0..d {
                let s = add_all(&[tr(&e[i], &e[j], &e[k]), tr(&e[j], &e[i], &e[k])]);
                if !is_zero(&s) {
                    record(Axiom::LY2, &[i, j, k]);
                    break 'ly2;
                }
            }
        }
    }
    let brs: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| br(&e[i], &e[j])).collect()).collect();
    'ly3: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let s = add_all(&[
                    br(&brs[i][j], &e[k]),
                    br(&brs[j][k], &e[i]),
                    br(&brs[k][i], &e[j]),
                    tr(&e[i], &e[j], &e[k]),
                    tr(&e[j], &e[k], &e[i]),
                    tr(&e[k], &e[i], &e[j]),
                ]);
                if !is_zero(&s) {
                    record(Axiom::LY3, &[i, j, k]);
                    break 'ly3;
                }
            }
        }
    }
    'ly4: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let s = add_all(&[
                        tr(&brs[i][j], &e[k], &e[l]),
                        tr(&brs[j][k], &e[i], &e[l]),
                        tr(&brs[k][i], &e[j], &e[l]),
                    ]);
                    if !is_zero(&s) {
                        record(Axiom::LY4, &[i, j, k, l]);
                        break 'ly4;
                    }
                }
            }
        }
    }
    let trs: Vec<Vec<Vec<Vector>>> = (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| tr(&e[i], &e[j], &e[k])).collect()).collect())
        .collect();
    'ly5: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let lhs = tr(&e[i], &e[j], &brs[k][l]);
                    let rhs = add_all(&[br(&trs[i][j][k], &e[l]), br(&e[k], &trs[i][j][l])]);
                    if lhs != rhs {
                        record(Axiom::LY5, &[i, j, k, l]);
                        break 'ly5;
                    }
                }
            }
        }
    }
    'ly6: for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    for m in 0..d {
                        let lhs = tr(&e[i], &e[j], &trs[k][l][m]);
                        let rhs = add_all(&[
                            tr(&trs[i][j][k], &e[l], &e[m]),
                            tr(&e[k], &trs[i][j][l], &e[m]),
                            tr(&e[k], &e[l], &trs[i][j][m]),
                        ]);
                        if !is_zero(&sub(&lhs, &rhs)) {
                            record(Axiom::LY6, &[i, j, k, l, m]);
                            break 'ly6;
                        }
                    }
                }
            }
        }
    }
    out
}

/// A Lie algebra with zero trilinear operation.
pub fn from_lie(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<AlgebraSC> {
    let mut a = AlgebraSC::zero(dim);
    for (i, j, k, v) in entries {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: (*i).max(*j).max(*k) + 1,
            });
        }
        a.set_c(*i, *j, *k, v.clone());
    }
    Ok(a)
}

/// The Lie-Yamaguti structure on a Leibniz algebra:
/// `[a,b] = {a,b} - {b,a}` and `<a,b,c> = {c,{a,b}}`.
///
/// With the identity `{{a,b},c} = {{a,c},b} + {a,{b,c}}`, right
/// multiplications are derivations and symmetric products annihilate from
/// the right, so `{c,{a,b}}` is alternating in `a,b`. On a Lie algebra the
/// skew bracket is twice the product and the triple becomes
/// `-1/4 [[a,b],c]`.
pub fn from_leibniz(l: &LeibnizSC) -> Result<AlgebraSC> {
    l.validate()?;
    let d = l.dim();
    let mut a = AlgebraSC::zero(d);
    
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                a.set_c(i, j, k, l.p(i, j, k) - l.p(j, i, k));
            }
            let ij = l.basis_product(i, j).to_vec();
            for k in 0..d {
                let v = l.mul(&l.unit(k), &ij);
                for (m, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        a.set_t(i, j, k, m, x);
                    }
                }
            }
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evallab::{cross_product, cross_product_leibniz, nilpotent_leibniz};

    #[test]
    fn zero_algebra_is_valid() {
        assert!(validate(&AlgebraSC::zero(3)).is_empty());
    }

    #[test]
    fn lie_algebra_is_valid() {
        assert!(validate(&cross_product()).is_empty());
    }

    #[test]
    fn symmetric_bracket_violates_ly1() {
        let mut a = AlgebraSC::zero(2);
        a.set_c(0, 1, 0, rat(1, 1));
        a.set_c(1, 0, 0, rat(1, 1));
        let v = validate(&a);
        assert_eq!(v[0].axiom, Axiom::LY1);
        assert_eq!(v[0].witness, vec![1, 2]);
    }

    #[test]
    fn jacobi_failure_violates_ly3() {
        // [e1,e2] = e1, [e1,e3] = e2 is anticommutative but not Lie.
        let e = [
            (0, 1, 0, rat(1, 1)),
            (1, 0, 0, rat(-1, 1)),
            (0, 2, 1, rat(1, 1)),
            (2, 0, 1, rat(-1, 1)),
        ];
        let v = validate(&from_lie(3, &e).unwrap());
        assert!(v.iter().any(|v| v.axiom == Axiom::LY3));
        assert!(v.iter().all(|v| v.axiom != Axiom::LY1));
    }

    #[test]
    fn nilpotent_leibniz_gives_valid_algebra() {
        let l = nilpotent_leibniz();
        l.validate().unwrap();
        assert!(!l.is_lie());
        assert!(validate(&from_leibniz(&l).unwrap()).is_empty());
    }

    #[test]
    fn non_leibniz_is_rejected() {
        // At (e1, e2, e2) the left side is e1 and the right side 2 e1.
        let l = LeibnizSC::from_entries(2, &[(0, 1, 0, rat(1, 1)), (1, 1, 1, rat(1, 1))]).unwrap();
        assert!(matches!(from_leibniz(&l), Err(Error::NotLeibniz(1, 2, 2))));
    }

    #[test]
    fn lie_as_leibniz_gives_quarter_triple() {
        let a = from_leibniz(&cross_product_leibniz()).unwrap();
        assert!(validate(&a).is_empty());
        let e: Vec<Vector> = (0..3).map(|i| a.basis_vector(i)).collect();
        for x in &e {
            for y in &e {
                for z in &e {
                    let bb = a.bracket(&a.bracket(x, y).unwrap(), z).unwrap();
                    let t = a.triple(x, y, z).unwrap();
                    let want: Vector = bb.iter().map(|c| c * rat(-1, 4)).collect();
                    assert_eq!(t, want);
                }
            }
        }
    }

    #[test]
    fn bracket_checks_dimension() {
        let a = cross_product();
        assert!(matches!(
            a.bracket(&[rat(1, 1)], &a.basis_vector(0)),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        ));
    }
}
