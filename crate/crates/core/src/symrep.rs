//! Irreducible representations of the symmetric group by Clifton's tableau
//! method.
//!
//! Each irreducible is labeled by a partition `π` of `n`. With the standard
//! tableaux `t_1, ..., t_d` in a fixed order, `A_π(σ)` is the `d × d` integer
//! matrix whose `(i, j)` entry is `ε(q)` when `p t_i = q σ t_j` for a row
//! permutation `p` of `t_i` and a column permutation `q` of `σ t_j`, and zero
//! when no such pair exists. Then `R_π(σ) = A_π(ι)⁻¹ A_π(σ)`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Field, Rationals};
use crate::freealg::MAX_DEGREE;
use crate::perm::{factorial, Perm};

/// A partition of `n` into non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<u8>);

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The one-row partition `(n)` labeling the trivial representation.
    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    /// The one-column partition `1ⁿ` labeling the sign representation.
    pub fn is_sign(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.0[0] as usize;
        Partition(
            (0..cols)
                .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u8)
                .collect(),
        )
    }

    /// `d_π` by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len as usize {
                let arm = len as usize - c - 1;
                let leg = conj.0[c] as usize - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(self.n()) as u128 / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let run = self.0[i..].iter().take_while(|&&q| q == p).count();
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3+2+1^3` and the comma form `3,2,1,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad partition {s:?}"));
        let mut parts = Vec::new();
        for piece in s.trim().split(['+', ',']) {
            let piece = piece.trim();
            let (base, exp) = match piece.split_once('^') {
                Some((b, e)) => (b, e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (piece, 1),
            };
            let p: u8 = base.trim().parse().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(p, exp));
        }
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first and
/// `1ⁿ` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as u8);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A filling of a Young diagram by `1..=n`, stored row by row with 0-based
/// values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<u8>>,
    row_of: Vec<u8>,
    col_of: Vec<u8>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut row_of = vec![u8::MAX; n];
        let mut col_of = vec![u8::MAX; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let v = v as usize;
                if v >= n || row_of[v] != u8::MAX {
                    return Err(Error::Parse(format!("tableau is not a bijective filling: {rows:?}")));
                }
                row_of[v] = r as u8;
                col_of[v] = c as u8;
            }
        }
        Partition::new(rows.iter().map(|r| r.len() as u8).collect())?;
        Ok(Tableau { rows, row_of, col_of })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len() as u8).collect())
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    }

    /// Concatenation of the rows.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.concat()
    }
}

/// Standard tableaux of shape `π`, sorted by reading word.
pub fn standard_tableaux(pi: &Partition) -> Vec<Tableau> {
    fn rec(v: u8, n: u8, shape: &[u8], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if v == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] as usize && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(v);
                rec(v + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut fillings = Vec::new();
    let mut rows = vec![Vec::new(); pi.0.len()];
    rec(0, pi.n() as u8, &pi.0, &mut rows, &mut fillings);
    fillings.sort_by_key(|rows| rows.concat());
    fillings
        .into_iter()
        .map(|rows| Tableau::from_rows(rows).expect("valid filling"))
        .collect()
}

/// `d_π` counted as the number of standard tableaux.
pub fn dimension(pi: &Partition) -> usize {
    standard_tableaux(pi).len()
}

/// Per-partition data for Clifton's construction.
#[derive(Debug)]
pub struct Irrep {
    partition: Partition,
    tableaux: Vec<Tableau>,
    a_identity_inverse: OnceLock<ExactMatrix<Rationals>>,
}

impl Irrep {
    pub fn new(partition: Partition) -> Self {
        let tableaux = standard_tableaux(&partition);
        Irrep {
            partition,
            tableaux,
            a_identity_inverse: OnceLock::new(),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Adds `coef · A_π(σ)` into the row-major `d × d` buffer `out`.
    pub fn accumulate_a<F: Field>(&self, field: &F, sigma: &Perm, coef: &F::Elem, out: &mut [F::Elem]) {
        let d = self.dim();
        let n = self.n();
        debug_assert_eq!(out.len(), d * d);
        let neg = field.neg(coef);
        let inv = sigma.inverse();
        let mut target = [0u8; MAX_DEGREE];
        for (i, ti) in self.tableaux.iter().enumerate() {
            for (j, tj) in self.tableaux.iter().enumerate() {
                // Entry w of σ t_j sits where σ⁻¹(w) sits in t_j.
                let mut ok = true;
                let mut used = [0u16; MAX_DEGREE];
                for w in 0..n {
                    let r = ti.row_of[w] as usize;
                    let c = tj.col_of[inv.apply(w)] as usize;
                    if used[r] & (1 << c) != 0 {
                        ok = false;
                        break;
                    }
                    used[r] |= 1 << c;
                }
                if !ok {
                    continue;
                }
                // Parity of q: within each column of σ t_j, read entries top to
                // bottom and count inversions among their target rows.
                let mut odd = false;
                for col in 0..tj.rows[0].len() {
                    let mut len = 0;
                    for row in &tj.rows {
                        if let Some(&v) = row.get(col) {
                            target[len] = ti.row_of[sigma.apply(v as usize)];
                            len += 1;
                        } else {
                            break;
                        }
                    }
                    for a in 0..len {
                        for b in a + 1..len {
                            if target[a] > target[b] {
                                odd = !odd;
                            }
                        }
                    }
                }
                let slot = &mut out[i * d + j];
                *slot = field.add(slot, if odd { &neg } else { coef });
            }
        }
    }

    /// `A_π(σ)` over `field`.
    pub fn a_matrix<F: Field>(&self, field: &F, sigma: &Perm) -> ExactMatrix<F> {
        self.a_of_element(field, &[(sigma.clone(), field.one())])
    }

    /// `Σ c · A_π(σ)`.
    pub fn a_of_element<F: Field>(&self, field: &F, elt: &[(Perm, F::Elem)]) -> ExactMatrix<F> {
        let d = self.dim();
        let mut m = ExactMatrix::zeros(field.clone(), d, d);
        let mut buf = vec![field.zero(); d * d];
        for (s, c) in elt {
            self.accumulate_a(field, s, c, &mut buf);
        }
        for (k, v) in buf.into_iter().enumerate() {
            m.set(k / d, k % d, v);
        }
        m
    }

    fn a_identity_inverse(&self) -> &ExactMatrix<Rationals> {
        self.a_identity_inverse.get_or_init(|| {
            let id = Perm::identity(self.n());
            self.a_matrix(&Rationals, &id)
                .inverse()
                .expect("A(ι) is invertible in characteristic 0")
        })
    }

    /// `R_π(σ) = A_π(ι)⁻¹ A_π(σ)`.
    pub fn clifton_matrix<F: Field>(&self, field: &F, sigma: &Perm) -> Result<ExactMatrix<F>> {
        self.rep_of_element(field, &[(sigma.clone(), field.one())])
    }

    /// `Σ c · R_π(σ)`, the linear extension to the group algebra.
    pub fn rep_of_element<F: Field>(&self, field: &F, elt: &[(Perm, F::Elem)]) -> Result<ExactMatrix<F>> {
        if let Some((s, _)) = elt.iter().find(|(s, _)| s.len() != self.n()) {
            return Err(Error::DegreeMismatch {
                expected: self.n(),
                found: s.len(),
            });
        }
        let inv = self.a_identity_inverse().convert(field.clone())?;
        inv.mul(&self.a_of_element(field, elt))
    }
}

static IRREPS: [OnceLock<Vec<Irrep>>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

/// Cached irreducibles of `S_n`, in partition order.
pub fn irreps(n: usize) -> Result<&'static [Irrep]> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree(n));
    }
    Ok(IRREPS[n].get_or_init(|| partitions(n).into_iter().map(Irrep::new).collect()))
}

/// The cached irreducible for `π`.
pub fn irrep(pi: &Partition) -> Result<&'static Irrep> {
    irreps(pi.n())?
        .iter()
        .find(|r| r.partition == *pi)
        .ok_or_else(|| Error::Parse(format!("no partition {pi}")))
}

/// `R_π(σ)` over `field`.
pub fn clifton_matrix<F: Field>(pi: &Partition, sigma: &Perm, field: &F) -> Result<ExactMatrix<F>> {
    irrep(pi)?.clifton_matrix(field, sigma)
}

/// `Σ c · R_π(σ)` over `field`.
pub fn rep_of_element<F: Field>(pi: &Partition, elt: &[(Perm, F::Elem)], field: &F) -> Result<ExactMatrix<F>> {
    irrep(pi)?.rep_of_element(field, elt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::perm::all_perms;

    #[test]
    fn partition_order_and_render() {
        let p3: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, ["3", "2+1", "1^3"]);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(8).len(), 22);
        assert!(partitions(8).last().unwrap().is_sign());
        let p: Partition = "3+2+1^3".parse().unwrap();
        assert_eq!(p.parts(), &[3, 2, 1, 1, 1]);
        assert_eq!(p.to_string(), "3+2+1^3");
        assert!("2+3".parse::<Partition>().is_err());
    }

    #[test]
    fn dimensions_agree() {
        for n in 1..=8 {
            let mut total = 0u128;
            for p in partitions(n) {
                let d = dimension(&p);
                assert_eq!(d as u128, p.hook_dimension(), "{p}");
                assert!(standard_tableaux(&p).iter().all(Tableau::is_standard));
                total += (d * d) as u128;
            }
            assert_eq!(total, factorial(n) as u128);
        }
    }

    #[test]
    fn homomorphism_exhaustive_small() {
        let f = PrimeField::new(101).unwrap();
        for n in 1..=4 {
            let perms = all_perms(n);
            for rep in irreps(n).unwrap() {
                for s in &perms {
                    let rs = rep.clifton_matrix(&f, s).unwrap();
                    for t in &perms {
                        let rt = rep.clifton_matrix(&f, t).unwrap();
                        let rst = rep.clifton_matrix(&f, &s.compose(t)).unwrap();
                        assert_eq!(rs.mul(&rt).unwrap(), rst, "{} {} {}", rep.partition(), s, t);
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_and_sign() {
        for s in all_perms(4) {
            let triv = clifton_matrix(&"4".parse().unwrap(), &s, &Rationals).unwrap();
            assert_eq!(triv, ExactMatrix::from_i64(Rationals, &[vec![1]]));
            let sign = clifton_matrix(&"1^4".parse().unwrap(), &s, &Rationals).unwrap();
            assert_eq!(sign, ExactMatrix::from_i64(Rationals, &[vec![s.sign() as i64]]));
        }
    }
}
