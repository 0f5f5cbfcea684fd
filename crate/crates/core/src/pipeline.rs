//! Per-representation matrices of identities, extraction of the consequences
//! that involve only the bracket, and the containment test against the
//! consequences of anticommutativity.
//!
//! For an irreducible `π` of dimension `d`, every association type owns a
//! block of `d` columns; types appear in deglex order, so the binary types
//! fill the rightmost blocks. An identity contributes the `d` rows
//! `[R(I_1) | ... | R(I_m)]`, where `I_k` is its component of type `k` viewed
//! in the group algebra, and each skew-symmetry `σ` of type `T` contributes
//! the rows of `R(ι + σ)` in block `T`.
//!
//! The skew rows of each type span a subspace `K_T` of its block. Working
//! modulo `K_T` keeps the reduction small: each identity block is reduced
//! against the canonical form of `K_T` and only the non-pivot coordinates are
//! kept. Since the skew rows are block diagonal, the consequences supported
//! on binary columns are recovered exactly by lifting the binary part of the
//! reduced matrix and adjoining the binary skew rows.
//!
//! Replacing `R(x) = A(ι)⁻¹A(x)` by Clifton's unnormalized `A(x)` multiplies
//! each identity's block row on the left by the invertible `A(ι)`, which
//! preserves every row space; the fast path relies on this.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{row_space_contains, ExactMatrix, Field, IncrementalReducer, Rationals};
use crate::freealg::{types_of_degree, DegreeTypes, Polynomial, Term};
use crate::liftgen::{generate, GenerationSet, Identity};
use crate::perm::{all_perms, Perm};
use crate::symrep::{irrep, irreps, Irrep, Partition};
use crate::{rat, Rational};

/// Skew subspace of one type block, in canonical form.
#[derive(Clone, Debug)]
struct BlockProjection<F: Field> {
    /// Canonical rows of `K_T`, each of length `d`.
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl<F: Field> BlockProjection<F> {
    /// Coordinates of `v + K_T` on the free columns.
    fn project_into(&self, field: &F, v: &[F::Elem], out: &mut [F::Elem]) {
        let mut w = v.to_vec();
        let ops: Vec<(F::Elem, &[F::Elem])> = self
            .pivots
            .iter()
            .zip(&self.basis)
            .filter(|(&p, _)| !field.is_zero(&v[p]))
            .map(|(&p, b)| (v[p].clone(), b.as_slice()))
            .collect();
        if !ops.is_empty() {
            field.eliminate(&mut w, &ops);
        }
        for (o, &c) in out.iter_mut().zip(&self.free) {
            *o = w[c].clone();
        }
    }

    /// A representative with the given free coordinates and zero pivots.
    fn lift_into(&self, field: &F, q: &[F::Elem], out: &mut [F::Elem]) {
        for x in out.iter_mut() {
            *x = field.zero();
        }
        for (&c, x) in self.free.iter().zip(q) {
            out[c] = x.clone();
        }
    }
}

/// Column layout for one irreducible of one degree.
#[derive(Debug)]
pub struct Layout<F: Field> {
    field: F,
    irrep: &'static Irrep,
    types: &'static DegreeTypes,
    blocks: Vec<BlockProjection<F>>,
    /// Quotient column offset of each type, with the total width last.
    offsets: Vec<usize>,
}

impl<F: Field> Layout<F> {
    pub fn new(pi: &Partition, field: &F) -> Result<Self> {
        let n = pi.n();
        check_field(field, n)?;
        let irrep = irrep(pi)?;
        let types = types_of_degree(n)?;
        let d = irrep.dim();
        let mut blocks = Vec::with_capacity(types.len());
        let mut offsets = vec![0];
        for t in types.types() {
            let mut red = IncrementalReducer::new(field.clone(), d);
            for s in &t.skews {
                let elt = [(Perm::identity(n), field.one()), (s.sigma.clone(), field.one())];
                red.append(&irrep.a_of_element(field, &elt))?;
            }
            let basis_m = red.snapshot();
            let pivots = basis_m.pivot_columns();
            let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
            offsets.push(offsets.last().unwrap() + free.len());
            blocks.push(BlockProjection {
                basis: basis_m.row_iter().map(|r| r.to_vec()).collect(),
                pivots,
                free,
            });
        }
        Ok(Layout {
            field: field.clone(),
            irrep,
            types,
            blocks,
            offsets,
        })
    }

    pub fn partition(&self) -> &Partition {
        self.irrep.partition()
    }

    pub fn dim(&self) -> usize {
        self.irrep.dim()
    }

    pub fn degree(&self) -> usize {
        self.types.degree()
    }

    /// Width of the quotient coordinates.
    pub fn width(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Quotient offset of the binary blocks.
    pub fn binary_offset(&self) -> usize {
        self.offsets[self.types.binary_offset()]
    }

    /// Number of binary columns in full coordinates, `b_n · d`.
    pub fn binary_width(&self) -> usize {
        self.types.binary_count() * self.dim()
    }

    /// Group-algebra components of a polynomial, keyed by 0-based type.
    fn components(&self, p: &Polynomial) -> Result<BTreeMap<usize, Vec<(Perm, F::Elem)>>> {
        let mut comps: BTreeMap<usize, Vec<(Perm, F::Elem)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            let perm = Perm::from_images(m.labels.clone())?;
            comps
                .entry(m.type_index - 1)
                .or_default()
                .push((perm, self.field.from_rational(c)?));
        }
        Ok(comps)
    }

    /// The `d` rows of a polynomial in quotient coordinates.
    pub fn quotient_rows(&self, p: &Polynomial) -> Result<Vec<Vec<F::Elem>>> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        let d = self.dim();
        let f = &self.field;
        let mut rows = vec![vec![f.zero(); self.width()]; d];
        let mut buf = vec![f.zero(); d * d];
        for (k, elt) in self.components(p)? {
            let (lo, hi) = (self.offsets[k], self.offsets[k + 1]);
            if lo == hi {
                continue;
            }
            buf.iter_mut().for_each(|x| *x = f.zero());
            for (s, c) in &elt {
                self.irrep.accumulate_a(f, s, c, &mut buf);
            }
            for (r, row) in rows.iter_mut().enumerate() {
                self.blocks[k].project_into(f, &buf[r * d..(r + 1) * d], &mut row[lo..hi]);
            }
        }
        Ok(rows)
    }

    /// Full binary coordinates of a quotient vector supported on the binary
    /// blocks (given from the binary offset on).
    fn lift_binary(&self, q: &[F::Elem]) -> Vec<F::Elem> {
        let d = self.dim();
        let b0 = self.types.binary_offset();
        let qb = self.binary_offset();
        let mut out = vec![self.field.zero(); self.binary_width()];
        for j in 0..self.types.binary_count() {
            let k = b0 + j;
            let (lo, hi) = (self.offsets[k] - qb, self.offsets[k + 1] - qb);
            self.blocks[k].lift_into(&self.field, &q[lo..hi], &mut out[j * d..(j + 1) * d]);
        }
        out
    }

    /// Canonical skew rows of the binary blocks, in full binary coordinates.
    fn binary_skew_rows(&self) -> Vec<Vec<F::Elem>> {
        let d = self.dim();
        let b0 = self.types.binary_offset();
        let mut rows = Vec::new();
        for j in 0..self.types.binary_count() {
            for r in &self.blocks[b0 + j].basis {
                let mut row = vec![self.field.zero(); self.binary_width()];
                row[j * d..(j + 1) * d].clone_from_slice(r);
                rows.push(row);
            }
        }
        rows
    }

    /// `B_π`: canonical form of the binary skew-symmetry rows.
    pub fn b_pi(&self) -> ExactMatrix<F> {
        let rows = self.binary_skew_rows();
        ExactMatrix::from_rows(self.field.clone(), self.binary_width(), rows).expect("same width")
    }
}

fn check_field<F: Field>(field: &F, n: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && p <= n as u64 {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            bound: n as u64,
        });
    }
    Ok(())
}

/// Limits on one partition's reduction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResourceCaps {
    pub max_rows: Option<usize>,
    pub max_seconds: Option<f64>,
}

/// Result of the reduction for one irreducible.
#[derive(Clone, Debug)]
pub struct PartitionAnalysis<F: Field> {
    pub partition: Partition,
    pub dim: usize,
    /// Rank of all identity and skew rows together.
    pub total_rank: usize,
    /// `A_π` in canonical form over the binary columns.
    pub a_pi: ExactMatrix<F>,
    /// `B_π` in canonical form over the binary columns.
    pub b_pi: ExactMatrix<F>,
    /// Rows of `A_π` outside the row space of `B_π`.
    pub new_rows: Vec<Vec<F::Elem>>,
    pub elapsed: Duration,
}

impl<F: Field> PartitionAnalysis<F> {
    pub fn contained(&self) -> bool {
        self.new_rows.is_empty()
    }
}

/// Feeds every identity into a fresh reducer in quotient coordinates.
fn reduce_identities<F: Field>(
    layout: &Layout<F>,
    ids: &[Identity],
    caps: &ResourceCaps,
    mut on_identity: impl FnMut(usize, bool),
) -> Result<IncrementalReducer<F>> {
    let start = Instant::now();
    let mut red = IncrementalReducer::new(layout.field.clone(), layout.width());
    if let Some(cap) = caps.max_rows {
        red = red.with_max_rows(cap);
    }
    for (i, id) in ids.iter().enumerate() {
        if let Some(limit) = caps.max_seconds {
            if start.elapsed().as_secs_f64() > limit {
                return Err(Error::ResourceCap(format!("time limit of {limit} s")));
            }
        }
        let mut raised = false;
        for row in layout.quotient_rows(&id.polynomial)? {
            raised |= red.append_row(row)?;
        }
        on_identity(i, raised);
    }
    Ok(red)
}

/// Runs the full reduction for one irreducible.
pub fn analyze_partition<F: Field>(
    g: &GenerationSet,
    pi: &Partition,
    field: &F,
    caps: &ResourceCaps,
) -> Result<PartitionAnalysis<F>> {
    let start = Instant::now();
    if pi.n() != g.degree {
        return Err(Error::DegreeMismatch {
            expected: g.degree,
            found: pi.n(),
        });
    }
    let layout = Layout::new(pi, field)?;
    let red = reduce_identities(&layout, &g.identities, caps, |_, _| {})?;
    let a_bar = red.rows_with_pivot_from(layout.binary_offset());
    let b_pi = layout.b_pi();
    let mut a_red = IncrementalReducer::new(field.clone(), layout.binary_width());
    a_red.append(&b_pi)?;
    let mut new_rows = Vec::new();
    for row in a_bar.row_iter() {
        a_red.append_row(layout.lift_binary(row))?;
    }
    let a_pi = a_red.snapshot();
    let b_canon = b_pi.rcf().0.nonzero_rows();
    for row in a_pi.row_iter() {
        if !b_canon.rcf_contains_row(row) {
            new_rows.push(row.to_vec());
        }
    }
    Ok(PartitionAnalysis {
        partition: pi.clone(),
        dim: layout.dim(),
        total_rank: red.rank() + layout.blocks.iter().map(|b| b.basis.len()).sum::<usize>(),
        a_pi,
        b_pi: b_canon,
        new_rows,
        elapsed: start.elapsed(),
    })
}

/// Outcome status of one partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum PartitionStatus {
    Ok,
    Aborted { reason: String },
}

/// Machine-readable summary of one partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub partition: Partition,
    pub dimension: usize,
    pub characteristic: u64,
    #[serde(flatten)]
    pub status: PartitionStatus,
    pub a_rank: Option<usize>,
    pub c_rank: Option<usize>,
    pub contained: Option<bool>,
    pub new_rows: Vec<Vec<String>>,
    /// Wall time; kept out of the serialized report so reports are
    /// reproducible byte for byte.
    #[serde(skip)]
    pub seconds: f64,
}

impl PartitionReport {
    pub fn from_analysis<F: Field>(a: &PartitionAnalysis<F>) -> Self {
        let f = a.a_pi.field();
        PartitionReport {
            partition: a.partition.clone(),
            dimension: a.dim,
            characteristic: f.characteristic(),
            status: PartitionStatus::Ok,
            a_rank: Some(a.a_pi.rows()),
            c_rank: Some(a.b_pi.rows()),
            contained: Some(a.contained()),
            new_rows: a
                .new_rows
                .iter()
                .map(|r| r.iter().map(|x| f.format(x)).collect())
                .collect(),
            seconds: a.elapsed.as_secs_f64(),
        }
    }

    pub fn aborted(pi: &Partition, characteristic: u64, reason: String, seconds: f64) -> Self {
        PartitionReport {
            partition: pi.clone(),
            dimension: irrep(pi).map(|r| r.dim()).unwrap_or(0),
            characteristic,
            status: PartitionStatus::Aborted { reason },
            a_rank: None,
            c_rank: None,
            contained: None,
            new_rows: Vec::new(),
            seconds,
        }
    }

    pub fn is_aborted(&self) -> bool {
        matches!(self.status, PartitionStatus::Aborted { .. })
    }
}

/// Analyzes the requested partitions of `g.degree`, in parallel, merging
/// results in partition order. Resource-cap failures become aborted
/// entries; other errors are returned.
pub fn analyze_degree<F: Field>(
    g: &GenerationSet,
    partitions: &[Partition],
    field: &F,
    caps: &ResourceCaps,
) -> Result<Vec<(PartitionReport, Option<PartitionAnalysis<F>>)>> {
    if !(4..=8).contains(&g.degree) {
        return Err(Error::InvalidDegree(g.degree));
    }
    partitions
        .par_iter()
        .map(|pi| {
            let start = Instant::now();
            match analyze_partition(g, pi, field, caps) {
                Ok(a) => Ok((PartitionReport::from_analysis(&a), Some(a))),
                Err(Error::ResourceCap(reason)) => Ok((
                    PartitionReport::aborted(pi, field.characteristic(), reason, start.elapsed().as_secs_f64()),
                    None,
                )),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// For each identity, whether it raised the rank in at least one
/// irreducible when the identities are processed in order.
pub fn rank_raising<F: Field>(g: &GenerationSet, field: &F) -> Result<Vec<bool>> {
    let masks: Vec<Vec<bool>> = irreps(g.degree)?
        .par_iter()
        .map(|rep| {
            let layout = Layout::new(rep.partition(), field)?;
            let mut mask = vec![false; g.len()];
            reduce_identities(&layout, &g.identities, &ResourceCaps::default(), |i, r| {
                mask[i] = r
            })?;
            Ok(mask)
        })
        .collect::<Result<_>>()?;
    Ok((0..g.len()).map(|i| masks.iter().any(|m| m[i])).collect())
}

/// Ranks of the identity rows (in quotient coordinates) per irreducible.
pub fn quotient_ranks<F: Field>(g: &GenerationSet, field: &F) -> Result<Vec<usize>> {
    irreps(g.degree)?
        .par_iter()
        .map(|rep| {
            let layout = Layout::new(rep.partition(), field)?;
            Ok(reduce_identities(&layout, &g.identities, &ResourceCaps::default(), |_, _| {})?.rank())
        })
        .collect()
}

/// `L_π`: the stacked block rows `[R(I_1) | ... | R(I_m)]` of every
/// identity, in full coordinates with the normalized Clifton matrices.
pub fn build_l_pi<F: Field>(g: &GenerationSet, pi: &Partition, field: &F) -> Result<ExactMatrix<F>> {
    if pi.n() != g.degree {
        return Err(Error::DegreeMismatch {
            expected: g.degree,
            found: pi.n(),
        });
    }
    let rep = irrep(pi)?;
    let types = types_of_degree(g.degree)?;
    let d = rep.dim();
    let mut out = ExactMatrix::zeros(field.clone(), 0, types.len() * d);
    for id in &g.identities {
        let mut block = ExactMatrix::zeros(field.clone(), d, types.len() * d);
        let mut comps: BTreeMap<usize, Vec<(Perm, F::Elem)>> = BTreeMap::new();
        for (m, c) in id.polynomial.terms() {
            comps
                .entry(m.type_index - 1)
                .or_default()
                .push((Perm::from_images(m.labels.clone())?, field.from_rational(c)?));
        }
        for (k, elt) in comps {
            let r = rep.rep_of_element(field, &elt)?;
            for i in 0..d {
                for j in 0..d {
                    block.set(i, k * d + j, r.get(i, j).clone());
                }
            }
        }
        out = out.stack(&block)?;
    }
    Ok(out)
}

/// Rows `R(ι + σ)` for every skew-symmetry, in full coordinates; with
/// `binary_only` the matrix has only the binary columns.
pub fn build_skew_rows<F: Field>(n: usize, pi: &Partition, field: &F, binary_only: bool) -> Result<ExactMatrix<F>> {
    let rep = irrep(pi)?;
    let types = types_of_degree(n)?;
    let d = rep.dim();
    let first = if binary_only { types.binary_offset() } else { 0 };
    let cols = (types.len() - first) * d;
    let mut out = ExactMatrix::zeros(field.clone(), 0, cols);
    for t in &types.types()[first..] {
        let k = t.index - 1 - first;
        for s in &t.skews {
            let r = rep.rep_of_element(field, &[(Perm::identity(n), field.one()), (s.sigma.clone(), field.one())])?;
            let mut block = ExactMatrix::zeros(field.clone(), d, cols);
            for i in 0..d {
                for j in 0..d {
                    block.set(i, k * d + j, r.get(i, j).clone());
                }
            }
            out = out.stack(&block)?;
        }
    }
    Ok(out)
}

/// `B_π` built directly from the binary skew rows.
pub fn build_b_pi<F: Field>(n: usize, pi: &Partition, field: &F) -> Result<ExactMatrix<F>> {
    Ok(build_skew_rows(n, pi, field, true)?.rcf().0.nonzero_rows())
}

/// Rows of a canonical form whose leading entry lies at or after `start`,
/// restricted to those columns.
pub fn extract_a_pi<F: Field>(rcf: &ExactMatrix<F>, start: usize) -> ExactMatrix<F> {
    let rows: Vec<Vec<F::Elem>> = rcf
        .row_iter()
        .filter(|r| r.iter().position(|x| !rcf.field().is_zero(x)).is_some_and(|p| p >= start))
        .map(|r| r[start..].to_vec())
        .collect();
    ExactMatrix::from_rows(rcf.field().clone(), rcf.cols() - start, rows).expect("same width")
}

/// An alternating or plain combination of binary association types.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitIdentity {
    pub degree: usize,
    /// `(1-based binary type index, coefficient)`.
    pub terms: Vec<(usize, Rational)>,
    /// Sum over all `σ` with sign `ε(σ)` of the labeled types.
    pub alternating: bool,
}

impl ExplicitIdentity {
    fn check(&self) -> Result<&'static DegreeTypes> {
        let types = types_of_degree(self.degree)?;
        if self.terms.is_empty() {
            return Err(Error::DegenerateIdentity);
        }
        for (j, _) in &self.terms {
            types.binary(*j)?;
        }
        Ok(types)
    }

    /// The identity as a polynomial of canonical monomials.
    pub fn polynomial(&self) -> Result<Polynomial> {
        let types = self.check()?;
        let n = self.degree;
        let mut p = Polynomial::zero(n);
        let perms = if self.alternating {
            all_perms(n)
        } else {
            vec![Perm::identity(n)]
        };
        for (j, c) in &self.terms {
            let tree = &types.binary(*j)?.tree;
            for s in &perms {
                let sign = if self.alternating { s.sign() } else { 1 };
                let coef = if sign < 0 { -c.clone() } else { c.clone() };
                p.add_term(&Term::from_tree(tree, s.images()), coef)?;
            }
        }
        Ok(p)
    }

    /// Terms rendered with letters, `(coefficient, bracketing)`.
    pub fn rendered_terms(&self) -> Result<Vec<(Rational, String)>> {
        let types = self.check()?;
        let labels: Vec<u8> = (0..self.degree as u8).collect();
        self.terms
            .iter()
            .map(|(j, c)| {
                let tree = &types.binary(*j)?.tree;
                Ok((c.clone(), Term::from_tree(tree, &labels).render(self.degree <= 8)))
            })
            .collect()
    }

    /// Vector over the binary columns of the sign representation, before
    /// the skew quotient: entry `j` is the coefficient of binary type `j`.
    pub fn sign_vector(&self) -> Result<Vec<Rational>> {
        let types = self.check()?;
        if !self.alternating {
            return Err(Error::Unsupported("sign vector of a non-alternating identity".into()));
        }
        let mut v = vec![Rational::zero(); types.binary_count()];
        for (j, c) in &self.terms {
            v[j - 1] += c;
        }
        Ok(v)
    }
}

impl std::fmt::Display for ExplicitIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = self.rendered_terms().map_err(|_| std::fmt::Error)?;
        if self.alternating {
            f.write_str("sum over sigma of sign(sigma) * ( ")?;
        }
        for (i, (c, t)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !a.is_one() {
                write!(f, "{a} ")?;
            }
            f.write_str(t)?;
        }
        if self.alternating {
            f.write_str(" )")?;
        }
        Ok(())
    }
}

/// Reads a row of `A_{1ⁿ}` as an alternating identity.
pub fn reconstruct_identity<F: Field>(pi: &Partition, row: &[F::Elem], field: &F) -> Result<ExplicitIdentity> {
    if !pi.is_sign() {
        return Err(Error::Unsupported(format!(
            "explicit identities from partition {pi}; only the sign representation is supported"
        )));
    }
    let n = pi.n();
    let types = types_of_degree(n)?;
    if row.len() != types.binary_count() {
        return Err(Error::DimensionMismatch {
            expected: types.binary_count(),
            found: row.len(),
        });
    }
    let terms: Vec<(usize, Rational)> = row
        .iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(j, x)| (j + 1, field.to_rational(x)))
        .collect();
    if terms.is_empty() {
        return Err(Error::DegenerateIdentity);
    }
    Ok(ExplicitIdentity {
        degree: n,
        terms,
        alternating: true,
    })
}

/// Verdicts for a candidate identity in the sign representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub not_anticommutative_consequence: bool,
    pub is_ly_consequence: bool,
}

/// The sign-representation data needed to certify identities of one
/// degree: the binary skew rows and the reduced identity rows.
pub struct SignCertifier {
    layout: Layout<Rationals>,
    reducer: IncrementalReducer<Rationals>,
}

impl SignCertifier {
    pub fn new(g: &GenerationSet) -> Result<Self> {
        let pi = Partition::new(vec![1; g.degree])?;
        let layout = Layout::new(&pi, &Rationals)?;
        let reducer = reduce_identities(&layout, &g.identities, &ResourceCaps::default(), |_, _| {})?;
        Ok(SignCertifier { layout, reducer })
    }

    /// For the full generator set of degree `n`.
    pub fn for_degree(n: usize) -> Result<Self> {
        Self::new(&generate(n)?)
    }

    pub fn certify(&self, id: &ExplicitIdentity) -> Result<Certificate> {
        let n = self.layout.degree();
        if id.degree != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: id.degree,
            });
        }
        let v = id.sign_vector()?;
        let types = self.layout.types;
        let b0 = types.binary_offset();
        let qb = self.layout.binary_offset();
        let mut q = vec![Rational::zero(); self.layout.width()];
        for (j, c) in v.iter().enumerate() {
            let k = b0 + j;
            let (lo, hi) = (self.layout.offsets[k], self.layout.offsets[k + 1]);
            self.layout.blocks[k].project_into(&Rationals, std::slice::from_ref(c), &mut q[lo..hi]);
        }
        if q[qb..].iter().all(Zero::is_zero) {
            return Err(Error::DegenerateIdentity);
        }
        let row = ExactMatrix::from_rows(Rationals, v.len(), vec![v])?;
        Ok(Certificate {
            not_anticommutative_consequence: !row_space_contains(&row, &self.layout.b_pi())?,
            is_ly_consequence: self.reducer.contains(&q)?,
        })
    }
}

/// Certifies `id` against the full generator set of its degree.
pub fn certify_new(id: &ExplicitIdentity) -> Result<Certificate> {
    SignCertifier::for_degree(id.degree)?.certify(id)
}

/// The new identity in degree 8: binary types and coefficients.
pub fn theorem_identity() -> ExplicitIdentity {
    ExplicitIdentity {
        degree: 8,
        terms: vec![
            (4, rat(1, 1)),
            (7, rat(-3, 2)),
            (9, rat(-1, 1)),
            (10, rat(1, 1)),
            (14, rat(2, 1)),
            (18, rat(3, 1)),
            (20, rat(2, 1)),
            (21, rat(-2, 1)),
        ],
        alternating: true,
    }
}

/// Sign-representation coefficient vector of a polynomial over all types:
/// entry `k` is `Σ c · ε(labels)` over the monomials of type `k + 1`.
pub fn sign_row(p: &Polynomial) -> Result<Vec<Rational>> {
    let types = types_of_degree(p.degree())?;
    let mut v = vec![Rational::zero(); types.len()];
    for (m, c) in p.terms() {
        let s = crate::perm::sign_of(&m.labels);
        if s < 0 {
            v[m.type_index - 1] -= c;
        } else {
            v[m.type_index - 1] += c;
        }
    }
    Ok(v)
}

/// Canonical alternation of one labeled binary type: `Σ ε(σ) σ·m`.
pub fn alternation(n: usize, binary_index: usize) -> Result<Polynomial> {
    ExplicitIdentity {
        degree: n,
        terms: vec![(binary_index, Rational::one())],
        alternating: true,
    }
    .polynomial()
}
