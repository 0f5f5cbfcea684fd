//! The defining identities of Lie-Yamaguti algebras and their liftings to
//! higher degrees.
//!
//! Every consequence of degree `n` is obtained from a seed by a sequence of
//! liftings. A binary lifting of an identity `I` of degree `n` either
//! substitutes `[a_i, a_{n+1}]` for one variable `a_i` or multiplies,
//! `[I, a_{n+1}]`. A ternary lifting substitutes `<a_i, a_{n+1}, a_{n+2}>`
//! or forms `<I, a_{n+1}, a_{n+2}>` and `<a_{n+1}, a_{n+2}, I>`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::freealg::{expand, Polynomial, Term};
use crate::{rat, Rational};

/// One of the four defining identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Seed {
    F,
    G1,
    G2,
    H,
}

impl Seed {
    pub const ALL: [Seed; 4] = [Seed::F, Seed::G1, Seed::G2, Seed::H];

    pub fn degree(self) -> usize {
        match self {
            Seed::F => 3,
            Seed::G1 | Seed::G2 => 4,
            Seed::H => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Seed::F => "f",
            Seed::G1 => "g1",
            Seed::G2 => "g2",
            Seed::H => "h",
        }
    }

    /// The identity as a signed list of terms in `x1, x2, ...`.
    pub fn terms(self) -> Vec<(Rational, Term)> {
        let v = Term::var;
        let b = Term::bin;
        let t = Term::ter;
        let (a, bb, c, d, e) = (v(0), v(1), v(2), v(3), v(4));
        let p = |x: i64| rat(x, 1);
        match self {
            Seed::F => vec![
                (p(1), b(b(a.clone(), bb.clone()), c.clone())),
                (p(-1), b(b(a.clone(), c.clone()), bb.clone())),
                (p(1), b(b(bb.clone(), c.clone()), a.clone())),
                (p(1), t(a.clone(), bb.clone(), c.clone())),
                (p(-1), t(a.clone(), c.clone(), bb.clone())),
                (p(1), t(bb, c, a)),
            ],
            Seed::G1 => vec![
                (p(1), t(b(a.clone(), bb.clone()), c.clone(), d.clone())),
                (p(-1), t(b(a.clone(), c.clone()), bb.clone(), d.clone())),
                (p(1), t(b(bb, c), a, d)),
            ],
            Seed::G2 => vec![
                (p(1), t(a.clone(), bb.clone(), b(c.clone(), d.clone()))),
                (p(-1), b(t(a.clone(), bb.clone(), c.clone()), d.clone())),
                (p(1), b(t(a, bb, d), c)),
            ],
            Seed::H => vec![
                (p(1), t(a.clone(), bb.clone(), t(c.clone(), d.clone(), e.clone()))),
                (p(-1), t(t(a.clone(), bb.clone(), c.clone()), d.clone(), e.clone())),
                (p(1), t(t(a.clone(), bb.clone(), d.clone()), c.clone(), e.clone())),
                (p(-1), t(c, d, t(a, bb, e))),
            ],
        }
    }

    pub fn polynomial(self) -> Polynomial {
        expand(&self.terms()).expect("seed terms are multilinear")
    }
}

/// One lifting step. Positions are 1-based variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftStep {
    BinarySub(usize),
    BinaryMul,
    TernarySub(usize),
    /// `0` for `<I, a, b>`, `1` for `<a, b, I>`.
    TernaryMul(usize),
}

impl LiftStep {
    /// Degree increase.
    pub fn step(self) -> usize {
        match self {
            LiftStep::BinarySub(_) | LiftStep::BinaryMul => 1,
            LiftStep::TernarySub(_) | LiftStep::TernaryMul(_) => 2,
        }
    }

    /// Applies this lifting to an identity of degree `n`.
    pub fn apply(self, p: &Polynomial) -> Result<Polynomial> {
        let n = p.degree();
        let x = Term::var(n);
        let y = Term::var(n + 1);
        match self {
            LiftStep::BinarySub(i) => {
                check_pos(i, n)?;
                let i = (i - 1) as u8;
                p.map_terms(n + 1, |t| {
                    t.substitute(&|v| {
                        if v == i {
                            Term::bin(Term::Var(v), x.clone())
                        } else {
                            Term::Var(v)
                        }
                    })
                })
            }
            LiftStep::BinaryMul => p.map_terms(n + 1, |t| Term::bin(t.clone(), x.clone())),
            LiftStep::TernarySub(i) => {
                check_pos(i, n)?;
                let i = (i - 1) as u8;
                p.map_terms(n + 2, |t| {
                    t.substitute(&|v| {
                        if v == i {
                            Term::ter(Term::Var(v), x.clone(), y.clone())
                        } else {
                            Term::Var(v)
                        }
                    })
                })
            }
            LiftStep::TernaryMul(0) => {
                p.map_terms(n + 2, |t| Term::ter(t.clone(), x.clone(), y.clone()))
            }
            LiftStep::TernaryMul(1) => {
                p.map_terms(n + 2, |t| Term::ter(x.clone(), y.clone(), t.clone()))
            }
            LiftStep::TernaryMul(k) => Err(Error::Parse(format!("bad ternary position {k}"))),
        }
    }

    /// All binary liftings of a degree-`n` identity, in generation order.
    pub fn binary_steps(n: usize) -> impl Iterator<Item = LiftStep> {
        (1..=n).map(LiftStep::BinarySub).chain([LiftStep::BinaryMul])
    }

    /// All ternary liftings of a degree-`n` identity, in generation order.
    pub fn ternary_steps(n: usize) -> impl Iterator<Item = LiftStep> {
        (1..=n)
            .map(LiftStep::TernarySub)
            .chain([LiftStep::TernaryMul(0), LiftStep::TernaryMul(1)])
    }
}

fn check_pos(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::Parse(format!("lifting position {i} outside 1..={n}")));
    }
    Ok(())
}

impl fmt::Display for LiftStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftStep::BinarySub(i) => write!(f, "binary-sub({i})"),
            LiftStep::BinaryMul => f.write_str("binary-mul"),
            LiftStep::TernarySub(i) => write!(f, "ternary-sub({i})"),
            LiftStep::TernaryMul(k) => write!(f, "ternary-mul({k})"),
        }
    }
}

/// How an identity was constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lineage {
    pub seed: Seed,
    pub steps: Vec<LiftStep>,
}

impl Lineage {
    pub fn seed(seed: Seed) -> Self {
        Lineage { seed, steps: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.seed.degree() + self.steps.iter().map(|s| s.step()).sum::<usize>()
    }

    pub fn then(&self, step: LiftStep) -> Self {
        let mut steps = self.steps.clone();
        steps.push(step);
        Lineage { seed: self.seed, steps }
    }

    /// Recomputes the polynomial from scratch.
    pub fn replay(&self) -> Result<Polynomial> {
        self.steps
            .iter()
            .try_fold(self.seed.polynomial(), |p, s| s.apply(&p))
    }
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.seed.name())?;
        for s in &self.steps {
            write!(f, " > {s}")?;
        }
        Ok(())
    }
}

/// A polynomial asserted to vanish, with its construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    pub polynomial: Polynomial,
    pub lineage: Lineage,
}

impl Identity {
    pub fn seed(seed: Seed) -> Self {
        Identity {
            polynomial: seed.polynomial(),
            lineage: Lineage::seed(seed),
        }
    }

    pub fn degree(&self) -> usize {
        self.polynomial.degree()
    }

    fn lift(&self, step: LiftStep) -> Lifted {
        let p = step.apply(&self.polynomial).expect("valid lifting step");
        let lineage = self.lineage.then(step);
        if p.is_zero() {
            Lifted::Vanished(lineage)
        } else {
            Lifted::Kept(Identity { polynomial: p, lineage })
        }
    }
}

enum Lifted {
    Kept(Identity),
    Vanished(Lineage),
}

/// The seed identities `f, g1, g2, h`.
pub fn seed_identities() -> [Identity; 4] {
    Seed::ALL.map(Identity::seed)
}

/// All binary liftings of `id`, dropping any that expand to zero.
pub fn lift_binary(id: &Identity) -> Vec<Identity> {
    lift_all(id, LiftStep::binary_steps(id.degree()))
}

/// All ternary liftings of `id`, dropping any that expand to zero.
pub fn lift_ternary(id: &Identity) -> Vec<Identity> {
    lift_all(id, LiftStep::ternary_steps(id.degree()))
}

fn lift_all(id: &Identity, steps: impl Iterator<Item = LiftStep>) -> Vec<Identity> {
    if id.polynomial.is_zero() {
        return Vec::new();
    }
    steps
        .filter_map(|s| match id.lift(s) {
            Lifted::Kept(i) => Some(i),
            Lifted::Vanished(_) => None,
        })
        .collect()
}

/// The generators of one degree, in generation order.
#[derive(Clone, Debug)]
pub struct GenerationSet {
    pub degree: usize,
    pub identities: Vec<Identity>,
    /// Constructions whose expansion vanished; kept so that counts of
    /// constructions stay exact.
    pub vanished: Vec<Lineage>,
    pub filtered: bool,
}

impl GenerationSet {
    fn seeds(degree: usize, seeds: &[Seed]) -> Self {
        GenerationSet {
            degree,
            identities: seeds.iter().map(|&s| Identity::seed(s)).collect(),
            vanished: Vec::new(),
            filtered: false,
        }
    }

    pub fn len(&self) -> usize {
        self.identities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.identities.is_empty()
    }

    /// Number of constructions, vanished ones included.
    pub fn construction_count(&self) -> usize {
        self.identities.len() + self.vanished.len()
    }

    fn extend_lifted(&mut self, from: &GenerationSet, ternary: bool) {
        let lifted: Vec<Vec<Lifted>> = from
            .identities
            .par_iter()
            .map(|id| {
                let n = id.degree();
                let steps: Vec<LiftStep> = if ternary {
                    LiftStep::ternary_steps(n).collect()
                } else {
                    LiftStep::binary_steps(n).collect()
                };
                steps.into_iter().map(|s| id.lift(s)).collect()
            })
            .collect();
        for l in lifted.into_iter().flatten() {
            match l {
                Lifted::Kept(i) => self.identities.push(i),
                Lifted::Vanished(l) => self.vanished.push(l),
            }
        }
        let n = from.degree;
        for l in &from.vanished {
            let steps: Vec<LiftStep> = if ternary {
                LiftStep::ternary_steps(n).collect()
            } else {
                LiftStep::binary_steps(n).collect()
            };
            self.vanished.extend(steps.into_iter().map(|s| l.then(s)));
        }
    }
}

/// The full set of lifted generators in degree `n`, for `3 <= n <= 8`.
pub fn generate(n: usize) -> Result<GenerationSet> {
    match n {
        3 => Ok(GenerationSet::seeds(3, &[Seed::F])),
        4 => {
            let g3 = generate(3)?;
            let mut g = GenerationSet::seeds(4, &[Seed::G1, Seed::G2]);
            g.extend_lifted(&g3, false);
            Ok(g)
        }
        5 => {
            let mut g = GenerationSet::seeds(5, &[Seed::H]);
            g.extend_lifted(&generate(4)?, false);
            g.extend_lifted(&generate(3)?, true);
            Ok(g)
        }
        6..=8 => generate_from(n, &generate(n - 1)?, &generate(n - 2)?),
        _ => Err(Error::InvalidDegree(n)),
    }
}

/// Degree `n >= 6` generators lifted from given sets in degrees `n - 1`
/// and `n - 2`, which may be filtered.
pub fn generate_from(n: usize, prev1: &GenerationSet, prev2: &GenerationSet) -> Result<GenerationSet> {
    if n < 6 {
        return Err(Error::InvalidDegree(n));
    }
    for (g, want) in [(prev1, n - 1), (prev2, n - 2)] {
        if g.degree != want {
            return Err(Error::DegreeMismatch {
                expected: want,
                found: g.degree,
            });
        }
    }
    let mut g = GenerationSet {
        degree: n,
        identities: Vec::new(),
        vanished: Vec::new(),
        filtered: false,
    };
    g.extend_lifted(prev1, false);
    g.extend_lifted(prev2, true);
    Ok(g)
}

/// `λ(n) = (n+1)!/20` for `n >= 4`, with `λ(3) = 1`.
pub fn lambda(n: usize) -> u128 {
    match n {
        0..=2 => 0,
        3 => 1,
        _ => (1..=(n as u128 + 1)).product::<u128>() / 20,
    }
}

/// Keeps the identities that raise the rank in at least one irreducible
/// representation, processing them in generation order.
pub fn filter_redundant<F: Field>(g: &GenerationSet, field: &F) -> Result<GenerationSet> {
    let keep = crate::pipeline::rank_raising(g, field)?;
    Ok(GenerationSet {
        degree: g.degree,
        identities: g
            .identities
            .iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(id, _)| id.clone())
            .collect(),
        vanished: Vec::new(),
        filtered: true,
    })
}

/// Generators in degree `n` lifted from filtered sets in degrees `n - 1`
/// and `n - 2`; below degree 6 this is the full set.
pub fn generate_with_filtered_inputs<F: Field>(n: usize, field: &F) -> Result<GenerationSet> {
    if n < 6 {
        return generate(n);
    }
    let p1 = filter_redundant(&generate(n - 1)?, field)?;
    let p2 = filter_redundant(&generate(n - 2)?, field)?;
    generate_from(n, &p1, &p2)
}

/// True iff the polynomial is nonzero, multilinear and of the given degree.
pub fn is_valid_identity(p: &Polynomial, degree: usize) -> bool {
    p.degree() == degree
        && !p.is_zero()
        && p.terms().all(|(m, _)| {
            let mut l = m.labels.clone();
            l.sort_unstable();
            l.iter().enumerate().all(|(i, &x)| i == x as usize)
        })
}
