use std::collections::HashMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{types_of_degree, Node, Polynomial, Term, Tree};
use crate::perm::all_perms;
use crate::pipeline::ExplicitIdentity;
use crate::{rat, Rational};

use super::algebra::{AlgebraSC, Vector};

/// Something that can be evaluated multilinearly on an algebra.
pub trait Evaluable: Sync {
    fn degree(&self) -> usize;

    /// True if the value changes sign under every transposition of
    /// arguments.
    fn is_alternating(&self) -> bool {
        false
    }

    fn evaluate(&self, a: &AlgebraSC, args: &[Vector]) -> Result<Vector>;
}

fn check_args(a: &AlgebraSC, n: usize, args: &[Vector]) -> Result<()> {
    if args.len() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: args.len(),
        });
    }
    if let Some(v) = args.iter().find(|v| v.len() != a.dim()) {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Value of a labeled term.
pub fn eval_term(a: &AlgebraSC, t: &Term, args: &[Vector]) -> Result<Vector> {
    match t {
        Term::Var(i) => args
            .get(*i as usize)
            .cloned()
            .ok_or(Error::DegreeMismatch {
                expected: *i as usize + 1,
                found: args.len(),
            }),
        Term::Bin(x, y) => a.bracket(&eval_term(a, x, args)?, &eval_term(a, y, args)?),
        Term::Ter(x, y, z) => a.triple(
            &eval_term(a, x, args)?,
            &eval_term(a, y, args)?,
            &eval_term(a, z, args)?,
        ),
    }
}

fn axpy(out: &mut [Rational], c: &Rational, v: &[Rational]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += c * x;
        }
    }
}

impl Evaluable for Polynomial {
    fn degree(&self) -> usize {
        Polynomial::degree(self)
    }

    fn evaluate(&self, a: &AlgebraSC, args: &[Vector]) -> Result<Vector> {
        check_args(a, self.degree(), args)?;
        let mut out = vec![Rational::zero(); a.dim()];
        for (m, c) in self.terms() {
            axpy(&mut out, c, &eval_term(a, &m.to_term(), args)?);
        }
        Ok(out)
    }
}

impl Evaluable for ExplicitIdentity {
    fn degree(&self) -> usize {
        self.degree
    }

    fn is_alternating(&self) -> bool {
        self.alternating
    }

    /// Alternating identities are evaluated by summing over the ways of
    /// splitting the argument set at each node, which visits each subset
    /// once instead of each permutation.
    fn evaluate(&self, a: &AlgebraSC, args: &[Vector]) -> Result<Vector> {
        check_args(a, self.degree, args)?;
        let types = types_of_degree(self.degree)?;
        let mut out = vec![Rational::zero(); a.dim()];
        if !self.alternating {
            let labels: Vec<u8> = (0..self.degree as u8).collect();
            for (j, c) in &self.terms {
                let t = Term::from_tree(&types.binary(*j)?.tree, &labels);
                axpy(&mut out, c, &eval_term(a, &t, args)?);
            }
            return Ok(out);
        }
        let mut memo = AltMemo {
            a,
            args,
            cache: HashMap::new(),
        };
        let full = (1u32 << self.degree) - 1;
        for (j, c) in &self.terms {
            let v = memo.alt(&types.binary(*j)?.tree, full)?;
            axpy(&mut out, c, &v);
        }
        Ok(out)
    }
}

struct AltMemo<'a> {
    a: &'a AlgebraSC,
    args: &'a [Vector],
    cache: HashMap<(Tree, u32), Vector>,
}

/// Sign of the shuffle listing `s1` (ascending) before `s2` (ascending).
fn shuffle_sign(s1: u32, s2: u32) -> bool {
    let mut odd = false;
    let mut bits = s1;
    while bits != 0 {
        let b = bits.trailing_zeros();
        odd ^= (s2 & ((1u32 << b) - 1)).count_ones() % 2 == 1;
        bits &= bits - 1;
    }
    odd
}

fn subsets_of_size(mask: u32, k: u32) -> impl Iterator<Item = u32> {
    // Enumerate submasks of `mask` with popcount k.
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        if cur.count_ones() == k {
            return Some(cur);
        }
    })
}

impl AltMemo<'_> {
    /// `Σ ε(σ) T(args[σ(1)], ..., args[σ(k)])` over bijections from the
    /// leaves of `t` onto `mask`, with signs relative to ascending order.
    fn alt(&mut self, t: &Tree, mask: u32) -> Result<Vector> {
        let key = (t.clone(), mask);
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let d = self.a.dim();
        let v = match t.node() {
            Node::Leaf => self.args[mask.trailing_zeros() as usize].clone(),
            Node::Binary(x, y) => {
                let mut out = vec![Rational::zero(); d];
                for s1 in subsets_of_size(mask, x.degree() as u32) {
                    let s2 = mask & !s1;
                    let l = self.alt(x, s1)?;
                    let r = self.alt(y, s2)?;
                    let b = self.a.bracket(&l, &r)?;
                    let c = if shuffle_sign(s1, s2) { rat(-1, 1) } else { rat(1, 1) };
                    axpy(&mut out, &c, &b);
                }
                out
            }
            Node::Ternary(x, y, z) => {
                let mut out = vec![Rational::zero(); d];
                for s1 in subsets_of_size(mask, x.degree() as u32) {
                    let rest = mask & !s1;
                    for s2 in subsets_of_size(rest, y.degree() as u32) {
                        let s3 = rest & !s2;
                        let odd = shuffle_sign(s1, s2 | s3) ^ shuffle_sign(s2, s3);
                        let vx = self.alt(x, s1)?;
                        let vy = self.alt(y, s2)?;
                        let vz = self.alt(z, s3)?;
                        let tv = self.a.triple(&vx, &vy, &vz)?;
                        let c = if odd { rat(-1, 1) } else { rat(1, 1) };
                        axpy(&mut out, &c, &tv);
                    }
                }
                out
            }
        };
        self.cache.insert(key, v.clone());
        Ok(v)
    }
}

/// Evaluates an alternating identity by summing over all `n!` permutations;
/// slow, kept as an independent check of the subset recursion.
pub fn evaluate_alternating_naive(id: &ExplicitIdentity, a: &AlgebraSC, args: &[Vector]) -> Result<Vector> {
    check_args(a, id.degree, args)?;
    let types = types_of_degree(id.degree)?;
    let mut out = vec![Rational::zero(); a.dim()];
    for s in all_perms(id.degree) {
        for (j, c) in &id.terms {
            let t = Term::from_tree(&types.binary(*j)?.tree, s.images());
            let c = if s.sign() < 0 { -c.clone() } else { c.clone() };
            axpy(&mut out, &c, &eval_term(a, &t, args)?);
        }
    }
    Ok(out)
}

/// A failing assignment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Index of the random trial, or `None` for a basis tuple.
    pub trial: Option<usize>,
    /// Arguments as rational strings.
    pub assignment: Vec<Vec<String>>,
    pub value: Vec<String>,
}

/// Outcome of [`check_identity`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub random_trials: usize,
    pub basis_tuples: usize,
    pub counterexample: Option<Counterexample>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Basis tuples are checked exhaustively when there are at most this many.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Evaluates `p` on `trials` pseudorandom small-integer assignments derived
/// from `seed`, then on all basis tuples when that is feasible. Alternating
/// identities only need strictly increasing tuples of distinct basis
/// vectors.
pub fn check_identity<E: Evaluable + ?Sized>(p: &E, a: &AlgebraSC, trials: usize, seed: u64) -> Result<CheckOutcome> {
    let n = p.degree();
    let d = a.dim();
    let fail = |trial: Option<usize>, args: &[Vector], value: &[Rational]| Counterexample {
        trial,
        assignment: args.iter().map(|v| strings(v)).collect(),
        value: strings(value),
    };
    let results: Vec<Option<Counterexample>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let args: Vec<Vector> = (0..n)
                .map(|_| (0..d).map(|_| rat(rng.gen_range(-3..=3), 1)).collect())
                .collect();
            let v = p.evaluate(a, &args)?;
            Ok((!v.iter().all(Zero::is_zero)).then(|| fail(Some(t), &args, &v)))
        })
        .collect::<Result<_>>()?;
    if let Some(c) = results.into_iter().flatten().next() {
        return Ok(CheckOutcome {
            passed: false,
            random_trials: trials,
            basis_tuples: 0,
            counterexample: Some(c),
        });
    }
    let tuples = basis_tuples(d, n, p.is_alternating());
    let mut checked = 0;
    if let Some(tuples) = tuples {
        let e: Vec<Vector> = (0..d).map(|i| a.basis_vector(i)).collect();
        for tup in tuples {
            let args: Vec<Vector> = tup.iter().map(|&i| e[i].clone()).collect();
            let v = p.evaluate(a, &args)?;
            checked += 1;
            if !v.iter().all(Zero::is_zero) {
                return Ok(CheckOutcome {
                    passed: false,
                    random_trials: trials,
                    basis_tuples: checked,
                    counterexample: Some(fail(None, &args, &v)),
                });
            }
        }
    }
    Ok(CheckOutcome {
        passed: true,
        random_trials: trials,
        basis_tuples: checked,
        counterexample: None,
    })
}

/// All basis index tuples to check, or `None` when there are too many.
fn basis_tuples(d: usize, n: usize, alternating: bool) -> Option<Vec<Vec<usize>>> {
    let count: u128 = if alternating {
        binomial(d as u128, n as u128)
    } else {
        (d as u128).checked_pow(n as u32)?
    };
    if count > EXHAUSTIVE_LIMIT {
        return None;
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = Vec::with_capacity(n);
    fn rec(d: usize, n: usize, alt: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let start = if alt { cur.last().map_or(0, |&x| x + 1) } else { 0 };
        for i in start..d {
            cur.push(i);
            rec(d, n, alt, cur, out);
            cur.pop();
        }
    }
    rec(d, n, alternating, &mut cur, &mut out);
    Some(out)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evallab::{bundled_algebras, cross_product};
    use crate::freealg::Term;
    use crate::liftgen::Seed;

    /// Random constants satisfying only LY1 and LY2, which is all that
    /// canonical monomials assume.
    fn random_algebra(dim: usize, seed: u64) -> AlgebraSC {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = AlgebraSC::zero(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    let c = rat(rng.gen_range(-2..=2), 1);
                    a.set_c(i, j, k, c.clone());
                    a.set_c(j, i, k, -c);
                    for l in 0..dim {
                        let t = rat(rng.gen_range(-1..=1), 1);
                        a.set_t(i, j, k, l, t.clone());
                        a.set_t(j, i, k, l, -t);
                    }
                }
            }
        }
        a
    }

    fn random_args(n: usize, dim: usize, rng: &mut ChaCha8Rng) -> Vec<Vector> {
        (0..n).map(|_| (0..dim).map(|_| rat(rng.gen_range(-3..=3), 1)).collect()).collect()
    }

    #[test]
    fn subset_recursion_matches_permutation_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 3..=6 {
            let nb = types_of_degree(n).unwrap().binary_count();
            let id = ExplicitIdentity {
                degree: n,
                terms: (1..=nb).map(|j| (j, rat(j as i64, 1))).collect(),
                alternating: true,
            };
            let a = random_algebra(n, n as u64);
            let args = random_args(n, n, &mut rng);
            assert_eq!(id.evaluate(&a, &args).unwrap(), evaluate_alternating_naive(&id, &a, &args).unwrap(), "degree {n}");
        }
    }

    #[test]
    fn explicit_matches_polynomial_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let id = ExplicitIdentity {
            degree: 5,
            terms: vec![(1, rat(1, 1)), (3, rat(-2, 3))],
            alternating: true,
        };
        let a = random_algebra(5, 9);
        let args = random_args(5, 5, &mut rng);
        let p = id.polynomial().unwrap();
        assert_eq!(id.evaluate(&a, &args).unwrap(), p.evaluate(&a, &args).unwrap());
    }

    #[test]
    fn hand_contraction_on_cross_product() {
        // [[e1,e2],e3] = [e3,e3] = 0 and [[e1,e2],e1] = [e3,e1] = e2.
        let a = cross_product();
        let e: Vec<Vector> = (0..3).map(|i| a.basis_vector(i)).collect();
        let t = Term::bin(Term::bin(Term::var(0), Term::var(1)), Term::var(2));
        assert_eq!(eval_term(&a, &t, &e).unwrap(), vec![rat(0, 1); 3]);
        let args = vec![e[0].clone(), e[1].clone(), e[0].clone()];
        assert_eq!(eval_term(&a, &t, &args).unwrap(), e[1]);
    }

    #[test]
    fn evaluation_is_multilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_algebra(3, 1);
        let p = Seed::H.polynomial();
        for slot in 0..5 {
            let args = random_args(5, 3, &mut rng);
            let (u, v) = (args[slot].clone(), random_args(1, 3, &mut rng).remove(0));
            let (al, be) = (rat(rng.gen_range(-4..=4), 1), rat(rng.gen_range(-4..=4), 3));
            let mut mixed = args.clone();
            mixed[slot] = u.iter().zip(&v).map(|(x, y)| &al * x + &be * y).collect();
            let mut with_v = args.clone();
            with_v[slot] = v;
            let lhs = p.evaluate(&a, &mixed).unwrap();
            let fu = p.evaluate(&a, &args).unwrap();
            let fv = p.evaluate(&a, &with_v).unwrap();
            let rhs: Vector = fu.iter().zip(&fv).map(|(x, y)| &al * x + &be * y).collect();
            assert_eq!(lhs, rhs, "slot {slot}");
        }
    }

    #[test]
    fn anything_vanishes_on_the_zero_algebra() {
        let a = AlgebraSC::zero(2);
        let args = vec![vec![rat(1, 1), rat(2, 1)]; 5];
        assert!(Seed::H.polynomial().evaluate(&a, &args).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn defining_identities_pass_on_bundled_algebras() {
        for b in bundled_algebras().into_iter().filter(|b| b.algebra.dim() <= 3) {
            for s in Seed::ALL {
                let out = check_identity(&s.polynomial(), &b.algebra, 5, 1).unwrap();
                assert!(out.passed, "{} on {}", s.name(), b.name);
            }
        }
    }

    #[test]
    fn non_identity_fails_with_witness() {
        let mut p = Polynomial::zero(3);
        let x = |i| Term::var(i);
        p.add_term(&Term::bin(Term::bin(x(0), x(1)), x(2)), rat(1, 1)).unwrap();
        p.add_term(&Term::bin(Term::bin(x(0), x(2)), x(1)), rat(-1, 1)).unwrap();
        let out = check_identity(&p, &cross_product(), 0, 0).unwrap();
        assert!(!out.passed);
        let c = out.counterexample.unwrap();
        assert_eq!(c.trial, None);
        assert_eq!(c.assignment.len(), 3);
    }

    #[test]
    fn same_seed_same_outcome() {
        let mut p = Polynomial::zero(2);
        p.add_term(&Term::bin(Term::var(0), Term::var(1)), rat(1, 1)).unwrap();
        let a = cross_product();
        assert_eq!(check_identity(&p, &a, 4, 42).unwrap(), check_identity(&p, &a, 4, 42).unwrap());
    }

    #[test]
    fn wrong_arity_is_an_error() {
        let a = cross_product();
        let r = Seed::F.polynomial().evaluate(&a, &[a.basis_vector(0)]);
        assert!(matches!(r, Err(Error::DegreeMismatch { expected: 3, found: 1 })));
    }

    #[test]
    fn shuffle_signs() {
        // {1} before {0}: one inversion.
        assert!(shuffle_sign(0b10, 0b01));
        assert!(!shuffle_sign(0b01, 0b10));
        // {1,2} before {0}: two inversions.
        assert!(!shuffle_sign(0b110, 0b001));
        assert_eq!(subsets_of_size(0b1011, 2).count(), 3);
        assert_eq!(binomial(12, 8), 495);
    }
}
