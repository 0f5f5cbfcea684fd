//! Permutations of `{0, .., n-1}` in one-line notation.
//!
//! `Perm(v)` maps `i` to `v[i]`. Composition follows function composition:
//! `a.compose(&b)` is `i -> a(b(i))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// Builds a permutation from its images, checking bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Parses one-line notation with 1-based entries, either as a run of
    /// digits (`21345`) or comma-separated (`2,1,3,4,5`).
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?
        };
        if entries.contains(&0) {
            return Err(Error::InvalidPermutation(s.to_string()));
        }
        Self::from_images(entries.into_iter().map(|e| (e - 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Sign as +1 or -1.
    pub fn sign(&self) -> i8 {
        sign_of(&self.0)
    }

    /// Disjoint cycles of length at least 2, each starting at its least point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle notation with 1-based points, e.g. `(15)(26)`; commas separate
    /// points when `n > 9`.
    pub fn cycle_string(&self) -> String {
        let sep = if self.len() > 9 { "," } else { "" };
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", pts.join(sep))
            })
            .collect()
    }

    /// One-line notation with 1-based entries.
    pub fn one_line(&self) -> String {
        let sep = if self.len() > 9 { "," } else { "" };
        self.0
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Lexicographic rank in `0..n!`.
    pub fn rank(&self) -> usize {
        lex_rank(&self.0)
    }

    pub fn unrank(n: usize, mut rank: usize) -> Perm {
        let mut avail: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let f = factorial(k);
            let idx = rank / f;
            rank %= f;
            out.push(avail.remove(idx));
        }
        Perm(out)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Sign of a sequence of distinct values, relative to sorted order.
pub fn sign_of(values: &[u8]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn lex_rank(values: &[u8]) -> usize {
    let n = values.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = values[i + 1..].iter().filter(|&&x| x < values[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

/// All permutations of `n` points in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..factorial(n)).map(|r| Perm::unrank(n, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_unrank_round_trip() {
        for (r, p) in all_perms(5).iter().enumerate() {
            assert_eq!(p.rank(), r);
        }
    }

    #[test]
    fn compose_is_function_composition() {
        let a = Perm::parse_one_line("231").unwrap();
        let b = Perm::parse_one_line("213").unwrap();
        let ab = a.compose(&b);
        for i in 0..3 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn sign_is_multiplicative() {
        let perms = all_perms(4);
        for a in &perms {
            for b in &perms {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn cycle_rendering() {
        let p = Perm::parse_one_line("56781234").unwrap();
        assert_eq!(p.cycle_string(), "(15)(26)(37)(48)");
        assert_eq!(p.sign(), 1);
        assert_eq!(Perm::identity(3).cycle_string(), "()");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::parse_one_line("112").is_err());
        assert!(Perm::parse_one_line("0").is_err());
    }
}
