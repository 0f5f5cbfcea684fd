use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// An exact field with a runtime context (the modulus, for prime fields).
pub trait Field: Clone + Send + Sync + Debug + 'static {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// 0 for the rationals, otherwise the prime.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.from_rational(&parse_rational(s)?)
    }

    /// Exact rational value; prime-field elements map to `0..p`.
    fn to_rational(&self, a: &Self::Elem) -> Rational;

    /// `row -= sum(coef * basis)` over the given pairs.
    fn eliminate(&self, row: &mut [Self::Elem], ops: &[(Self::Elem, &[Self::Elem])]) {
        for (c, b) in ops {
            for (x, y) in row.iter_mut().zip(b.iter()) {
                if !self.is_zero(y) {
                    *x = self.sub(x, &self.mul(c, y));
                }
            }
        }
    }

    fn scale_row(&self, row: &mut [Self::Elem], c: &Self::Elem) {
        for x in row.iter_mut() {
            if !self.is_zero(x) {
                *x = self.mul(x, c);
            }
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
    fn from_rational(&self, q: &Rational) -> Result<Rational> {
        Ok(q.clone())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn format(&self, a: &Rational) -> String {
        a.to_string()
    }
    fn to_rational(&self, a: &Rational) -> Rational {
        a.clone()
    }
}

/// The prime field `F_p` with elements stored as `u32` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    /// floor(2^32 / p), for reducing values below 2^32.
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) || p >= 1 << 31 {
            return Err(Error::BadCharacteristic(p as u64));
        }
        Ok(PrimeField {
            p,
            barrett: (1u64 << 32) / p as u64,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce32(&self, x: u32) -> u32 {
        let q = ((x as u64 * self.barrett) >> 32) as u32;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    fn pow(&self, b: u32, mut e: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut base = b as u64 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_rational(&self, q: &Rational) -> Result<u32> {
        let p = BigInt::from(self.p);
        let n = q.numer().mod_floor(&p).to_u32().expect("reduced");
        let d = q.denom().mod_floor(&p).to_u32().expect("reduced");
        if d == 0 {
            return Err(Error::NotRepresentable(q.to_string()));
        }
        Ok(self.mul(&n, &self.inv(&d).expect("nonzero")))
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.pow(*a, self.p as u64 - 2))
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn to_rational(&self, a: &u32) -> Rational {
        Rational::from_integer((*a).into())
    }

    fn eliminate(&self, row: &mut [u32], ops: &[(u32, &[u32])]) {
        if self.p >= 1 << 16 {
            let p = self.p as u64;
            for (c, b) in ops {
                let nc = (p - *c as u64) % p;
                for (x, &y) in row.iter_mut().zip(b.iter()) {
                    *x = ((*x as u64 + nc * y as u64) % p) as u32;
                }
            }
            return;
        }
        // Accumulate without reduction while the sum provably fits in u32.
        let pm1 = (self.p - 1) as u64;
        let per_chunk = ((u32::MAX as u64 - self.p as u64) / (pm1 * pm1).max(1)).max(1) as usize;
        for chunk in ops.chunks(per_chunk) {
            for (c, b) in chunk {
                let nc = self.p - *c;
                for (x, &y) in row.iter_mut().zip(b.iter()) {
                    *x += nc * y;
                }
            }
            for x in row.iter_mut() {
                *x = self.reduce32(*x);
            }
        }
    }

    fn scale_row(&self, row: &mut [u32], c: &u32) {
        if self.p >= 1 << 16 {
            for x in row.iter_mut() {
                *x = self.mul(x, c);
            }
        } else {
            for x in row.iter_mut() {
                *x = self.reduce32(*x * *c);
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Runtime choice of working field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "u64", try_from = "u64")]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(FieldSpec::Rational),
            p if p < 1 << 31 && is_prime(p) => Ok(FieldSpec::Prime(p as u32)),
            other => Err(Error::BadCharacteristic(other)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p as u64,
        }
    }

    /// Requires characteristic 0 or a prime exceeding `bound`.
    pub fn check_exceeds(&self, bound: u64) -> Result<()> {
        match self {
            FieldSpec::Prime(p) if (*p as u64) <= bound => Err(Error::CharacteristicTooSmall {
                characteristic: *p as u64,
                bound,
            }),
            _ => Ok(()),
        }
    }
}

impl From<FieldSpec> for u64 {
    fn from(f: FieldSpec) -> u64 {
        f.characteristic()
    }
}

impl TryFrom<u64> for FieldSpec {
    type Error = Error;
    fn try_from(c: u64) -> Result<Self> {
        FieldSpec::from_characteristic(c)
    }
}

/// Default prime for modular computations.
pub const DEFAULT_PRIME: u32 = 101;

/// Symmetric representative in `(-p/2, p/2]`, handy for display.
pub fn symmetric_residue(a: u32, p: u32) -> i64 {
    let a = a as i64;
    let p = p as i64;
    if a > p / 2 {
        a - p
    } else {
        a
    }
}

/// Rational value as `i64` when it is a small integer.
pub fn small_integer(q: &Rational) -> Option<i64> {
    q.is_integer().then(|| q.numer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u32 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.from_rational(&rat(-3, 2)).unwrap(), f.mul(&98, &f.inv(&2).unwrap()));
        assert!(f.from_rational(&rat(1, 101)).is_err());
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn lazy_elimination_matches_naive() {
        let f = PrimeField::new(101).unwrap();
        let basis: Vec<Vec<u32>> = (0..50)
            .map(|i| (0..30).map(|j| ((i * 31 + j * 17) % 101) as u32).collect())
            .collect();
        let coefs: Vec<u32> = (0..50).map(|i| ((i * 7 + 3) % 100 + 1) as u32).collect();
        let mut fast: Vec<u32> = (0..30).map(|j| (j * 5 % 101) as u32).collect();
        let mut slow = fast.clone();
        let ops: Vec<(u32, &[u32])> = coefs.iter().zip(&basis).map(|(c, b)| (*c, b.as_slice())).collect();
        f.eliminate(&mut fast, &ops);
        for (c, b) in &ops {
            for (x, y) in slow.iter_mut().zip(b.iter()) {
                *x = f.sub(x, &f.mul(c, y));
            }
        }
        assert_eq!(fast, slow);
    }

    #[test]
    fn field_spec() {
        assert_eq!(FieldSpec::from_characteristic(0).unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::from_characteristic(101).unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::from_characteristic(9).is_err());
        assert!(FieldSpec::Prime(7).check_exceeds(8).is_err());
        assert!(FieldSpec::Prime(11).check_exceeds(8).is_ok());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("4").unwrap(), rat(4, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
