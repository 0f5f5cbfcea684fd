//! Plain-text identity files.
//!
//! ```text
//! degree 8
//! field 0
//! alternating true
//! class binary
//! term 4 12345678 1
//! term 7 12345678 -3/2
//! ```
//!
//! Each `term` line gives a 1-based type index (among binary types for
//! `class binary`, among all types for `class all`), a permutation in
//! one-line notation whose entries label the leaves from left to right, and
//! a rational coefficient. Blank lines and lines starting with `#` are
//! ignored. With `alternating true` the identity is the signed sum of the
//! listed terms over all relabelings.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::parse_rational;
use crate::freealg::{types_of_degree, Polynomial, Term};
use crate::perm::{all_perms, Perm};
use crate::pipeline::ExplicitIdentity;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeClass {
    Binary,
    All,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityTerm {
    pub type_index: usize,
    pub perm: Perm,
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFile {
    pub degree: usize,
    /// 0 for the rationals, otherwise a prime.
    pub field: u64,
    pub alternating: bool,
    pub class: TypeClass,
    pub terms: Vec<IdentityTerm>,
}

impl IdentityFile {
    pub fn from_explicit(id: &ExplicitIdentity) -> Self {
        IdentityFile {
            degree: id.degree,
            field: 0,
            alternating: id.alternating,
            class: TypeClass::Binary,
            terms: id
                .terms
                .iter()
                .map(|(j, c)| IdentityTerm {
                    type_index: *j,
                    perm: Perm::identity(id.degree),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Lists every monomial of `p` with its labels as the permutation.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        let terms = p
            .terms()
            .map(|(m, c)| {
                Ok(IdentityTerm {
                    type_index: m.type_index,
                    perm: Perm::from_images(m.labels.clone())?,
                    coeff: c.clone(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(IdentityFile {
            degree: p.degree(),
            field: 0,
            alternating: false,
            class: TypeClass::All,
            terms,
        })
    }

    fn term(&self, t: &IdentityTerm) -> Result<Term> {
        let types = types_of_degree(self.degree)?;
        let ty = match self.class {
            TypeClass::Binary => types.binary(t.type_index)?,
            TypeClass::All => types.get(t.type_index)?,
        };
        if t.perm.len() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: t.perm.len(),
            });
        }
        Ok(Term::from_tree(&ty.tree, t.perm.images()))
    }

    /// The identity in canonical monomials, expanding the alternation.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.degree);
        let relabel = if self.alternating {
            all_perms(self.degree)
        } else {
            vec![Perm::identity(self.degree)]
        };
        for t in &self.terms {
            let base = self.term(t)?;
            for s in &relabel {
                let term = base.substitute(&|i: u8| Term::Var(s.images()[i as usize]));
                let c = if s.sign() < 0 { -t.coeff.clone() } else { t.coeff.clone() };
                p.add_term(&term, c)?;
            }
        }
        Ok(p)
    }

    /// The same identity as a combination of binary types with identity
    /// labels; needs `class binary`, and when not alternating every
    /// permutation must be the identity.
    pub fn to_explicit(&self) -> Result<ExplicitIdentity> {
        if self.class != TypeClass::Binary {
            return Err(Error::Unsupported("explicit identities use binary types only".into()));
        }
        let mut coeffs: Vec<(usize, Rational)> = Vec::new();
        for t in &self.terms {
            self.term(t)?;
            let c = if self.alternating {
                if t.perm.sign() < 0 {
                    -t.coeff.clone()
                } else {
                    t.coeff.clone()
                }
            } else if t.perm.is_identity() {
                t.coeff.clone()
            } else {
                return Err(Error::Unsupported("relabeled terms in a non-alternating binary identity".into()));
            };
            match coeffs.iter_mut().find(|(j, _)| *j == t.type_index) {
                Some((_, x)) => *x += c,
                None => coeffs.push((t.type_index, c)),
            }
        }
        coeffs.retain(|(_, c)| !c.is_zero());
        Ok(ExplicitIdentity {
            degree: self.degree,
            terms: coeffs,
            alternating: self.alternating,
        })
    }
}

impl fmt::Display for IdentityFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "degree {}", self.degree)?;
        writeln!(s, "field {}", self.field)?;
        writeln!(s, "alternating {}", self.alternating)?;
        let class = match self.class {
            TypeClass::Binary => "binary",
            TypeClass::All => "all",
        };
        writeln!(s, "class {class}")?;
        for t in &self.terms {
            writeln!(s, "term {} {} {}", t.type_index, t.perm.one_line(), t.coeff)?;
        }
        f.write_str(&s)
    }
}

impl FromStr for IdentityFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |line: usize, msg: &str| Error::Parse(format!("identity file line {line}: {msg}"));
        let mut degree = None;
        let mut field = 0;
        let mut alternating = false;
        let mut class = TypeClass::Binary;
        let mut terms = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let no = no + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap_or_default();
            let rest: Vec<&str> = words.collect();
            let one = || match rest.as_slice() {
                [v] => Ok(*v),
                _ => Err(bad(no, &format!("`{key}` takes one value"))),
            };
            match key {
                "degree" => degree = Some(one()?.parse().map_err(|_| bad(no, "bad degree"))?),
                "field" => field = one()?.parse().map_err(|_| bad(no, "bad field"))?,
                "alternating" => alternating = one()?.parse().map_err(|_| bad(no, "expected true or false"))?,
                "class" => {
                    class = match one()? {
                        "binary" => TypeClass::Binary,
                        "all" => TypeClass::All,
                        _ => return Err(bad(no, "class must be binary or all")),
                    }
                }
                "term" => {
                    let [j, p, c] = rest.as_slice() else {
                        return Err(bad(no, "expected `term <type> <permutation> <coefficient>`"));
                    };
                    terms.push(IdentityTerm {
                        type_index: j.parse().map_err(|_| bad(no, "bad type index"))?,
                        perm: Perm::parse_one_line(p)?,
                        coeff: parse_rational(c)?,
                    });
                }
                _ => return Err(bad(no, &format!("unknown key `{key}`"))),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse("identity file has no degree".into()))?;
        let file = IdentityFile {
            degree,
            field,
            alternating,
            class,
            terms,
        };
        for t in &file.terms {
            file.term(t)?;
        }
        Ok(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liftgen::Seed;
    use crate::pipeline::theorem_identity;
    use crate::rat;

    #[test]
    fn explicit_round_trip() {
        let id = theorem_identity();
        let text = IdentityFile::from_explicit(&id).to_string();
        let back: IdentityFile = text.parse().unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(back.to_explicit().unwrap(), id);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = Seed::H.polynomial();
        let f = IdentityFile::from_polynomial(&p).unwrap();
        let back: IdentityFile = f.to_string().parse().unwrap();
        assert_eq!(back.to_polynomial().unwrap(), p);
    }

    #[test]
    fn alternating_expansion_agrees_with_explicit() {
        let id = ExplicitIdentity {
            degree: 4,
            terms: vec![(1, rat(1, 1)), (2, rat(-1, 2))],
            alternating: true,
        };
        let f = IdentityFile::from_explicit(&id);
        assert_eq!(f.to_polynomial().unwrap(), id.polynomial().unwrap());
    }

    #[test]
    fn relabeled_alternating_term_picks_up_the_sign() {
        let text = "degree 4\nalternating true\nclass binary\nterm 2 2134 1\n";
        let f: IdentityFile = text.parse().unwrap();
        let id = f.to_explicit().unwrap();
        assert_eq!(id.terms, vec![(2, rat(-1, 1))]);
        assert_eq!(f.to_polynomial().unwrap(), id.polynomial().unwrap());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# f\n\ndegree 3\nfield 101\nclass all\nterm 1 123 1\n";
        let f: IdentityFile = text.parse().unwrap();
        assert_eq!(f.field, 101);
        assert_eq!(f.class, TypeClass::All);
        assert!(!f.alternating);
    }

    #[test]
    fn malformed_files() {
        for text in [
            "term 1 123 1\n",
            "degree 3\nterm 1 12 1\n",
            "degree 3\nterm 9 123 1\n",
            "degree 3\nterm 1 123\n",
            "degree 3\ncolour blue\n",
            "degree 3\nterm 1 113 1\n",
        ] {
            assert!(text.parse::<IdentityFile>().is_err(), "{text:?}");
        }
    }
}
