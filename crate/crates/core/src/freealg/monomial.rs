//! Labeled terms, canonical monomials and polynomials of the free
//! binary-ternary algebra modulo anticommutativity of `[-,-]` and
//! antisymmetry of `<-,-,->` in its first two arguments.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

use super::catalog::types_of_degree;
use super::tree::{ordered_pair, Node, Tree};

/// A labeled operation tree; `Var(i)` is the variable `x_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(u8),
    Bin(Box<Term>, Box<Term>),
    Ter(Box<Term>, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i as u8)
    }

    pub fn bin(a: Term, b: Term) -> Term {
        Term::Bin(Box::new(a), Box::new(b))
    }

    pub fn ter(a: Term, b: Term, c: Term) -> Term {
        Term::Ter(Box::new(a), Box::new(b), Box::new(c))
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Bin(a, b) => a.degree() + b.degree(),
            Term::Ter(a, b, c) => a.degree() + b.degree() + c.degree(),
        }
    }

    /// Variables in leaf order.
    pub fn labels(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<u8>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Bin(a, b) => {
                a.collect_labels(out);
                b.collect_labels(out);
            }
            Term::Ter(a, b, c) => {
                a.collect_labels(out);
                b.collect_labels(out);
                c.collect_labels(out);
            }
        }
    }

    /// The underlying unlabeled tree.
    pub fn shape(&self) -> Tree {
        match self {
            Term::Var(_) => Tree::leaf(),
            Term::Bin(a, b) => Tree::binary(a.shape(), b.shape()),
            Term::Ter(a, b, c) => Tree::ternary(a.shape(), b.shape(), c.shape()),
        }
    }

    /// Places `labels` on the leaves of `tree` from left to right.
    pub fn from_tree(tree: &Tree, labels: &[u8]) -> Term {
        let mut it = labels.iter().copied();
        let t = build_term(tree, &mut it);
        debug_assert!(it.next().is_none());
        t
    }

    /// Replaces every variable `x_i` by `sub(i)`.
    pub fn substitute<F>(&self, sub: &F) -> Term
    where
        F: Fn(u8) -> Term,
    {
        match self {
            Term::Var(v) => sub(*v),
            Term::Bin(a, b) => Term::bin(a.substitute(sub), b.substitute(sub)),
            Term::Ter(a, b, c) => Term::ter(a.substitute(sub), b.substitute(sub), c.substitute(sub)),
        }
    }

    /// Renders with letters `a..` when `letters` is set, otherwise `x1..`.
    pub fn render(&self, letters: bool) -> String {
        let mut s = String::new();
        self.render_into(&mut s, letters);
        s
    }

    fn render_into(&self, s: &mut String, letters: bool) {
        match self {
            Term::Var(v) => s.push_str(&var_name(*v as usize, letters)),
            Term::Bin(a, b) => {
                s.push('[');
                a.render_into(s, letters);
                s.push(',');
                b.render_into(s, letters);
                s.push(']');
            }
            Term::Ter(a, b, c) => {
                s.push('<');
                a.render_into(s, letters);
                s.push(',');
                b.render_into(s, letters);
                s.push(',');
                c.render_into(s, letters);
                s.push('>');
            }
        }
    }
}

fn build_term(tree: &Tree, labels: &mut impl Iterator<Item = u8>) -> Term {
    match tree.node() {
        Node::Leaf => Term::Var(labels.next().expect("enough labels")),
        Node::Binary(a, b) => {
            let a = build_term(a, labels);
            let b = build_term(b, labels);
            Term::bin(a, b)
        }
        Node::Ternary(a, b, c) => {
            let a = build_term(a, labels);
            let b = build_term(b, labels);
            let c = build_term(c, labels);
            Term::ter(a, b, c)
        }
    }
}

pub fn var_name(i: usize, letters: bool) -> String {
    if letters && i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.degree() <= 8))
    }
}

impl FromStr for Term {
    type Err = Error;

    /// Parses `[u,v]`, `<u,v,w>`, single letters `a..z` and `x1`, `x2`, ...
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_term(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(t)
    }
}

fn parse_term(chars: &[char], pos: &mut usize) -> Result<Term> {
    let c = *chars
        .get(*pos)
        .ok_or_else(|| Error::Parse("unexpected end of term".into()))?;
    match c {
        '[' | '<' => {
            *pos += 1;
            let close = if c == '[' { ']' } else { '>' };
            let arity = if c == '[' { 2 } else { 3 };
            let mut kids = Vec::new();
            for k in 0..arity {
                if k > 0 {
                    expect(chars, pos, ',')?;
                }
                kids.push(parse_term(chars, pos)?);
            }
            expect(chars, pos, close)?;
            let mut it = kids.into_iter();
            let a = it.next().unwrap();
            let b = it.next().unwrap();
            Ok(match it.next() {
                None => Term::bin(a, b),
                Some(c) => Term::ter(a, b, c),
            })
        }
        'x' if chars.get(*pos + 1).is_some_and(|d| d.is_ascii_digit()) => {
            *pos += 1;
            let start = *pos;
            while chars.get(*pos).is_some_and(|d| d.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().collect();
            let i: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable x{digits}")))?;
            if i == 0 || i > 255 {
                return Err(Error::Parse(format!("bad variable x{digits}")));
            }
            Ok(Term::var(i - 1))
        }
        c if c.is_ascii_lowercase() => {
            *pos += 1;
            Ok(Term::var((c as u8 - b'a') as usize))
        }
        other => Err(Error::Parse(format!("unexpected {other:?} in term"))),
    }
}

fn expect(chars: &[char], pos: &mut usize, want: char) -> Result<()> {
    match chars.get(*pos) {
        Some(&c) if c == want => {
            *pos += 1;
            Ok(())
        }
        other => Err(Error::Parse(format!("expected {want:?}, found {other:?}"))),
    }
}

/// A canonical multilinear monomial: a canonical type of degree
/// `labels.len()` with `labels[i]` the variable at leaf `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    /// 1-based deglex index of the type.
    pub type_index: usize,
    pub labels: Vec<u8>,
}

impl Monomial {
    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn tree(&self) -> &'static Tree {
        &types_of_degree(self.degree())
            .and_then(|d| d.get(self.type_index))
            .expect("monomial refers to a catalogued type")
            .tree
    }

    pub fn to_term(&self) -> Term {
        Term::from_tree(self.tree(), &self.labels)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

/// Result of straightening a term that may repeat variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Straightened {
    Monomial { monomial: Monomial, sign: i8 },
    /// The term vanishes: two identical labeled subtrees meet at a
    /// swappable position.
    Zero,
}

/// Straightens a multilinear term to its canonical monomial and sign.
pub fn canonicalize(term: &Term) -> Result<(Monomial, i8)> {
    match canonicalize_general(term, false)? {
        Straightened::Monomial { monomial, sign } => Ok((monomial, sign)),
        Straightened::Zero => unreachable!("multilinear terms never vanish"),
    }
}

/// Straightens a term; with `allow_repeats` a repeated variable is
/// accepted and may produce [`Straightened::Zero`].
pub fn canonicalize_general(term: &Term, allow_repeats: bool) -> Result<Straightened> {
    let labels = term.labels();
    let n = labels.len();
    if !allow_repeats {
        let mut seen = vec![false; 256];
        for &v in &labels {
            if seen[v as usize] {
                return Err(Error::RepeatedVariable(v as usize + 1));
            }
            seen[v as usize] = true;
        }
    }
    let Some((tree, labels, sign)) = normalize(term) else {
        return Ok(Straightened::Zero);
    };
    let types = types_of_degree(n)?;
    let type_index = types
        .index_of(&tree)
        .expect("normalized trees are catalogued");
    Ok(Straightened::Monomial {
        monomial: Monomial { type_index, labels },
        sign,
    })
}

fn normalize(term: &Term) -> Option<(Tree, Vec<u8>, i8)> {
    match term {
        Term::Var(v) => Some((Tree::leaf(), vec![*v], 1)),
        Term::Bin(a, b) => {
            let (ta, la, sa) = normalize(a)?;
            let (tb, lb, sb) = normalize(b)?;
            let (x, y, s) = order_pair((ta, la), (tb, lb))?;
            let mut labels = x.1;
            labels.extend(y.1);
            Some((Tree::binary(x.0, y.0), labels, s * sa * sb))
        }
        Term::Ter(a, b, c) => {
            let (ta, la, sa) = normalize(a)?;
            let (tb, lb, sb) = normalize(b)?;
            let (tc, lc, sc) = normalize(c)?;
            let (x, y, s) = order_pair((ta, la), (tb, lb))?;
            let mut labels = x.1;
            labels.extend(y.1);
            labels.extend(lc);
            Some((Tree::ternary(x.0, y.0, tc), labels, s * sa * sb * sc))
        }
    }
}

type Part = (Tree, Vec<u8>);

/// Orders two normalized siblings at a swappable position, returning the
/// sign of the swap; `None` when the siblings coincide.
fn order_pair(a: Part, b: Part) -> Option<(Part, Part, i8)> {
    if a.0 == b.0 {
        match a.1.cmp(&b.1) {
            std::cmp::Ordering::Less => Some((a, b, 1)),
            std::cmp::Ordering::Greater => Some((b, a, -1)),
            std::cmp::Ordering::Equal => None,
        }
    } else if ordered_pair(&a.0, &b.0) {
        Some((a, b, 1))
    } else {
        Some((b, a, -1))
    }
}

/// A finite linear combination of canonical monomials of one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    degree: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(degree: usize) -> Self {
        Polynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff * m`; `m` must be canonical of this degree.
    pub fn add_monomial(&mut self, m: Monomial, coeff: Rational) {
        debug_assert_eq!(m.degree(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `coeff * term` after straightening the term.
    pub fn add_term(&mut self, term: &Term, coeff: Rational) -> Result<()> {
        if term.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: term.degree(),
            });
        }
        let (m, sign) = canonicalize(term)?;
        let c = if sign < 0 { -coeff } else { coeff };
        self.add_monomial(m, c);
        Ok(())
    }

    pub fn add(&mut self, other: &Polynomial) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        for (m, c) in &other.terms {
            self.add_monomial(m.clone(), c.clone());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.degree);
        }
        Polynomial {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// Applies `f` to every monomial (as a term), straightening the result.
    pub fn map_terms<F>(&self, new_degree: usize, f: F) -> Result<Polynomial>
    where
        F: Fn(&Term) -> Term,
    {
        let mut out = Polynomial::zero(new_degree);
        for (m, c) in &self.terms {
            out.add_term(&f(&m.to_term()), c.clone())?;
        }
        Ok(out)
    }

    /// Sum of coefficients (the value on a commutative one-dimensional
    /// algebra where every operation is multiplication of scalars and all
    /// variables equal one).
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// Number of distinct types among the terms.
    pub fn type_count(&self) -> usize {
        let mut t: Vec<usize> = self.terms.keys().map(|m| m.type_index).collect();
        t.dedup();
        t.len()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Straightens and collects a combination of multilinear terms of one degree.
pub fn expand(terms: &[(Rational, Term)]) -> Result<Polynomial> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::Parse("empty combination has no degree".into()));
    };
    let mut p = Polynomial::zero(first.degree());
    for (c, t) in terms {
        p.add_term(t, c.clone())?;
    }
    Ok(p)
}

/// Canonical labeling and sign of `labels` placed on a canonical type.
pub fn canonical_labels(tree: &Tree, labels: &[u8]) -> (Vec<u8>, i8) {
    let term = Term::from_tree(tree, labels);
    let (t, l, s) = normalize(&term).expect("distinct labels");
    debug_assert_eq!(&t, tree);
    (l, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn t(s: &str) -> Term {
        s.parse().unwrap()
    }

    #[test]
    fn binary_swap() {
        let (m, s) = canonicalize(&t("[b,a]")).unwrap();
        assert_eq!(m.to_string(), "[a,b]");
        assert_eq!(s, -1);
    }

    #[test]
    fn ternary_swap() {
        let (m, s) = canonicalize(&t("<b,a,c>")).unwrap();
        assert_eq!(m.to_string(), "<a,b,c>");
        assert_eq!(s, -1);
    }

    #[test]
    fn noncanonical_type_normalizes() {
        let (m, s) = canonicalize(&t("<a,[b,c],d>")).unwrap();
        assert_eq!(m.to_string(), "<[b,c],a,d>");
        assert_eq!(s, -1);
        assert_eq!(m.tree().to_string(), "<[--]-->");
    }

    #[test]
    fn canonicalize_is_idempotent_on_canonical_input() {
        let (m, _) = canonicalize(&t("[[c,d],[a,b]]")).unwrap();
        assert_eq!(m.to_string(), "[[a,b],[c,d]]");
        let (m2, s2) = canonicalize(&m.to_term()).unwrap();
        assert_eq!((m2, s2), (m, 1));
    }

    #[test]
    fn repeated_variables() {
        assert!(matches!(
            canonicalize(&t("[a,a]")),
            Err(Error::RepeatedVariable(1))
        ));
        assert_eq!(
            canonicalize_general(&t("[a,a]"), true).unwrap(),
            Straightened::Zero
        );
        assert_eq!(
            canonicalize_general(&t("<[a,b],[a,b],c>"), true).unwrap(),
            Straightened::Zero
        );
    }

    #[test]
    fn expand_examples() {
        let p = expand(&[(rat(1, 1), t("[a,b]")), (rat(1, 1), t("[b,a]"))]).unwrap();
        assert!(p.is_zero());
        let p = expand(&[(rat(1, 1), t("[[a,b],c]")), (rat(-1, 1), t("[[b,a],c]"))]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "2 [[a,b],c]");
        assert!(expand(&[(rat(1, 1), t("[a,b]")), (rat(1, 1), t("[[a,b],c]"))]).is_err());
    }

    #[test]
    fn term_parse_render() {
        let s = "[[[[a,b],c],[d,e]],[[f,g],h]]";
        assert_eq!(t(s).to_string(), s);
        assert_eq!(t("[x1,x10]").render(false), "[x1,x10]");
    }
}
