//! Planar binary-ternary trees and their deglex order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which operations occur in a tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum OpClass {
    /// Degree one: no operation at all.
    Leaf,
    Ternary,
    Mixed,
    Binary,
}

impl OpClass {
    fn from_bits(bits: u8) -> Self {
        match bits {
            0 => OpClass::Leaf,
            1 => OpClass::Binary,
            2 => OpClass::Ternary,
            _ => OpClass::Mixed,
        }
    }

    fn bits(self) -> u8 {
        match self {
            OpClass::Leaf => 0,
            OpClass::Binary => 1,
            OpClass::Ternary => 2,
            OpClass::Mixed => 3,
        }
    }

    /// Position in the order `{3} < {2,3} < {2}`.
    fn rank(self) -> u8 {
        match self {
            OpClass::Leaf => 0,
            OpClass::Ternary => 1,
            OpClass::Mixed => 2,
            OpClass::Binary => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OpClass::Leaf => "leaf",
            OpClass::Ternary => "ternary",
            OpClass::Mixed => "mixed",
            OpClass::Binary => "binary",
        }
    }
}

impl FromStr for OpClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leaf" => Ok(OpClass::Leaf),
            "ternary" => Ok(OpClass::Ternary),
            "mixed" => Ok(OpClass::Mixed),
            "binary" => Ok(OpClass::Binary),
            other => Err(Error::Parse(format!("unknown class {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    Leaf,
    Binary(Box<Tree>, Box<Tree>),
    Ternary(Box<Tree>, Box<Tree>, Box<Tree>),
}

/// An unlabeled operation tree. Degree and class are cached at construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tree {
    node: Node,
    degree: usize,
    class: OpClass,
}

impl Tree {
    pub fn leaf() -> Self {
        Tree {
            node: Node::Leaf,
            degree: 1,
            class: OpClass::Leaf,
        }
    }

    pub fn binary(a: Tree, b: Tree) -> Self {
        let bits = 1 | a.class.bits() | b.class.bits();
        Tree {
            degree: a.degree + b.degree,
            class: OpClass::from_bits(bits),
            node: Node::Binary(Box::new(a), Box::new(b)),
        }
    }

    pub fn ternary(a: Tree, b: Tree, c: Tree) -> Self {
        let bits = 2 | a.class.bits() | b.class.bits() | c.class.bits();
        Tree {
            degree: a.degree + b.degree + c.degree,
            class: OpClass::from_bits(bits),
            node: Node::Ternary(Box::new(a), Box::new(b), Box::new(c)),
        }
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn class(&self) -> OpClass {
        self.class
    }

    pub fn arity(&self) -> usize {
        match self.node {
            Node::Leaf => 0,
            Node::Binary(..) => 2,
            Node::Ternary(..) => 3,
        }
    }

    pub fn children(&self) -> Vec<&Tree> {
        match &self.node {
            Node::Leaf => vec![],
            Node::Binary(a, b) => vec![a, b],
            Node::Ternary(a, b, c) => vec![a, b, c],
        }
    }

    /// True when every binary node and the first two children of every
    /// ternary node are in canonical order.
    pub fn is_canonical(&self) -> bool {
        match &self.node {
            Node::Leaf => true,
            Node::Binary(a, b) => ordered_pair(a, b) && a.is_canonical() && b.is_canonical(),
            Node::Ternary(a, b, c) => {
                ordered_pair(a, b) && a.is_canonical() && b.is_canonical() && c.is_canonical()
            }
        }
    }

    /// Renders with a caller-supplied leaf renderer and separator.
    pub(crate) fn render_with<F>(&self, out: &mut String, sep: &str, leaf: &mut F)
    where
        F: FnMut(&mut String),
    {
        match &self.node {
            Node::Leaf => leaf(out),
            Node::Binary(a, b) => {
                out.push('[');
                a.render_with(out, sep, leaf);
                out.push_str(sep);
                b.render_with(out, sep, leaf);
                out.push(']');
            }
            Node::Ternary(a, b, c) => {
                out.push('<');
                a.render_with(out, sep, leaf);
                out.push_str(sep);
                b.render_with(out, sep, leaf);
                out.push_str(sep);
                c.render_with(out, sep, leaf);
                out.push('>');
            }
        }
    }
}

/// Child order at a swappable position: higher degree first, and for equal
/// degrees the children appear in non-decreasing deglex order.
pub fn ordered_pair(first: &Tree, second: &Tree) -> bool {
    first.degree > second.degree || (first.degree == second.degree && first <= second)
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.class.rank().cmp(&other.class.rank()))
            .then_with(|| self.arity().cmp(&other.arity()))
            .then_with(|| match (&self.node, &other.node) {
                (Node::Binary(a, b), Node::Binary(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
                (Node::Ternary(a, b, c), Node::Ternary(d, e, f)) => a
                    .cmp(d)
                    .then_with(|| b.cmp(e))
                    .then_with(|| c.cmp(f)),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render_with(&mut s, "", &mut |out| out.push('-'));
        f.write_str(&s)
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// Parses `[UV]`, `<UVW>` and `-`, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(tree)
    }
}

fn parse_tree(chars: &[char], pos: &mut usize) -> Result<Tree> {
    let c = *chars
        .get(*pos)
        .ok_or_else(|| Error::Parse("unexpected end of type".into()))?;
    *pos += 1;
    match c {
        '-' => Ok(Tree::leaf()),
        '[' => {
            let a = parse_tree(chars, pos)?;
            let b = parse_tree(chars, pos)?;
            expect(chars, pos, ']')?;
            Ok(Tree::binary(a, b))
        }
        '<' => {
            let a = parse_tree(chars, pos)?;
            let b = parse_tree(chars, pos)?;
            let c = parse_tree(chars, pos)?;
            expect(chars, pos, '>')?;
            Ok(Tree::ternary(a, b, c))
        }
        other => Err(Error::Parse(format!("unexpected {other:?} in type"))),
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_parse_round_trip() {
        for s in ["-", "[--]", "<--->", "[[[[--]-][[--]-]][--]]", "<[--]-<--->>"] {
            let t: Tree = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!("< - - - >".parse::<Tree>().unwrap().to_string(), "<--->");
        assert!("[-]".parse::<Tree>().is_err());
        assert!("[--]-".parse::<Tree>().is_err());
    }

    #[test]
    fn classes() {
        let t: Tree = "<[--]-->".parse().unwrap();
        assert_eq!(t.class(), OpClass::Mixed);
        assert_eq!(t.degree(), 4);
        assert_eq!("[[--]-]".parse::<Tree>().unwrap().class(), OpClass::Binary);
        assert_eq!("<--<--->>".parse::<Tree>().unwrap().class(), OpClass::Ternary);
    }

    #[test]
    fn deglex_basics() {
        let ter: Tree = "<--->".parse().unwrap();
        let bin: Tree = "[[--]-]".parse().unwrap();
        assert!(ter < bin);
        let mixed_b: Tree = "[<--->-]".parse().unwrap();
        let mixed_t: Tree = "<--[--]>".parse().unwrap();
        assert!(mixed_b < mixed_t);
    }

    #[test]
    fn canonical_child_order() {
        assert!("<[--]-->".parse::<Tree>().unwrap().is_canonical());
        assert!(!"<-[--]->".parse::<Tree>().unwrap().is_canonical());
        assert!("[[[--][--]][[[--]-]-]]".parse::<Tree>().unwrap().is_canonical());
        assert!(!"[[[[--]-]-][[--][--]]]".parse::<Tree>().unwrap().is_canonical());
    }
}
