//! Enumeration of association types per degree, with their skew-symmetries.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Perm;

use super::tree::{Node, OpClass, Tree};

/// Largest degree the shared catalog will enumerate.
pub const MAX_DEGREE: usize = 14;

/// A canonical association type together with its position in deglex order.
#[derive(Clone, Debug)]
pub struct AssocType {
    pub tree: Tree,
    /// 1-based position among all types of this degree.
    pub index: usize,
    /// 1-based position among the types of the same class.
    pub class_index: usize,
    pub skews: Vec<SkewSymmetry>,
}

impl AssocType {
    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn class(&self) -> OpClass {
        self.tree.class()
    }

    /// s(T): number of skew-symmetry generators.
    pub fn skew_count(&self) -> usize {
        self.skews.len()
    }

    /// True when some generator is an even permutation.
    pub fn has_even_skew(&self) -> bool {
        self.skews.iter().any(|s| s.parity() == 1)
    }
}

/// Relation `[id]_T + [sigma]_T = 0` for an involution exchanging the leaf
/// blocks of two equal subtrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewSymmetry {
    /// 1-based index of the type in its degree.
    pub type_index: usize,
    pub sigma: Perm,
    /// Coefficient of `[sigma]_T` in the relation; always -1.
    pub sign: i8,
}

impl SkewSymmetry {
    /// Sign of `sigma` as a permutation.
    pub fn parity(&self) -> i8 {
        self.sigma.sign()
    }
}

/// Every association type of one degree, in deglex order.
#[derive(Debug)]
pub struct DegreeTypes {
    degree: usize,
    types: Vec<AssocType>,
    lookup: HashMap<Tree, usize>,
}

impl DegreeTypes {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn types(&self) -> &[AssocType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Type by 1-based index.
    pub fn get(&self, index: usize) -> Result<&AssocType> {
        index
            .checked_sub(1)
            .and_then(|i| self.types.get(i))
            .ok_or(Error::UnknownType {
                degree: self.degree,
                index,
            })
    }

    /// 1-based index of a canonical tree.
    pub fn index_of(&self, tree: &Tree) -> Option<usize> {
        self.lookup.get(tree).map(|i| i + 1)
    }

    pub fn of_class(&self, class: OpClass) -> impl Iterator<Item = &AssocType> {
        self.types.iter().filter(move |t| t.class() == class)
    }

    /// Number of binary types, which occupy the tail of the list.
    pub fn binary_count(&self) -> usize {
        self.of_class(OpClass::Binary).count()
    }

    /// 0-based offset of the first binary type.
    pub fn binary_offset(&self) -> usize {
        self.len() - self.binary_count()
    }

    /// Binary type by its 1-based index among binary types.
    pub fn binary(&self, class_index: usize) -> Result<&AssocType> {
        if class_index == 0 || class_index > self.binary_count() {
            return Err(Error::UnknownType {
                degree: self.degree,
                index: class_index,
            });
        }
        Ok(&self.types[self.binary_offset() + class_index - 1])
    }
}

static CATALOG: [OnceLock<DegreeTypes>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

/// Deglex-ordered association types of degree `n`, cached for the process.
pub fn types_of_degree(n: usize) -> Result<&'static DegreeTypes> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidDegree(n));
    }
    Ok(CATALOG[n].get_or_init(|| build_degree(n)))
}

/// Ordered list of the association types of degree `n`.
pub fn enumerate_types(n: usize) -> Result<&'static [AssocType]> {
    Ok(types_of_degree(n)?.types())
}

fn build_degree(n: usize) -> DegreeTypes {
    let mut trees = Vec::new();
    if n == 1 {
        trees.push(Tree::leaf());
    } else {
        // Binary root: first child has larger degree, ties broken by
        // non-decreasing index.
        for d1 in n.div_ceil(2)..n {
            let d2 = n - d1;
            let l1 = level(d1);
            let l2 = level(d2);
            for (i, u) in l1.iter().enumerate() {
                for (j, v) in l2.iter().enumerate() {
                    if d1 == d2 && j < i {
                        continue;
                    }
                    trees.push(Tree::binary(u.tree.clone(), v.tree.clone()));
                }
            }
        }
        // Ternary root: same constraint on the first two children.
        for d3 in 1..n.saturating_sub(1) {
            let rest = n - d3;
            for d1 in rest.div_ceil(2)..rest {
                let d2 = rest - d1;
                let (l1, l2, l3) = (level(d1), level(d2), level(d3));
                for (i, u) in l1.iter().enumerate() {
                    for (j, v) in l2.iter().enumerate() {
                        if d1 == d2 && j < i {
                            continue;
                        }
                        for w in l3 {
                            trees.push(Tree::ternary(
                                u.tree.clone(),
                                v.tree.clone(),
                                w.tree.clone(),
                            ));
                        }
                    }
                }
            }
        }
        trees.sort();
    }

    let mut class_counter: HashMap<OpClass, usize> = HashMap::new();
    let mut types = Vec::with_capacity(trees.len());
    let mut lookup = HashMap::with_capacity(trees.len());
    for (i, tree) in trees.into_iter().enumerate() {
        let class_index = {
            let c = class_counter.entry(tree.class()).or_insert(0);
            *c += 1;
            *c
        };
        let skews = skew_generators_of(&tree, i + 1);
        lookup.insert(tree.clone(), i);
        types.push(AssocType {
            tree,
            index: i + 1,
            class_index,
            skews,
        });
    }
    DegreeTypes {
        degree: n,
        types,
        lookup,
    }
}

fn level(d: usize) -> &'static [AssocType] {
    types_of_degree(d).expect("subdegree within range").types()
}

/// Skew generators of a canonical tree in post-order (children before the
/// node, left to right).
pub fn skew_generators(t: &AssocType) -> Vec<SkewSymmetry> {
    t.skews.clone()
}

fn skew_generators_of(tree: &Tree, type_index: usize) -> Vec<SkewSymmetry> {
    let n = tree.degree();
    let mut out = Vec::new();
    collect_skews(tree, 0, n, type_index, &mut out);
    out
}

fn collect_skews(
    tree: &Tree,
    offset: usize,
    n: usize,
    type_index: usize,
    out: &mut Vec<SkewSymmetry>,
) {
    let (first, second) = match tree.node() {
        Node::Leaf => return,
        Node::Binary(a, b) => (a, b),
        Node::Ternary(a, b, _) => (a, b),
    };
    let mut off = offset;
    for child in tree.children() {
        collect_skews(child, off, n, type_index, out);
        off += child.degree();
    }
    if first == second {
        let k = first.degree();
        let mut images: Vec<u8> = (0..n as u8).collect();
        for i in 0..k {
            images.swap(offset + i, offset + k + i);
        }
        out.push(SkewSymmetry {
            type_index,
            sigma: Perm::from_images(images).expect("block swap is a permutation"),
            sign: -1,
        });
    }
}

/// Type counts `(bt, b, t, m)` of degree `n` from the recurrences.
///
/// Degree one is reported as the table does, `(1, 1, 1, 0)`; the sum
/// `bt = b + t + m` holds only from degree two on.
pub fn count_types(n: usize) -> Result<(u128, u128, u128, u128)> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    let bt = recurrence(n, true, true);
    let b = recurrence(n, true, false);
    let t = recurrence(n, false, true);
    let m = if n == 1 { 0 } else { bt[n] - b[n] - t[n] };
    Ok((bt[n], b[n], t[n], m))
}

fn choose2_rep(x: u128) -> u128 {
    x * (x + 1) / 2
}

/// Counts trees using the allowed operations, for degrees `0..=n`.
fn recurrence(n: usize, binary: bool, ternary: bool) -> Vec<u128> {
    let mut c = vec![0u128; n + 1];
    if n >= 1 {
        c[1] = 1;
    }
    for k in 2..=n {
        let mut total = 0u128;
        if binary {
            for i in 1..=(k - 1) / 2 {
                total += c[k - i] * c[i];
            }
            if k % 2 == 0 {
                total += choose2_rep(c[k / 2]);
            }
        }
        if ternary {
            for i in 1..=k.saturating_sub(2) {
                let rest = k - i;
                for j in 1..=(rest - 1) / 2 {
                    total += c[rest - j] * c[j] * c[i];
                }
                if rest % 2 == 0 {
                    total += choose2_rep(c[rest / 2]) * c[i];
                }
            }
        }
        c[k] = total;
    }
    c
}

/// mu(n): number of canonical multilinear monomials of degree `n`.
pub fn monomial_count(n: usize) -> Result<u128> {
    let types = types_of_degree(n)?;
    let fact: u128 = (1..=n as u128).product();
    Ok(types
        .types()
        .iter()
        .map(|t| fact >> t.skew_count())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_three() {
        let t = enumerate_types(3).unwrap();
        let s: Vec<String> = t.iter().map(|t| t.tree.to_string()).collect();
        assert_eq!(s, ["<--->", "[[--]-]"]);
    }

    #[test]
    fn degree_one_is_single_leaf() {
        let t = enumerate_types(1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].tree.to_string(), "-");
        assert_eq!(count_types(1).unwrap(), (1, 1, 1, 0));
    }

    #[test]
    fn invalid_degree() {
        assert!(matches!(enumerate_types(0), Err(Error::InvalidDegree(0))));
        assert!(count_types(0).is_err());
    }

    #[test]
    fn degree_two_skew() {
        let t = &enumerate_types(2).unwrap()[0];
        assert_eq!(t.skews.len(), 1);
        assert_eq!(t.skews[0].sigma.cycle_string(), "(12)");
        assert_eq!(count_types(2).unwrap(), (1, 1, 0, 0));
        assert_eq!(monomial_count(2).unwrap(), 1);
    }

    #[test]
    fn enumeration_matches_recurrence() {
        for n in 2..=9 {
            let types = types_of_degree(n).unwrap();
            let (bt, b, t, m) = count_types(n).unwrap();
            assert_eq!(types.len() as u128, bt);
            assert_eq!(types.of_class(OpClass::Binary).count() as u128, b);
            assert_eq!(types.of_class(OpClass::Ternary).count() as u128, t);
            assert_eq!(types.of_class(OpClass::Mixed).count() as u128, m);
        }
    }

    #[test]
    fn classes_are_grouped() {
        let types = enumerate_types(7).unwrap();
        let ranks: Vec<u8> = types
            .iter()
            .map(|t| match t.class() {
                OpClass::Ternary => 0,
                OpClass::Mixed => 1,
                _ => 2,
            })
            .collect();
        assert!(ranks.windows(2).all(|w| w[0] <= w[1]));
        assert!(types.iter().all(|t| t.tree.is_canonical()));
    }
}
