//! JSON algebra files with sparse, 1-based, exact structure constants.
//!
//! ```json
//! { "dimension": 3, "construction": "lie",
//!   "bilinear": [[1, 2, 3, "1"], [2, 1, 3, "-1"]] }
//! ```
//!
//! For `lie` and `leibniz` only `bilinear` is read (it is the Lie bracket
//! or the Leibniz product); `direct` also reads `trilinear`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::parse_rational;
use crate::Rational;

use super::algebra::{from_leibniz, from_lie, AlgebraSC, LeibnizSC};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Direct,
    Lie,
    Leibniz,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dimension: usize,
    pub construction: Construction,
    #[serde(default)]
    pub bilinear: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trilinear: Vec<(usize, usize, usize, usize, String)>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// A `direct` file holding every nonzero constant of `a`.
    pub fn from_algebra(name: Option<String>, a: &AlgebraSC) -> Self {
        AlgebraFile {
            name,
            dimension: a.dim(),
            construction: Construction::Direct,
            bilinear: a
                .bilinear_entries()
                .into_iter()
                .map(|(i, j, k, v)| (i + 1, j + 1, k + 1, v.to_string()))
                .collect(),
            trilinear: a
                .trilinear_entries()
                .into_iter()
                .map(|(i, j, k, l, v)| (i + 1, j + 1, k + 1, l + 1, v.to_string()))
                .collect(),
        }
    }

    fn index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.dimension {
            return Err(Error::Parse(format!(
                "index {i} outside 1..={} in algebra file",
                self.dimension
            )));
        }
        Ok(i - 1)
    }

    fn bilinear_table(&self) -> Result<Vec<(usize, usize, usize, Rational)>> {
        self.bilinear
            .iter()
            .map(|(i, j, k, v)| Ok((self.index(*i)?, self.index(*j)?, self.index(*k)?, parse_rational(v)?)))
            .collect()
    }

    /// Builds the algebra without validating it. A `leibniz` table must
    /// satisfy the Leibniz identity; a `lie` table is taken as is, so a
    /// failure of Jacobi shows up later as an LY3 violation.
    pub fn build(&self) -> Result<AlgebraSC> {
        let bil = self.bilinear_table()?;
        match self.construction {
            Construction::Lie => from_lie(self.dimension, &bil),
            Construction::Leibniz => from_leibniz(&LeibnizSC::from_entries(self.dimension, &bil)?),
            Construction::Direct => {
                let mut a = AlgebraSC::zero(self.dimension);
                for (i, j, k, v) in bil {
                    a.set_c(i, j, k, v);
                }
                for (i, j, k, l, v) in &self.trilinear {
                    let (i, j, k, l) = (self.index(*i)?, self.index(*j)?, self.index(*k)?, self.index(*l)?);
                    a.set_t(i, j, k, l, parse_rational(v)?);
                }
                Ok(a)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evallab::{bundled_algebras, validate, Axiom};

    #[test]
    fn direct_round_trip() {
        for b in bundled_algebras().into_iter().filter(|b| b.algebra.dim() <= 3) {
            let f = AlgebraFile::from_algebra(Some(b.name.into()), &b.algebra);
            let back = AlgebraFile::parse(&f.to_json()).unwrap();
            assert_eq!(back, f);
            assert_eq!(back.build().unwrap(), b.algebra);
        }
    }

    #[test]
    fn lie_file() {
        let text = r#"{"dimension": 3, "construction": "lie",
            "bilinear": [[1,2,3,"1"],[2,1,3,"-1"],[2,3,1,"1"],[3,2,1,"-1"],[3,1,2,"1"],[1,3,2,"-1"]]}"#;
        let a = AlgebraFile::parse(text).unwrap().build().unwrap();
        assert!(validate(&a).is_empty());
        assert!(a.trilinear_is_zero());
    }

    #[test]
    fn leibniz_file_derives_the_triple_product() {
        let text = r#"{"dimension": 2, "construction": "leibniz", "bilinear": [[1,1,2,"1"]]}"#;
        let a = AlgebraFile::parse(text).unwrap().build().unwrap();
        assert!(validate(&a).is_empty());
    }

    #[test]
    fn non_jacobi_lie_file_reports_ly3() {
        let text = r#"{"dimension": 3, "construction": "lie",
            "bilinear": [[1,2,1,"1"],[2,1,1,"-1"],[1,3,2,"1"],[3,1,2,"-1"]]}"#;
        let a = AlgebraFile::parse(text).unwrap().build().unwrap();
        assert!(validate(&a).iter().any(|v| v.axiom == Axiom::LY3));
    }

    #[test]
    fn bad_index_is_rejected() {
        let text = r#"{"dimension": 2, "construction": "direct", "bilinear": [[1,3,1,"1"]]}"#;
        assert!(AlgebraFile::parse(text).unwrap().build().is_err());
        let text = r#"{"dimension": 2, "construction": "direct", "bilinear": [[0,1,1,"1"]]}"#;
        assert!(AlgebraFile::parse(text).unwrap().build().is_err());
    }

    #[test]
    fn rational_entries() {
        let text = r#"{"dimension": 1, "construction": "direct", "trilinear": [[1,1,1,1,"-3/2"]]}"#;
        let a = AlgebraFile::parse(text).unwrap().build().unwrap();
        assert_eq!(*a.t(0, 0, 0, 0), crate::rat(-3, 2));
    }
}
