//! JSON algebra-definition documents.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{AlgebraBuilder, OmegaSuperAlgebra, Parity};
use crate::error::{Error, Result};
use crate::scalar::{parse_reduced, GaussianRational, IntRepr, RationalRepr};

/// `{ name, even_basis, odd_basis, brackets, omega }`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub omega: Vec<OmegaEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    /// `[re_num, re_den, im_num, im_den, basis_name]` terms.
    pub value: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
pub struct Term(IntRepr, IntRepr, IntRepr, IntRepr, String);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaEntry {
    pub left: String,
    pub right: String,
    re: RationalRepr,
    im: RationalRepr,
}

impl Term {
    fn decode(self) -> Result<(GaussianRational, String)> {
        let Term(rn, rd, in_, id, name) = self;
        let int = |r: IntRepr| r.into_big().map_err(Error::Schema);
        let re = parse_reduced(int(rn)?, int(rd)?).map_err(Error::Schema)?;
        let im = parse_reduced(int(in_)?, int(id)?).map_err(Error::Schema)?;
        Ok((GaussianRational::new(re, im), name))
    }

    fn encode(c: &GaussianRational, name: &str) -> Self {
        Term(
            IntRepr::from_big(c.re().numer()),
            IntRepr::from_big(c.re().denom()),
            IntRepr::from_big(c.im().numer()),
            IntRepr::from_big(c.im().denom()),
            name.to_owned(),
        )
    }
}

/// Parses and validates a JSON algebra document.
///
/// Brackets not listed are zero and listed ones are completed by graded
/// skew-symmetry; omega entries are taken literally.
pub fn load_algebra(text: &str) -> Result<OmegaSuperAlgebra> {
    let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    OmegaSuperAlgebra::from_document(doc)
}

impl OmegaSuperAlgebra {
    pub fn from_document(doc: AlgebraDocument) -> Result<Self> {
        let mut builder = AlgebraBuilder::new(doc.name);
        for b in doc.even_basis {
            builder = builder.even(b);
        }
        for b in doc.odd_basis {
            builder = builder.odd(b);
        }
        for entry in doc.brackets {
            let value = entry.value.into_iter().map(Term::decode).collect::<Result<Vec<_>>>()?;
            builder = builder.bracket(entry.left, entry.right, value);
        }
        for entry in doc.omega {
            let re = entry.re.into_rational().map_err(Error::Schema)?;
            let im = entry.im.into_rational().map_err(Error::Schema)?;
            builder = builder.omega(entry.left, entry.right, GaussianRational::new(re, im));
        }
        builder.build()
    }

    /// Brackets for `i < j` and odd diagonal pairs, nonzero entries only.
    pub fn to_document(&self) -> AlgebraDocument {
        let n = self.dim();
        let names = self.basis_names();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                if i == j && self.parity(i) == Parity::Even {
                    continue;
                }
                let value: Vec<Term> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| Term::encode(c, &names[k]))
                    .collect();
                if !value.is_empty() {
                    brackets.push(BracketEntry {
                        left: names[i].clone(),
                        right: names[j].clone(),
                        value,
                    });
                }
            }
        }
        let mut omega = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let w = &self.omega()[(i, j)];
                if !w.is_zero() {
                    omega.push(OmegaEntry {
                        left: names[i].clone(),
                        right: names[j].clone(),
                        re: RationalRepr::from_rational(w.re()),
                        im: RationalRepr::from_rational(w.im()),
                    });
                }
            }
        }
        let pick = |p: Parity| self.indices_of(p).into_iter().map(|i| names[i].clone()).collect();
        AlgebraDocument {
            name: self.name().to_owned(),
            even_basis: pick(Parity::Even),
            odd_basis: pick(Parity::Odd),
            brackets,
            omega,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }
}

impl Serialize for OmegaSuperAlgebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_document().serialize(serializer)
    }
}
