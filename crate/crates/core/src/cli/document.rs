//! JSON documents for algebras and bimodules. Rationals travel as `"p/q"`
//! strings; products and actions are sparse, twists are dense row-major.

use serde::{Deserialize, Serialize};

use crate::algebra::HomAlgebra;
use crate::bimodule::HomBimodule;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, Matrix, Rational};

type Entry = (usize, usize, usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mul: Vec<Entry>,
    pub alpha: Vec<String>,
}

/// Either the name of an embedded fixture or an inline algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseRef {
    Name(String),
    Inline(Box<AlgebraDocument>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub base: BaseRef,
    pub dim: usize,
    pub alpha_v: Vec<String>,
    pub left: Vec<Entry>,
    pub right: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Algebra(HomAlgebra),
    Bimodule(HomBimodule),
}

fn parse_at(text: &str, locus: impl FnOnce() -> String) -> Result<Rational> {
    parse_rational(text).map_err(|_| Error::Parse {
        locus: locus(),
        message: Error::MalformedRational(text.to_string()).to_string(),
    })
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        locus: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

fn dense_matrix(field: &str, entries: &[String], dim: usize) -> Result<Matrix> {
    if entries.len() != dim * dim {
        return Err(Error::Parse {
            locus: field.to_string(),
            message: format!("expected {} entries, found {}", dim * dim, entries.len()),
        });
    }
    let data = entries
        .iter()
        .enumerate()
        .map(|(idx, t)| parse_at(t, || format!("{field}[{idx}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::new(dim, dim, data)
}

fn sparse_entries(field: &str, entries: &[Entry], dims: [usize; 3]) -> Result<Vec<(usize, usize, usize, Rational)>> {
    entries
        .iter()
        .enumerate()
        .map(|(idx, (a, b, c, t))| {
            for (slot, (&value, &dim)) in [a, b, c].into_iter().zip(&dims).enumerate() {
                if value >= dim {
                    return Err(Error::IndexOutOfRange {
                        locus: format!("{field}[{idx}][{slot}]"),
                        index: value,
                        dim,
                    });
                }
            }
            Ok((*a, *b, *c, parse_at(t, || format!("{field}[{idx}][3]"))?))
        })
        .collect()
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> Result<HomAlgebra> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Parse {
                locus: "basis".into(),
                message: format!("expected {n} labels, found {}", self.basis.len()),
            });
        }
        let twist = dense_matrix("alpha", &self.alpha, n)?;
        let entries = sparse_entries("mul", &self.mul, [n, n, n])?;
        HomAlgebra::from_entries(self.name.clone(), self.basis.clone(), &entries, twist)
    }

    pub fn from_algebra(alg: &HomAlgebra) -> Self {
        Self {
            name: alg.name().to_string(),
            comment: None,
            dim: alg.dim(),
            basis: alg.labels().to_vec(),
            mul: alg
                .nonzero_entries()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, format_rational(&c)))
                .collect(),
            alpha: alg.twist().entries().iter().map(format_rational).collect(),
        }
    }
}

impl BimoduleDocument {
    /// `resolve` maps a base name to an algebra.
    pub fn to_bimodule(&self, resolve: &dyn Fn(&str) -> Result<HomAlgebra>) -> Result<HomBimodule> {
        let base = match &self.base {
            BaseRef::Name(name) => resolve(name)?,
            BaseRef::Inline(doc) => doc.to_algebra()?,
        };
        let (n, m) = (base.dim(), self.dim);
        let twist = dense_matrix("alpha_v", &self.alpha_v, m)?;
        let left = sparse_entries("left", &self.left, [n, m, m])?;
        let right = sparse_entries("right", &self.right, [m, n, m])?;
        HomBimodule::from_entries(self.name.clone(), base, twist, &left, &right)
    }

    pub fn from_bimodule(bim: &HomBimodule) -> Self {
        let text = |v: Vec<(usize, usize, usize, Rational)>| {
            v.into_iter().map(|(a, b, c, x)| (a, b, c, format_rational(&x))).collect()
        };
        Self {
            name: bim.name().to_string(),
            comment: None,
            base: BaseRef::Inline(Box::new(AlgebraDocument::from_algebra(bim.base()))),
            dim: bim.dim(),
            alpha_v: bim.twist().entries().iter().map(format_rational).collect(),
            left: text(bim.left_entries()),
            right: text(bim.right_entries()),
        }
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    render_json(&serde_json::to_value(value).expect("documents serialize"))
}

/// Pretty JSON with arrays of scalars kept on one line.
pub(crate) fn render_json(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out.push('\n');
    out
}

fn render(value: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |k: usize| "  ".repeat(k);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (idx, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(item, indent + 1, out);
                out.push_str(if idx + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (idx, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                render(item, indent + 1, out);
                out.push_str(if idx + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn save_algebra(alg: &HomAlgebra) -> String {
    to_pretty(&AlgebraDocument::from_algebra(alg))
}

pub fn save_bimodule(bim: &HomBimodule) -> String {
    to_pretty(&BimoduleDocument::from_bimodule(bim))
}

pub fn parse_algebra_document(text: &str) -> Result<AlgebraDocument> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn load_algebra(text: &str) -> Result<HomAlgebra> {
    parse_algebra_document(text)?.to_algebra()
}

pub fn load_bimodule(text: &str, resolve: &dyn Fn(&str) -> Result<HomAlgebra>) -> Result<HomBimodule> {
    let doc: BimoduleDocument = serde_json::from_str(text).map_err(json_error)?;
    doc.to_bimodule(resolve)
}

/// Loads either document kind; a top-level `alpha_v` field marks a bimodule.
pub fn load(text: &str, resolve: &dyn Fn(&str) -> Result<HomAlgebra>) -> Result<Loaded> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("alpha_v").is_some() {
        Ok(Loaded::Bimodule(load_bimodule(text, resolve)?))
    } else {
        Ok(Loaded::Algebra(load_algebra(text)?))
    }
}
