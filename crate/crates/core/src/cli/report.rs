//! Command reports: flags with witnesses, verdicts with certificates, named
//! values and emitted documents. Rendering is deterministic unless timing is
//! requested.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{IdealViolation, IdentityWitness, MorphismViolation};
use crate::bimodule::BimoduleWitness;
use crate::cli::document::render_json;
use crate::exactlin::{format_rational, format_vector, Matrix, Rational, Subspace};

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|b| vector_json(b)).collect::<Vec<_>>(),
    })
}

pub fn subspace_text(s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|b| format_vector(b)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_json(m.row(r))).collect())
}

pub fn matrix_text(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| m.row(r).iter().map(format_rational).collect::<Vec<_>>().join(","))
        .collect();
    rows.join(";")
}

/// Text and JSON forms of one witness or certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub text: String,
    pub json: Value,
}

impl Witness {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Self { text: text.into(), json }
    }

    pub fn subspace(s: &Subspace) -> Self {
        Self::new(subspace_text(s), subspace_json(s))
    }
}

impl From<&IdentityWitness> for Witness {
    fn from(w: &IdentityWitness) -> Self {
        Self::new(
            w.to_string(),
            json!({"identity": w.identity.name(), "indices": w.indices, "defect": vector_json(&w.defect)}),
        )
    }
}

impl From<&MorphismViolation> for Witness {
    fn from(v: &MorphismViolation) -> Self {
        let json = match v {
            MorphismViolation::Product { i, j, defect } => {
                json!({"kind": "product", "indices": [i, j], "defect": vector_json(defect)})
            }
            MorphismViolation::Twist { i, defect } => {
                json!({"kind": "twist", "indices": [i], "defect": vector_json(defect)})
            }
        };
        Self::new(v.to_string(), json)
    }
}

impl From<&IdealViolation> for Witness {
    fn from(v: &IdealViolation) -> Self {
        use crate::algebra::IdealCondition;
        let (kind, basis) = match v.condition {
            IdealCondition::Twist => ("twist", None),
            IdealCondition::RightProduct { basis } => ("right-product", Some(basis)),
            IdealCondition::LeftProduct { basis } => ("left-product", Some(basis)),
        };
        Self::new(
            v.to_string(),
            json!({"condition": kind, "basis": basis, "vector": vector_json(&v.vector), "value": vector_json(&v.value)}),
        )
    }
}

impl From<&BimoduleWitness> for Witness {
    fn from(w: &BimoduleWitness) -> Self {
        Self::new(
            w.to_string(),
            json!({"axiom": w.axiom.name(), "indices": w.indices, "defect": vector_json(&w.defect)}),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive,
    Negative,
    Undecided,
}

#[derive(Clone, Debug, PartialEq)]
enum Item {
    Flag {
        name: String,
        holds: bool,
        asserted: bool,
        witness: Option<Witness>,
    },
    Verdict {
        name: String,
        value: String,
        outcome: Outcome,
        expected: Option<bool>,
        certificate: Option<Witness>,
    },
    Value {
        name: String,
        text: String,
        json: Value,
    },
    Document {
        name: String,
        text: String,
    },
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Report {
    command: Vec<String>,
    seed: u64,
    budget: usize,
    inputs: Vec<(String, String)>,
    items: Vec<Item>,
    elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64, budget: usize) -> Self {
        Self {
            command,
            seed,
            budget,
            ..Self::default()
        }
    }

    /// Records an input by name and the digest of its canonical document.
    pub fn input(&mut self, name: &str, canonical: &str) {
        self.inputs.push((name.to_string(), sha256_hex(canonical)));
    }

    /// An informational flag; a false value never changes the exit status.
    pub fn flag(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        self.push_flag(name.into(), witness, false);
    }

    /// A flag the command asserts; a false value gives exit status 1.
    pub fn assert_flag(&mut self, name: impl Into<String>, witness: Option<Witness>) {
        self.push_flag(name.into(), witness, true);
    }

    /// A flag without a witness, for facts re-checkable from the report.
    pub fn bare_flag(&mut self, name: impl Into<String>, holds: bool, asserted: bool) {
        self.items.push(Item::Flag {
            name: name.into(),
            holds,
            asserted,
            witness: None,
        });
    }

    fn push_flag(&mut self, name: String, witness: Option<Witness>, asserted: bool) {
        self.items.push(Item::Flag {
            name,
            holds: witness.is_none(),
            asserted,
            witness,
        });
    }

    pub fn verdict(
        &mut self,
        name: impl Into<String>,
        value: impl Into<String>,
        outcome: Outcome,
        expected: Option<bool>,
        certificate: Option<Witness>,
    ) {
        self.items.push(Item::Verdict {
            name: name.into(),
            value: value.into(),
            outcome,
            expected,
            certificate,
        });
    }

    pub fn value(&mut self, name: impl Into<String>, text: impl Into<String>, json: Value) {
        self.items.push(Item::Value {
            name: name.into(),
            text: text.into(),
            json,
        });
    }

    pub fn document(&mut self, name: impl Into<String>, text: impl Into<String>) {
        self.items.push(Item::Document {
            name: name.into(),
            text: text.into(),
        });
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed = Some(elapsed);
    }

    /// Value of the named flag, if present.
    pub fn flag_value(&self, name: &str) -> Option<bool> {
        self.items.iter().find_map(|item| match item {
            Item::Flag { name: n, holds, .. } if n == name => Some(*holds),
            _ => None,
        })
    }

    /// 1 if an asserted flag fails or a definite verdict contradicts its
    /// expectation, else 2 if some verdict is undecided, else 0.
    pub fn exit_code(&self) -> i32 {
        let mut undecided = false;
        for item in &self.items {
            match item {
                Item::Flag {
                    holds: false,
                    asserted: true,
                    ..
                } => return 1,
                Item::Verdict { outcome, expected, .. } => match (outcome, expected) {
                    (Outcome::Undecided, _) => undecided = true,
                    (Outcome::Positive, Some(false)) | (Outcome::Negative, Some(true)) => return 1,
                    _ => {}
                },
                _ => {}
            }
        }
        if undecided {
            2
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ homalt {}", self.command.join(" "));
        let _ = writeln!(out, "seed {} budget {}", self.seed, self.budget);
        for (name, digest) in &self.inputs {
            let _ = writeln!(out, "input {name} sha256:{digest}");
        }
        for item in &self.items {
            match item {
                Item::Flag {
                    name,
                    holds,
                    asserted,
                    witness,
                } => {
                    let mark = if *holds { "✓" } else { "✗" };
                    let tag = if *asserted { " (asserted)" } else { "" };
                    let _ = write!(out, "{mark} {name}{tag}");
                    if let Some(w) = witness {
                        let _ = write!(out, ": {}", w.text);
                    }
                    out.push('\n');
                }
                Item::Verdict {
                    name,
                    value,
                    expected,
                    certificate,
                    ..
                } => {
                    let _ = write!(out, "{name}: {value}");
                    if let Some(e) = expected {
                        let _ = write!(out, " (expected {})", if *e { "yes" } else { "no" });
                    }
                    if let Some(c) = certificate {
                        let _ = write!(out, "\n  certificate: {}", c.text);
                    }
                    out.push('\n');
                }
                Item::Value { name, text, .. } => {
                    let _ = writeln!(out, "{name}: {text}");
                }
                Item::Document { name, text } => {
                    let _ = writeln!(out, "--- {name} ---");
                    out.push_str(text);
                    if !text.ends_with('\n') {
                        out.push('\n');
                    }
                }
            }
        }
        if let Some(d) = self.elapsed {
            let _ = writeln!(out, "elapsed {} ms", d.as_millis());
        }
        let _ = writeln!(out, "exit {}", self.exit_code());
        out
    }

    pub fn to_json_value(&self) -> Value {
        let mut flags = Vec::new();
        let mut verdicts = Vec::new();
        let mut values = Map::new();
        let mut documents = Map::new();
        for item in &self.items {
            match item {
                Item::Flag {
                    name,
                    holds,
                    asserted,
                    witness,
                } => flags.push(json!({
                    "name": name,
                    "holds": holds,
                    "asserted": asserted,
                    "witness": witness.as_ref().map(|w| w.json.clone()),
                })),
                Item::Verdict {
                    name,
                    value,
                    outcome,
                    expected,
                    certificate,
                } => verdicts.push(json!({
                    "name": name,
                    "value": value,
                    "definite": *outcome != Outcome::Undecided,
                    "expected": expected,
                    "certificate": certificate.as_ref().map(|c| c.json.clone()),
                })),
                Item::Value { name, json, .. } => {
                    values.insert(name.clone(), json.clone());
                }
                Item::Document { name, text } => {
                    let doc = serde_json::from_str(text).unwrap_or_else(|_| Value::String(text.clone()));
                    documents.insert(name.clone(), doc);
                }
            }
        }
        let mut top = Map::new();
        top.insert("command".into(), json!(self.command));
        top.insert("seed".into(), json!(self.seed));
        top.insert("budget".into(), json!(self.budget));
        top.insert(
            "inputs".into(),
            Value::Array(
                self.inputs
                    .iter()
                    .map(|(n, d)| json!({"name": n, "sha256": d}))
                    .collect(),
            ),
        );
        top.insert("flags".into(), Value::Array(flags));
        top.insert("verdicts".into(), Value::Array(verdicts));
        top.insert("values".into(), Value::Object(values));
        top.insert("documents".into(), Value::Object(documents));
        if let Some(d) = self.elapsed {
            top.insert("elapsed_ms".into(), json!(d.as_millis() as u64));
        }
        top.insert("exit".into(), json!(self.exit_code()));
        Value::Object(top)
    }

    pub fn to_json(&self) -> String {
        render_json(&self.to_json_value())
    }
}
