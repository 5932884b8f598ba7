//! Embedded example algebras.
//!
//! `oct_alpha` and `oct_beta` are the two twisted octonion tables verbatim,
//! `a7_3` and `a3p_3` the three-dimensional examples, `split2` a small
//! algebra with idempotent twist. `oct` is not stored: it is computed as the
//! untwisted algebra of `oct_alpha`.

use crate::algebra::HomAlgebra;
use crate::cli::document::load_algebra;
use crate::constructions::untwist;
use crate::error::{Error, Result};

const OCT_ALPHA: &str = include_str!("../../fixtures/oct_alpha.json");
const OCT_BETA: &str = include_str!("../../fixtures/oct_beta.json");
const A7_3: &str = include_str!("../../fixtures/a7_3.json");
const A3P_3: &str = include_str!("../../fixtures/a3p_3.json");
const SPLIT2: &str = include_str!("../../fixtures/split2.json");

pub const NAMES: [&str; 6] = ["oct", "oct_alpha", "oct_beta", "a7_3", "a3p_3", "split2"];

pub fn description(name: &str) -> Option<&'static str> {
    Some(match name {
        "oct" => "octonions with identity twist, the untwisted algebra of oct_alpha",
        "oct_alpha" => "octonion table twisted by the basis permutation alpha (8-dim)",
        "oct_beta" => "octonion table with twist beta = -Id (8-dim)",
        "a7_3" => "3-dim Hom-associative algebra with solvable derived series",
        "a3p_3" => "3-dim Hom-associative algebra with proper ideal span(e1, e3)",
        "split2" => "2-dim algebra with idempotent twist",
        _ => return None,
    })
}

/// Stored document text; `None` for computed fixtures and unknown names.
pub fn document_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "oct_alpha" => OCT_ALPHA,
        "oct_beta" => OCT_BETA,
        "a7_3" => A7_3,
        "a3p_3" => A3P_3,
        "split2" => SPLIT2,
        _ => return None,
    })
}

pub fn algebra(name: &str) -> Result<HomAlgebra> {
    if name == "oct" {
        return Ok(oct());
    }
    let text = document_text(name).ok_or_else(|| Error::UnknownInput(name.to_string()))?;
    load_algebra(text)
}

fn stored(name: &str) -> HomAlgebra {
    algebra(name).expect("embedded fixtures parse")
}

pub fn oct_alpha() -> HomAlgebra {
    stored("oct_alpha")
}

pub fn oct_beta() -> HomAlgebra {
    stored("oct_beta")
}

pub fn a7_3() -> HomAlgebra {
    stored("a7_3")
}

pub fn a3p_3() -> HomAlgebra {
    stored("a3p_3")
}

pub fn split2() -> HomAlgebra {
    stored("split2")
}

pub fn oct() -> HomAlgebra {
    untwist(&oct_alpha())
        .expect("alpha is a permutation")
        .induced
        .with_name("oct")
}
