//! Untwist oct_alpha to the octonions, then twist back.

use homalt::algebra::Element;
use homalt::cli::fixtures;
use homalt::constructions::{untwist, yau_twist};

fn main() {
    let twisted = fixtures::oct_alpha();
    let pair = untwist(&twisted).expect("alpha is invertible");
    let oct = &pair.induced;
    println!("consistent: {}", pair.is_consistent());
    println!("induced twist is identity: {}", oct.twist().is_identity());

    let e = |i| Element::basis(8, i);
    let lhs = oct.mul(&oct.mul(&e(1), &e(2)).unwrap(), &e(3)).unwrap();
    let rhs = oct.mul(&e(1), &oct.mul(&e(2), &e(3)).unwrap()).unwrap();
    println!("(e1 e2) e3 = {lhs}");
    println!("e1 (e2 e3) = {rhs}");

    let back = yau_twist(oct, twisted.twist()).expect("alpha is an automorphism of the octonions");
    println!("round trip reproduces the table: {}", back.product_constants() == twisted.product_constants());
}
