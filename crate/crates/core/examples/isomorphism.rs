//! Isomorphism obstructions from the twist, and candidate verification.

use homalt::cli::fixtures;
use homalt::constructions::transport_product;
use homalt::exactlin::Matrix;
use homalt::structure::{iso_obstruction, IsoCertificate};

fn main() {
    let (a, b) = (fixtures::oct_alpha(), fixtures::oct_beta());
    let r = iso_obstruction(&a, &b, None).unwrap();
    println!("oct_alpha vs oct_beta: {}", r.verdict);
    if let IsoCertificate::CharPoly { left, right } = &r.certificate {
        println!("  char polys {left} and {right}");
    }

    // A disguised copy: same invariants, so only a candidate settles it.
    let p = Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 2], &[0, 0, 1]]);
    let a3 = fixtures::a3p_3();
    let copy = transport_product(&a3, &p).unwrap();
    println!("without candidate: {}", iso_obstruction(&a3, &copy, None).unwrap().verdict);
    println!("with candidate: {}", iso_obstruction(&a3, &copy, Some(&p)).unwrap().verdict);
    let wrong = Matrix::identity(3);
    let r = iso_obstruction(&a3, &copy, Some(&wrong)).unwrap();
    println!("wrong candidate: {} ({:?})", r.verdict, r.candidate_failure.map(|f| f.to_string()));
}
