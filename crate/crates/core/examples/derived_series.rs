//! Derived series of the fixtures and of a few random twisted algebras.

use homalt::cli::fixtures;
use homalt::random::hom_associative;
use homalt::structure::{derived_series, derived_terms_ideal_check, solvability_equivalence_check};

fn main() {
    for name in ["a7_3", "oct_alpha", "a3p_3", "split2"] {
        let s = derived_series(&fixtures::algebra(name).unwrap(), 10);
        println!("{name}: dims {:?}, solvable {}", s.dims(), s.solvable);
    }

    for seed in 0..4 {
        let alg = hom_associative(seed, 4, true);
        let eq = solvability_equivalence_check(&alg).unwrap();
        println!(
            "{}: twisted {:?} induced {:?} terms agree {}",
            alg.name(),
            eq.twisted.dims(),
            eq.induced.dims(),
            eq.holds()
        );
    }

    // With a singular twist the second derived term can fail to be an ideal.
    let alg = hom_associative(11, 4, false);
    for (k, check) in derived_terms_ideal_check(&alg).iter().enumerate() {
        match &check.violation {
            None => println!("A^({k}) dim {} is an ideal", check.term.dim()),
            Some(v) => println!("A^({k}) dim {} is not an ideal: {v}", check.term.dim()),
        }
    }
}
