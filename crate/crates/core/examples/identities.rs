//! Identity flags of every embedded fixture, with the first failing witness.

use homalt::algebra::Identity;
use homalt::cli::fixtures;

fn main() {
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).expect("fixture");
        let checks = alg.check_identities();
        println!("{name} (dim {})", alg.dim());
        for id in Identity::ALL {
            match &checks.get(id).witness {
                None => println!("  ✓ {}", id.name()),
                Some(w) => println!("  ✗ {} at {:?}", id.name(), w.indices),
            }
        }
    }
}
