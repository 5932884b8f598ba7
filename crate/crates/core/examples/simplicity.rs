//! Simplicity and semisimplicity verdicts with their certificates.

use homalt::cli::fixtures;
use homalt::constructions::direct_sum;
use homalt::cli::report::subspace_text;
use homalt::structure::{semisimplicity, simplicity, DEFAULT_BUDGET};

fn main() {
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let v = simplicity(&alg, 0, DEFAULT_BUDGET);
        print!("{name}: {} ({})", v.status, v.reason.as_str());
        if let Some(d) = v.envelope_dim {
            print!(" envelope {d}");
        }
        if let Some(w) = &v.witness {
            print!(" witness {}", subspace_text(w));
        }
        println!();
    }

    let oa = fixtures::oct_alpha();
    let d = semisimplicity(&direct_sum(&oa, &oa), 0, DEFAULT_BUDGET);
    let dims: Vec<_> = d.components.iter().map(|c| c.dim()).collect();
    println!("oct_alpha (+) oct_alpha: {} components {dims:?}", d.verdict.status);
}
