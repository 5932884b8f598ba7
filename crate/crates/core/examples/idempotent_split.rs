//! Splitting an algebra with idempotent twist along Ker(alpha).

use homalt::algebra::HomAlgebra;
use homalt::cli::fixtures;
use homalt::constructions::idempotent_split;
use homalt::exactlin::{int, Matrix};

fn main() {
    let s = idempotent_split(&fixtures::split2()).unwrap();
    println!(
        "split2: quotient dim {}, kernel dim {}, verified {}",
        s.quotient.algebra.dim(),
        s.kernel.dim(),
        s.is_verified()
    );

    // Multiplicative with alpha^2 = alpha, but e1 e2 = e2 lands outside the
    // image's annihilator, so the witness map is not a morphism.
    let alg = HomAlgebra::from_entries(
        "e1e2",
        HomAlgebra::default_labels(2, 1),
        &[(0, 0, 0, int(1)), (0, 1, 1, int(1))],
        Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]),
    )
    .unwrap();
    let s = idempotent_split(&alg).unwrap();
    println!("e1e2: verified {}", s.is_verified());
    if let Some(v) = &s.violation {
        println!("  {v}");
    }
}
