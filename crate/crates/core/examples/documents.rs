//! Saving and loading algebra documents, and running commands in-process.

use homalt::cli::{fixtures, load_algebra, run, save_algebra};
use homalt::random::hom_associative;

fn main() {
    let alg = hom_associative(3, 3, true);
    let text = save_algebra(&alg);
    println!("{text}");
    println!("round trip: {}", load_algebra(&text).unwrap() == alg);

    let bad = fixtures::document_text("a7_3").unwrap().replacen("\"1\"", "\"1/0\"", 1);
    println!("malformed: {}", load_algebra(&bad).unwrap_err());

    let out = run(&["derived", "a7_3"]);
    print!("{}", out.stdout);
}
