//! Deciding equality of braid words, with the integral Burau matrices as a
//! fast separating check: `cargo run --example word_problem`.

use mixedbraid::braid::BraidWord;
use mixedbraid::{burau, garside};

fn main() {
    let w = |letters: &[(usize, i8)]| BraidWord::from_signed(4, letters).unwrap();

    let pairs = [
        ("braid relation", w(&[(1, 1), (2, 1), (1, 1)]), w(&[(2, 1), (1, 1), (2, 1)])),
        ("far commutation", w(&[(1, 1), (3, 1)]), w(&[(3, 1), (1, 1)])),
        ("inverse pair", w(&[(2, 1), (2, -1)]), w(&[])),
        ("different twists", w(&[(1, 1)]), w(&[(1, 1), (1, 1)])),
        ("adjacent crossings", w(&[(1, 1), (2, 1)]), w(&[(2, 1), (1, 1)])),
    ];

    for (label, u, v) in &pairs {
        let same = garside::equal(u, v).unwrap();
        let matrices_agree = burau::burau_agree(u, v).unwrap();
        println!("{label:20} equal: {same:5}  matrices agree: {matrices_agree}");
        // The matrices can never separate equal words.
        assert!(!same || matrices_agree);
    }

    // Matrix triviality is a quick negative filter for the word problem.
    let candidate = w(&[(1, 1), (2, 1), (3, 1), (1, -1), (2, -1), (3, -1)]);
    println!(
        "filter example: matrix trivial: {}, actually trivial: {}",
        burau::burau_trivial(&candidate),
        garside::is_trivial(&candidate),
    );
}
