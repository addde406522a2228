//! Subgroup membership and the moving-strand permutation:
//! `cargo run --example membership`.

use mixedbraid::braid::BraidWord;
use mixedbraid::mixed::{self, MixedContext};

fn main() {
    // Two fixed strands (1, 2) and two moving strands (3, 4).
    let ctx = MixedContext::new(2, 2).unwrap();
    let w = |letters: &[(usize, i8)]| BraidWord::from_signed(4, letters).unwrap();

    let samples = [
        ("s3 s3", w(&[(3, 1), (3, 1)])),
        ("s3", w(&[(3, 1)])),
        ("s2", w(&[(2, 1)])),
        ("s2 s2", w(&[(2, 1), (2, 1)])),
        ("s2 s3 s2^-1", w(&[(2, 1), (3, 1), (2, -1)])),
        ("s1 s1", w(&[(1, 1), (1, 1)])),
    ];

    println!("{:14} {:>7} {:>5} {:>8}", "word", "member", "pure", "images");
    for (label, word) in &samples {
        let member = mixed::is_member(word, ctx).unwrap();
        let pure = mixed::is_pure_member(word, ctx).unwrap();
        let images = if member {
            let pi = mixed::moving_permutation(word, ctx).unwrap();
            format!("{:?}", pi.one_line())
        } else {
            "-".into()
        };
        println!("{label:14} {member:>7} {pure:>5} {images:>8}");
    }

    // Membership means the fixed strands neither move nor braid among
    // themselves: s2 fails because a fixed strand crosses a moving one, and
    // s1 s1 fails because the fixed strands braid with each other.
}
