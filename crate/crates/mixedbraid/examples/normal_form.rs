//! Garside left-greedy normal forms: run with
//! `cargo run --example normal_form`.

use mixedbraid::braid::BraidWord;
use mixedbraid::garside;

fn show(label: &str, strands: usize, letters: &[(usize, i8)]) {
    let w = BraidWord::from_signed(strands, letters).unwrap();
    let nf = garside::left_normal_form(&w);
    println!("{label:24} -> {nf}");
}

fn main() {
    // The two sides of the braid relation share a normal form.
    show("s1 s2 s1", 3, &[(1, 1), (2, 1), (1, 1)]);
    show("s2 s1 s2", 3, &[(2, 1), (1, 1), (2, 1)]);

    // A negative letter pulls in a power of the half twist.
    show("s1^-1", 3, &[(1, -1)]);
    show("s1 s2^-1", 3, &[(1, 1), (2, -1)]);

    // Freely reduced but trivial as a group element.
    show("s2 s1 s2 s1^-1 s2^-1 s1^-1", 3, &[(2, 1), (1, 1), (2, 1), (1, -1), (2, -1), (1, -1)]);

    // A longer positive braid on four strands.
    show(
        "s1 s3 s2 s2 s1 s3",
        4,
        &[(1, 1), (3, 1), (2, 1), (2, 1), (1, 1), (3, 1)],
    );
}
