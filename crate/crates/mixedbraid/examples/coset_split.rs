//! Splitting a braid into a subgroup member times a fixed braid:
//! `cargo run --example coset_split`.

use mixedbraid::braid::BraidWord;
use mixedbraid::coset::{self, FixedBraid};
use mixedbraid::garside;
use mixedbraid::mixed::{self, MixedContext};

fn main() {
    // Two fixed strands carrying a full twist of their own.
    let ctx = MixedContext::new(2, 2).unwrap();
    let b = FixedBraid::new(BraidWord::from_signed(2, &[(1, 1), (1, 1)]).unwrap());
    let embedded = coset::embed_fixed(&b, ctx).unwrap();
    println!("fixed braid {}  embedded as {}", b.word(), embedded);

    let candidates = [
        BraidWord::from_signed(4, &[(3, 1), (3, 1), (1, 1), (1, 1)]).unwrap(),
        BraidWord::from_signed(4, &[(1, 1), (3, 1), (1, -1), (3, -1), (1, 1), (1, 1)]).unwrap(),
        BraidWord::from_signed(4, &[(3, 1)]).unwrap(),
        BraidWord::from_signed(4, &[(1, 1)]).unwrap(),
    ];

    for a in &candidates {
        let shown = format!("{a:28}", a = a.to_string());
        if coset::is_in_coset(a, &b, ctx).unwrap() {
            let alpha = coset::split(a, &b, ctx).unwrap();
            assert!(mixed::is_member(&alpha, ctx).unwrap());
            assert!(garside::equal(a, &alpha.concat(&embedded).unwrap()).unwrap());
            println!("{shown}  =  ({alpha}) . ({embedded})");
        } else {
            println!("{shown}  not in the coset");
        }
    }
}
