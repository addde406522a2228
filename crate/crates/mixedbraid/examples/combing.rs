//! Artin combing of pure braids into strand factors:
//! `cargo run --example combing`.

use mixedbraid::braid::BraidWord;
use mixedbraid::combing;
use mixedbraid::garside;
use mixedbraid::mixed::MixedContext;

fn main() {
    // One fixed strand, two moving strands.
    let ctx = MixedContext::new(1, 2).unwrap();
    let w = BraidWord::from_signed(
        3,
        &[(2, 1), (2, 1), (1, 1), (1, 1), (2, 1), (2, 1), (1, 1), (1, -1)],
    )
    .unwrap();

    // Combing sorts the word into one factor per moving strand, innermost
    // strand first; each factor only loops its strand around lower ones.
    let combed = combing::comb(&w, ctx).unwrap();
    println!("input  {w}");
    println!("{combed}");

    // The factors reassemble to the same group element.
    let rebuilt = combing::combed_to_word(&combed);
    println!("rebuilt {rebuilt}");
    assert!(garside::equal(&w, &rebuilt).unwrap());

    // Combed forms solve the word problem for pure members.
    let u = BraidWord::from_signed(3, &[(2, 1), (2, 1)]).unwrap();
    let v = BraidWord::from_signed(3, &[(1, 1), (2, 1), (2, 1), (1, -1)]).unwrap();
    println!(
        "\na[2,3] against its conjugate a[1,3]:     equal = {}",
        combing::equal_via_combing(&u, &v, ctx).unwrap()
    );
    let v2 = BraidWord::from_signed(3, &[(2, -1), (2, 1), (2, 1), (2, 1)]).unwrap();
    println!(
        "a[2,3] against a padded spelling of it:  equal = {}",
        combing::equal_via_combing(&u, &v2, ctx).unwrap()
    );
}
