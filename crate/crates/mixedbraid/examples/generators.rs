//! The band generators a[i,j] and their crossing-word spellings:
//! `cargo run --example generators`.

use mixedbraid::braid::Sign;
use mixedbraid::garside;
use mixedbraid::mixed::{self, expand_pure_gen_form, MixedContext, PureGenForm};

fn main() {
    // Each generator loops strand j around strand i. Two spellings exist,
    // dragging the band below or above the intermediate strands.
    for (i, j) in [(1, 2), (1, 3), (2, 4)] {
        let low = expand_pure_gen_form(i, j, 4, Sign::Pos, PureGenForm::TwistLow).unwrap();
        let high = expand_pure_gen_form(i, j, 4, Sign::Pos, PureGenForm::TwistHigh).unwrap();
        println!("a[{i},{j}]  low  {low}");
        println!("       high {high}");
        assert!(garside::equal(&low, &high).unwrap());
    }

    // In a mixed context the subgroup's own alphabet reaches every band
    // generator. Two fixed strands, three moving strands:
    let ctx = MixedContext::new(2, 3).unwrap();
    println!("\ncontext m=2, n=3 (strands 3, 4, 5 move)");
    for (i, j) in [(1, 4), (2, 3)] {
        let word = mixed::express_aij_irredundant(i, j, ctx).unwrap();
        println!("a[{i},{j}] via loops and crossings: {word}");
        let direct = mixed::expand_pure_gen(i, j, ctx.strands(), Sign::Pos).unwrap();
        assert!(garside::equal(&word.expand(), &direct).unwrap());
    }
    for (i, j) in [(3, 5), (4, 5)] {
        let word = mixed::express_moving_aij(i, j, ctx).unwrap();
        println!("a[{i},{j}] via crossings alone:    {word}");
        let direct = mixed::expand_pure_gen(i, j, ctx.strands(), Sign::Pos).unwrap();
        assert!(garside::equal(&word.expand(), &direct).unwrap());
    }
}
