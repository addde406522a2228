//! Generator and relation counts against brute enumeration:
//! `cargo run --example counting`.

use mixedbraid::mixed::MixedContext;
use mixedbraid::presentations;

fn main() {
    println!("{:>3} {:>3} {:>11} {:>11} {:>11} {:>9}", "m", "n", "gens (form)", "gens (enum)", "rels (form)", "P tuples");
    for m in 1..=4 {
        for n in 1..=4 {
            let gens = presentations::count_generators(m, n);
            let listed = presentations::enumerate_generators(m, n).len();
            let rels = presentations::count_pure_relations(m, n);
            let tuples = presentations::pure_relation_tuple_count(MixedContext::new(m, n).unwrap());
            println!("{m:>3} {n:>3} {gens:>11} {listed:>11} {rels:>11} {tuples:>9}");
        }
    }

    // With one fixed strand the subgroup is a plain pure braid group one
    // strand larger, and both counts collapse to the classical formulas.
    println!();
    for n in 2..=6 {
        assert_eq!(presentations::count_generators(1, n), (n * (n + 1) / 2) as u64);
        assert_eq!(
            presentations::count_pure_relations(1, n),
            presentations::artin_pure_relation_count(n + 1)
        );
        println!(
            "m=1, n={n}: {} generators, {} relations (pure braid group on {} strands)",
            presentations::count_generators(1, n),
            presentations::count_pure_relations(1, n),
            n + 1
        );
    }
}
