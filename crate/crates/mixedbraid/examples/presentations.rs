//! The relation catalog and its verification:
//! `cargo run --example presentations`.

use mixedbraid::mixed::MixedContext;
use mixedbraid::presentations::{self, FamilyId};

fn main() {
    // Every relation family, instantiated and checked against the Garside
    // oracle at one context.
    let ctx = MixedContext::new(2, 2).unwrap();
    let report = presentations::verify_all(ctx);
    println!("{report}");

    // A single family up close: its schema and one concrete instance.
    let fam = presentations::family(FamilyId::M1);
    println!("\n{} schema: {}", fam.id, fam.schema);
    let inst = presentations::instantiate(&fam, ctx);
    for instance in inst.instances.iter().take(3) {
        println!("  {instance}");
    }

    // Degenerate index tuples are skipped with a reason, not dropped.
    let fam = presentations::family(FamilyId::M3);
    let inst = presentations::instantiate(&fam, MixedContext::new(1, 2).unwrap());
    for skip in &inst.skipped {
        let bindings: Vec<String> = skip
            .bindings
            .iter()
            .map(|(name, val)| format!("{name}={val}"))
            .collect();
        println!("\nM3 skip at {}: {}", bindings.join(","), skip.reason);
    }
}
