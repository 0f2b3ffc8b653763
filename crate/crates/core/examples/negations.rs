//! ∨-negations: enumeration and extension from join-irreducibles.

use latbel::catalog;
use latbel::duality::{negation_from_irreducible_names, negations};

fn main() {
    for (name, l) in [("octet", catalog::octet()), ("cube", catalog::boolean(3)), ("kite", catalog::kite())] {
        let all = negations(&l, usize::MAX);
        println!("{name}: {} negation(s)", all.len());
        for n in all.iter().take(2) {
            let pairs: Vec<String> = l
                .elements()
                .map(|x| format!("{}→{}", l.name(x), l.name(n.apply(x))))
                .collect();
            println!("  {} (involutive: {})", pairs.join(" "), n.is_involutive());
        }
    }

    let l = catalog::chain_diamond_lattice();
    let n = negation_from_irreducible_names(&l, &catalog::chain_diamond_negation_table()).unwrap();
    println!("extended from join-irreducibles:");
    for x in l.elements() {
        println!("  {:<15} → {}", l.name(x), l.name(n.apply(x)));
    }
}
