//! Builds the lattice of downsets of a poset and recovers the poset as its
//! join-irreducibles.

use latbel::catalog;
use latbel::lattice::{downset_lattice, lattice_to_dot};

fn main() {
    let poset = catalog::chain_diamond_poset();
    let d = downset_lattice(&poset).unwrap();
    let l = &d.lattice;
    println!("{} downsets of a {}-element poset", l.len(), poset.len());
    for (x, p) in poset.elements().zip(&d.principal) {
        println!("  {} ↦ {}", poset.name(x), l.name(*p));
    }
    let back = l.joinirr_poset();
    println!("join-irreducible covers:");
    for &(a, b) in back.covers() {
        println!("  {} < {}", back.name(a), back.name(b));
    }
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", lattice_to_dot(l));
    }
}
