//! Structural profile of a few small lattices, with counterexamples.

use latbel::lattice::{find_m3_sublattice, profile, Property};
use latbel::{catalog, Lattice};

fn report(name: &str, l: &Lattice) {
    let p = profile(l);
    println!("{name} ({} elements)", l.len());
    for prop in Property::ALL {
        let mark = if p.get(prop) { "yes" } else { "no " };
        match p.witnesses.get(&prop).filter(|w| !w.is_empty()) {
            Some(w) => println!("  {mark} {prop:<28} {}", l.names_of(w).join(" ")),
            None => println!("  {mark} {prop}"),
        }
    }
    println!("  join-irreducibles: {}", l.names_of(l.joinirr()).join(" "));
    println!("  meet-irreducibles: {}", l.names_of(l.meetirr()).join(" "));
}

fn main() {
    report("M3", &catalog::m3());
    report("N5", &catalog::n5());
    report("octet", &catalog::octet());

    let m3 = catalog::m3();
    if let Some(d) = find_m3_sublattice(&m3) {
        println!("diamond inside M3: {}", m3.names_of(&d).join(" "));
    }

    let l = catalog::chain_diamond_lattice();
    let x = l.elem("{a,b,c,d,e}").unwrap();
    println!(
        "η({}) = {}, η*({}) = {}",
        l.name(x),
        l.names_of(&l.eta(x)).join(" "),
        l.name(x),
        l.names_of(&l.eta_star(x).unwrap()).join(" ")
    );
}
