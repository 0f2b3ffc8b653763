//! Reconstructs the chain of focal elements from a possibility distribution
//! on the 18-element lattice of downsets of `a < b` beside `c < d, e < f`.

use latbel::catalog;
use latbel::duality::negation_from_irreducible_names;
use latbel::possibilistic::{check_necessity, check_possibility, reconstruct_chain, PossibilityDistribution};
use latbel::TOLERANCE;

fn main() {
    let l = catalog::chain_diamond_lattice();
    let n = negation_from_irreducible_names(&l, &catalog::chain_diamond_negation_table()).unwrap();
    let pi = PossibilityDistribution::from_named(
        &l,
        &[
            ("{c}", 0.1),
            ("{c,d}", 0.2),
            ("{c,e}", 0.4),
            ("{a}", 0.6),
            ("{c,d,e,f}", 0.9),
            ("{a,b}", 1.0),
        ],
    )
    .unwrap();
    let fc = reconstruct_chain(&n, &pi).unwrap();
    println!("{:<5} {:<10} {:<12} {:<28} {:<10} {:<14} mass", "step", "x", "n(x)", "η(n(x))", "ι_k", "chain");
    for s in &fc.steps {
        println!(
            "{:<5} {:<10} {:<12} {:<28} {:<10} {:<14} {:.2}",
            s.k,
            l.name(s.x),
            l.name(s.negated),
            l.names_of(&s.eta_negated).join(" "),
            l.name(s.iota),
            l.name(s.chain_element),
            s.mass
        );
    }
    let nec = fc.mass.belief();
    println!("necessity: {}", check_necessity(&nec, TOLERANCE).holds());
    println!("possibility of the distribution: {}", check_possibility(&pi.to_function(), TOLERANCE).holds());
}
