//! Dempster's rule on a lattice and the decomposition of a belief function
//! into simple support functions.

use latbel::evidence::{combine, decompose, recombine, simple_support, CombinationPolicy};
use latbel::transforms::{comobius_transform, zeta_transform, SetFunction};
use latbel::catalog;

fn main() {
    let l = catalog::n5();
    let a = simple_support(&l, l.elem("b").unwrap(), 0.4).unwrap();
    let c = simple_support(&l, l.elem("c").unwrap(), 0.7).unwrap();
    for policy in [CombinationPolicy::Raw, CombinationPolicy::ZeroBottom, CombinationPolicy::Normalize] {
        let m = combine(a.function(), c.function(), policy).unwrap();
        println!("{policy:<12} {:?}", m.values());
    }
    let m = combine(a.function(), c.function(), CombinationPolicy::Raw).unwrap();
    let q = comobius_transform(&m);
    let product: Vec<f64> = l.elements().map(|x| a.commonality()[x] * c.commonality()[x]).collect();
    println!("q = {:?}\nq1·q2 = {product:?}", q.values());

    let mass = SetFunction::sparse(&l, &[("a", 0.2), ("b", 0.1), ("c", 0.3), ("⊤", 0.4)]).unwrap();
    let w = decompose(&zeta_transform(&mass)).unwrap();
    println!("weights:");
    for &(y, v) in w.entries() {
        println!("  {:<2} {v:.6}", l.name(y));
    }
    println!("recombination error {:.1e}", recombine(&w).max_abs_diff(&mass));
}
