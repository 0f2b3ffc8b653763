//! Möbius function and the Möbius, zeta and co-Möbius transforms.

use latbel::catalog;
use latbel::transforms::{comobius_transform, mass_from_comobius, mobius_transform, zeta_transform, SetFunction};

fn main() {
    let l = catalog::n5();
    let mu = l.mobius();
    print!("{:>3}", "μ");
    for y in l.elements() {
        print!("{:>4}", l.name(y));
    }
    println!();
    for x in l.elements() {
        print!("{:>3}", l.name(x));
        for y in l.elements() {
            print!("{:>4}", mu.get(x, y));
        }
        println!();
    }

    // Normalized height on the cube and its mass.
    let cube = catalog::boolean(3);
    let f = SetFunction::from_fn(&cube, |x| cube.height(x) as f64 / 3.0);
    let m = mobius_transform(&f);
    let q = comobius_transform(&m);
    println!("{:>8} {:>8} {:>8} {:>8}", "x", "f", "m", "q");
    for x in cube.elements() {
        println!("{:>8} {:>8.4} {:>8.4} {:>8.4}", cube.name(x), f[x], m[x], q[x]);
    }
    let err = zeta_transform(&m).max_abs_diff(&f).max(mass_from_comobius(&q).max_abs_diff(&m));
    println!("round-trip error {err:.1e}");
}
