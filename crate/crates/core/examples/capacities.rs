//! Capacities, belief functions and k-monotonicity.

use latbel::capacity::{capacity_report, check_k_monotone, check_k_valuation, conjugate, ConjugateKind};
use latbel::duality::negations;
use latbel::transforms::SetFunction;
use latbel::{catalog, Limits, TOLERANCE};

fn main() {
    let limits = Limits::default();

    let l = catalog::m3();
    let height = SetFunction::from_fn(&l, |x| l.height(x) as f64 / 2.0);
    let r = capacity_report(&height, TOLERANCE, &limits).unwrap();
    println!("normalized height on M3: {r:?}");
    println!(
        "  2-valuation: {}",
        check_k_valuation(&height, 2, TOLERANCE, &limits).unwrap().holds()
    );
    if let Some(w) = check_k_monotone(&height, 3, TOLERANCE, &limits).unwrap().witness() {
        println!(
            "  not 3-monotone at {}: {:?} < {:?}",
            l.names_of(&w.elements).join(" "),
            w.lhs.unwrap(),
            w.rhs.unwrap()
        );
    }

    let sq = catalog::boolean(2);
    let f = SetFunction::from_named(&sq, &[("{}", 0.0), ("{1}", 1.0), ("{2}", 1.0), ("{1,2}", 1.0)]).unwrap();
    let r = capacity_report(&f, TOLERANCE, &limits).unwrap();
    println!("capacity that is not a belief: belief {}, witness {:?}", r.is_belief, r.failure_witness);

    let n = negations(&l, 1).pop().unwrap();
    let dual = conjugate(&height, &n, ConjugateKind::Vee).unwrap();
    println!("conjugate of the height on M3: {:?}", dual.values());
}
