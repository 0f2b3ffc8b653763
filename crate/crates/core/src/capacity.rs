//! Capacities, belief functions, k-monotone functions and k-valuations.
//!
//! A function `f` is k-monotone when for every family `x_1, ..., x_k`
//!
//! ```text
//! f(x_1 ∨ ... ∨ x_k) ≥ Σ_{∅ ≠ I ⊆ K} (-1)^{|I|+1} f(∧_{i ∈ I} x_i)
//! ```
//!
//! and a k-valuation when equality holds. Families may repeat elements; a
//! repeated element collapses the family to a smaller one, so the checks
//! enumerate sets of distinct elements of every size from 2 up to `k`.
//! Families containing `⊥` or `⊤` reduce the same way and are skipped.

use itertools::Itertools;

use crate::duality::{Negation, NegationKind};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};
use crate::limits::Limits;
use crate::possibilistic;
use crate::transforms::{mobius_transform, same_lattice, SetFunction};
use crate::verdict::{Verdict, Witness};

/// `f(⊥) = 0`, `f(⊤) = 1` and `f` isotone. The witness is `[⊥]`, `[⊤]` or a
/// comparable pair `x ≤ y` with `f(x) > f(y)`.
pub fn check_capacity(f: &SetFunction, tol: f64) -> Verdict {
    boundaries(f, tol).and_then(|| {
        let l = f.lattice();
        for &(x, y) in l.poset().covers() {
            if f[x] > f[y] + tol {
                return Verdict::fail_with(vec![x, y], f[x], f[y]);
            }
        }
        Verdict::Holds
    })
}

pub(crate) fn boundaries(f: &SetFunction, tol: f64) -> Verdict {
    let l = f.lattice();
    let (b, t) = (l.bottom(), l.top());
    if f[b].abs() > tol {
        return Verdict::fail_with(vec![b], f[b], 0.0);
    }
    if (f[t] - 1.0).abs() > tol {
        return Verdict::fail_with(vec![t], f[t], 1.0);
    }
    Verdict::Holds
}

/// Boundary conditions plus a nonnegative Möbius transform. The witness is
/// the element with the most negative Möbius value.
pub fn check_belief(f: &SetFunction, tol: f64) -> Verdict {
    boundaries(f, tol).and_then(|| {
        let m = mobius_transform(f);
        let (x, v) = m
            .iter()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("lattices are nonempty");
        if v < -tol {
            Verdict::fail_with(vec![x], v, 0.0)
        } else {
            Verdict::Holds
        }
    })
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Monotone,
    Valuation,
}

fn inner_elements(l: &Lattice) -> Vec<Elem> {
    l.elements()
        .filter(|&x| x != l.bottom() && x != l.top())
        .collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return usize::MAX,
        };
    }
    acc
}

/// Left- and right-hand sides of the inclusion-exclusion inequality for one
/// family of distinct elements.
fn sides(l: &Lattice, f: &SetFunction, family: &[Elem]) -> (f64, f64) {
    let k = family.len();
    let mut meets = vec![l.top(); 1 << k];
    let mut rhs = 0.0;
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        meets[mask] = if rest == 0 {
            family[low]
        } else {
            l.meet2(meets[rest], family[low])
        };
        let sign = if mask.count_ones() % 2 == 1 { 1.0 } else { -1.0 };
        rhs += sign * f[meets[mask]];
    }
    let lhs = f[l.join_all(family.iter().copied())];
    (lhs, rhs)
}

fn check_sizes(
    f: &SetFunction,
    sizes: std::ops::RangeInclusive<usize>,
    mode: Mode,
    tol: f64,
    limits: &Limits,
) -> Result<Verdict> {
    let l = f.lattice();
    let inner = inner_elements(l);
    let total: usize = sizes
        .clone()
        .map(|s| binomial(inner.len(), s))
        .fold(0usize, usize::saturating_add);
    if total > limits.max_families {
        return Err(Error::SizeLimitExceeded {
            what: "families",
            limit: limits.max_families,
        });
    }
    for size in sizes {
        for family in inner.iter().copied().combinations(size) {
            let (lhs, rhs) = sides(l, f, &family);
            let ok = match mode {
                Mode::Monotone => lhs >= rhs - tol,
                Mode::Valuation => (lhs - rhs).abs() <= tol,
            };
            if !ok {
                return Ok(Verdict::Fails(Witness::with_values(family, lhs, rhs)));
            }
        }
    }
    Ok(Verdict::Holds)
}

fn size_range(l: &Lattice, k: usize) -> std::ops::RangeInclusive<usize> {
    2..=k.min(l.len().saturating_sub(2))
}

/// k-monotonicity for `k ≥ 2`; the witness is the first failing family with
/// both sides of the inequality.
pub fn check_k_monotone(f: &SetFunction, k: usize, tol: f64, limits: &Limits) -> Result<Verdict> {
    assert!(k >= 2, "k-monotonicity needs k >= 2");
    check_sizes(f, size_range(f.lattice(), k), Mode::Monotone, tol, limits)
}

/// k-monotonicity for every k; on a lattice with `n` elements this is
/// `(n - 2)`-monotonicity.
pub fn check_total_monotone(f: &SetFunction, tol: f64, limits: &Limits) -> Result<Verdict> {
    let n = f.lattice().len();
    check_k_monotone(f, n.saturating_sub(2).max(2), tol, limits)
}

/// k-valuation: the k-monotonicity inequality holds with equality.
pub fn check_k_valuation(f: &SetFunction, k: usize, tol: f64, limits: &Limits) -> Result<Verdict> {
    assert!(k >= 2, "k-valuations need k >= 2");
    check_sizes(f, size_range(f.lattice(), k), Mode::Valuation, tol, limits)
}

/// Largest order of monotonicity reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneDegree {
    /// Fails already for pairs.
    None,
    /// k-monotone for this k but not for k + 1.
    UpTo(usize),
    /// Totally monotone.
    Total,
}

impl MonotoneDegree {
    pub fn is_total(self) -> bool {
        self == MonotoneDegree::Total
    }
}

pub fn max_k_monotone(f: &SetFunction, tol: f64, limits: &Limits) -> Result<MonotoneDegree> {
    let cap = f.lattice().len().saturating_sub(2).max(2);
    for k in 2..=cap {
        if !check_sizes(f, k..=k, Mode::Monotone, tol, limits)?.holds() {
            return Ok(if k == 2 {
                MonotoneDegree::None
            } else {
                MonotoneDegree::UpTo(k - 1)
            });
        }
    }
    Ok(MonotoneDegree::Total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CapacityCheckReport {
    pub is_capacity: bool,
    pub is_belief: bool,
    /// `true` when the function also satisfies the necessity min-identity.
    pub is_necessity_hint: bool,
    pub max_k_monotone: MonotoneDegree,
    /// First failure among the capacity and belief checks.
    pub failure_witness: Option<Witness>,
}

pub fn capacity_report(f: &SetFunction, tol: f64, limits: &Limits) -> Result<CapacityCheckReport> {
    let capacity = check_capacity(f, tol);
    let belief = check_belief(f, tol);
    let failure_witness = capacity
        .witness()
        .or_else(|| belief.witness())
        .cloned();
    Ok(CapacityCheckReport {
        is_capacity: capacity.holds(),
        is_belief: belief.holds(),
        is_necessity_hint: possibilistic::check_necessity(f, tol).holds(),
        max_k_monotone: max_k_monotone(f, tol, limits)?,
        failure_witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugateKind {
    /// `x ↦ 1 - f(n(x))`
    Vee,
    /// `x ↦ 1 - f(n⁻¹(x))`
    Wedge,
}

/// Conjugate of `f` with respect to a ∨-negation.
pub fn conjugate(f: &SetFunction, n: &Negation, kind: ConjugateKind) -> Result<SetFunction> {
    same_lattice(f.lattice(), n.lattice())?;
    if n.kind() != NegationKind::Vee {
        return Err(Error::InvalidNegation(vec![
            "expected a ∨-negation, got a ∧-negation".into(),
        ]));
    }
    Ok(SetFunction::from_fn(f.lattice(), |x| {
        let y = match kind {
            ConjugateKind::Vee => n.apply(x),
            ConjugateKind::Wedge => n.apply_inverse(x),
        };
        1.0 - f[y]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::limits::TOLERANCE;
    use crate::transforms::zeta_transform;

    fn normalized_height(l: &std::sync::Arc<Lattice>) -> SetFunction {
        let h = l.height(l.top()) as f64;
        SetFunction::from_fn(l, |x| l.height(x) as f64 / h)
    }

    #[test]
    fn height_is_a_capacity() {
        for l in [catalog::boolean(3), catalog::m3(), catalog::chain(5)] {
            assert!(check_capacity(&normalized_height(&l), TOLERANCE).holds());
        }
    }

    #[test]
    fn bottom_violation() {
        let l = catalog::chain(3);
        let f = SetFunction::new(&l, vec![0.1, 0.5, 1.0]).unwrap();
        let v = check_capacity(&f, TOLERANCE);
        assert_eq!(v.witness().unwrap().elements, vec![l.bottom()]);
    }

    #[test]
    fn isotonicity_violation() {
        let l = catalog::chain(3);
        let f = SetFunction::new(&l, vec![0.0, 1.2, 1.0]).unwrap();
        let v = check_capacity(&f, TOLERANCE);
        assert_eq!(v.witness().unwrap().elements, vec![Elem(1), Elem(2)]);
    }

    #[test]
    fn non_belief_on_square() {
        let l = catalog::boolean(2);
        let f = SetFunction::new(&l, vec![0.0, 1.0, 1.0, 1.0]).unwrap();
        assert!(check_capacity(&f, TOLERANCE).holds());
        let v = check_belief(&f, TOLERANCE);
        let w = v.witness().unwrap();
        assert_eq!(l.names_of(&w.elements), ["{1,2}"]);
        assert_eq!(w.lhs, Some(-1.0));

        let v = check_k_monotone(&f, 2, TOLERANCE, &Limits::default()).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(l.names_of(&w.elements), ["{1}", "{2}"]);
        assert_eq!((w.lhs, w.rhs), (Some(1.0), Some(2.0)));
    }

    #[test]
    fn height_on_m3_is_a_two_valuation_only() {
        let l = catalog::m3();
        let f = normalized_height(&l);
        let limits = Limits::default();
        assert!(check_k_valuation(&f, 2, TOLERANCE, &limits).unwrap().holds());
        assert!(check_k_monotone(&f, 2, TOLERANCE, &limits).unwrap().holds());
        // Three atoms: 1 ≥ 3/2 fails.
        let v = check_k_monotone(&f, 3, TOLERANCE, &limits).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.elements.len(), 3);
        assert_eq!((w.lhs, w.rhs), (Some(1.0), Some(1.5)));
        assert_eq!(max_k_monotone(&f, TOLERANCE, &limits).unwrap(), MonotoneDegree::UpTo(2));
    }

    #[test]
    fn height_on_n5_is_not_a_valuation() {
        let l = catalog::n5();
        let f = normalized_height(&l);
        let v = check_k_valuation(&f, 2, TOLERANCE, &Limits::default()).unwrap();
        assert!(!v.holds());
    }

    #[test]
    fn probabilities_are_total_valuations() {
        let l = catalog::boolean(3);
        let p = [0.2, 0.3, 0.5];
        let mut m = SetFunction::zeros(&l);
        for (&atom, &v) in l.atoms().iter().zip(&p) {
            m.set(atom, v);
        }
        let f = zeta_transform(&m);
        let limits = Limits::default();
        for k in 2..=4 {
            assert!(check_k_valuation(&f, k, TOLERANCE, &limits).unwrap().holds());
        }
        assert!(check_total_monotone(&f, TOLERANCE, &limits).unwrap().holds());
    }

    #[test]
    fn family_cap() {
        let l = catalog::boolean(3);
        let limits = Limits {
            max_families: 3,
            ..Limits::default()
        };
        let f = normalized_height(&l);
        assert!(matches!(
            check_total_monotone(&f, TOLERANCE, &limits),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn report_on_belief() {
        let l = catalog::n5();
        let m = SetFunction::from_fn(&l, |x| if x == l.bottom() { 0.0 } else { 0.25 });
        let r = capacity_report(&zeta_transform(&m), TOLERANCE, &Limits::default()).unwrap();
        assert!(r.is_capacity && r.is_belief);
        assert!(r.max_k_monotone.is_total());
        assert!(!r.is_necessity_hint);
        assert!(r.failure_witness.is_none());
    }

    #[test]
    fn conjugates_round_trip() {
        let l = catalog::m3();
        let n = crate::duality::negations(&l, 10).pop().unwrap();
        let f = normalized_height(&l);
        let w = conjugate(&f, &n, ConjugateKind::Wedge).unwrap();
        let back = conjugate(&w, &n, ConjugateKind::Vee).unwrap();
        assert!(back.approx_eq(&f, 1e-12));
        assert!(check_capacity(&w, TOLERANCE).holds());
        assert!(conjugate(&f, &n.invert(), ConjugateKind::Vee).is_err());
    }
}
