//! Necessity and possibility functions, their distributions on irreducible
//! elements, and the reconstruction of the chain of focal elements from a
//! possibility distribution.
//!
//! A necessity function satisfies `N(x ∧ y) = min(N(x), N(y))`; it is exactly
//! a belief function whose focal elements form a chain. Its conjugate under a
//! ∨-negation is a possibility function, `Π(x ∨ y) = max(Π(x), Π(y))`. On a
//! distributive lattice both are determined by their values on irreducibles.

use std::sync::Arc;

use crate::capacity::boundaries;
use crate::duality::{Negation, NegationKind};
use crate::error::{Error, Result};
use crate::evidence::MassAllocation;
use crate::lattice::{Elem, Lattice};
use crate::limits::TOLERANCE;
use crate::transforms::{same_lattice, SetFunction};
use crate::verdict::Verdict;

fn pairwise(f: &SetFunction, tol: f64, op: impl Fn(Elem, Elem) -> Elem, pick: fn(f64, f64) -> f64) -> Verdict {
    let l = f.lattice();
    for x in l.elements() {
        for y in l.elements().skip(x.0 + 1) {
            let lhs = f[op(x, y)];
            let rhs = pick(f[x], f[y]);
            if (lhs - rhs).abs() > tol {
                return Verdict::fail_with(vec![x, y], lhs, rhs);
            }
        }
    }
    Verdict::Holds
}

/// Boundary conditions and `N(x ∧ y) = min(N(x), N(y))` for all pairs.
pub fn check_necessity(f: &SetFunction, tol: f64) -> Verdict {
    let l = Arc::clone(f.lattice());
    boundaries(f, tol).and_then(|| pairwise(f, tol, |x, y| l.meet2(x, y), f64::min))
}

/// Boundary conditions and `Π(x ∨ y) = max(Π(x), Π(y))` for all pairs.
pub fn check_possibility(f: &SetFunction, tol: f64) -> Verdict {
    let l = Arc::clone(f.lattice());
    boundaries(f, tol).and_then(|| pairwise(f, tol, |x, y| l.join2(x, y), f64::max))
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if !(-TOLERANCE..=1.0 + TOLERANCE).contains(&v) {
        return Err(Error::InvalidDistribution(format!("value {v} at `{name}` is outside [0, 1]")));
    }
    Ok(())
}

fn require_distributive(l: &Lattice) -> Result<()> {
    if l.is_distributive() {
        Ok(())
    } else {
        Err(Error::NotDistributive)
    }
}

fn from_named_on(
    l: &Lattice,
    support: &[Elem],
    what: &str,
    pairs: &[(impl AsRef<str>, f64)],
) -> Result<Vec<f64>> {
    let mut values = vec![None; support.len()];
    for (name, v) in pairs {
        let x = l.elem(name.as_ref())?;
        let i = support.iter().position(|&s| s == x).ok_or_else(|| {
            Error::InvalidDistribution(format!("`{}` is not {what}", name.as_ref()))
        })?;
        values[i] = Some(*v);
    }
    let missing: Vec<String> = support
        .iter()
        .zip(&values)
        .filter(|(_, v)| v.is_none())
        .map(|(&x, _)| l.name(x).to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingValues(missing));
    }
    Ok(values.into_iter().map(Option::unwrap).collect())
}

/// Values of a possibility function on the join-irreducible elements.
#[derive(Debug, Clone)]
pub struct PossibilityDistribution {
    lattice: Arc<Lattice>,
    pi: Vec<f64>,
}

impl PossibilityDistribution {
    /// `pi` lists one value per join-irreducible, in [`Lattice::joinirr`]
    /// order. The largest value must be 1.
    pub fn new(lattice: &Arc<Lattice>, pi: Vec<f64>) -> Result<Self> {
        let ji = lattice.joinirr();
        if pi.len() != ji.len() {
            return Err(Error::LengthMismatch {
                expected: ji.len(),
                found: pi.len(),
            });
        }
        for (&j, &v) in ji.iter().zip(&pi) {
            check_unit(lattice.name(j), v)?;
        }
        let max = pi.iter().copied().fold(0.0, f64::max);
        if (max - 1.0).abs() > TOLERANCE {
            return Err(Error::TopValueNotOne(max));
        }
        Ok(PossibilityDistribution {
            lattice: Arc::clone(lattice),
            pi,
        })
    }

    pub fn from_named<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, f64)]) -> Result<Self> {
        let pi = from_named_on(lattice, lattice.joinirr(), "join-irreducible", pairs)?;
        PossibilityDistribution::new(lattice, pi)
    }

    /// Restriction of a possibility function to join-irreducibles.
    pub fn of_function(f: &SetFunction) -> Result<Self> {
        let l = f.lattice();
        require_distributive(l)?;
        PossibilityDistribution::new(l, l.joinirr().iter().map(|&j| f[j]).collect())
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    /// `(join-irreducible, π)` pairs in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (Elem, f64)> + '_ {
        self.lattice.joinirr().iter().copied().zip(self.pi.iter().copied())
    }

    pub fn get(&self, j: Elem) -> Option<f64> {
        self.iter().find(|&(x, _)| x == j).map(|(_, v)| v)
    }

    /// `Π(x) = max { π(j) : j ≤ x }`, with `Π(⊥) = 0`.
    pub fn eval(&self, x: Elem) -> f64 {
        self.iter()
            .filter(|&(j, _)| self.lattice.leq(j, x))
            .map(|(_, v)| v)
            .fold(0.0, f64::max)
    }

    pub fn to_function(&self) -> SetFunction {
        SetFunction::from_fn(&self.lattice, |x| self.eval(x))
    }
}

/// Values of a necessity function on the meet-irreducible elements.
#[derive(Debug, Clone)]
pub struct NecessityDistribution {
    lattice: Arc<Lattice>,
    nu: Vec<f64>,
}

impl NecessityDistribution {
    /// `nu` lists one value per meet-irreducible, in [`Lattice::meetirr`]
    /// order. The smallest value must be 0.
    pub fn new(lattice: &Arc<Lattice>, nu: Vec<f64>) -> Result<Self> {
        let mi = lattice.meetirr();
        if nu.len() != mi.len() {
            return Err(Error::LengthMismatch {
                expected: mi.len(),
                found: nu.len(),
            });
        }
        for (&m, &v) in mi.iter().zip(&nu) {
            check_unit(lattice.name(m), v)?;
        }
        let min = nu.iter().copied().fold(1.0, f64::min);
        if min.abs() > TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "smallest value is {min}, expected 0"
            )));
        }
        Ok(NecessityDistribution {
            lattice: Arc::clone(lattice),
            nu,
        })
    }

    pub fn from_named<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, f64)]) -> Result<Self> {
        let nu = from_named_on(lattice, lattice.meetirr(), "meet-irreducible", pairs)?;
        NecessityDistribution::new(lattice, nu)
    }

    /// Restriction of a necessity function to meet-irreducibles.
    pub fn of_function(f: &SetFunction) -> Result<Self> {
        let l = f.lattice();
        require_distributive(l)?;
        NecessityDistribution::new(l, l.meetirr().iter().map(|&m| f[m]).collect())
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, f64)> + '_ {
        self.lattice.meetirr().iter().copied().zip(self.nu.iter().copied())
    }

    pub fn get(&self, m: Elem) -> Option<f64> {
        self.iter().find(|&(x, _)| x == m).map(|(_, v)| v)
    }

    /// `N(x) = min { ν(m) : m ≥ x }`, with `N(⊤) = 1`.
    pub fn eval(&self, x: Elem) -> f64 {
        self.iter()
            .filter(|&(m, _)| self.lattice.leq(x, m))
            .map(|(_, v)| v)
            .fold(1.0, f64::min)
    }

    pub fn to_function(&self) -> SetFunction {
        SetFunction::from_fn(&self.lattice, |x| self.eval(x))
    }
}

pub fn eval_possibility(pi: &PossibilityDistribution, x: Elem) -> f64 {
    pi.eval(x)
}

pub fn eval_necessity(nu: &NecessityDistribution, x: Elem) -> f64 {
    nu.eval(x)
}

/// One row of the reconstruction, for the join-irreducible `x = j_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReconstructionStep {
    pub k: usize,
    pub x: Elem,
    /// `n(x)`
    pub negated: Elem,
    /// `η(n(x))`
    pub eta_negated: Vec<Elem>,
    pub iota: Elem,
    /// `ι_n ∨ ... ∨ ι_k`
    pub chain_element: Elem,
    pub mass: f64,
}

/// The chain of focal elements of the necessity function conjugate to a
/// possibility distribution.
#[derive(Debug, Clone)]
pub struct FocalChain {
    /// Focal chain from its least element up to `⊤`; a maximal chain once `⊥`
    /// is prepended.
    pub chain: Vec<Elem>,
    pub mass: MassAllocation,
    /// `ι_n, ..., ι_1`
    pub iota: Vec<Elem>,
    /// Join-irreducibles sorted by increasing `π`.
    pub order: Vec<Elem>,
    /// Rows in the order they are computed, `k = n` down to 1.
    pub steps: Vec<ReconstructionStep>,
}

/// Recovers the unique mass allocation supported on a chain whose necessity
/// function is conjugate, under `n`, to the possibility function of `pi`.
///
/// `π` must be isotone, as the restriction of a possibility function is,
/// and take distinct values. Join-irreducibles are sorted by `π` into
/// `j_1, ..., j_n`. Going down from
/// `k = n`, `ι_k` is the unique join-irreducible outside `η(n(j_k))` lying in
/// every `η(n(j_l))` with `l < k`; the choice is cross-checked against the
/// least element of `η(n(j_{k-1})) ∖ η(n(j_k))`. The chain element
/// `ι_n ∨ ... ∨ ι_k` receives mass `π(j_k) - π(j_{k-1})`.
pub fn reconstruct_chain(n: &Negation, pi: &PossibilityDistribution) -> Result<FocalChain> {
    same_lattice(n.lattice(), pi.lattice())?;
    let l = pi.lattice();
    if n.kind() != NegationKind::Vee {
        return Err(Error::InvalidNegation(vec!["expected a ∨-negation".into()]));
    }
    require_distributive(l)?;

    let mut sorted: Vec<(Elem, f64)> = pi.iter().collect();
    sorted.sort_by(|a, b| a.1.total_cmp(&b.1));
    for w in sorted.windows(2) {
        if w[1].1 - w[0].1 <= TOLERANCE {
            return Err(Error::TiesInDistribution(
                l.name(w[0].0).to_string(),
                l.name(w[1].0).to_string(),
            ));
        }
    }
    for (j, a) in pi.iter() {
        for (k, b) in pi.iter() {
            if l.lt(j, k) && a > b {
                return Err(Error::InvalidDistribution(format!(
                    "`{}` < `{}` but π decreases from {a} to {b}",
                    l.name(j),
                    l.name(k)
                )));
            }
        }
    }
    let top_value = sorted.last().map_or(0.0, |s| s.1);
    if (top_value - 1.0).abs() > TOLERANCE {
        return Err(Error::TopValueNotOne(top_value));
    }

    let ji = l.joinirr();
    let count = ji.len();
    // eta_neg[k - 1] = η(n(j_k)) as a membership mask over `ji`
    let eta_neg: Vec<Vec<bool>> = sorted
        .iter()
        .map(|&(j, _)| ji.iter().map(|&i| l.leq(i, n.apply(j))).collect())
        .collect();

    let mut chosen = vec![false; count];
    let mut iota = Vec::with_capacity(count);
    let mut steps = Vec::with_capacity(count);
    let mut chain_element = l.bottom();
    let mut mass = SetFunction::zeros(l);
    for k in (1..=count).rev() {
        let here = &eta_neg[k - 1];
        let candidates: Vec<usize> = (0..count)
            .filter(|&i| !chosen[i] && !here[i] && eta_neg[..k - 1].iter().all(|e| e[i]))
            .collect();
        let [pick] = candidates[..] else {
            return Err(Error::SelectionFailed { step: k });
        };

        let previous = |i: usize| k == 1 || eta_neg[k - 2][i];
        let pool: Vec<usize> = (0..count)
            .filter(|&i| !chosen[i] && !here[i] && previous(i))
            .collect();
        let minimal: Vec<usize> = pool
            .iter()
            .copied()
            .filter(|&i| !pool.iter().any(|&o| o != i && l.lt(ji[o], ji[i])))
            .collect();
        if minimal != [pick] {
            return Err(Error::SelectionFailed { step: k });
        }

        chosen[pick] = true;
        let ik = ji[pick];
        iota.push(ik);
        chain_element = l.join2(chain_element, ik);
        let below = if k == 1 { 0.0 } else { sorted[k - 2].1 };
        let m = sorted[k - 1].1 - below;
        mass.set(chain_element, m);
        let (x, _) = sorted[k - 1];
        steps.push(ReconstructionStep {
            k,
            x,
            negated: n.apply(x),
            eta_negated: (0..count).filter(|&i| here[i]).map(|i| ji[i]).collect(),
            iota: ik,
            chain_element,
            mass: m,
        });
    }

    Ok(FocalChain {
        chain: steps.iter().map(|s| s.chain_element).collect(),
        mass: MassAllocation::new(mass)?,
        iota,
        order: sorted.iter().map(|&(j, _)| j).collect(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::{conjugate, ConjugateKind};
    use crate::catalog;
    use crate::duality::{negation_from_irreducible_names, negations};
    use crate::transforms::zeta_transform;

    fn chain_diamond_pi(l: &Arc<Lattice>) -> PossibilityDistribution {
        PossibilityDistribution::from_named(
            l,
            &[
                ("{c}", 0.1),
                ("{c,d}", 0.2),
                ("{c,e}", 0.4),
                ("{a}", 0.6),
                ("{c,d,e,f}", 0.9),
                ("{a,b}", 1.0),
            ],
        )
        .unwrap()
    }

    #[test]
    fn chain_mass_is_a_necessity() {
        let l = catalog::boolean(3);
        let m = SetFunction::sparse(&l, &[("{1}", 0.5), ("{1,3}", 0.2), ("{1,2,3}", 0.3)]).unwrap();
        assert!(check_necessity(&zeta_transform(&m), TOLERANCE).holds());
    }

    #[test]
    fn incomparable_foci_are_not() {
        let l = catalog::boolean(2);
        let m = SetFunction::sparse(&l, &[("{1}", 0.5), ("{2}", 0.5)]).unwrap();
        let v = check_necessity(&zeta_transform(&m), TOLERANCE);
        let w = v.witness().unwrap();
        assert_eq!(l.names_of(&w.elements), ["{1}", "{2}"]);
        assert_eq!((w.lhs, w.rhs), (Some(0.0), Some(0.5)));
    }

    #[test]
    fn top_indicator_is_a_necessity() {
        let l = catalog::n5();
        let f = SetFunction::from_fn(&l, |x| if x == l.top() { 1.0 } else { 0.0 });
        assert!(check_necessity(&f, TOLERANCE).holds());
    }

    #[test]
    fn probability_is_not_a_possibility() {
        let l = catalog::boolean(2);
        let f = SetFunction::from_named(&l, &[("{}", 0.0), ("{1}", 0.4), ("{2}", 0.6), ("{1,2}", 1.0)]).unwrap();
        assert!(!check_possibility(&f, TOLERANCE).holds());
    }

    #[test]
    fn conjugate_of_necessity_is_possibility() {
        let l = catalog::chain_diamond_lattice();
        let m = SetFunction::sparse(&l, &[("{c}", 0.25), ("{a,c,d}", 0.5), ("{a,b,c,d,e,f}", 0.25)]).unwrap();
        let nec = zeta_transform(&m);
        assert!(check_necessity(&nec, TOLERANCE).holds());
        for n in negations(&l, 4) {
            assert!(check_possibility(&conjugate(&nec, &n, ConjugateKind::Vee).unwrap(), TOLERANCE).holds());
        }
    }

    #[test]
    fn boolean_possibility_is_max_over_singletons() {
        let l = catalog::boolean(3);
        let pi = PossibilityDistribution::from_named(&l, &[("{1}", 0.3), ("{2}", 1.0), ("{3}", 0.7)]).unwrap();
        assert_eq!(pi.eval(l.elem("{1,3}").unwrap()), 0.7);
        assert_eq!(pi.eval(l.bottom()), 0.0);
        assert!(check_possibility(&pi.to_function(), TOLERANCE).holds());
    }

    #[test]
    fn distributions_round_trip() {
        let l = catalog::boolean(3);
        let pi = PossibilityDistribution::from_named(&l, &[("{1}", 0.3), ("{2}", 1.0), ("{3}", 0.7)]).unwrap();
        let f = pi.to_function();
        let back = PossibilityDistribution::of_function(&f).unwrap();
        assert!(back.to_function().approx_eq(&f, 0.0));

        let n = negations(&l, 1).pop().unwrap();
        let nec = conjugate(&f, &n.invert(), ConjugateKind::Wedge);
        assert!(nec.is_err());
        let nec = conjugate(&f, &n, ConjugateKind::Wedge).unwrap();
        let nu = NecessityDistribution::of_function(&nec).unwrap();
        assert!(nu.to_function().approx_eq(&nec, 1e-15));
        for (j, v) in pi.iter() {
            assert!((v - (1.0 - nu.get(n.apply(j)).unwrap())).abs() < 1e-15);
        }
    }

    #[test]
    fn distribution_validation() {
        let l = catalog::boolean(2);
        assert!(matches!(
            PossibilityDistribution::from_named(&l, &[("{1}", 0.5), ("{2}", 0.7)]),
            Err(Error::TopValueNotOne(_))
        ));
        assert!(matches!(
            PossibilityDistribution::from_named(&l, &[("{1}", 1.0), ("{1,2}", 0.7)]),
            Err(Error::InvalidDistribution(_))
        ));
        assert!(matches!(
            PossibilityDistribution::from_named(&l, &[("{1}", 1.0)]),
            Err(Error::MissingValues(_))
        ));
        let m3 = catalog::m3();
        let f = SetFunction::from_fn(&m3, |x| if x == m3.bottom() { 0.0 } else { 1.0 });
        assert_eq!(PossibilityDistribution::of_function(&f).unwrap_err(), Error::NotDistributive);
    }

    #[test]
    fn worked_reconstruction() {
        let l = catalog::chain_diamond_lattice();
        let n = negation_from_irreducible_names(&l, &catalog::chain_diamond_negation_table()).unwrap();
        let fc = reconstruct_chain(&n, &chain_diamond_pi(&l)).unwrap();
        assert_eq!(l.names_of(&fc.iota), ["{a}", "{c}", "{a,b}", "{c,e}", "{c,d}", "{c,d,e,f}"]);
        assert_eq!(
            l.names_of(&fc.chain),
            ["{a}", "{a,c}", "{a,b,c}", "{a,b,c,e}", "{a,b,c,d,e}", "{a,b,c,d,e,f}"]
        );
        let masses: Vec<f64> = fc.chain.iter().map(|&c| fc.mass.get(c)).collect();
        for (got, want) in masses.iter().zip([0.1, 0.3, 0.2, 0.2, 0.1, 0.1]) {
            assert!((got - want).abs() < 1e-12, "{masses:?}");
        }
        let first = &fc.steps[0];
        assert_eq!((first.k, l.name(first.x), l.name(first.negated)), (6, "{a,b}", "{c,d,e,f}"));
        assert_eq!(l.names_of(&first.eta_negated), ["{c}", "{c,d}", "{c,e}", "{c,d,e,f}"]);
    }

    #[test]
    fn reconstruction_reproduces_pi() {
        let l = catalog::chain_diamond_lattice();
        let n = negation_from_irreducible_names(&l, &catalog::chain_diamond_negation_table()).unwrap();
        let pi = chain_diamond_pi(&l);
        let nec = reconstruct_chain(&n, &pi).unwrap().mass.belief();
        for (j, v) in pi.iter() {
            assert!((1.0 - nec[n.apply(j)] - v).abs() < 1e-12);
        }
    }

    #[test]
    fn ties_are_rejected() {
        let l = catalog::boolean(2);
        let n = negations(&l, 1).pop().unwrap();
        let pi = PossibilityDistribution::from_named(&l, &[("{1}", 1.0), ("{2}", 1.0)]).unwrap();
        assert!(matches!(reconstruct_chain(&n, &pi), Err(Error::TiesInDistribution(_, _))));
    }

    #[test]
    fn decreasing_pi_is_rejected() {
        let l = catalog::chain_diamond_lattice();
        let n = negation_from_irreducible_names(&l, &catalog::chain_diamond_negation_table()).unwrap();
        let pi = PossibilityDistribution::from_named(
            &l,
            &[("{c}", 0.1), ("{c,d}", 0.2), ("{c,e}", 0.4), ("{a}", 0.6), ("{c,d,e,f}", 1.0), ("{a,b}", 0.5)],
        )
        .unwrap();
        assert!(matches!(reconstruct_chain(&n, &pi), Err(Error::InvalidDistribution(_))));
    }

    #[test]
    fn non_distributive_is_rejected() {
        let l = catalog::m3();
        let n = negations(&l, 1).pop().unwrap();
        let pi = PossibilityDistribution::new(&l, vec![0.2, 0.5, 1.0]).unwrap();
        assert_eq!(reconstruct_chain(&n, &pi).unwrap_err(), Error::NotDistributive);
    }
}
