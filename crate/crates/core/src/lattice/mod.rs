//! Finite posets and lattices.

mod birkhoff;
mod chains;
mod dot;
mod poset;
mod profile;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{BoundFailure, Error, Result};
use crate::transforms::MobiusMatrix;

pub use birkhoff::{downset_lattice, downset_lattice_with, DownsetLattice};
pub use chains::{maximal_chains, maximal_chains_with};
pub use dot::{lattice_to_dot, poset_to_dot};
pub use poset::{build_poset, build_poset_with, Poset};
pub use profile::{
    complements, find_m3_sublattice, profile, Property, StructureProfile,
};

/// Index of an element in its poset or lattice, following declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite lattice with precomputed join and meet tables.
///
/// Lattices are immutable once built. The Möbius function and the
/// local-distributivity flags are computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: Elem,
    top: Elem,
    joinirr: Vec<Elem>,
    meetirr: Vec<Elem>,
    coheights: Vec<usize>,
    mobius: OnceLock<MobiusMatrix>,
    distributive: OnceLock<bool>,
    lower_local: OnceLock<bool>,
    upper_local: OnceLock<bool>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
    }
}

/// Checks that every pair has a join and a meet and builds the lattice.
///
/// Pairs are inspected in declaration order, joins before meets, so the
/// reported offending pair is deterministic.
pub fn lattice_from_poset(poset: Poset) -> Result<Lattice> {
    let n = poset.len();
    if n == 0 {
        return Err(Error::EmptyStructure);
    }
    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    let fail = |x: usize, y: usize, reason| Error::NotALattice {
        x: poset.name(Elem(x)).to_string(),
        y: poset.name(Elem(y)).to_string(),
        reason,
    };
    for x in 0..n {
        for y in x..n {
            let mut upper = poset.up_set(Elem(x)).clone();
            upper.intersect_with(poset.up_set(Elem(y)));
            let count = upper.count_ones(..);
            if count == 0 {
                return Err(fail(x, y, BoundFailure::NoUpperBound));
            }
            // The least upper bound is the bound whose up-set is all of `upper`.
            let lub = upper
                .ones()
                .find(|&z| poset.up_set(Elem(z)).count_ones(..) == count)
                .ok_or_else(|| fail(x, y, BoundFailure::NoLeastUpperBound))?;

            let mut lower = poset.down_set(Elem(x)).clone();
            lower.intersect_with(poset.down_set(Elem(y)));
            let count = lower.count_ones(..);
            if count == 0 {
                return Err(fail(x, y, BoundFailure::NoLowerBound));
            }
            let glb = lower
                .ones()
                .find(|&z| poset.down_set(Elem(z)).count_ones(..) == count)
                .ok_or_else(|| fail(x, y, BoundFailure::NoGreatestLowerBound))?;

            join[x * n + y] = lub as u32;
            join[y * n + x] = lub as u32;
            meet[x * n + y] = glb as u32;
            meet[y * n + x] = glb as u32;
        }
    }

    let minimal = poset.minimal_elements();
    let maximal = poset.maximal_elements();
    let bottom = minimal[0];
    let top = maximal[0];

    let joinirr = poset
        .elements()
        .filter(|&x| poset.lower_covers(x).len() == 1)
        .collect();
    let meetirr = poset
        .elements()
        .filter(|&x| poset.upper_covers(x).len() == 1)
        .collect();

    let mut coheights = vec![0usize; n];
    for &x in poset.linear_extension().iter().rev() {
        coheights[x.0] = poset
            .upper_covers(x)
            .iter()
            .map(|y| coheights[y.0] + 1)
            .max()
            .unwrap_or(0);
    }

    Ok(Lattice {
        poset,
        join,
        meet,
        bottom,
        top,
        joinirr,
        meetirr,
        coheights,
        mobius: OnceLock::new(),
        distributive: OnceLock::new(),
        lower_local: OnceLock::new(),
        upper_local: OnceLock::new(),
    })
}

impl Lattice {
    /// Convenience wrapper around [`build_poset`] and [`lattice_from_poset`].
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Lattice> {
        lattice_from_poset(build_poset(elements, covers)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + '_ {
        self.poset.elements()
    }

    pub fn name(&self, x: Elem) -> &str {
        self.poset.name(x)
    }

    pub fn names_of(&self, xs: &[Elem]) -> Vec<String> {
        xs.iter().map(|&x| self.name(x).to_string()).collect()
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.poset.elem(name)
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.poset.leq(x, y)
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        self.poset.lt(x, y)
    }

    /// `true` when `y` covers `x`.
    pub fn covers(&self, x: Elem, y: Elem) -> bool {
        self.poset.is_cover(x, y)
    }

    pub fn join2(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.join[x.0 * self.len() + y.0] as usize)
    }

    pub fn meet2(&self, x: Elem, y: Elem) -> Elem {
        Elem(self.meet[x.0 * self.len() + y.0] as usize)
    }

    /// Join of a nonempty set of elements.
    pub fn join(&self, xs: &[Elem]) -> Result<Elem> {
        let (&first, rest) = xs.split_first().ok_or(Error::EmptySelection)?;
        self.check(xs)?;
        Ok(rest.iter().fold(first, |acc, &x| self.join2(acc, x)))
    }

    /// Meet of a nonempty set of elements.
    pub fn meet(&self, xs: &[Elem]) -> Result<Elem> {
        let (&first, rest) = xs.split_first().ok_or(Error::EmptySelection)?;
        self.check(xs)?;
        Ok(rest.iter().fold(first, |acc, &x| self.meet2(acc, x)))
    }

    /// Join with the empty join taken as the bottom element.
    pub fn join_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.bottom, |acc, x| self.join2(acc, x))
    }

    /// Meet with the empty meet taken as the top element.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter().fold(self.top, |acc, x| self.meet2(acc, x))
    }

    fn check(&self, xs: &[Elem]) -> Result<()> {
        match xs.iter().find(|x| x.0 >= self.len()) {
            Some(x) => Err(Error::UnknownElement(x.to_string())),
            None => Ok(()),
        }
    }

    pub fn joinirr(&self) -> &[Elem] {
        &self.joinirr
    }

    pub fn meetirr(&self) -> &[Elem] {
        &self.meetirr
    }

    pub fn is_joinirr(&self, x: Elem) -> bool {
        self.poset.lower_covers(x).len() == 1
    }

    pub fn is_meetirr(&self, x: Elem) -> bool {
        self.poset.upper_covers(x).len() == 1
    }

    /// Length of a longest chain from the bottom element to `x`.
    pub fn height(&self, x: Elem) -> usize {
        self.poset.height(x)
    }

    /// Length of a longest chain from `x` to the top element.
    pub fn coheight(&self, x: Elem) -> usize {
        self.coheights[x.0]
    }

    /// Normal decomposition: the join-irreducibles below `x`.
    pub fn eta(&self, x: Elem) -> Vec<Elem> {
        self.joinirr
            .iter()
            .copied()
            .filter(|&j| self.leq(j, x))
            .collect()
    }

    /// The meet-irreducibles above `x`.
    pub fn mu_set(&self, x: Elem) -> Vec<Elem> {
        self.meetirr
            .iter()
            .copied()
            .filter(|&m| self.leq(x, m))
            .collect()
    }

    /// Minimal (irredundant) join decomposition of `x`.
    ///
    /// Only defined on lower locally distributive lattices, where it is unique.
    pub fn eta_star(&self, x: Elem) -> Result<Vec<Elem>> {
        if !self.is_lower_locally_distributive() {
            return Err(Error::DecompositionNotUnique("lower locally distributive"));
        }
        Ok(self.irredundant(self.eta(x), x, |a, b| self.join2(a, b), self.bottom))
    }

    /// Minimal (irredundant) meet decomposition of `x`.
    pub fn mu_star(&self, x: Elem) -> Result<Vec<Elem>> {
        if !self.is_upper_locally_distributive() {
            return Err(Error::DecompositionNotUnique("upper locally distributive"));
        }
        Ok(self.irredundant(self.mu_set(x), x, |a, b| self.meet2(a, b), self.top))
    }

    fn irredundant(
        &self,
        mut set: Vec<Elem>,
        target: Elem,
        op: impl Fn(Elem, Elem) -> Elem,
        unit: Elem,
    ) -> Vec<Elem> {
        let mut i = 0;
        while i < set.len() {
            let without = set
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .fold(unit, |acc, (_, &y)| op(acc, y));
            if without == target {
                set.remove(i);
            } else {
                i += 1;
            }
        }
        set
    }

    pub fn is_distributive(&self) -> bool {
        *self
            .distributive
            .get_or_init(|| profile::distributive(self).holds())
    }

    pub fn is_lower_locally_distributive(&self) -> bool {
        *self
            .lower_local
            .get_or_init(|| profile::lower_locally_distributive(self).holds())
    }

    pub fn is_upper_locally_distributive(&self) -> bool {
        *self
            .upper_local
            .get_or_init(|| profile::upper_locally_distributive(self).holds())
    }

    /// The Möbius function of the lattice, computed on first use.
    pub fn mobius(&self) -> &MobiusMatrix {
        self.mobius.get_or_init(|| MobiusMatrix::compute(self))
    }

    /// The order-dual lattice on the same element names.
    pub fn dual(&self) -> Lattice {
        lattice_from_poset(self.poset.dual()).expect("dual of a lattice is a lattice")
    }

    /// The subposet of join-irreducible elements.
    pub fn joinirr_poset(&self) -> Poset {
        self.poset.restrict(&self.joinirr)
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> Vec<Elem> {
        self.poset.upper_covers(self.bottom).to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn antichain_has_no_upper_bound() {
        let p = build_poset(&["a", "b"], &[]).unwrap();
        assert_eq!(
            lattice_from_poset(p).unwrap_err(),
            Error::NotALattice {
                x: "a".into(),
                y: "b".into(),
                reason: BoundFailure::NoUpperBound
            }
        );
    }

    #[test]
    fn bowtie_has_no_least_upper_bound() {
        let p = build_poset(
            &["⊥", "a", "b", "c", "d", "⊤"],
            &[
                ("⊥", "a"),
                ("⊥", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "⊤"),
                ("d", "⊤"),
            ],
        )
        .unwrap();
        assert_eq!(
            lattice_from_poset(p).unwrap_err(),
            Error::NotALattice {
                x: "a".into(),
                y: "b".into(),
                reason: BoundFailure::NoLeastUpperBound
            }
        );
    }

    #[test]
    fn missing_lower_bound() {
        let p = build_poset(&["a", "b", "⊤"], &[("a", "⊤"), ("b", "⊤")]).unwrap();
        assert!(matches!(
            lattice_from_poset(p),
            Err(Error::NotALattice {
                reason: BoundFailure::NoLowerBound,
                ..
            })
        ));
    }

    #[test]
    fn boolean_cube_irreducibles() {
        let l = catalog::boolean(3);
        let names = |xs: &[Elem]| l.names_of(xs);
        assert_eq!(names(l.joinirr()), ["{1}", "{2}", "{3}"]);
        assert_eq!(names(l.meetirr()), ["{1,2}", "{1,3}", "{2,3}"]);
        let x = l.elem("{1}").unwrap();
        let y = l.elem("{2}").unwrap();
        assert_eq!(l.name(l.join(&[x, y]).unwrap()), "{1,2}");
        assert_eq!(l.join(&[x]).unwrap(), x);
        assert_eq!(l.join(&[]), Err(Error::EmptySelection));
    }

    #[test]
    fn octet_joinirr() {
        let l = catalog::octet();
        assert_eq!(l.names_of(l.joinirr()), ["a", "b", "d", "e"]);
    }

    #[test]
    fn m3_atoms_join_to_top() {
        let l = catalog::m3();
        let atoms = l.atoms();
        for &a in &atoms {
            for &b in &atoms {
                if a != b {
                    assert_eq!(l.join2(a, b), l.top());
                    assert_eq!(l.meet2(a, b), l.bottom());
                }
            }
        }
    }

    #[test]
    fn eta_of_bottom_is_empty() {
        for l in [catalog::m3(), catalog::n5(), catalog::boolean(2), catalog::chain(3)] {
            assert!(l.eta(l.bottom()).is_empty());
            assert!(l.mu_set(l.top()).is_empty());
        }
    }

    #[test]
    fn eta_star_atomistic() {
        let l = catalog::boolean(3);
        let x = l.elem("{1,2}").unwrap();
        let eta = l.names_of(&l.eta(x));
        assert_eq!(eta, ["{1}", "{2}"]);
        assert_eq!(l.names_of(&l.eta_star(x).unwrap()), eta);
        assert_eq!(l.names_of(&l.mu_star(x).unwrap()), ["{1,2}"]);
    }

    #[test]
    fn eta_star_picks_maximal_on_chain_diamond() {
        let l = catalog::chain_diamond_lattice();
        let x = l.elem("{a,b,c,d,e}").unwrap();
        let names = l.names_of(&l.eta_star(x).unwrap());
        assert_eq!(names, ["{a,b}", "{c,d}", "{c,e}"]);
        let f = l.elem("{c,d,e,f}").unwrap();
        assert_eq!(
            l.names_of(&l.eta(f)),
            ["{c}", "{c,d}", "{c,e}", "{c,d,e,f}"]
        );
    }

    #[test]
    fn eta_star_rejects_m3() {
        let l = catalog::m3();
        assert!(matches!(
            l.eta_star(l.top()),
            Err(Error::DecompositionNotUnique(_))
        ));
    }

    #[test]
    fn heights() {
        let l = catalog::n5();
        assert_eq!(l.height(l.top()), 3);
        assert_eq!(l.coheight(l.bottom()), 3);
        assert_eq!(l.height(l.elem("c").unwrap()), 1);
    }
}
