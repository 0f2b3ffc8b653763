//! ∨-negations: bijections `n` with `n(x ∨ y) = n(x) ∧ n(y)` and `n(⊤) = ⊥`.
//!
//! A lattice admits one exactly when it is isomorphic to its dual, and a
//! ∨-negation is then an anti-automorphism. The inverse of a ∨-negation is a
//! ∧-negation (`n⁻¹(x ∧ y) = n⁻¹(x) ∨ n⁻¹(y)`).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegationKind {
    /// Turns joins into meets.
    Vee,
    /// Turns meets into joins.
    Wedge,
}

/// A verified ∨-negation, or the ∧-negation obtained by inverting one.
#[derive(Debug, Clone)]
pub struct Negation {
    lattice: Arc<Lattice>,
    kind: NegationKind,
    map: Vec<Elem>,
    inverse: Vec<Elem>,
}

impl PartialEq for Negation {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.map == other.map && *self.lattice == *other.lattice
    }
}

fn inverse_of(l: &Lattice, map: &[Elem]) -> Result<Vec<Elem>> {
    let n = l.len();
    if map.len() != n {
        return Err(Error::NotABijection(format!(
            "map has {} entries for {} elements",
            map.len(),
            n
        )));
    }
    let mut inverse = vec![None; n];
    for (i, &y) in map.iter().enumerate() {
        if y.0 >= n {
            return Err(Error::NotABijection(format!("image {y} out of range")));
        }
        if let Some(prev) = inverse[y.0].replace(Elem(i)) {
            return Err(Error::NotABijection(format!(
                "`{}` and `{}` both map to `{}`",
                l.name(prev),
                l.name(Elem(i)),
                l.name(y)
            )));
        }
    }
    Ok(inverse.into_iter().map(Option::unwrap).collect())
}

/// Checks that `map` is a ∨-negation of `l`.
///
/// The witness is `[⊤]` when `n(⊤) ≠ ⊥`, else the first pair `(x, y)`
/// violating `n(x ∨ y) = n(x) ∧ n(y)`.
pub fn verify_vee_negation(l: &Lattice, map: &[Elem]) -> Result<Verdict> {
    inverse_of(l, map)?;
    Ok(de_morgan(l, map, NegationKind::Vee))
}

fn de_morgan(l: &Lattice, map: &[Elem], kind: NegationKind) -> Verdict {
    let (source_unit, target_unit) = match kind {
        NegationKind::Vee => (l.top(), l.bottom()),
        NegationKind::Wedge => (l.bottom(), l.top()),
    };
    if map[source_unit.0] != target_unit {
        return Verdict::fail(vec![source_unit]);
    }
    for x in l.elements() {
        for y in l.elements().skip(x.0 + 1) {
            let ok = match kind {
                NegationKind::Vee => map[l.join2(x, y).0] == l.meet2(map[x.0], map[y.0]),
                NegationKind::Wedge => map[l.meet2(x, y).0] == l.join2(map[x.0], map[y.0]),
            };
            if !ok {
                return Verdict::fail(vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

impl Negation {
    /// Wraps a verified ∨-negation.
    pub fn vee(lattice: &Arc<Lattice>, map: Vec<Elem>) -> Result<Negation> {
        let inverse = inverse_of(lattice, &map)?;
        if let Verdict::Fails(w) = de_morgan(lattice, &map, NegationKind::Vee) {
            return Err(Error::InvalidNegation(lattice.names_of(&w.elements)));
        }
        Ok(Negation {
            lattice: Arc::clone(lattice),
            kind: NegationKind::Vee,
            map,
            inverse,
        })
    }

    /// Builds a ∨-negation from `(x, n(x))` name pairs covering every element.
    pub fn from_names<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, S)]) -> Result<Negation> {
        let mut map = vec![None; lattice.len()];
        for (x, y) in pairs {
            let x = lattice.elem(x.as_ref())?;
            map[x.0] = Some(lattice.elem(y.as_ref())?);
        }
        let missing: Vec<String> = lattice
            .elements()
            .filter(|x| map[x.0].is_none())
            .map(|x| lattice.name(x).to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingValues(missing));
        }
        Negation::vee(lattice, map.into_iter().map(Option::unwrap).collect())
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn kind(&self) -> NegationKind {
        self.kind
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x.0]
    }

    pub fn apply_inverse(&self, x: Elem) -> Elem {
        self.inverse[x.0]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    /// The inverse bijection; a ∨-negation becomes a ∧-negation and back.
    pub fn invert(&self) -> Negation {
        Negation {
            lattice: Arc::clone(&self.lattice),
            kind: match self.kind {
                NegationKind::Vee => NegationKind::Wedge,
                NegationKind::Wedge => NegationKind::Vee,
            },
            map: self.inverse.clone(),
            inverse: self.map.clone(),
        }
    }

    /// `n(n(x)) = x` for every `x`.
    pub fn is_involutive(&self) -> bool {
        self.lattice
            .elements()
            .all(|x| self.map[self.map[x.0].0] == x)
    }

    /// Re-checks the De Morgan law matching [`Negation::kind`].
    pub fn verify(&self) -> Verdict {
        de_morgan(&self.lattice, &self.map, self.kind)
    }
}

/// Enumerates up to `limit` ∨-negations of `l` in canonical order.
///
/// The partial map is extended along declaration order and candidate images
/// are tried in declaration order, so results are lexicographic in the
/// image sequence. An empty result means `l` is not autodual.
pub fn find_negations(l: &Lattice, limit: usize) -> Vec<Vec<Elem>> {
    let mut search = Search {
        l,
        map: vec![None; l.len()],
        used: vec![false; l.len()],
        out: Vec::new(),
        limit,
    };
    if limit > 0 {
        search.extend(0);
    }
    search.out
}

/// Like [`find_negations`], wrapped as [`Negation`] values.
pub fn negations(l: &Arc<Lattice>, limit: usize) -> Vec<Negation> {
    find_negations(l, limit)
        .into_iter()
        .map(|map| Negation::vee(l, map).expect("search yields valid negations"))
        .collect()
}

struct Search<'a> {
    l: &'a Lattice,
    map: Vec<Option<Elem>>,
    used: Vec<bool>,
    out: Vec<Vec<Elem>>,
    limit: usize,
}

impl Search<'_> {
    /// An anti-isomorphism sends heights to co-heights and swaps the numbers
    /// of upper and lower covers.
    fn signature_matches(&self, x: Elem, y: Elem) -> bool {
        let p = self.l.poset();
        self.l.height(x) == self.l.coheight(y)
            && self.l.coheight(x) == self.l.height(y)
            && p.upper_covers(x).len() == p.lower_covers(y).len()
            && p.lower_covers(x).len() == p.upper_covers(y).len()
    }

    /// `x ≤ z ⟺ n(z) ≤ n(x)` against every element already mapped.
    fn consistent(&self, x: Elem, y: Elem) -> bool {
        let l = self.l;
        l.elements().take(x.0).all(|z| {
            let nz = self.map[z.0].expect("earlier elements are mapped");
            l.leq(x, z) == l.leq(nz, y) && l.leq(z, x) == l.leq(y, nz)
        })
    }

    fn extend(&mut self, i: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        if i == self.l.len() {
            self.out.push(self.map.iter().map(|m| m.unwrap()).collect());
            return;
        }
        let x = Elem(i);
        for y in self.l.elements() {
            if self.used[y.0] || !self.signature_matches(x, y) || !self.consistent(x, y) {
                continue;
            }
            self.map[i] = Some(y);
            self.used[y.0] = true;
            self.extend(i + 1);
            self.used[y.0] = false;
            self.map[i] = None;
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// Extends a correspondence from join-irreducibles to meet-irreducibles by
/// `n(x) = ∧_{j ∈ η(x)} jmap(j)` on a distributive lattice.
pub fn negation_from_irreducible_map(
    l: &Arc<Lattice>,
    jmap: &[(Elem, Elem)],
) -> Result<Negation> {
    if !l.is_distributive() {
        return Err(Error::NotDistributive);
    }
    let mut image = vec![None; l.len()];
    let mut hit = vec![false; l.len()];
    for &(j, m) in jmap {
        if !l.is_joinirr(j) {
            return Err(Error::NotABijection(format!(
                "`{}` is not join-irreducible",
                l.name(j)
            )));
        }
        if !l.is_meetirr(m) {
            return Err(Error::NotABijection(format!(
                "`{}` is not meet-irreducible",
                l.name(m)
            )));
        }
        if hit[m.0] {
            return Err(Error::NotABijection(format!(
                "`{}` is the image of two join-irreducibles",
                l.name(m)
            )));
        }
        hit[m.0] = true;
        image[j.0] = Some(m);
    }
    let missing: Vec<String> = l
        .joinirr()
        .iter()
        .filter(|j| image[j.0].is_none())
        .map(|&j| l.name(j).to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingValues(missing));
    }
    let map: Vec<Elem> = l
        .elements()
        .map(|x| l.meet_all(l.eta(x).into_iter().map(|j| image[j.0].unwrap())))
        .collect();
    if inverse_of(l, &map).is_err() {
        // Collapsing elements: report the first pair sharing an image.
        let mut seen = vec![None; l.len()];
        for (i, &y) in map.iter().enumerate() {
            if let Some(prev) = seen[y.0].replace(Elem(i)) {
                return Err(Error::NoConsistentExtension(
                    l.names_of(&[prev, Elem(i)]),
                ));
            }
        }
    }
    match de_morgan(l, &map, NegationKind::Vee) {
        Verdict::Holds => Negation::vee(l, map),
        Verdict::Fails(w) => Err(Error::NoConsistentExtension(l.names_of(&w.elements))),
    }
}

/// Name-based front end to [`negation_from_irreducible_map`].
pub fn negation_from_irreducible_names<S: AsRef<str>>(
    l: &Arc<Lattice>,
    pairs: &[(S, S)],
) -> Result<Negation> {
    let jmap = pairs
        .iter()
        .map(|(j, m)| Ok((l.elem(j.as_ref())?, l.elem(m.as_ref())?)))
        .collect::<Result<Vec<_>>>()?;
    negation_from_irreducible_map(l, &jmap)
}
