use std::collections::BTreeMap;
use std::fmt;

use crate::duality;
use crate::verdict::Verdict;

use super::{Elem, Lattice};

/// Structural properties decided by [`profile`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Linear,
    Ranked,
    Modular,
    LowerSemimodular,
    UpperSemimodular,
    Distributive,
    LowerLocallyDistributive,
    UpperLocallyDistributive,
    Complemented,
    Atomistic,
    Autodual,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Linear,
        Property::Ranked,
        Property::Modular,
        Property::LowerSemimodular,
        Property::UpperSemimodular,
        Property::Distributive,
        Property::LowerLocallyDistributive,
        Property::UpperLocallyDistributive,
        Property::Complemented,
        Property::Atomistic,
        Property::Autodual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Linear => "linear",
            Property::Ranked => "ranked",
            Property::Modular => "modular",
            Property::LowerSemimodular => "lower_semimodular",
            Property::UpperSemimodular => "upper_semimodular",
            Property::Distributive => "distributive",
            Property::LowerLocallyDistributive => "lower_locally_distributive",
            Property::UpperLocallyDistributive => "upper_locally_distributive",
            Property::Complemented => "complemented",
            Property::Atomistic => "atomistic",
            Property::Autodual => "autodual",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructureProfile {
    pub is_lattice: bool,
    pub is_linear: bool,
    pub is_ranked: bool,
    pub is_modular: bool,
    pub is_lower_semimodular: bool,
    pub is_upper_semimodular: bool,
    pub is_distributive: bool,
    pub is_lower_locally_distributive: bool,
    pub is_upper_locally_distributive: bool,
    pub is_complemented: bool,
    pub is_atomistic: bool,
    pub is_autodual: bool,
    /// Counterexample for every property that fails. Autoduality has an
    /// empty witness.
    pub witnesses: BTreeMap<Property, Vec<Elem>>,
}

impl StructureProfile {
    pub fn get(&self, property: Property) -> bool {
        match property {
            Property::Linear => self.is_linear,
            Property::Ranked => self.is_ranked,
            Property::Modular => self.is_modular,
            Property::LowerSemimodular => self.is_lower_semimodular,
            Property::UpperSemimodular => self.is_upper_semimodular,
            Property::Distributive => self.is_distributive,
            Property::LowerLocallyDistributive => self.is_lower_locally_distributive,
            Property::UpperLocallyDistributive => self.is_upper_locally_distributive,
            Property::Complemented => self.is_complemented,
            Property::Atomistic => self.is_atomistic,
            Property::Autodual => self.is_autodual,
        }
    }
}

/// Decides every structural property of `l`.
pub fn profile(l: &Lattice) -> StructureProfile {
    let mut witnesses = BTreeMap::new();
    let mut record = |p: Property, v: Verdict| -> bool {
        match v {
            Verdict::Holds => true,
            Verdict::Fails(w) => {
                witnesses.insert(p, w.elements);
                false
            }
        }
    };
    let lower = lower_semimodular(l);
    let upper = upper_semimodular(l);
    let is_lower_semimodular = record(Property::LowerSemimodular, lower.clone());
    let is_upper_semimodular = record(Property::UpperSemimodular, upper.clone());
    let modular = lower.and_then(|| upper);
    let m3 = m3_verdict(l);
    let lld = lower_semimodular(l).and_then(|| m3.clone());
    let uld = upper_semimodular(l).and_then(|| m3);
    let autodual = if duality::find_negations(l, 1).is_empty() {
        Verdict::fail(Vec::new())
    } else {
        Verdict::Holds
    };
    let is_linear = record(Property::Linear, linear(l));
    let is_ranked = record(Property::Ranked, ranked(l));
    let is_modular = record(Property::Modular, modular);
    let is_distributive = record(Property::Distributive, distributive(l));
    let is_lower_locally_distributive = record(Property::LowerLocallyDistributive, lld);
    let is_upper_locally_distributive = record(Property::UpperLocallyDistributive, uld);
    let is_complemented = record(Property::Complemented, complemented(l));
    let is_atomistic = record(Property::Atomistic, atomistic(l));
    let is_autodual = record(Property::Autodual, autodual);
    StructureProfile {
        is_lattice: true,
        is_linear,
        is_ranked,
        is_modular,
        is_lower_semimodular,
        is_upper_semimodular,
        is_distributive,
        is_lower_locally_distributive,
        is_upper_locally_distributive,
        is_complemented,
        is_atomistic,
        is_autodual,
        witnesses,
    }
}

fn pairs(l: &Lattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    let n = l.len();
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (Elem(i), Elem(j))))
}

pub(crate) fn linear(l: &Lattice) -> Verdict {
    match pairs(l).find(|&(x, y)| !l.poset().comparable(x, y)) {
        Some((x, y)) => Verdict::fail(vec![x, y]),
        None => Verdict::Holds,
    }
}

pub(crate) fn ranked(l: &Lattice) -> Verdict {
    match l
        .poset()
        .covers()
        .iter()
        .find(|&&(x, y)| l.height(y) != l.height(x) + 1)
    {
        Some(&(x, y)) => Verdict::fail(vec![x, y]),
        None => Verdict::Holds,
    }
}

/// If `x ∨ y` covers both `x` and `y`, then both cover `x ∧ y`.
pub(crate) fn lower_semimodular(l: &Lattice) -> Verdict {
    for (x, y) in pairs(l) {
        let (j, m) = (l.join2(x, y), l.meet2(x, y));
        if l.covers(x, j) && l.covers(y, j) && !(l.covers(m, x) && l.covers(m, y)) {
            return Verdict::fail(vec![x, y]);
        }
    }
    Verdict::Holds
}

/// If `x` and `y` both cover `x ∧ y`, then `x ∨ y` covers both.
pub(crate) fn upper_semimodular(l: &Lattice) -> Verdict {
    for (x, y) in pairs(l) {
        let (j, m) = (l.join2(x, y), l.meet2(x, y));
        if l.covers(m, x) && l.covers(m, y) && !(l.covers(x, j) && l.covers(y, j)) {
            return Verdict::fail(vec![x, y]);
        }
    }
    Verdict::Holds
}

/// `(x ∨ y) ∧ z = (x ∧ z) ∨ (y ∧ z)` over all triples.
pub(crate) fn distributive(l: &Lattice) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            let xy = l.join2(x, y);
            for z in l.elements() {
                if l.meet2(xy, z) != l.join2(l.meet2(x, z), l.meet2(y, z)) {
                    return Verdict::fail(vec![x, y, z]);
                }
            }
        }
    }
    Verdict::Holds
}

/// Searches for `{b, x, y, z, t}` closed under join and meet with three
/// pairwise incomparable middle elements sharing join `t` and meet `b`.
/// Returns the sublattice as `[b, x, y, z, t]`.
pub fn find_m3_sublattice(l: &Lattice) -> Option<[Elem; 5]> {
    for (x, y) in pairs(l) {
        if l.poset().comparable(x, y) {
            continue;
        }
        let t = l.join2(x, y);
        let b = l.meet2(x, y);
        for z in (y.0 + 1..l.len()).map(Elem) {
            if l.join2(x, z) == t && l.join2(y, z) == t && l.meet2(x, z) == b && l.meet2(y, z) == b
            {
                return Some([b, x, y, z, t]);
            }
        }
    }
    None
}

fn m3_verdict(l: &Lattice) -> Verdict {
    match find_m3_sublattice(l) {
        Some(found) => Verdict::fail(found.to_vec()),
        None => Verdict::Holds,
    }
}

pub(crate) fn lower_locally_distributive(l: &Lattice) -> Verdict {
    lower_semimodular(l).and_then(|| m3_verdict(l))
}

pub(crate) fn upper_locally_distributive(l: &Lattice) -> Verdict {
    upper_semimodular(l).and_then(|| m3_verdict(l))
}

/// All complements of `x`.
pub fn complements(l: &Lattice, x: Elem) -> Vec<Elem> {
    l.elements()
        .filter(|&y| l.meet2(x, y) == l.bottom() && l.join2(x, y) == l.top())
        .collect()
}

pub(crate) fn complemented(l: &Lattice) -> Verdict {
    match l.elements().find(|&x| complements(l, x).is_empty()) {
        Some(x) => Verdict::fail(vec![x]),
        None => Verdict::Holds,
    }
}

pub(crate) fn atomistic(l: &Lattice) -> Verdict {
    match l
        .joinirr()
        .iter()
        .find(|&&j| !l.covers(l.bottom(), j))
    {
        Some(&j) => Verdict::fail(vec![j]),
        None => Verdict::Holds,
    }
}
