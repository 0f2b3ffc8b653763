use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits::Limits;

use super::{lattice_from_poset, Elem, Lattice, Poset};

/// The lattice of downsets of a poset, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct DownsetLattice {
    pub lattice: Lattice,
    /// For each lattice element, the downset it stands for (poset elements).
    pub downsets: Vec<Vec<Elem>>,
    /// For each poset element `p`, the lattice element `↓p`.
    pub principal: Vec<Elem>,
}

impl DownsetLattice {
    pub fn downset(&self, x: Elem) -> &[Elem] {
        &self.downsets[x.0]
    }
}

/// Builds `O(P)`. Elements are named by their downsets, e.g. `{a,b}`, and are
/// listed by size, then lexicographically in the poset's declaration order.
pub fn downset_lattice(p: &Poset) -> Result<DownsetLattice> {
    downset_lattice_with(p, &Limits::default())
}

pub fn downset_lattice_with(p: &Poset, limits: &Limits) -> Result<DownsetLattice> {
    let n = p.len();
    let cap = limits.max_downsets.min(limits.max_elements);
    let too_many = || Error::SizeLimitExceeded {
        what: if limits.max_downsets <= limits.max_elements {
            "downsets"
        } else {
            "elements"
        },
        limit: cap,
    };

    let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut sets: Vec<FixedBitSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let empty = FixedBitSet::with_capacity(n);
    found.insert(empty.clone(), 0);
    sets.push(empty);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for x in p.elements() {
            if sets[i].contains(x.0) || !p.lower_covers(x).iter().all(|y| sets[i].contains(y.0)) {
                continue;
            }
            let mut next = sets[i].clone();
            next.insert(x.0);
            let j = match found.get(&next) {
                Some(&j) => j,
                None => {
                    if sets.len() >= cap {
                        return Err(too_many());
                    }
                    let j = sets.len();
                    found.insert(next.clone(), j);
                    sets.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((i, j));
        }
    }

    // Canonical order: by size, then by sorted member list.
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| (sets[i].count_ones(..), sets[i].ones().collect::<Vec<_>>()));
    let mut rank = vec![0usize; sets.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }

    let downsets: Vec<Vec<Elem>> = order
        .iter()
        .map(|&i| sets[i].ones().map(Elem).collect())
        .collect();
    let names = downsets
        .iter()
        .map(|d: &Vec<Elem>| {
            let inner: Vec<&str> = d.iter().map(|&x| p.name(x)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let edges = edges.into_iter().map(|(i, j)| (rank[i], rank[j])).collect();
    let poset = Poset::from_indexed(names, edges)?;
    let lattice = lattice_from_poset(poset)?;

    let principal = p
        .elements()
        .map(|x| {
            let members: Vec<Elem> = p.below(x).collect();
            Elem(downsets.iter().position(|d| *d == members).expect("principal downset"))
        })
        .collect();

    Ok(DownsetLattice {
        lattice,
        downsets,
        principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_poset, profile};

    #[test]
    fn antichain_gives_boolean_square() {
        let p = build_poset(&["x", "y"], &[]).unwrap();
        let d = downset_lattice(&p).unwrap();
        assert_eq!(d.lattice.len(), 4);
        assert_eq!(d.lattice.names_of(&d.principal), ["{x}", "{y}"]);
        assert!(profile(&d.lattice).is_complemented);
    }

    #[test]
    fn chain_plus_diamond_has_eighteen_downsets() {
        let p = build_poset(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")],
        )
        .unwrap();
        let d = downset_lattice(&p).unwrap();
        assert_eq!(d.lattice.len(), 18);
        assert_eq!(d.lattice.name(d.lattice.bottom()), "{}");
        assert_eq!(d.lattice.name(d.lattice.top()), "{a,b,c,d,e,f}");
        // Join-irreducibles are exactly the principal downsets.
        let mut principal = d.principal.clone();
        principal.sort();
        assert_eq!(d.lattice.joinirr(), principal.as_slice());
    }

    #[test]
    fn downset_cap() {
        let p = build_poset(&["a", "b", "c"], &[]).unwrap();
        let limits = Limits {
            max_downsets: 5,
            ..Limits::default()
        };
        assert!(matches!(
            downset_lattice_with(&p, &limits),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
