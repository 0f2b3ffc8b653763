use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::limits::Limits;

use super::Elem;

/// A finite poset given by its (irredundant) cover relation.
///
/// Elements keep the order in which they were declared; every enumeration in
/// the crate follows that order.
#[derive(Debug, Clone)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(Elem, Elem)>,
    dropped: Vec<(Elem, Elem)>,
    upper_covers: Vec<Vec<Elem>>,
    lower_covers: Vec<Vec<Elem>>,
    cover_set: FixedBitSet,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    topo: Vec<Elem>,
    heights: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.covers == other.covers
    }
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

/// Builds a poset from declared elements and cover pairs `(lower, upper)`.
///
/// Transitive and duplicate pairs are dropped; the dropped pairs are kept in
/// [`Poset::dropped_covers`] so callers can warn about them.
pub fn build_poset<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset> {
    build_poset_with(elements, covers, &Limits::default())
}

pub fn build_poset_with<S: AsRef<str>>(
    elements: &[S],
    covers: &[(S, S)],
    limits: &Limits,
) -> Result<Poset> {
    if elements.len() > limits.max_elements {
        return Err(Error::SizeLimitExceeded {
            what: "elements",
            limit: limits.max_elements,
        });
    }
    let mut names = Vec::with_capacity(elements.len());
    let mut index = HashMap::with_capacity(elements.len());
    for name in elements {
        let name = name.as_ref();
        check_name(name)?;
        if index.insert(name.to_string(), names.len()).is_some() {
            return Err(Error::DuplicateElement(name.to_string()));
        }
        names.push(name.to_string());
    }
    let lookup = |name: &str| -> Result<usize> {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    };
    let mut edges = Vec::with_capacity(covers.len());
    for (lo, hi) in covers {
        edges.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
    }
    Poset::from_indexed(names, edges)
}

impl Poset {
    /// Builds from element names and index pairs, which must already be in range.
    pub(crate) fn from_indexed(names: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Poset> {
        let n = names.len();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        // Deduplicate while remembering input order.
        let mut seen = FixedBitSet::with_capacity(n * n);
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut unique = Vec::with_capacity(edges.len());
        let mut dropped = Vec::new();
        for &(lo, hi) in &edges {
            if lo == hi {
                return Err(Error::CycleDetected(vec![names[lo].clone(), names[lo].clone()]));
            }
            if seen.put(lo * n + hi) {
                dropped.push((Elem(lo), Elem(hi)));
                continue;
            }
            succ[lo].push(hi);
            unique.push((lo, hi));
        }

        let topo = topological_order(&names, &succ)?;

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &succ[x] {
                set.union_with(&up[y]);
            }
            up[x] = set;
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in up[x].ones() {
                down[y].insert(x);
            }
        }

        // Transitive reduction: (x, y) is redundant when another direct
        // successor z of x already lies below y.
        let mut covers = Vec::with_capacity(unique.len());
        for &(x, y) in &unique {
            let redundant = succ[x].iter().any(|&z| z != y && up[z].contains(y));
            if redundant {
                dropped.push((Elem(x), Elem(y)));
            } else {
                covers.push((Elem(x), Elem(y)));
            }
        }
        covers.sort_by_key(|&(x, y)| (x, y));

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        let mut cover_set = FixedBitSet::with_capacity(n * n);
        for &(x, y) in &covers {
            upper_covers[x.0].push(y);
            lower_covers[y.0].push(x);
            cover_set.insert(x.0 * n + y.0);
        }
        for list in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            list.sort();
        }

        let mut heights = vec![0usize; n];
        for &x in &topo {
            heights[x] = lower_covers[x]
                .iter()
                .map(|y| heights[y.0] + 1)
                .max()
                .unwrap_or(0);
        }

        Ok(Poset {
            names,
            index,
            covers,
            dropped,
            upper_covers,
            lower_covers,
            cover_set,
            up,
            down,
            topo: topo.into_iter().map(Elem).collect(),
            heights,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + '_ {
        (0..self.names.len()).map(Elem)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x.0]
    }

    pub fn elem(&self, name: &str) -> Result<Elem> {
        self.index
            .get(name)
            .map(|&i| Elem(i))
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.up[x.0].contains(y.0)
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Elem, y: Elem) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `true` when `y` covers `x`.
    pub fn is_cover(&self, x: Elem, y: Elem) -> bool {
        self.cover_set.contains(x.0 * self.len() + y.0)
    }

    /// The irredundant cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    /// Input pairs that were duplicates or implied by transitivity.
    pub fn dropped_covers(&self) -> &[(Elem, Elem)] {
        &self.dropped
    }

    pub fn upper_covers(&self, x: Elem) -> &[Elem] {
        &self.upper_covers[x.0]
    }

    pub fn lower_covers(&self, x: Elem) -> &[Elem] {
        &self.lower_covers[x.0]
    }

    /// `{y : x <= y}` as a bitset over element indices.
    pub fn up_set(&self, x: Elem) -> &FixedBitSet {
        &self.up[x.0]
    }

    /// `{y : y <= x}` as a bitset over element indices.
    pub fn down_set(&self, x: Elem) -> &FixedBitSet {
        &self.down[x.0]
    }

    /// Elements above `x`, in declaration order.
    pub fn above(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.up[x.0].ones().map(Elem)
    }

    /// Elements below `x`, in declaration order.
    pub fn below(&self, x: Elem) -> impl Iterator<Item = Elem> + '_ {
        self.down[x.0].ones().map(Elem)
    }

    /// A linear extension: every element appears after all elements below it.
    pub fn linear_extension(&self) -> &[Elem] {
        &self.topo
    }

    /// Length of a longest chain from a minimal element up to `x`.
    pub fn height(&self, x: Elem) -> usize {
        self.heights[x.0]
    }

    pub fn minimal_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.lower_covers(x).is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.upper_covers(x).is_empty())
            .collect()
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> Poset {
        let edges = self.covers.iter().map(|&(x, y)| (y.0, x.0)).collect();
        Poset::from_indexed(self.names.clone(), edges).expect("dual of a poset is a poset")
    }

    /// The subposet induced on `subset`, keeping declaration order.
    pub fn restrict(&self, subset: &[Elem]) -> Poset {
        let mut keep: Vec<Elem> = subset.to_vec();
        keep.sort();
        keep.dedup();
        let names = keep.iter().map(|&x| self.names[x.0].clone()).collect();
        let mut edges = Vec::new();
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if self.lt(x, y) {
                    edges.push((i, j));
                }
            }
        }
        Poset::from_indexed(names, edges).expect("induced subposet is a poset")
    }
}

/// Kahn's algorithm, taking ready elements in declaration order.
fn topological_order(names: &[String], succ: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = names.len();
    let mut indeg = vec![0usize; n];
    for list in succ {
        for &y in list {
            indeg[y] += 1;
        }
    }
    let mut ready: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop_front() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.push_back(y);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    Err(Error::CycleDetected(find_cycle(names, succ, &indeg)))
}

/// Walks backwards through unresolved elements until one repeats. Every
/// element left with positive in-degree has an unresolved predecessor.
fn find_cycle(names: &[String], succ: &[Vec<usize>], indeg: &[usize]) -> Vec<String> {
    let n = names.len();
    let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, list) in succ.iter().enumerate() {
        for &y in list {
            pred[y].push(x);
        }
    }
    let start = (0..n)
        .find(|&x| indeg[x] > 0)
        .expect("an unresolved element exists");
    let mut position = vec![usize::MAX; n];
    let mut path = Vec::new();
    let mut x = start;
    loop {
        if position[x] != usize::MAX {
            let mut cycle: Vec<String> = path[position[x]..]
                .iter()
                .rev()
                .map(|&i: &usize| names[i].clone())
                .collect();
            cycle.push(cycle[0].clone());
            return cycle;
        }
        position[x] = path.len();
        path.push(x);
        x = *pred[x]
            .iter()
            .find(|&&y| indeg[y] > 0)
            .expect("unresolved element has an unresolved predecessor");
    }
}
