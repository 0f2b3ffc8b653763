//! Test corpus, random generators and brute-force oracles.
//!
//! Everything here is deliberately naive and shares no code with the library
//! beyond building lattices from covers.

#![allow(dead_code)]

use std::sync::Arc;

use latbel::lattice::Elem;
use latbel::transforms::SetFunction;
use latbel::{catalog, Lattice};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type Rand = ChaCha8Rng;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Chains with 2 to 9 elements, Boolean lattices up to 16 elements, M₃, N₅,
/// the octet and the 18-element lattice of downsets of the chain-diamond
/// poset.
pub fn corpus() -> Vec<(String, Arc<Lattice>)> {
    let mut out = Vec::new();
    for n in 2..=9 {
        out.push((format!("chain{n}"), catalog::chain(n)));
    }
    for k in 1..=4 {
        out.push((format!("boolean{k}"), catalog::boolean(k)));
    }
    out.push(("m3".into(), catalog::m3()));
    out.push(("n5".into(), catalog::n5()));
    out.push(("octet".into(), catalog::octet()));
    out.push(("chain_diamond".into(), catalog::chain_diamond_lattice()));
    out
}

/// A random lattice: a family of subsets of `{0..ground}` closed under
/// intersection, containing the empty and the full set, ordered by
/// inclusion.
pub fn random_lattice(rng: &mut Rand, ground: usize, generators: usize) -> Arc<Lattice> {
    let full: u32 = (1 << ground) - 1;
    let mut family = vec![0, full];
    for _ in 0..generators {
        let s: u32 = rng.gen::<u32>() & full;
        family.push(s);
    }
    loop {
        let mut added = false;
        for i in 0..family.len() {
            for j in 0..family.len() {
                let m = family[i] & family[j];
                if !family.contains(&m) {
                    family.push(m);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    family.sort_by_key(|s| (s.count_ones(), *s));
    family.dedup();
    let name = |s: u32| format!("s{s}");
    let names: Vec<String> = family.iter().map(|&s| name(s)).collect();
    let sub = |a: u32, b: u32| a != b && a & b == a;
    let mut covers = Vec::new();
    for &a in &family {
        for &b in &family {
            if sub(a, b) && !family.iter().any(|&c| sub(a, c) && sub(c, b)) {
                covers.push((name(a), name(b)));
            }
        }
    }
    Arc::new(Lattice::from_covers(&names, &covers).expect("closure systems are lattices"))
}

/// A random lattice of downsets of a random poset on `k` points, hence
/// distributive.
pub fn random_distributive(rng: &mut Rand, k: usize) -> Arc<Lattice> {
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    let mut covers = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if rng.gen_bool(0.3) {
                covers.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    let p = latbel::lattice::build_poset(&names, &covers).unwrap();
    Arc::new(latbel::lattice::downset_lattice(&p).unwrap().lattice)
}

pub fn random_function(rng: &mut Rand, l: &Arc<Lattice>) -> SetFunction {
    SetFunction::from_fn(l, |_| rng.gen_range(-2.0..2.0))
}

/// Nonnegative mass, zero at `⊥`, summing to 1, with `m(⊤) ≥ top_min`,
/// supported on a random subset of the other elements.
pub fn random_mass(rng: &mut Rand, l: &Arc<Lattice>, top_min: f64) -> SetFunction {
    let mut raw: Vec<f64> = l
        .elements()
        .map(|x| {
            if x == l.bottom() || rng.gen_bool(0.4) {
                0.0
            } else {
                rng.gen::<f64>()
            }
        })
        .collect();
    let top = l.top().index();
    raw[top] += 1e-3;
    let s: f64 = raw.iter().sum();
    for v in &mut raw {
        *v *= (1.0 - top_min) / s;
    }
    raw[top] += top_min;
    SetFunction::new(l, raw).unwrap()
}

/// Nonnegative mass on a random chain of `l` ending at `⊤`.
pub fn random_chain_mass(rng: &mut Rand, l: &Arc<Lattice>) -> SetFunction {
    let mut chain = vec![l.top()];
    let mut x = l.top();
    while x != l.bottom() {
        let below: Vec<Elem> = l.elements().filter(|&y| l.covers(y, x)).collect();
        x = *below.choose(rng).unwrap();
        if x != l.bottom() {
            chain.push(x);
        }
    }
    let mut m = SetFunction::zeros(l);
    let mut total = 0.0;
    for &c in &chain {
        if rng.gen_bool(0.7) || c == l.top() {
            let v = rng.gen::<f64>() + 0.01;
            m.set(c, v);
            total += v;
        }
    }
    m.map(|v| v / total)
}

/// Naive zeta: `f(x) = Σ_{y ≤ x} m(y)`.
pub fn zeta(m: &SetFunction) -> SetFunction {
    let l = m.lattice();
    SetFunction::from_fn(l, |x| l.elements().filter(|&y| l.leq(y, x)).map(|y| m[y]).sum())
}

/// Naive commonality: `q(x) = Σ_{y ≥ x} m(y)`.
pub fn commonality(m: &SetFunction) -> SetFunction {
    let l = m.lattice();
    SetFunction::from_fn(l, |x| l.elements().filter(|&y| l.leq(x, y)).map(|y| m[y]).sum())
}

/// Möbius function computed from the other end of each interval:
/// `μ(x, y) = -Σ_{x < t ≤ y} μ(t, y)`.
pub fn mobius_from_top(l: &Lattice) -> Vec<Vec<i64>> {
    let n = l.len();
    let mut mu = vec![vec![0i64; n]; n];
    let mut order: Vec<Elem> = l.elements().collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.height(x)));
    for y in l.elements() {
        mu[y.index()][y.index()] = 1;
        for &x in &order {
            if x != y && l.leq(x, y) {
                mu[x.index()][y.index()] = -l
                    .elements()
                    .filter(|&t| t != x && l.leq(x, t) && l.leq(t, y))
                    .map(|t| mu[t.index()][y.index()])
                    .sum::<i64>();
            }
        }
    }
    mu
}

/// Whether some bijection reverses the order, by trying every permutation.
pub fn brute_force_autodual(l: &Lattice) -> bool {
    let n = l.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let reverses = |p: &[usize]| {
        l.elements().all(|x| {
            l.elements()
                .all(|y| l.leq(x, y) == l.leq(Elem(p[y.index()]), Elem(p[x.index()])))
        })
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    if reverses(&perm) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if reverses(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// k-monotonicity straight from the definition, over every family of `k`
/// elements with repetitions allowed (`⊥` and `⊤` included).
pub fn k_monotone_with_repetitions(f: &SetFunction, k: usize, tol: f64) -> bool {
    let l = f.lattice();
    let n = l.len();
    let mut idx = vec![0usize; k];
    loop {
        let family: Vec<Elem> = idx.iter().map(|&i| Elem(i)).collect();
        let join = family.iter().fold(l.bottom(), |a, &b| l.join2(a, b));
        let mut rhs = 0.0;
        for mask in 1u32..(1 << k) {
            let meet = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .fold(l.top(), |a, i| l.meet2(a, family[i]));
            let sign = if mask.count_ones() % 2 == 1 { 1.0 } else { -1.0 };
            rhs += sign * f[meet];
        }
        if f[join] < rhs - tol {
            return false;
        }
        // next nondecreasing index tuple
        let mut p = k;
        loop {
            if p == 0 {
                return true;
            }
            p -= 1;
            if idx[p] + 1 < n {
                idx[p] += 1;
                for q in p + 1..k {
                    idx[q] = idx[p];
                }
                break;
            }
        }
    }
}

/// Subset of `{1, ..., k}` named like `{1,3}`, as a bit mask.
pub fn subset_mask(name: &str) -> u32 {
    name.trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| 1u32 << (s.parse::<u32>().unwrap() - 1))
        .fold(0, |a, b| a | b)
}

/// Pairwise comparability of the elements carrying mass.
pub fn focal_chain(m: &SetFunction, tol: f64) -> bool {
    let l = m.lattice();
    let focal: Vec<Elem> = l.elements().filter(|&x| m[x].abs() > tol).collect();
    focal
        .iter()
        .all(|&a| focal.iter().all(|&b| l.leq(a, b) || l.leq(b, a)))
}

/// Every maximal chain from `⊥` to `⊤`, by naive recursion.
pub fn all_maximal_chains(l: &Lattice) -> Vec<Vec<Elem>> {
    fn go(l: &Lattice, path: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let x = *path.last().unwrap();
        if x == l.top() {
            out.push(path.clone());
            return;
        }
        for y in l.elements().filter(|&y| l.covers(x, y)) {
            path.push(y);
            go(l, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(l, &mut vec![l.bottom()], &mut out);
    out
}

/// Chains carrying a nonnegative mass whose necessity `N` satisfies
/// `1 - N(n(j)) = π(j)` for every join-irreducible `j`, each with its unique
/// masses, or `None` for the masses when the constraints leave them open.
///
/// Along a chain `⊥ < c_1 < ... < c_n`, `N(x)` is the prefix sum
/// `S(p) = m(c_1) + ... + m(c_p)` with `p` the number of `c_i ≤ x`.
pub fn chains_reproducing(
    l: &Lattice,
    negation: impl Fn(Elem) -> Elem,
    pi: &[(Elem, f64)],
    tol: f64,
) -> Vec<(Vec<Elem>, Option<Vec<f64>>)> {
    let mut found = Vec::new();
    for chain in all_maximal_chains(l) {
        let c = &chain[1..];
        let n = c.len();
        let mut prefix: Vec<Option<f64>> = vec![None; n + 1];
        prefix[0] = Some(0.0);
        prefix[n] = Some(1.0);
        let mut ok = true;
        for &(j, v) in pi {
            let nj = negation(j);
            let p = c.iter().filter(|&&ci| l.leq(ci, nj)).count();
            let want = 1.0 - v;
            match prefix[p] {
                Some(s) if (s - want).abs() > tol => ok = false,
                _ => prefix[p] = Some(want),
            }
        }
        if !ok {
            continue;
        }
        let known: Vec<f64> = prefix.iter().flatten().copied().collect();
        if known.windows(2).any(|w| w[1] < w[0] - tol) {
            continue;
        }
        let masses = if prefix.iter().all(Option::is_some) {
            let s: Vec<f64> = prefix.iter().map(|v| v.unwrap()).collect();
            Some(s.windows(2).map(|w| w[1] - w[0]).collect())
        } else {
            None
        };
        found.push((c.to_vec(), masses));
    }
    found
}
