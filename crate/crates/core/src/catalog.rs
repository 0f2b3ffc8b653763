//! Small named lattices used throughout the tests and examples.

use std::sync::Arc;

use crate::lattice::{build_poset, downset_lattice, Lattice, Poset};

fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Arc<Lattice> {
    Arc::new(Lattice::from_covers(elements, covers).expect("catalog lattice is valid"))
}

/// Chain with `n >= 1` elements named `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Arc<Lattice> {
    assert!(n >= 1, "a chain needs at least one element");
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let covers: Vec<(String, String)> = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    Arc::new(Lattice::from_covers(&names, &covers).expect("chain is a lattice"))
}

/// Subsets of `{1, ..., k}` ordered by inclusion, named like `{1,3}`.
pub fn boolean(k: usize) -> Arc<Lattice> {
    let names: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let antichain = build_poset::<String>(&names, &[]).expect("antichain");
    Arc::new(downset_lattice(&antichain).expect("small").lattice)
}

/// The diamond `M₃`: bottom, three pairwise incomparable atoms `a, b, c`, top.
pub fn m3() -> Arc<Lattice> {
    from_covers(
        &["⊥", "a", "b", "c", "⊤"],
        &[
            ("⊥", "a"),
            ("⊥", "b"),
            ("⊥", "c"),
            ("a", "⊤"),
            ("b", "⊤"),
            ("c", "⊤"),
        ],
    )
}

/// The pentagon `N₅`: `⊥ < a < b < ⊤` and `⊥ < c < ⊤`.
pub fn n5() -> Arc<Lattice> {
    from_covers(
        &["⊥", "a", "b", "c", "⊤"],
        &[("⊥", "a"), ("a", "b"), ("b", "⊤"), ("⊥", "c"), ("c", "⊤")],
    )
}

/// An autodual, non-complemented 8-element lattice with join-irreducibles
/// `a, b, d, e`:
///
/// ```text
///         ⊤
///        / \
///       e   f
///        \ / \
///         c   d
///        / \ /
///       a   b
///        \ /
///         ⊥
/// ```
pub fn octet() -> Arc<Lattice> {
    from_covers(
        &["⊥", "a", "b", "c", "d", "e", "f", "⊤"],
        &[
            ("⊥", "a"),
            ("⊥", "b"),
            ("a", "c"),
            ("b", "c"),
            ("b", "d"),
            ("c", "e"),
            ("c", "f"),
            ("d", "f"),
            ("e", "⊤"),
            ("f", "⊤"),
        ],
    )
}

/// The square `{⊥, a, b, c}` with an extra element `⊤` above `c`; it is not
/// isomorphic to its dual.
pub fn kite() -> Arc<Lattice> {
    from_covers(
        &["⊥", "a", "b", "c", "⊤"],
        &[("⊥", "a"), ("⊥", "b"), ("a", "c"), ("b", "c"), ("c", "⊤")],
    )
}

/// The poset `a < b` beside the diamond `c < d, e < f`.
pub fn chain_diamond_poset() -> Poset {
    build_poset(
        &["a", "b", "c", "d", "e", "f"],
        &[("a", "b"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")],
    )
    .expect("valid poset")
}

/// The 18-element distributive, autodual lattice of downsets of
/// [`chain_diamond_poset`]; elements are named by their downsets.
pub fn chain_diamond_lattice() -> Arc<Lattice> {
    Arc::new(
        downset_lattice(&chain_diamond_poset())
            .expect("small")
            .lattice,
    )
}

/// A ∨-negation of [`chain_diamond_lattice`] given on join-irreducibles, as
/// `(join-irreducible, meet-irreducible)` name pairs.
pub fn chain_diamond_negation_table() -> [(&'static str, &'static str); 6] {
    [
        ("{a}", "{a,c,d,e,f}"),
        ("{a,b}", "{c,d,e,f}"),
        ("{c}", "{a,b,c,d,e}"),
        ("{c,d}", "{a,b,c,e}"),
        ("{c,e}", "{a,b,c,d}"),
        ("{c,d,e,f}", "{a,b}"),
    ]
}
