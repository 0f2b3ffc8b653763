use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Lattice, Poset};

/// Hasse diagram of a poset in DOT, drawn bottom-up with one rank per height.
pub fn poset_to_dot(p: &Poset) -> String {
    render(p, |_| false)
}

/// Like [`poset_to_dot`], with join-irreducible elements filled black.
pub fn lattice_to_dot(l: &Lattice) -> String {
    render(l.poset(), |x| l.is_joinirr(super::Elem(x)))
}

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

fn render(p: &Poset, highlighted: impl Fn(usize) -> bool) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in p.elements() {
        let style = if highlighted(x.0) {
            " [style=filled, fillcolor=black, fontcolor=white]"
        } else {
            ""
        };
        writeln!(out, "  {}{};", quote(p.name(x)), style).unwrap();
    }
    let mut ranks: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for x in p.elements() {
        ranks.entry(p.height(x)).or_default().push(p.name(x));
    }
    for members in ranks.values() {
        let list: Vec<String> = members.iter().map(|s| quote(s)).collect();
        writeln!(out, "  {{ rank=same; {}; }}", list.join("; ")).unwrap();
    }
    for &(lo, hi) in p.covers() {
        writeln!(out, "  {} -> {} [arrowhead=none];", quote(p.name(lo)), quote(p.name(hi)))
            .unwrap();
    }
    out.push_str("}\n");
    out
}
