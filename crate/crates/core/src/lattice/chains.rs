use crate::error::{Error, Result};
use crate::limits::Limits;

use super::{Elem, Lattice};

/// All maximal chains from bottom to top, each listed bottom-up.
pub fn maximal_chains(l: &Lattice) -> Result<Vec<Vec<Elem>>> {
    maximal_chains_with(l, &Limits::default())
}

pub fn maximal_chains_with(l: &Lattice, limits: &Limits) -> Result<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    let mut path = vec![l.bottom()];
    walk(l, &mut path, &mut out, limits.max_chains)?;
    Ok(out)
}

fn walk(l: &Lattice, path: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>, cap: usize) -> Result<()> {
    let last = *path.last().expect("path starts at bottom");
    if last == l.top() {
        if out.len() >= cap {
            return Err(Error::SizeLimitExceeded {
                what: "maximal chains",
                limit: cap,
            });
        }
        out.push(path.clone());
        return Ok(());
    }
    for &next in l.poset().upper_covers(last) {
        path.push(next);
        walk(l, path, out, cap)?;
        path.pop();
    }
    Ok(())
}
