//! Mass allocations, Dempster's rule on a lattice and simple support
//! functions.
//!
//! Combination is a meet-convolution of Möbius transforms,
//! `m(x) = Σ_{y₁ ∧ y₂ = x} m₁(y₁) m₂(y₂)`, which multiplies commonalities
//! pointwise. A belief function whose mass at `⊤` is positive splits into a
//! combination of simple support functions `y^w` (mass `1 - w` at `y`, `w` at
//! `⊤`) with weights
//!
//! ```text
//! w_y = Π_{x ≥ y} q(x)^{-μ(y, x)}
//! ```

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::capacity::check_belief;
use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};
use crate::limits::TOLERANCE;
use crate::transforms::{comobius_transform, mass_from_comobius, mobius_transform, zeta_transform, SetFunction};

/// Möbius side of a belief function: sums to one and vanishes at `⊥`.
///
/// Masses may be negative; [`MassAllocation::is_nonnegative`] tells whether
/// the induced function is a belief function.
#[derive(Debug, Clone)]
pub struct MassAllocation {
    m: SetFunction,
}

impl MassAllocation {
    pub fn new(m: SetFunction) -> Result<Self> {
        let l = m.lattice();
        if m[l.bottom()].abs() > TOLERANCE {
            return Err(Error::InvalidMass(format!(
                "mass {} at the bottom element",
                m[l.bottom()]
            )));
        }
        let total = m.sum();
        if (total - 1.0).abs() > TOLERANCE {
            return Err(Error::InvalidMass(format!("masses sum to {total}")));
        }
        Ok(MassAllocation { m })
    }

    /// Mass of a belief function, read off its Möbius transform.
    pub fn of_belief(bel: &SetFunction) -> Result<Self> {
        MassAllocation::new(mobius_transform(bel))
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        self.m.lattice()
    }

    pub fn function(&self) -> &SetFunction {
        &self.m
    }

    pub fn into_function(self) -> SetFunction {
        self.m
    }

    pub fn get(&self, x: Elem) -> f64 {
        self.m[x]
    }

    pub fn is_nonnegative(&self, tol: f64) -> bool {
        self.m.values().iter().all(|&v| v >= -tol)
    }

    pub fn focal_elements(&self, tol: f64) -> Vec<Elem> {
        focal_elements(&self.m, tol)
    }

    pub fn belief(&self) -> SetFunction {
        zeta_transform(&self.m)
    }

    pub fn commonality(&self) -> SetFunction {
        comobius_transform(&self.m)
    }
}

/// Elements carrying `|m(x)| > tol`, in element order.
pub fn focal_elements(m: &SetFunction, tol: f64) -> Vec<Elem> {
    m.iter().filter(|&(_, v)| v.abs() > tol).map(|(x, _)| x).collect()
}

/// What happens to the mass that lands on `⊥`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CombinationPolicy {
    /// Keep it.
    #[default]
    Raw,
    /// Drop it without renormalizing.
    ZeroBottom,
    /// Drop it and divide the rest by `1 - conflict`.
    Normalize,
}

impl CombinationPolicy {
    pub fn as_str(self) -> &'static str {
        match self {
            CombinationPolicy::Raw => "raw",
            CombinationPolicy::ZeroBottom => "zero-bottom",
            CombinationPolicy::Normalize => "normalize",
        }
    }
}

impl fmt::Display for CombinationPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CombinationPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(CombinationPolicy::Raw),
            "zero-bottom" => Ok(CombinationPolicy::ZeroBottom),
            "normalize" => Ok(CombinationPolicy::Normalize),
            other => Err(Error::Format(format!(
                "unknown policy `{other}` (expected raw, zero-bottom or normalize)"
            ))),
        }
    }
}

/// Dempster's rule on Möbius transforms.
///
/// Under [`CombinationPolicy::Raw`] and [`CombinationPolicy::ZeroBottom`] the
/// result is in general not a mass allocation, so a plain function is
/// returned.
pub fn combine(m1: &SetFunction, m2: &SetFunction, policy: CombinationPolicy) -> Result<SetFunction> {
    m1.same_lattice(m2)?;
    let l = m1.lattice();
    let mut out = SetFunction::zeros(l);
    let support2: Vec<(Elem, f64)> = m2.iter().filter(|&(_, v)| v != 0.0).collect();
    for (y1, a) in m1.iter().filter(|&(_, v)| v != 0.0) {
        for &(y2, b) in &support2 {
            let x = l.meet2(y1, y2);
            out.set(x, out[x] + a * b);
        }
    }
    let bottom = l.bottom();
    match policy {
        CombinationPolicy::Raw => {}
        CombinationPolicy::ZeroBottom => out.set(bottom, 0.0),
        CombinationPolicy::Normalize => {
            out.set(bottom, 0.0);
            let rest = out.sum();
            if rest.abs() <= TOLERANCE {
                return Err(Error::TotalConflict);
            }
            out = out.map(|v| v / rest);
        }
    }
    Ok(out)
}

/// The simple support function focused on `y` with weight `w`.
pub fn simple_support(l: &Arc<Lattice>, y: Elem, w: f64) -> Result<MassAllocation> {
    if y == l.bottom() {
        return Err(Error::FocusIsBottom);
    }
    let mut m = SetFunction::zeros(l);
    m.set(y, 1.0 - w);
    m.set(l.top(), m[l.top()] + w);
    Ok(MassAllocation { m })
}

/// Weights of a decomposition into simple support functions.
///
/// Elements without an entry have weight 1, the vacuous component.
#[derive(Debug, Clone)]
pub struct SupportWeights {
    lattice: Arc<Lattice>,
    entries: Vec<(Elem, f64)>,
}

impl SupportWeights {
    /// Entries may come in any order; later duplicates multiply in.
    pub fn new(lattice: &Arc<Lattice>, entries: impl IntoIterator<Item = (Elem, f64)>) -> Result<Self> {
        let mut w = vec![1.0; lattice.len()];
        let mut present = vec![false; lattice.len()];
        for (y, v) in entries {
            if y.0 >= lattice.len() {
                return Err(Error::UnknownElement(y.to_string()));
            }
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::NonPositiveWeight(lattice.name(y).to_string(), v));
            }
            w[y.0] *= v;
            present[y.0] = true;
        }
        Ok(SupportWeights {
            lattice: Arc::clone(lattice),
            entries: lattice
                .elements()
                .filter(|x| present[x.0])
                .map(|x| (x, w[x.0]))
                .collect(),
        })
    }

    pub fn from_named<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, f64)]) -> Result<Self> {
        let entries = pairs
            .iter()
            .map(|(name, v)| Ok((lattice.elem(name.as_ref())?, *v)))
            .collect::<Result<Vec<_>>>()?;
        SupportWeights::new(lattice, entries)
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    /// Stored entries in element order.
    pub fn entries(&self) -> &[(Elem, f64)] {
        &self.entries
    }

    pub fn get(&self, y: Elem) -> f64 {
        self.entries
            .iter()
            .find(|&&(x, _)| x == y)
            .map_or(1.0, |&(_, w)| w)
    }

    /// Every element with its weight, 1 where no entry is stored.
    pub fn to_function(&self) -> SetFunction {
        SetFunction::from_fn(&self.lattice, |x| self.get(x))
    }
}

/// Splits a belief function into simple support functions.
///
/// Weights within `1e-12` of 1 are dropped and no weight is reported for
/// `⊤`.
pub fn decompose(bel: &SetFunction) -> Result<SupportWeights> {
    let l = bel.lattice();
    if let Some(w) = check_belief(bel, TOLERANCE).witness() {
        return Err(Error::NotABelief(l.names_of(&w.elements).join(", ")));
    }
    let m = mobius_transform(bel);
    if m[l.top()] <= TOLERANCE {
        return Err(Error::TopMassZero);
    }
    let q = comobius_transform(&m);
    let mu = l.mobius();
    let mut entries = Vec::new();
    for y in l.elements().filter(|&y| y != l.top()) {
        let w: f64 = l
            .poset()
            .above(y)
            .map(|x| q[x].powi(-mu.get(y, x) as i32))
            .product();
        if (w - 1.0).abs() > 1e-12 {
            entries.push((y, w));
        }
    }
    SupportWeights::new(l, entries)
}

/// Combines the simple support functions `y^{w(y)}` under the raw policy.
///
/// Computed on commonalities, `q(x) = Π_{x ≰ y} w(y)`, then inverted.
pub fn recombine(weights: &SupportWeights) -> SetFunction {
    let l = weights.lattice();
    let q = SetFunction::from_fn(l, |x| {
        weights
            .entries()
            .iter()
            .filter(|&&(y, _)| !l.leq(x, y))
            .map(|&(_, w)| w)
            .product()
    });
    mass_from_comobius(&q)
}
