//! The Möbius function of a lattice and the Möbius, zeta and co-Möbius
//! transforms.
//!
//! For a function `f` on a lattice, its Möbius transform `m` is the unique
//! solution of `f(x) = Σ_{y ≤ x} m(y)`, obtained as
//! `m(x) = Σ_{y ≤ x} μ(y, x) f(y)`. The co-Möbius transform of `m` is
//! `q(x) = Σ_{y ≥ x} m(y)`.

use std::ops::Index;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Lattice};

/// A real-valued function defined on every element of a lattice.
///
/// One type serves all roles: capacities, belief functions, masses,
/// commonalities, weights.
#[derive(Debug, Clone)]
pub struct SetFunction {
    lattice: Arc<Lattice>,
    values: Vec<f64>,
}

impl SetFunction {
    pub fn new(lattice: &Arc<Lattice>, values: Vec<f64>) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::LengthMismatch {
                expected: lattice.len(),
                found: values.len(),
            });
        }
        Ok(SetFunction {
            lattice: Arc::clone(lattice),
            values,
        })
    }

    pub fn from_fn(lattice: &Arc<Lattice>, f: impl FnMut(Elem) -> f64) -> Self {
        SetFunction {
            lattice: Arc::clone(lattice),
            values: lattice.elements().map(f).collect(),
        }
    }

    pub fn zeros(lattice: &Arc<Lattice>) -> Self {
        Self::constant(lattice, 0.0)
    }

    pub fn constant(lattice: &Arc<Lattice>, value: f64) -> Self {
        Self::from_fn(lattice, |_| value)
    }

    /// Builds from `(name, value)` pairs; every element must appear exactly
    /// once.
    pub fn from_named<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, f64)]) -> Result<Self> {
        let mut values = vec![None; lattice.len()];
        for (name, v) in pairs {
            let x = lattice.elem(name.as_ref())?;
            values[x.0] = Some(*v);
        }
        let missing: Vec<String> = lattice
            .elements()
            .filter(|x| values[x.0].is_none())
            .map(|x| lattice.name(x).to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingValues(missing));
        }
        Ok(SetFunction {
            lattice: Arc::clone(lattice),
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// A function supported on a few named elements, zero elsewhere.
    pub fn sparse<S: AsRef<str>>(lattice: &Arc<Lattice>, pairs: &[(S, f64)]) -> Result<Self> {
        let mut f = Self::zeros(lattice);
        for (name, v) in pairs {
            let x = lattice.elem(name.as_ref())?;
            f.values[x.0] = *v;
        }
        Ok(f)
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, x: Elem) -> f64 {
        self.values[x.0]
    }

    pub fn set(&mut self, x: Elem, value: f64) {
        self.values[x.0] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Elem, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (Elem(i), v))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> SetFunction {
        SetFunction {
            lattice: Arc::clone(&self.lattice),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pointwise combination of two functions on the same lattice.
    pub fn zip_with(&self, other: &SetFunction, f: impl Fn(f64, f64) -> f64) -> Result<SetFunction> {
        self.same_lattice(other)?;
        Ok(SetFunction {
            lattice: Arc::clone(&self.lattice),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn same_lattice(&self, other: &SetFunction) -> Result<()> {
        same_lattice(&self.lattice, &other.lattice)
    }

    pub fn max_abs_diff(&self, other: &SetFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `true` when both live on the same lattice and agree within `tol`.
    pub fn approx_eq(&self, other: &SetFunction, tol: f64) -> bool {
        self.same_lattice(other).is_ok() && self.max_abs_diff(other) <= tol
    }
}

impl Index<Elem> for SetFunction {
    type Output = f64;

    fn index(&self, x: Elem) -> &f64 {
        &self.values[x.0]
    }
}

pub(crate) fn same_lattice(a: &Arc<Lattice>, b: &Arc<Lattice>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::LatticeMismatch)
    }
}

/// The Möbius function `μ(x, y)` of a lattice, zero unless `x ≤ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusMatrix {
    n: usize,
    mu: Vec<i64>,
}

impl MobiusMatrix {
    /// `μ(x, x) = 1` and `μ(x, y) = -Σ_{x ≤ t < y} μ(x, t)` for `x < y`.
    pub(crate) fn compute(l: &Lattice) -> Self {
        let n = l.len();
        let p = l.poset();
        let mut mu = vec![0i64; n * n];
        for x in l.elements() {
            let row = &mut mu[x.0 * n..(x.0 + 1) * n];
            for &y in p.linear_extension() {
                if y == x {
                    row[y.0] = 1;
                } else if p.leq(x, y) {
                    let s: i64 = p
                        .down_set(y)
                        .ones()
                        .filter(|&t| t != y.0 && p.leq(x, Elem(t)))
                        .map(|t| row[t])
                        .sum();
                    row[y.0] = -s;
                }
            }
        }
        MobiusMatrix { n, mu }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, x: Elem, y: Elem) -> i64 {
        self.mu[x.0 * self.n + y.0]
    }
}

/// `m(x) = Σ_{y ≤ x} μ(y, x) f(y)`.
pub fn mobius_transform(f: &SetFunction) -> SetFunction {
    let l = f.lattice();
    let mu = l.mobius();
    SetFunction::from_fn(l, |x| {
        l.poset()
            .below(x)
            .map(|y| mu.get(y, x) as f64 * f[y])
            .sum()
    })
}

/// `f(x) = Σ_{y ≤ x} m(y)`.
pub fn zeta_transform(m: &SetFunction) -> SetFunction {
    let l = m.lattice();
    SetFunction::from_fn(l, |x| l.poset().below(x).map(|y| m[y]).sum())
}

/// `q(x) = Σ_{y ≥ x} m(y)`, where `m` is already a Möbius-side function.
pub fn comobius_transform(m: &SetFunction) -> SetFunction {
    let l = m.lattice();
    SetFunction::from_fn(l, |x| l.poset().above(x).map(|y| m[y]).sum())
}

/// Inverse of [`comobius_transform`]: `m(x) = Σ_{y ≥ x} μ(x, y) q(y)`.
///
/// `μ(x, y)` for `x ≤ y` is the Möbius function of the dual lattice taken at
/// `(y, x)`, so this is Möbius inversion along the reversed order.
pub fn mass_from_comobius(q: &SetFunction) -> SetFunction {
    let l = q.lattice();
    let mu = l.mobius();
    SetFunction::from_fn(l, |x| {
        l.poset()
            .above(x)
            .map(|y| mu.get(x, y) as f64 * q[y])
            .sum()
    })
}
