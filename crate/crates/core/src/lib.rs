//! Belief-function calculus on arbitrary finite lattices.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: posets and lattices built from cover relations, irreducible
//!   elements, normal and minimal decompositions, structural predicates, the
//!   lattice of downsets, maximal chains and DOT export.
//! - [`transforms`]: the Möbius function of a lattice together with the
//!   Möbius, zeta and co-Möbius transforms of real-valued functions.
//! - [`capacity`]: capacities, belief functions, k-monotone functions,
//!   k-valuations and conjugation with respect to a negation.
//! - [`duality`]: ∨-negations, i.e. anti-automorphisms of autodual lattices.
//! - [`evidence`]: mass allocations, Dempster's rule on a lattice and the
//!   decomposition of a belief function into simple support functions.
//! - [`possibilistic`]: necessity and possibility functions, their
//!   distributions on irreducible elements and the reconstruction of the
//!   unique chain of focal elements from a possibility distribution.
//! - [`io`] and [`shell`]: the JSON file formats and the command layer used by
//!   the `latbel` binary.
//!
//! ```
//! use latbel::{catalog, transforms};
//!
//! let cube = catalog::boolean(3);
//! let mu = cube.mobius();
//! let bottom = cube.bottom();
//! let top = cube.top();
//! assert_eq!(mu.get(bottom, top), -1);
//!
//! let f = transforms::SetFunction::from_fn(&cube, |x| cube.height(x) as f64);
//! let m = transforms::mobius_transform(&f);
//! assert!(transforms::zeta_transform(&m).approx_eq(&f, 1e-12));
//! ```

pub mod capacity;
pub mod catalog;
pub mod duality;
mod error;
pub mod evidence;
pub mod io;
pub mod lattice;
mod limits;
pub mod possibilistic;
pub mod shell;
pub mod transforms;
mod verdict;

pub use error::{BoundFailure, Error, Result};
pub use lattice::{Elem, Lattice, Poset};
pub use limits::{Limits, TOLERANCE};
pub use verdict::{Verdict, Witness};
