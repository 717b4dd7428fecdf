//! Ring invariants of projective monomial curves, computed exactly on their
//! affine semigroups.
//!
//! For a sequence `a₁ < … < a_n` with gcd 1 the coordinate ring of the
//! projective monomial curve is the semigroup ring of
//! `S_a = ⟨(0,a_n), (aᵢ, a_n−aᵢ), (a_n,0)⟩ ⊆ ℕ²`. This crate decides
//! Cohen-Macaulayness, computes the Cohen-Macaulay type and the minimal
//! generators of the canonical module, and tests the Gorenstein, level and
//! nearly Gorenstein properties. The [`classify`] module scans every sequence
//! up to a bound and compares the nearly Gorenstein ones with the known
//! families in codimension 2 and 3.
//!
//! ```
//! use ngcurves::{analyze, Sequence};
//!
//! let record = analyze(&Sequence::new(&[6, 7, 13]).unwrap()).unwrap();
//! assert_eq!(record.cm_type, Some(2));
//! assert_eq!(record.nearly_gorenstein, Some(true));
//! ```

pub mod canonical;
pub mod classify;
pub mod curve;
pub mod error;
pub mod numsg;
pub mod verify;

pub use canonical::{CanonicalData, MovementChain, Translate};
pub use classify::{analyze, ClassificationRecord, Family, PairFamily, ScanReport};
pub use curve::{AperyTable, Curve, Point, Sequence};
pub use error::{Error, Result};
pub use numsg::{AperySet1D, NumericalSemigroup};
