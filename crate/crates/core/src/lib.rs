//! Virtual and proper dimensions of mapping class groups of surfaces.
//!
//! Closed-form vcd tables for surfaces, a 2-orbifold signature model with
//! exact Riemann–Hurwitz accounting, a finite-group engine for subgroup chain
//! lengths, and an exhaustive check of `vcd(WF) + λ(F) ≤ m` over every
//! quotient signature of a closed non-orientable surface `N_g`.
//!
//! All arithmetic is exact: Euler characteristics live in [`Rational`].

pub mod criterion;
pub mod enumerator;
pub mod groups;
pub mod orbifolds;
pub mod rational;
pub mod sigio;
pub mod surfaces;
pub mod verifiers;

pub use criterion::{check_criterion, conclude, Conclusion, CriterionError, CriterionReport, Mode};
pub use enumerator::{enumerate_all, enumerate_signatures, hurwitz_ceiling};
pub use groups::{FiniteGroup, GroupError, GroupSpec, SubgroupLattice};
pub use orbifolds::{BoundaryComponent, OrbifoldSignature, SignatureError};
pub use rational::Rational;
pub use sigio::{ingest_actions, parse_signature, ActionRow, IngestError, ParseError};
pub use surfaces::{DimensionBounds, Surface, SurfaceError, SurfaceKind};
