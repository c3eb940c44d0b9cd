//! Exact operator algebra for the Heun operator viewed as the Hamiltonian of
//! the sl(2,R) Euler-Arnold quantum top in a constant magnetic field.
//!
//! The crate is organized in layers:
//!
//! - [`algebra`]: big-rational scalars, dense polynomials, rational functions
//!   and normal-ordered linear differential operators. Everything above is
//!   computed exactly on this substrate; floats appear only in eigensolves,
//!   quadrature, elliptic evaluation and trajectory integration.
//! - [`sl2`]: the three realizations of sl(2,R) (differential, shift lattice,
//!   dilation lattice), the top Hamiltonian and the Casimir constraint.
//! - [`heun`], [`qes`], [`factor`]: the Heun operator as data — tridiagonal
//!   band action, spin condition, parameter maps to/from the top, finite
//!   QES blocks with exact characteristic polynomials, gauge covariance,
//!   exactly-solvable reduction and sl(2) factorization.
//! - [`lattice`]: five-point shift stencils, quasi-monomial and q-basis
//!   maps, and polynomial isospectrality across the three realizations.
//! - [`schrodinger`], [`weierstrass`], [`bc1`]: gauge rotation to Schrodinger
//!   form, the tau coordinate, Weierstrass elliptic evaluation and the
//!   elliptic BC1 pipeline.
//! - [`classical`]: the de-quantized phase-space Hamiltonian and adaptive
//!   trajectory integration.
//! - [`presets`]: named parameter sets used by the CLI and the tests.

pub mod algebra;
pub mod bc1;
mod eigen;
pub mod classical;
pub mod factor;
pub mod heun;
pub mod lattice;
pub mod presets;
pub mod qes;
pub mod schrodinger;
pub mod sl2;
pub mod weierstrass;

pub use algebra::{DiffOp, Poly, Rational, RationalFn};
pub use bc1::BC1Instance;
pub use classical::ClassicalHamiltonian;
pub use factor::FactorizationResult;
pub use heun::{BandAction, HeunParams, SpinRoot};
pub use lattice::{QFactorialTable, Stencil};
pub use qes::QesResult;
pub use schrodinger::PotentialData;
pub use sl2::{GeneratorTriple, TopParams};
pub use weierstrass::EllipticInvariants;
