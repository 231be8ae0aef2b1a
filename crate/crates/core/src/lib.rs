//! Exact construction and verification toolkit for double-indexed
//! exceptional Hermite polynomial families and the rationally extended
//! harmonic oscillators they generate.
//!
//! Layering, bottom up: exact polynomial and rational-function arithmetic
//! over big rationals (`poly`, `ratfunc`, `sturm`), the closed class of
//! rational-times-gaussian functions every operator here acts on
//! (`quasigauss`, `potential`), the families themselves with their spectra
//! and bound states (`families`), the factorization and ladder operators
//! (`operators`), floating-point quadrature and finite differences for the
//! checks that cannot be exact (`numerics`), and a verification suite that
//! ties it all together (`verify`).

pub mod error;
pub mod families;
pub mod jsonio;
pub mod numerics;
pub mod operators;
pub mod poly;
pub mod potential;
pub mod quasigauss;
pub mod ratfunc;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use families::{
    EnergyLevel, ExtendedFamily, FamilyParams, FirstOrderState, Ham, Wavefunction, DEFAULT_GRID,
};
pub use numerics::{FdGrid, QuadratureSpec};
pub use operators::{FirstOrderOp, LadderAction, LadderOp, OperatorChain, PhaPolys, ZeroModes};
pub use poly::{Polynomial, Rat};
pub use potential::{Potential, PotentialLayout};
pub use quasigauss::{GaussSign, Proportionality, QuasiGaussian};
pub use ratfunc::RationalFunction;
pub use verify::{CheckResult, SuiteReport, VerifyOptions};
