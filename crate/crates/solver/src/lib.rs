//! Solver library for the two-dimensional Fokker-Planck equation of
//! tempered fractional Brownian motion (tfBm).
//!
//! The diffusion coefficient `D(t) = Γ(H+1/2)/(√π (2λ)^H) · λ t^H K_{H-1}(λt)`
//! is singular at `t = 0` when `H < 0.5` and non-monotone when `H > 0.5`.
//! Both regimes are handled by implicit schemes on nonuniform time grids:
//!
//! * `H < 0.5`: a single graded grid `t_k = (τk)^{1/(2H)}` obtained by
//!   stepping in the transformed variable `t^{2H}`, which removes the
//!   singularity entirely — the coefficient is only ever sampled at
//!   `t_{k+1} > 0`.
//! * `H > 0.5`: a grid spliced at the coefficient's maximum `t_max`,
//!   graded as `t^{2H}` before it and as `t^H` after it.
//!
//! Each regime is a [`scheme::Scheme`] strategy; [`scheme::registry`]
//! selects one by name or from the model parameters. [`scheme::run`]
//! advances a [`mesh::Field`] through a [`grid::TimeGrid`], solving one
//! symmetric positive-definite pentadiagonal system per step by
//! matrix-free conjugate gradients. [`analysis`] turns solution snapshots
//! into probability distributions, moments, and mean squared displacement;
//! [`exact`] provides the separable-Gaussian reference solution used for
//! convergence and plateau verification.

pub mod analysis;
pub mod convergence;
pub mod error;
pub mod exact;
pub mod grid;
pub mod io;
pub mod mesh;
pub mod params;
mod quad;
pub mod scheme;
pub mod special;
mod util;

pub use error::{Error, Result};
pub use grid::{GridLaw, TimeGrid};
pub use mesh::{Field, SpatialMesh};
pub use params::ModelParams;
