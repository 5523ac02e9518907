//! Two-stage spatial modeling of extreme-value records from mixed
//! observation and simulation networks.
//!
//! Stage 1 ([`marginal`]) fits a generalized extreme value (GEV) distribution
//! independently at every site by maximum likelihood, optionally with a linear
//! trend in the location parameter, and provides trend and goodness-of-fit
//! diagnostics. The per-site estimate covariance is obtained by a year-block
//! bootstrap and regularized by compactly supported tapering ([`bootstrap`]).
//!
//! Stage 2 ([`lmc`]) treats the stacked Stage-1 estimates as noisy partial
//! observations of a six-dimensional latent Gaussian field (a linear model of
//! coregionalization) and fits means, loadings, and correlation ranges by
//! multi-start quasi-Newton maximum likelihood with analytic gradients.
//!
//! Fitted models are kriged onto arbitrary locations and mapped to return
//! levels with Monte Carlo and delta-method standard errors ([`krige`]).
//! [`validate`] provides leave-one-out and geographic block cross-validation,
//! calibration metrics, and simulation studies; [`demo`] generates a bundled
//! synthetic coastline example exercising the full pipeline.

pub mod bootstrap;
pub mod data;
pub mod demo;
pub mod error;
pub mod krige;
pub mod lmc;
pub mod marginal;
pub mod optim;
pub mod seed;
pub mod stats;
pub mod validate;

pub use error::{Error, Result};
