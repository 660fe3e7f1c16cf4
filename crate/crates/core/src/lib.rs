//! Exact topological Tutte polynomials of ribbon graphs and packaged ribbon
//! graphs.
//!
//! * [`rg`]: ribbon graphs as signed rotation systems and their topology.
//! * [`packaged`]: weighted vertex and boundary partitions.
//! * [`poly`]: sparse multivariate polynomials with big integer coefficients.
//! * [`invariants`]: the polynomial by state sum, deletion and contraction,
//!   and quasi-tree expansion, with its specializations.
//! * [`format`]: the `.rg` text format.

pub mod format;
pub mod invariants;
pub mod iso;
pub mod packaged;
pub mod poly;
pub mod rg;
