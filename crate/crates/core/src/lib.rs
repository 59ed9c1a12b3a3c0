//! Exact computation of degrees of Kalman varieties — varieties of
//! matrices or tensors admitting an eigenvector / singular tuple whose
//! first component lies in a fixed linear subspace — together with the
//! exact linear algebra behind the matrix-level decision procedures.
//!
//! Degrees are computed by two independent routes (closed-form sums and
//! coefficient extraction in truncated Chow rings) whose agreement is
//! checked throughout. See the `examples/` directory for runnable demos
//! of each capability, and the `kalmanv` binary for the CLI.

pub mod cli;
pub mod degrees;
pub mod exactlin;
pub mod io;
pub mod kalman;
pub mod pairs;
pub mod ring;
