//! Symbolic and numerical toolkit for twisted-cycle constructions on products
//! of elliptic curves and P1: exact divisor/tame-symbol calculus, completion
//! of precycles to cycles with vanishing divisor, and numerical verification
//! of the regulator integrals behind the surjectivity determinant.

pub mod config;
pub mod error;
pub mod grat;

pub mod commands;
pub mod corpus;
pub mod cycles;
pub mod elliptic;
pub mod quad;
pub mod report;
pub mod symbolic;

pub use config::Config;
pub use error::{Result, TregError};
pub use grat::GRat;
