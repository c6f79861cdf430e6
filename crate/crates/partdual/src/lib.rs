//! Exact structure-constant computations for partial duals of finite-dimensional Hopf algebras.

#![allow(clippy::needless_range_loop)]

pub mod coideal;
pub mod document;
pub mod examples;
pub mod hopf;
pub mod linalg;
pub mod pams;
pub mod partial_dual;
pub mod report;
