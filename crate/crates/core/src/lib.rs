#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod constructors;
pub mod cyclo;
pub mod fusion;
pub mod groups;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod spectral;
