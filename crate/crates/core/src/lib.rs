//! Kirkman triple systems: construction, verification and weak colouring.

pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod design;
pub mod format;
pub mod solver;
