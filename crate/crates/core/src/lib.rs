//! Exact desk-scale solvers for the chain of 3SUM-hardness reductions
//! between interval containment, polygon containment (under translation,
//! rotation and rigid motion) and minimum Hausdorff distance between
//! segment sets.
//!
//! The chain is
//! `3SUM <-> 3SUM' -> EqDist -> SegContPnt -> {PolyCont, ConvPolyContRot,
//! ConvPolyContRigidMot, SegHausDist}`; every problem has a solver returning
//! a checkable witness and, where one is cheap enough, an independent
//! brute-force oracle.

pub mod error;
pub mod geom;
pub mod hausdorff;
pub mod linear;
pub mod oracle;
pub mod rational;
pub mod rotation;
pub mod translation;
pub mod workbench;

pub use error::{Error, Result};
pub use rational::Rational;
