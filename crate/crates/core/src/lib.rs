//! Exact and high-precision modular data for quantum-group fusion categories
//! `C(g,k)`, together with the classification of braided/ribbon zestings of
//! their pre-metric groups and the resulting zested modular data.
//!
//! The crate is organized around the pipeline:
//!
//! root systems -> Weyl groups -> labels/S/T/fusion -> invertibles and
//! universal grading -> pre-metric group -> cohomological zesting
//! classification -> zested modular data.
//!
//! Everything that feeds a root-of-unity exponent is kept exact (rational
//! multiples of pi·i); only large Weyl-orbit sums are evaluated in floating
//! point, from exact integer exponent histograms.

pub mod cohomology;
pub mod config;
pub mod error;
pub mod grading;
pub mod piexp;
pub mod rootsys;
pub mod serialize;
pub mod verlinde;
pub mod weyl;
pub mod zesting;

pub use config::JobConfig;
pub use error::{Error, Result};
pub use grading::{DegeneracyReport, GradingAssignment, InvertibleGroup, PreMetricGroup};
pub use piexp::PiExp;
pub use rootsys::{Family, RootSystem};
pub use verlinde::{FusionTensor, LabelSet, ModularData, VerifyReport};
pub use weyl::WeylGroup;
pub use zesting::{
    CyclicClassification, CyclicZestingDatum, KleinCase, KleinClassification, KleinZestingDatum,
    ZestedModularData,
};
