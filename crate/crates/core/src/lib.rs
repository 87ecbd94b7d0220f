//! Exact-arithmetic verification of the Kummer-type Calabi-Yau threefolds
//! built from 3-tori with `Z/3` and `Z/7` actions.

pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod klein;
pub mod lattice;
pub mod matrix;
pub mod modularity;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod ring;
pub mod suites;
pub mod torus;
