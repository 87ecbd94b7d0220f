//! The Klein quartic, its automorphism group and its cyclic-cover model.

pub mod group;
pub mod function_field;
pub mod curve;
pub mod points;
