//! Exact arithmetic in `Z[mu]` and the quadratic orders `Z[omega]`, `Z[eta]`.

pub mod complex_box;
pub mod cyc;
pub mod quad;

pub use complex_box::ComplexBox;
pub use cyc::{embed_eta, galois, Cyc, CycInt, CycRat};
pub use quad::{
    associates, factor_rational_prime, quad_norm_conj, DiscTag, Eta, EtaInt, Omega, OmegaInt, QuadInt, QuadOrder,
    SplitResult,
};
