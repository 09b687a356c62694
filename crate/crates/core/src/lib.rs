//! Kostant's partition function, its q-analog, Weyl alternation sets and
//! (q-)weight multiplicities for every simple Lie algebra.
//!
//! All weights live in the simple-root basis with exact rational
//! coefficients. The main entry points are:
//!
//! * [`RootSystem::new`] for Cartan data, positive roots, `ρ` and the highest
//!   root;
//! * [`partition_tree_count`] and [`partition_genfunc`] for `℘_q(ξ)`;
//! * [`alternation_set`] for the Weyl group elements contributing to
//!   Kostant's alternating sum;
//! * [`compute_mq`] and [`verify_exponents`] for `m_q(λ, μ)` and the
//!   exponent identity `m_q(α̃, 0) = Σ q^{e_i}`.
//!
//! ```
//! use kostant::{compute_adjoint_zero, Method, RootSystem};
//!
//! let g2 = RootSystem::from_name("G2").unwrap();
//! let result = compute_adjoint_zero(&g2, Method::Genfunc).unwrap();
//! assert_eq!(result.mq.to_string(), "q + q^5");
//! assert_eq!(result.records.len(), 3);
//! ```

pub mod cli;
pub mod error;
pub mod multiplicity;
pub mod partition;
pub mod qpoly;
pub mod render;
pub mod rootsys;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use multiplicity::{
    compute_adjoint_zero, compute_m, compute_mq, compute_mq_over_group, verify_exponents,
    ExponentReport, MultiplicityResult,
};
pub use partition::{
    kostant_partition, partition_genfunc, partition_q, partition_tree_count, partition_tree_list,
    GenFuncTable, Method, PartitionMultiset,
};
pub use qpoly::{QPolynomial, SignedQPolynomial};
pub use rootsys::{cartan_matrix, Family, LieType, RootSystem};
pub use weight::{Weight, WeightClass};
pub use weyl::{
    alternation_set, enumerate_group, exhaustive_alternation_set, group_order, simple_reflection,
    AlternationRecord, WeylElement,
};
