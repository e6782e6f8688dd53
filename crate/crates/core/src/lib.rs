//! Exact computation over intersecting families.
//!
//! Three settings share one engine: `k`-uniform hypergraphs on `[n]` where
//! edges must share at least `t` vertices, permutation families in `S_n`
//! agreeing on at least `t` indices, and `k`-dimensional subspaces of `F_q^n`
//! meeting in at least a line.  Everything is computed exactly at desk scale:
//! closures, maximal families and their generating sets, independence
//! polynomials of the conflict graph, trivial-family counts, Kneser-graph
//! spectra and containers, closed-form bound reports, and seeded Monte Carlo
//! experiments on sparse random ground sets.

pub mod bitset;
pub mod bounds;
pub mod budget;
pub mod combinatorics;
pub mod enumeration;
pub mod error;
pub mod hypergraph;
pub mod intersection;
pub mod permutation;
pub mod random;
pub mod setting;
pub mod spectral;
pub mod subspace;

pub use bitset::BitSet;
pub use budget::Budget;
pub use combinatorics::BigCount;
pub use error::{Error, Result};
pub use setting::{Family, Setting};
