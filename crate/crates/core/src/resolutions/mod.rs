//! Free-module rank bookkeeping for Koszul complexes, star products and
//! mapping cones, and the brute-force Betti oracle for monomial ideals.

mod oracle;
mod ranks;

pub use oracle::{
    betti_monomial, koszul_regularity_check, lcm_lattice, MultidegreeComplex, OracleLimits,
};
pub use ranks::{cone_ranks, koszul_ranks, star_ranks, RankSequence};
