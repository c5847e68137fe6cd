//! Generalized binomial edge ideals `J_{K_m,G}`: cut-set prime decompositions,
//! P4-free join factorizations, regularity formulas and an exact
//! Gröbner/Koszul oracle that checks them.

pub mod cograph;
pub mod graph;
pub mod poly;
pub mod primedec;
pub mod homology;
pub mod reg;
pub mod verify;
