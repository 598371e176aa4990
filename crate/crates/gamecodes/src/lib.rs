//! Binary linear codes from combinatorial games.
//!
//! Tokens sit on the vertices of a digraph and a move slides one token
//! along an edge, annihilating pairs that collide; positions are occupancy
//! vectors over GF(2). The losing positions of that game form a code, the
//! generalized Sprague-Grundy function is a GF(2)-homomorphism whose
//! kernel is that code, and greedy lexicodes built from matrix orderings
//! arise as the special case of a single token on a distance-threshold
//! graph. This crate computes all three objects and cross-verifies the
//! structure connecting them.

#![forbid(unsafe_code)]

pub mod anngame;
pub mod cli;
pub mod codes;
pub mod gamegraph;
pub mod gf2;
pub mod groundgraph;
pub mod lexicode;
pub mod selftest;
pub mod solver;
