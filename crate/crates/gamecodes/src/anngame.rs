//! Annihilation graphs: the game graph over token configurations.
//!
//! A position is a GF(2) vector with one coordinate per tracked vertex; a
//! move takes a token from an occupied vertex u to a follower v, flipping
//! both occupancies, so the successor is `pos ^ e_u ^ e_v`. Two tokens
//! meeting annihilate; that is the mod-2 flip.

use crate::gamegraph::GameGraph;
use crate::gf2::{BitVec, MAX_WIDTH};
use crate::groundgraph::GroundGraph;
use thiserror::Error;

/// Default bound on the number of coordinates an explicit build accepts.
pub const DEFAULT_POSITION_CAP: u32 = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnnError {
    #[error("explicit annihilation graph needs {required} coordinates, cap is {cap}")]
    ScaleCap { required: u32, cap: u32 },
    #[error("groundgraph has {coords} coordinate vertices, above the supported {max}", max = MAX_WIDTH)]
    TooWide { coords: usize },
}

/// Annihilation graph of a groundgraph, held implicitly: positions are all
/// 2^c words over the coordinate vertices, and followers are generated from
/// per-coordinate XOR masks.
///
/// With sink projection on (the default), sink vertices are not tracked:
/// a token on a sink can never move nor influence a move, so a move into a
/// sink simply clears the mover's bit. This reproduces the compact
/// encodings where the leaf is not a coordinate.
pub struct AnnGraph {
    ground: GroundGraph,
    project_sinks: bool,
    coord_vertices: Vec<usize>,
    coord_of_vertex: Vec<Option<u32>>,
    width: u32,
    // moves[i]: XOR masks of the moves available to a token on coordinate
    // i, in move order (ground followers ascending). A move onto another
    // coordinate flips two bits; a move onto a projected sink flips one.
    moves: Vec<Vec<u64>>,
}

impl AnnGraph {
    pub fn new(ground: GroundGraph, project_sinks: bool) -> Result<AnnGraph, AnnError> {
        let coord_vertices: Vec<usize> = if project_sinks {
            (0..ground.n())
                .filter(|&u| !ground.out_neighbors(u).is_empty())
                .collect()
        } else {
            (0..ground.n()).collect()
        };
        if coord_vertices.len() > MAX_WIDTH as usize {
            return Err(AnnError::TooWide {
                coords: coord_vertices.len(),
            });
        }
        let mut coord_of_vertex = vec![None; ground.n()];
        for (i, &u) in coord_vertices.iter().enumerate() {
            coord_of_vertex[u] = Some(i as u32);
        }
        let width = coord_vertices.len() as u32;
        let mut moves = Vec::with_capacity(coord_vertices.len());
        for (i, &u) in coord_vertices.iter().enumerate() {
            let mut masks = Vec::new();
            for &v in ground.out_neighbors(u) {
                match coord_of_vertex[v] {
                    Some(j) => masks.push((1u64 << i) ^ (1u64 << j)),
                    // v is a projected sink: only the mover's bit flips.
                    None => masks.push(1u64 << i),
                }
            }
            moves.push(masks);
        }
        Ok(AnnGraph {
            ground,
            project_sinks,
            coord_vertices,
            coord_of_vertex,
            width,
            moves,
        })
    }

    #[must_use]
    pub fn ground(&self) -> &GroundGraph {
        &self.ground
    }

    #[must_use]
    pub fn project_sinks(&self) -> bool {
        self.project_sinks
    }

    /// Number of coordinates c; the position space has 2^c elements.
    #[must_use]
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Ground vertices that became coordinates, ascending; coordinate i is
    /// `coord_vertices()[i]`.
    #[must_use]
    pub fn coord_vertices(&self) -> &[usize] {
        &self.coord_vertices
    }

    /// Coordinate index of a ground vertex, `None` for projected sinks.
    #[must_use]
    pub fn coord_index(&self, vertex: usize) -> Option<u32> {
        self.coord_of_vertex[vertex]
    }

    /// Position holding one token per listed ground vertex, reduced mod 2;
    /// tokens on projected sinks are dropped.
    #[must_use]
    pub fn position_from_vertices(&self, vertices: &[usize]) -> BitVec {
        let mut bits = 0u64;
        for &u in vertices {
            if let Some(i) = self.coord_of_vertex[u] {
                bits ^= 1u64 << i;
            }
        }
        BitVec::new(self.width.max(1), bits)
    }

    /// Append the follower positions of `pos` to `out` in move order
    /// (occupied coordinates ascending, ground followers ascending),
    /// without deduplication.
    pub fn raw_followers(&self, pos: u64, out: &mut Vec<u64>) {
        let mut rest = pos;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for &mask in &self.moves[i] {
                out.push(pos ^ mask);
            }
        }
    }

    /// Follower set of a position, deduplicated in move order.
    #[must_use]
    pub fn followers(&self, pos: BitVec) -> Vec<BitVec> {
        assert_eq!(pos.width(), self.width, "position width mismatch");
        let mut raw = Vec::new();
        self.raw_followers(pos.bits(), &mut raw);
        let mut out: Vec<u64> = Vec::with_capacity(raw.len());
        for v in raw {
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out.into_iter().map(|b| BitVec::new(self.width, b)).collect()
    }

    /// Materialize the explicit graph over all 2^c positions. Vertex index
    /// equals the position's integer value.
    pub fn materialize(&self, cap: u32) -> Result<GameGraph, AnnError> {
        let cap = cap.min(32);
        if self.width > cap {
            return Err(AnnError::ScaleCap {
                required: self.width,
                cap,
            });
        }
        let n = 1usize << self.width;
        let mut raw = Vec::new();
        Ok(GameGraph::build(n, |u, out| {
            raw.clear();
            self.raw_followers(u as u64, &mut raw);
            out.extend(raw.iter().map(|&v| v as u32));
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groundgraph::{example2_graph, gamma_t, nim_heap, star_into_leaf};

    #[test]
    fn star_followers_and_counts() {
        let ann = AnnGraph::new(star_into_leaf(4), true).unwrap();
        assert_eq!(ann.width(), 4);
        let f = ann.followers(BitVec::new(4, 0b0011));
        let decs: Vec<u64> = f.iter().map(|p| p.bits()).collect();
        assert_eq!(decs, vec![0b0010, 0b0001], "each token drops into the leaf");

        assert!(ann.followers(BitVec::zero(4)).is_empty());

        let g = ann.materialize(DEFAULT_POSITION_CAP).unwrap();
        assert_eq!(g.n(), 16);
        let total: usize = (0..16).map(|p| g.followers(p).len()).sum();
        assert_eq!(total, 32, "one move per occupied vertex");
    }

    #[test]
    fn nim_heap_1_graph() {
        let ann = AnnGraph::new(nim_heap(1), true).unwrap();
        let g = ann.materialize(DEFAULT_POSITION_CAP).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.followers(1), &[0]);
    }

    #[test]
    fn gamma_t2_full_position() {
        let ann = AnnGraph::new(gamma_t(2), true).unwrap();
        assert_eq!(ann.width(), 4, "no sinks, all four vertices tracked");
        // x_1, x_2 occupied: each x moves onto its y.
        let pos = ann.position_from_vertices(&[0, 1]);
        let f = ann.followers(pos);
        let decs: Vec<u64> = f.iter().map(|p| p.bits()).collect();
        assert_eq!(decs, vec![0b0110, 0b1001]);

        let full = ann.followers(BitVec::new(4, 0b1111));
        assert_eq!(full.len(), 5);
    }

    #[test]
    fn annihilation_collapses_duplicate_moves() {
        // Both tokens on the two-cycle: either move annihilates both, one
        // distinct follower.
        let ann = AnnGraph::new(example2_graph(), true).unwrap();
        let pos = ann.position_from_vertices(&[1, 2]);
        assert_eq!(pos.bits(), 0b0011);
        let f = ann.followers(pos);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].bits(), 0);
    }

    #[test]
    fn sink_free_moves_preserve_weight_parity() {
        let ann = AnnGraph::new(gamma_t(3), true).unwrap();
        let g = ann.materialize(DEFAULT_POSITION_CAP).unwrap();
        for u in 0..g.n() {
            for &v in g.followers(u) {
                assert_eq!(
                    (u as u64).count_ones() % 2,
                    v.count_ones() % 2,
                    "a sink-free move flips exactly two coordinates"
                );
            }
        }
    }

    #[test]
    fn projection_off_tracks_all_vertices() {
        let ann = AnnGraph::new(star_into_leaf(4), false).unwrap();
        assert_eq!(ann.width(), 5);
        // Token on z_0 (vertex 1, coordinate 1): moving into the leaf
        // (coordinate 0) flips both coordinates.
        let f = ann.followers(BitVec::new(5, 0b00010));
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].bits(), 0b00001);
    }

    #[test]
    fn scale_cap_reports_required_width() {
        let ann = AnnGraph::new(gamma_t(4), true).unwrap();
        assert_eq!(
            ann.materialize(10).unwrap_err(),
            AnnError::ScaleCap {
                required: 16,
                cap: 10
            }
        );
    }
}
