//! Explicit game graph in compressed adjacency form.
//!
//! Vertices are dense indices (game positions for annihilation graphs,
//! ordering indices for lexigraphs). Forward adjacency preserves the
//! builder's move-generation order, deduplicated; reverse adjacency is the
//! exact transpose.

/// Immutable digraph with forward and reverse adjacency.
pub struct GameGraph {
    n: usize,
    fwd_off: Vec<usize>,
    fwd: Vec<u32>,
    rev_off: Vec<usize>,
    rev: Vec<u32>,
}

impl std::fmt::Debug for GameGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GameGraph(n={}, edges={})", self.n, self.fwd.len())
    }
}

impl GameGraph {
    /// Build from a follower generator. `emit(u, out)` must push `u`'s
    /// followers into `out` in move order; duplicates are dropped, keeping
    /// the first occurrence.
    pub fn build(n: usize, mut emit: impl FnMut(u32, &mut Vec<u32>)) -> GameGraph {
        assert!(n <= u32::MAX as usize, "vertex count exceeds u32 indexing");
        let mut fwd_off = Vec::with_capacity(n + 1);
        let mut fwd: Vec<u32> = Vec::new();
        let mut scratch: Vec<u32> = Vec::new();
        fwd_off.push(0);
        for u in 0..n {
            scratch.clear();
            emit(u as u32, &mut scratch);
            let start = fwd.len();
            for &v in &scratch {
                debug_assert!((v as usize) < n, "follower out of range");
                if !fwd[start..].contains(&v) {
                    fwd.push(v);
                }
            }
            fwd_off.push(fwd.len());
        }

        // Transpose by counting sort: stable, so each reverse list is
        // ordered by source vertex.
        let mut indeg = vec![0usize; n];
        for &v in &fwd {
            indeg[v as usize] += 1;
        }
        let mut rev_off = vec![0usize; n + 1];
        for u in 0..n {
            rev_off[u + 1] = rev_off[u] + indeg[u];
        }
        let mut cursor = rev_off.clone();
        let mut rev = vec![0u32; fwd.len()];
        for u in 0..n {
            for &v in &fwd[fwd_off[u]..fwd_off[u + 1]] {
                rev[cursor[v as usize]] = u as u32;
                cursor[v as usize] += 1;
            }
        }

        GameGraph {
            n,
            fwd_off,
            fwd,
            rev_off,
            rev,
        }
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.fwd.len()
    }

    /// Followers of `u`, in move-generation order.
    #[must_use]
    pub fn followers(&self, u: usize) -> &[u32] {
        &self.fwd[self.fwd_off[u]..self.fwd_off[u + 1]]
    }

    /// Ancestors of `u` (vertices with an edge into `u`).
    #[must_use]
    pub fn ancestors(&self, u: usize) -> &[u32] {
        &self.rev[self.rev_off[u]..self.rev_off[u + 1]]
    }

    #[must_use]
    pub fn out_degree(&self, u: usize) -> usize {
        self.fwd_off[u + 1] - self.fwd_off[u]
    }

    #[must_use]
    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|u| self.out_degree(u)).max().unwrap_or(0)
    }

    /// True iff no directed cycle exists (self-loops count).
    #[must_use]
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n)
            .map(|u| self.rev_off[u + 1] - self.rev_off[u])
            .collect();
        let mut queue: Vec<usize> = (0..self.n).filter(|&u| indeg[u] == 0).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop() {
            removed += 1;
            for &v in self.followers(u) {
                indeg[v as usize] -= 1;
                if indeg[v as usize] == 0 {
                    queue.push(v as usize);
                }
            }
        }
        removed == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_dedups_preserving_order() {
        let adj: Vec<Vec<u32>> = vec![vec![2, 1, 2, 1], vec![0], vec![]];
        let g = GameGraph::build(3, |u, out| out.extend(&adj[u as usize]));
        assert_eq!(g.followers(0), &[2, 1]);
        assert_eq!(g.followers(1), &[0]);
        assert_eq!(g.followers(2), &[] as &[u32]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn reverse_is_transpose() {
        let adj: Vec<Vec<u32>> = vec![vec![1, 2], vec![2], vec![0]];
        let g = GameGraph::build(3, |u, out| out.extend(&adj[u as usize]));
        for u in 0..3 {
            for &v in g.followers(u) {
                assert!(g.ancestors(v as usize).contains(&(u as u32)));
            }
            for &w in g.ancestors(u) {
                assert!(g.followers(w as usize).contains(&(u as u32)));
            }
        }
        let fwd_edges: usize = (0..3).map(|u| g.followers(u).len()).sum();
        let rev_edges: usize = (0..3).map(|u| g.ancestors(u).len()).sum();
        assert_eq!(fwd_edges, rev_edges);
    }

    #[test]
    fn acyclicity() {
        let dag: Vec<Vec<u32>> = vec![vec![1], vec![2], vec![]];
        assert!(GameGraph::build(3, |u, out| out.extend(&dag[u as usize])).is_acyclic());
        let cyc: Vec<Vec<u32>> = vec![vec![1], vec![0]];
        assert!(!GameGraph::build(2, |u, out| out.extend(&cyc[u as usize])).is_acyclic());
        let looped: Vec<Vec<u32>> = vec![vec![0]];
        assert!(!GameGraph::build(1, |u, out| out.extend(&looped[u as usize])).is_acyclic());
    }
}
