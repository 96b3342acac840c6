//! Simple undirected graphs with an optional combinatorial embedding
//! (clockwise rotation system), plus the BFS layer structure used by
//! every rerouting algorithm in this crate.

use crate::{Error, Result};

/// Where a vertex came from, for mapping witnesses of transformed graphs
/// back to the input graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    /// Present in the input graph.
    Original,
    /// Inserted by the standard-form transformation.
    New,
    /// Stands in for a deleted vertex of the input graph.
    ReplacementOf(usize),
}

/// A simple undirected graph with sorted adjacency lists and an optional
/// per-vertex clockwise cyclic neighbor order.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    adj: Vec<Vec<usize>>,
    rotation: Option<Vec<Vec<usize>>>,
    origin: Vec<VertexOrigin>,
}

impl PlaneGraph {
    pub fn new(n: usize) -> Self {
        PlaneGraph {
            adj: vec![Vec::new(); n],
            rotation: None,
            origin: vec![VertexOrigin::Original; n],
        }
    }

    /// Build from an edge list. Duplicate edges and loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = PlaneGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidInput(format!("duplicate edge {u}-{v}")));
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn origin(&self, v: usize) -> VertexOrigin {
        self.origin[v]
    }

    pub fn set_origin(&mut self, v: usize, o: VertexOrigin) {
        self.origin[v] = o;
    }

    pub fn has_rotation(&self) -> bool {
        self.rotation.is_some()
    }

    /// Clockwise cyclic neighbor order of `v`, if an embedding is present.
    pub fn rotation(&self, v: usize) -> Option<&[usize]> {
        self.rotation.as_ref().map(|r| r[v].as_slice())
    }

    pub fn rotation_or_err(&self, v: usize) -> Result<&[usize]> {
        self.rotation(v).ok_or(Error::NoEmbedding)
    }

    /// Install a rotation system. Each list must be a permutation of the
    /// vertex's adjacency list.
    pub fn set_rotation(&mut self, rotation: Vec<Vec<usize>>) -> Result<()> {
        if rotation.len() != self.adj.len() {
            return Err(Error::InvalidInput(
                "rotation table size does not match vertex count".into(),
            ));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != self.adj[v] {
                return Err(Error::InvalidInput(format!(
                    "rotation at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        self.rotation = Some(rotation);
        Ok(())
    }

    pub fn clear_rotation(&mut self) {
        self.rotation = None;
    }

    /// Induced subgraph on `keep` (ids are remapped to 0..keep.len() in the
    /// given order). Rotations are filtered preserving cyclic order; origins
    /// carry over. Returns the subgraph and the map new id -> old id.
    pub fn induced(&self, keep: &[usize]) -> (PlaneGraph, Vec<usize>) {
        let mut old_to_new = vec![usize::MAX; self.adj.len()];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut g = PlaneGraph::new(keep.len());
        for (new, &old) in keep.iter().enumerate() {
            g.origin[new] = self.origin[old];
            g.adj[new] = self.adj[old]
                .iter()
                .filter(|&&w| old_to_new[w] != usize::MAX)
                .map(|&w| old_to_new[w])
                .collect();
            g.adj[new].sort_unstable();
        }
        if let Some(rot) = &self.rotation {
            let new_rot = keep
                .iter()
                .map(|&old| {
                    rot[old]
                        .iter()
                        .filter(|&&w| old_to_new[w] != usize::MAX)
                        .map(|&w| old_to_new[w])
                        .collect()
                })
                .collect();
            g.rotation = Some(new_rot);
        }
        (g, keep.to_vec())
    }

    /// Delete a single vertex in place, keeping ids of the remaining
    /// vertices by compacting. Returns the map new id -> old id.
    pub fn without_vertex(&self, z: usize) -> (PlaneGraph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.adj.len()).filter(|&v| v != z).collect();
        self.induced(&keep)
    }

    /// Connectivity of the whole graph (isolated-vertex-free inputs).
    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// BFS distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = PlaneGraph::new(3);
        assert!(g.add_edge(0, 0).is_err());
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
    }

    #[test]
    fn rotation_must_permute_adjacency() {
        let mut g = PlaneGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(g
            .set_rotation(vec![vec![1], vec![0, 0], vec![1]])
            .is_err());
        g.set_rotation(vec![vec![1], vec![2, 0], vec![1]]).unwrap();
        assert_eq!(g.rotation(1), Some(&[2, 0][..]));
    }

    #[test]
    fn induced_preserves_cyclic_rotation_order() {
        let mut g =
            PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)]).unwrap();
        g.set_rotation(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap();
        let (sub, map) = g.without_vertex(3);
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(sub.rotation(0), Some(&[1, 2][..]));
        assert_eq!(sub.rotation(1), Some(&[0, 2][..]));
    }

    #[test]
    fn bfs_distances_on_path() {
        let g = PlaneGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 1, 2, 3]);
    }
}
