//! Tuple multisets as hypergraphs.
//!
//! A set `T` of `n` k-tuples over `[m]` corresponds to the multi-hypergraph
//! `H_T` on the `n` tuples with one hyperedge per element `i`, containing the
//! tuples that avoid `i`. Every vertex then has degree `m - k`, and the map is a
//! bijection onto such hypergraphs. Nice colorings of `T` are exactly the
//! polychromatic colorings of `H_T`.

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::general::solve_general;
use crate::triple2::color_2_triples;
use crate::tuples::{Element, TupleSet};

/// Vertices are `0..n_vertices`; edge `i` corresponds to element `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHypergraph {
    n_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl MultiHypergraph {
    /// Sorts each edge; rejects out-of-range or repeated vertices.
    pub fn new(n_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::InvalidEdge {
                    edge: i,
                    reason: format!("vertex {} out of range", v + 1),
                });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge {
                    edge: i,
                    reason: format!("vertex {} repeated", w[0] + 1),
                });
            }
        }
        Ok(MultiHypergraph { n_vertices, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.n_vertices];
        for &v in self.edges.iter().flatten() {
            degrees[v] += 1;
        }
        degrees
    }

    /// Checks that every vertex has degree `m - k`.
    pub fn check_degrees(&self, k: usize) -> Result<()> {
        let expected = self.edges.len().checked_sub(k);
        for (vertex, degree) in self.degrees().into_iter().enumerate() {
            if Some(degree) != expected {
                return Err(Error::DegreeMismatch {
                    vertex,
                    degree,
                    expected: expected.unwrap_or(0),
                });
            }
        }
        Ok(())
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    /// Whether no three vertices are pairwise joined by hyperedges of size two.
    pub fn is_triangle_free(&self) -> bool {
        let mut adjacent = vec![Vec::new(); self.n_vertices];
        for edge in self.edges.iter().filter(|e| e.len() == 2) {
            adjacent[edge[0]].push(edge[1]);
            adjacent[edge[1]].push(edge[0]);
        }
        for list in &mut adjacent {
            list.sort_unstable();
            list.dedup();
        }
        for edge in self.edges.iter().filter(|e| e.len() == 2) {
            let (a, b) = (&adjacent[edge[0]], &adjacent[edge[1]]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
        }
        true
    }
}

/// A total vertex coloring with colors `0..c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub c: u32,
    pub colors: Vec<Color>,
}

impl VertexColoring {
    fn from_tuple_coloring(col: &Coloring) -> Self {
        VertexColoring {
            c: col.colors(),
            colors: col.assignment().iter().map(|a| a.expect("total coloring")).collect(),
        }
    }

    /// Every edge contains every color.
    pub fn is_polychromatic(&self, h: &MultiHypergraph) -> bool {
        let mut seen = vec![false; self.c as usize];
        h.edges().iter().all(|edge| {
            seen.fill(false);
            for &v in edge {
                seen[self.colors[v] as usize] = true;
            }
            seen.iter().all(|&s| s)
        })
    }

    /// No edge is monochromatic (empty edges included).
    pub fn is_proper(&self, h: &MultiHypergraph) -> bool {
        h.edges()
            .iter()
            .all(|edge| edge.iter().any(|&v| self.colors[v] != self.colors[edge[0]]))
    }
}

pub fn to_hypergraph(ts: &TupleSet) -> MultiHypergraph {
    let mut edges = vec![Vec::new(); ts.m()];
    let mut present = vec![false; ts.m() + 1];
    for (v, t) in ts.iter().enumerate() {
        for &e in t {
            present[e as usize] = true;
        }
        for (i, edge) in edges.iter_mut().enumerate() {
            if !present[i + 1] {
                edge.push(v);
            }
        }
        for &e in t {
            present[e as usize] = false;
        }
    }
    MultiHypergraph {
        n_vertices: ts.len(),
        edges,
    }
}

/// Inverse of [`to_hypergraph`]: vertex `v` becomes the tuple of the elements
/// whose edges miss `v`.
pub fn from_hypergraph(h: &MultiHypergraph, k: usize) -> Result<TupleSet> {
    if k == 0 {
        return Err(Error::ZeroTupleSize);
    }
    h.check_degrees(k)?;
    let mut member = vec![false; h.n_vertices()];
    let mut rows: Vec<Vec<Element>> = vec![Vec::with_capacity(k); h.n_vertices()];
    for (i, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            member[v] = true;
        }
        for (v, row) in rows.iter_mut().enumerate() {
            if !member[v] {
                row.push(i as Element + 1);
            }
        }
        for &v in edge {
            member[v] = false;
        }
    }
    let elements = rows.into_iter().flatten().collect();
    Ok(TupleSet::from_flat(k, h.n_edges(), elements))
}

/// A proper 2-coloring of a hypergraph whose vertices all have degree `m - 3`.
pub fn proper_2colorable(h: &MultiHypergraph) -> Result<Option<VertexColoring>> {
    let ts = from_hypergraph(h, 3)?;
    Ok(color_2_triples(&ts)?.map(|col| VertexColoring::from_tuple_coloring(&col)))
}

/// Edge sizes at least two and no triangle of size-two edges.
pub fn satisfies_2coloring_characterization(h: &MultiHypergraph) -> bool {
    h.min_edge_size().is_none_or(|s| s >= 2) && h.is_triangle_free()
}

/// A polychromatic c-coloring of a hypergraph whose vertices all have degree
/// `m - k`.
pub fn polychromatic_c_colorable(h: &MultiHypergraph, c: u32, k: usize) -> Result<Option<VertexColoring>> {
    let ts = from_hypergraph(h, k)?;
    Ok(solve_general(&ts, c)?.map(|col| VertexColoring::from_tuple_coloring(&col)))
}
