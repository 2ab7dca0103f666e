//! Proper edge coloring of bipartite multigraphs by alternating-path
//! recoloring (constructive König line coloring).

use crate::error::{Error, Result};
use crate::tuples::Element;

use super::Portfolio;

pub const ROUNDS: usize = 3;

/// Teams of one group against the problems they bring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupBipartite {
    /// Team indices (into the portfolio list).
    pub teams: Vec<usize>,
    /// Distinct problems of the group, in first-occurrence order.
    pub problems: Vec<Element>,
    /// `(team position, problem position)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl GroupBipartite {
    pub fn from_group(portfolios: &[Portfolio], group: &[usize]) -> Self {
        let mut problems = Vec::new();
        let mut edges = Vec::new();
        for (pos, &team) in group.iter().enumerate() {
            for &p in portfolios[team].problems.elements() {
                let q = problems.iter().position(|&x| x == p).unwrap_or_else(|| {
                    problems.push(p);
                    problems.len() - 1
                });
                edges.push((pos, q));
            }
        }
        GroupBipartite {
            teams: group.to_vec(),
            problems,
            edges,
        }
    }

    pub fn problem_degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.problems.len()];
        for &(_, q) in &self.edges {
            degrees[q] += 1;
        }
        degrees
    }
}

/// Assigns each edge a round in `0..3` so that no two edges at a team or at a
/// problem share a round.
pub fn konig_edge_color(g: &GroupBipartite) -> Result<Vec<usize>> {
    if let Some((q, &degree)) = g.problem_degrees().iter().enumerate().find(|(_, &d)| d > ROUNDS) {
        return Err(Error::DegreeExceeded {
            problem: g.problems[q],
            degree,
        });
    }
    let left = g.teams.len();
    let mut team_degree = vec![0; left];
    for &(t, _) in &g.edges {
        team_degree[t] += 1;
    }
    if team_degree.iter().any(|&d| d > ROUNDS) {
        return Err(Error::PreconditionViolated("team with more than three problems"));
    }
    edge_color_bipartite(left, g.problems.len(), &g.edges, ROUNDS).ok_or(Error::PreconditionViolated(
        "maximum degree exceeds the number of rounds",
    ))
}

/// Colors the edges of a bipartite multigraph with `colors >= max degree`
/// colors. Vertices `0..left` and `0..right` on the two sides.
pub fn edge_color_bipartite(left: usize, right: usize, edges: &[(usize, usize)], colors: usize) -> Option<Vec<usize>> {
    // at[vertex][color] = edge using that color at the vertex; right-side
    // vertices are offset by `left`
    let mut at = vec![vec![None::<usize>; colors]; left + right];
    let mut color_of = vec![usize::MAX; edges.len()];
    let endpoints = |e: usize| (edges[e].0, left + edges[e].1);

    for (e, &(u, v)) in edges.iter().enumerate() {
        let v = left + v;
        let a = (0..colors).find(|&x| at[u][x].is_none())?;
        let b = (0..colors).find(|&x| at[v][x].is_none())?;
        if at[v][a].is_some() {
            // swap a and b along the alternating path leaving v by color a;
            // bipartiteness keeps it away from u
            let mut path = Vec::new();
            let (mut cur, mut want) = (v, a);
            while let Some(f) = at[cur][want] {
                path.push(f);
                let (x, y) = endpoints(f);
                cur = if x == cur { y } else { x };
                want = if want == a { b } else { a };
            }
            for &f in &path {
                let (x, y) = endpoints(f);
                at[x][color_of[f]] = None;
                at[y][color_of[f]] = None;
            }
            for &f in &path {
                let (x, y) = endpoints(f);
                let swapped = if color_of[f] == a { b } else { a };
                color_of[f] = swapped;
                at[x][swapped] = Some(f);
                at[y][swapped] = Some(f);
            }
        }
        debug_assert!(at[u][a].is_none() && at[v][a].is_none());
        color_of[e] = a;
        at[u][a] = Some(e);
        at[v][a] = Some(e);
    }
    Some(color_of)
}

/// Whether no two edges sharing an endpoint have the same color.
pub fn is_proper_edge_coloring(edges: &[(usize, usize)], colors: &[usize]) -> bool {
    use std::collections::HashSet;
    let mut seen = HashSet::new();
    edges
        .iter()
        .zip(colors)
        .all(|(&(u, v), &c)| seen.insert((0, u, c)) && seen.insert((1, v, c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::KTuple;

    fn portfolios(rows: &[[u32; 3]]) -> Vec<Portfolio> {
        rows.iter()
            .enumerate()
            .map(|(i, r)| Portfolio {
                team: format!("t{i}"),
                problems: KTuple::new(r.to_vec()).unwrap(),
            })
            .collect()
    }

    #[test]
    fn disjoint_group() {
        let p = portfolios(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let g = GroupBipartite::from_group(&p, &[0, 1, 2]);
        let rounds = konig_edge_color(&g).unwrap();
        assert!(is_proper_edge_coloring(&g.edges, &rounds));
    }

    #[test]
    fn all_problems_degree_three() {
        let p = portfolios(&[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
        let g = GroupBipartite::from_group(&p, &[0, 1, 2, 3]);
        assert!(g.problem_degrees().iter().all(|&d| d == 3));
        let rounds = konig_edge_color(&g).unwrap();
        assert!(is_proper_edge_coloring(&g.edges, &rounds));
        assert!(rounds.iter().all(|&r| r < ROUNDS));
    }

    #[test]
    fn degree_four_rejected() {
        let p = portfolios(&[[1, 2, 3], [1, 4, 5], [1, 6, 7], [1, 8, 9]]);
        let g = GroupBipartite::from_group(&p, &[0, 1, 2, 3]);
        assert_eq!(
            konig_edge_color(&g),
            Err(Error::DegreeExceeded { problem: 1, degree: 4 })
        );
    }

    #[test]
    fn needs_path_flip() {
        // the second edge finds color 0 free at team 1 but taken at problem 0
        let edges = [(0, 0), (1, 0), (1, 1), (0, 1)];
        let colors = edge_color_bipartite(2, 2, &edges, 2).unwrap();
        assert!(is_proper_edge_coloring(&edges, &colors));
    }
}
