//! Simple undirected graphs, standard families and the lexicographic product.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and free of duplicates; there are no self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.degree(v) == 0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.isolated_vertex().is_some()
    }

    /// Neighborhood of `v` as a 64-bit mask. Requires `n <= 64`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n() <= 64);
        self.adj[v].iter().fold(0, |m, &w| m | (1u64 << w))
    }

    /// |N(v) ∩ set|.
    pub fn count_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].iter().filter(|&&w| set.contains(w)).count()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect()).collect();
        Graph { adj }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// True iff a search from vertex 0 reaches every vertex. The graph with
    /// no vertices is reported as not connected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// A proper 2-coloring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color: Vec<Option<u8>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(0);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let c = color[u].unwrap_or_default();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(1 - c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap_or_default).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Subgraph induced by `keep`, relabeled in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let ids: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| pos[w] != usize::MAX).map(|&w| pos[w]).collect())
            .collect();
        Graph { adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Named graph families with canonical vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
}

impl Family {
    pub fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Empty => "empty",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "empty" => Ok(Family::Empty),
            other => Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Path `0-1-..-(n-1)`, cycle closing `{n-1, 0}`, star centered at 0.
pub fn build_standard(family: Family, n: usize) -> Result<Graph> {
    if n < family.min_order() || n == 0 {
        return Err(Error::InvalidFamily(format!(
            "{family} needs at least {} vertices, got {n}",
            family.min_order().max(1)
        )));
    }
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
        Family::Cycle => (1..n).map(|v| (v - 1, v)).chain([(n - 1, 0)]).collect(),
        Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        Family::Star => (1..n).map(|v| (0, v)).collect(),
        Family::Empty => Vec::new(),
    };
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Graph {
    build_standard(Family::Path, n).expect("path order")
}

pub fn cycle(n: usize) -> Graph {
    build_standard(Family::Cycle, n).expect("cycle order")
}

pub fn complete(n: usize) -> Graph {
    build_standard(Family::Complete, n).expect("complete order")
}

/// Bijection between product ids and pairs `(g, h)` with `id = g * nh + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductIndex {
    pub ng: usize,
    pub nh: usize,
}

impl ProductIndex {
    pub fn new(ng: usize, nh: usize) -> Self {
        Self { ng, nh }
    }

    #[inline]
    pub fn id(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.ng && h < self.nh);
        g * self.nh + h
    }

    #[inline]
    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id / self.nh, id % self.nh)
    }

    pub fn order(&self) -> usize {
        self.ng * self.nh
    }

    /// H-layer above `g`: `{ id(g, h) : h }`.
    pub fn h_layer(&self, g: usize) -> impl Iterator<Item = usize> {
        let nh = self.nh;
        (0..nh).map(move |h| g * nh + h)
    }

    /// G-layer at `h`: `{ id(g, h) : g }`.
    pub fn g_layer(&self, h: usize) -> impl Iterator<Item = usize> {
        let nh = self.nh;
        (0..self.ng).map(move |g| g * nh + h)
    }

    /// `|set ∩ H^g|` for every `g`.
    pub fn layer_profile(&self, set: &VertexSet) -> Vec<usize> {
        let mut profile = vec![0; self.ng];
        for id in set.iter() {
            profile[id / self.nh] += 1;
        }
        profile
    }

    /// `{ g : (g, h) ∈ set for some h }`.
    pub fn project_g(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|id| id / self.nh).collect()
    }

    /// `{ id(g, h) : g ∈ gs, h ∈ hs }`.
    pub fn cross(&self, gs: &VertexSet, hs: &VertexSet) -> VertexSet {
        gs.iter().flat_map(|g| hs.iter().map(move |h| self.id(g, h))).collect()
    }
}

/// Lexicographic product: `(g,h) ~ (g',h')` iff `g ~ g'` in G, or `g = g'`
/// and `h ~ h'` in H.
pub fn lex_product(g: &Graph, h: &Graph) -> (Graph, ProductIndex) {
    let idx = ProductIndex::new(g.n(), h.n());
    let mut adj = vec![Vec::new(); idx.order()];
    for gv in 0..g.n() {
        for hv in 0..h.n() {
            let list = &mut adj[idx.id(gv, hv)];
            // Neighbor lists come out sorted: layers of G-neighbors in
            // ascending order, with the own-layer block slotted in between.
            let mut own_done = false;
            for &gw in g.neighbors(gv) {
                if !own_done && gw > gv {
                    list.extend(h.neighbors(hv).iter().map(|&hw| idx.id(gv, hw)));
                    own_done = true;
                }
                list.extend(idx.h_layer(gw));
            }
            if !own_done {
                list.extend(h.neighbors(hv).iter().map(|&hw| idx.id(gv, hw)));
            }
        }
    }
    (Graph { adj }, idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_families() {
        let k1 = build_standard(Family::Path, 1).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));

        let c4 = build_standard(Family::Cycle, 4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let k3 = build_standard(Family::Complete, 3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!((k3.min_degree(), k3.max_degree()), (2, 2));

        let star = build_standard(Family::Star, 5).unwrap();
        assert_eq!(star.degree(0), 4);
        assert_eq!(build_standard(Family::Empty, 3).unwrap().edge_count(), 0);
    }

    #[test]
    fn rejects_short_cycles_and_zero_order() {
        assert!(matches!(build_standard(Family::Cycle, 2), Err(Error::InvalidFamily(_))));
        assert!(build_standard(Family::Path, 0).is_err());
    }

    #[test]
    fn from_edges_collapses_duplicates_and_rejects_loops() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
    }

    #[test]
    fn complement_examples() {
        let k3c = complete(3).complement();
        assert_eq!((k3c.n(), k3c.edge_count()), (3, 0));

        let p4c = path(4).complement();
        assert_eq!(p4c.edge_count(), 3);
        assert_eq!(p4c.degree_sequence(), path(4).degree_sequence());
        assert!(p4c.is_connected());
    }

    #[test]
    fn distances() {
        let c6 = cycle(6);
        assert_eq!(c6.distance(0, 3).unwrap(), Some(3));
        assert_eq!(c6.distance(2, 2).unwrap(), Some(0));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3).unwrap(), None);
        assert!(c6.distance(0, 6).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(path(1).is_connected());
    }

    #[test]
    fn product_with_k1_is_identity() {
        let h = cycle(5);
        let (p, idx) = lex_product(&path(1), &h);
        assert_eq!(idx.order(), 5);
        assert_eq!(p, h);
    }

    #[test]
    fn p2_times_p2_is_k4() {
        let (p, _) = lex_product(&path(2), &path(2));
        assert_eq!(p, complete(4));
    }

    #[test]
    fn p3_times_p2_edge_count() {
        // Direct count of the adjacency rule versus the closed formula.
        let (g, h) = (path(3), path(2));
        let (p, idx) = lex_product(&g, &h);
        let mut direct = 0;
        for a in 0..idx.order() {
            for b in a + 1..idx.order() {
                let ((ga, ha), (gb, hb)) = (idx.coords(a), idx.coords(b));
                if g.has_edge(ga, gb) || (ga == gb && h.has_edge(ha, hb)) {
                    direct += 1;
                }
            }
        }
        assert_eq!(direct, 11);
        assert_eq!(p.edge_count(), 2 * 4 + 3);
    }

    #[test]
    fn layers() {
        let idx = ProductIndex::new(3, 4);
        assert_eq!(idx.h_layer(1).collect::<Vec<_>>(), vec![4, 5, 6, 7]);
        assert_eq!(idx.g_layer(2).collect::<Vec<_>>(), vec![2, 6, 10]);
        assert_eq!(idx.coords(7), (1, 3));
        let set = VertexSet::from([0, 1, 9]);
        assert_eq!(idx.layer_profile(&set), vec![2, 0, 1]);
        assert_eq!(idx.project_g(&set), VertexSet::from([0, 2]));
    }

    #[test]
    fn bipartite_check() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(Graph::empty(3).is_bipartite());
    }
}
