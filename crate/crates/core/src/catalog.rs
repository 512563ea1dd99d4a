//! Isomorphism-free catalogs of small graphs.
//!
//! Graphs on `n` vertices are grown from the catalog on `n - 1` by adding a
//! vertex with every possible neighborhood and keeping one representative
//! per canonical form. The canonical form is the largest upper-triangle
//! adjacency code over all relabelings that respect a color-refined vertex
//! partition, which keeps the permutation search small except on regular
//! graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest order the 64-bit canonical code can hold.
pub const MAX_ORDER: usize = 11;

#[inline]
fn pair_bit(a: usize, b: usize) -> u32 {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    (j * (j - 1) / 2 + i) as u32
}

/// Stable coloring: start from degrees and split by neighbor-color
/// multisets until nothing changes. Colors are label-independent ranks.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> = sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks.binary_search(&s).unwrap_or(0)).collect();
        let before = color.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        color = next;
        if after == before {
            return color;
        }
    }
}

/// Canonical adjacency code; equal codes mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_ORDER, "canonical codes support at most {MAX_ORDER} vertices");
    let color = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    // Position p may only host vertices of this color.
    let slot_color: Vec<usize> = order.iter().map(|&v| color[v]).collect();

    let mut best = 0u64;
    let mut pos = vec![usize::MAX; n];
    let mut placed = vec![false; n];
    assign(g, &color, &slot_color, 0, &mut pos, &mut placed, &mut best);
    best
}

fn assign(
    g: &Graph,
    color: &[usize],
    slot_color: &[usize],
    p: usize,
    pos: &mut [usize],
    placed: &mut [bool],
    best: &mut u64,
) {
    let n = g.n();
    if p == n {
        let code = g.edges().fold(0u64, |acc, (u, v)| acc | 1 << pair_bit(pos[u], pos[v]));
        *best = (*best).max(code);
        return;
    }
    for v in 0..n {
        if placed[v] || color[v] != slot_color[p] {
            continue;
        }
        placed[v] = true;
        pos[v] = p;
        assign(g, color, slot_color, p + 1, pos, placed, best);
        placed[v] = false;
    }
}

/// Rebuilds the graph a canonical code describes.
pub fn from_code(n: usize, code: u64) -> Graph {
    let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).filter(|&(i, j)| code >> pair_bit(i, j) & 1 == 1);
    Graph::from_edges(n, edges).expect("code within order")
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ORDER);
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 1..n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let base = from_code(order, code);
            let base_edges: Vec<(usize, usize)> = base.edges().collect();
            for nbhd in 0u64..(1 << order) {
                let extra = (0..order).filter(|&v| nbhd >> v & 1 == 1).map(|v| (v, order));
                let grown = Graph::from_edges(order + 1, base_edges.iter().copied().chain(extra)).expect("valid");
                next.insert(canonical_code(&grown));
            }
        }
        codes = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    codes.into_iter().map(|c| from_code(n, c)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

pub fn trees(n: usize) -> Vec<Graph> {
    connected_graphs(n).into_iter().filter(|g| g.edge_count() + 1 == n).collect()
}
