//! Reference implementations that share nothing with the library beyond the
//! edge list: adjacency matrices, explicit pair products and subset
//! enumeration in lexicographic order.

#![allow(dead_code)]

use domkit::Graph;

pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    pub fn in_set(&self, v: usize, set: &[usize]) -> usize {
        set.iter().filter(|&&w| self.adj[v][w]).count()
    }
}

/// `(lo_out, hi_out, lo_in, hi_in)` on in-set neighbor counts.
pub type Limits = (usize, usize, usize, usize);

pub const NONE: usize = usize::MAX;

pub fn holds(m: &Matrix, set: &[usize], (lo_out, hi_out, lo_in, hi_in): Limits) -> bool {
    (0..m.n).all(|v| {
        let c = m.in_set(v, set);
        if set.contains(&v) {
            lo_in <= c && c <= hi_in
        } else {
            lo_out <= c && c <= hi_out
        }
    })
}

/// Subsets of `0..n` of the given size, in lexicographic order.
pub fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n.saturating_sub(left) {
            cur.push(v);
            go(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= n {
        go(0, n, size, &mut Vec::new(), &mut out);
    }
    out
}

/// Smallest size and lexicographically first set of that size.
pub fn naive_min(g: &Graph, limits: Limits) -> Option<(usize, Vec<usize>)> {
    let m = Matrix::of(g);
    (0..=m.n).find_map(|size| combinations(m.n, size).into_iter().find(|s| holds(&m, s, limits)).map(|s| (size, s)))
}

/// Neighbor counts per kind code, written out from the definitions.
pub fn limits(code: &str, j: usize, k: usize) -> Limits {
    match code {
        "dom" => (1, NONE, 0, NONE),
        "total" => (1, NONE, 1, NONE),
        "1k" => (1, k, 0, NONE),
        "t1k" => (1, k, 1, k),
        "i1k" => (1, k, 0, 0),
        "jd1k" => (1, k, 0, j),
        "jdt1k" => (1, k, 1, j),
        "eff" => (1, 1, 0, 0),
        "oeff" => (1, 1, 1, 1),
        other => panic!("unknown code {other}"),
    }
}

/// `G∘H` straight from the pair definition, ids `g * |H| + h`.
pub fn naive_lex(g: &Graph, h: &Graph) -> Vec<Vec<bool>> {
    let (mg, mh) = (Matrix::of(g), Matrix::of(h));
    let nh = mh.n;
    let n = mg.n * nh;
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let (ga, ha, gb, hb) = (a / nh, a % nh, b / nh, b % nh);
                    mg.adj[ga][gb] || (ga == gb && mh.adj[ha][hb])
                })
                .collect()
        })
        .collect()
}

/// Random graph on `n` vertices from a bit string indexed by pairs.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut it = bits.iter().cycle();
    for v in 1..n {
        for u in 0..v {
            if *it.next().unwrap_or(&false) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
