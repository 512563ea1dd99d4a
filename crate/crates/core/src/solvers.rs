//! Exact minimum-set search for every [`SetKind`], plus the path/cycle
//! closed forms.
//!
//! The search walks vertices in ascending id order and branches
//! include-before-exclude, so within a fixed cardinality the sets are visited
//! in lexicographic order of their sorted id lists. A branch is cut as soon
//! as a vertex's spanning number exceeds the largest value its status still
//! allows, or when its already-fixed neighbors plus its undecided neighbors
//! cannot reach the lower bound. Both cuts only discard subtrees that contain
//! no valid set.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::domsets::{Bounds, Range, SetKind};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::vertex_set::VertexSet;

/// Default vertex cap for exhaustive search.
pub const DEFAULT_CAP: usize = 32;
/// Subsets are 64-bit masks; nothing larger can be searched even when forced.
pub const MASK_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: SetKind,
    pub exists: bool,
    pub gamma: Option<usize>,
    /// Lexicographically smallest set of minimum cardinality.
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
}

impl Serialize for SolveResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SolveResult", 7)?;
        st.serialize_field("kind", self.kind.name())?;
        st.serialize_field("j", &self.kind.j())?;
        st.serialize_field("k", &self.kind.k())?;
        st.serialize_field("exists", &self.exists)?;
        st.serialize_field("gamma", &self.gamma)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("nodes_explored", &self.nodes_explored)?;
        st.end()
    }
}

/// Search configuration: vertex cap and override.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    cap: usize,
    force: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP, force: false }
    }
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn force(mut self, force: bool) -> Self {
        self.force = force;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check_size(&self, n: usize) -> Result<()> {
        if n > MASK_LIMIT {
            return Err(Error::TooLarge { n, cap: MASK_LIMIT });
        }
        if n > self.cap && !self.force {
            return Err(Error::TooLarge { n, cap: self.cap });
        }
        Ok(())
    }

    fn prepare(&self, g: &Graph, kind: SetKind) -> Result<Vec<u64>> {
        kind.validate()?;
        self.check_size(g.n())?;
        Ok((0..g.n()).map(|v| g.neighbor_mask(v)).collect())
    }

    /// Exact minimum. With `limit`, sizes above it are not searched and
    /// `exists` is false when nothing fits.
    pub fn min_set(&self, g: &Graph, kind: SetKind, limit: Option<usize>) -> Result<SolveResult> {
        let adj = self.prepare(g, kind)?;
        let n = g.n();
        let mut nodes = 0;
        let not_found = |nodes| SolveResult { kind, exists: false, gamma: None, witness: None, nodes_explored: nodes };

        if limit.is_none() {
            let (found, explored) = first_set(&adj, kind.bounds(), 0, n);
            nodes += explored;
            if found.is_none() {
                return Ok(not_found(nodes));
            }
        }
        let top = limit.map_or(n, |l| l.min(n));
        for size in 0..=top {
            let (found, explored) = first_set(&adj, kind.bounds(), size, size);
            nodes += explored;
            if let Some(mask) = found {
                return Ok(SolveResult {
                    kind,
                    exists: true,
                    gamma: Some(size),
                    witness: Some(VertexSet::from_mask(mask)),
                    nodes_explored: nodes,
                });
            }
        }
        Ok(not_found(nodes))
    }

    pub fn exists_set(&self, g: &Graph, kind: SetKind) -> Result<bool> {
        let adj = self.prepare(g, kind)?;
        Ok(first_set(&adj, kind.bounds(), 0, g.n()).0.is_some())
    }

    /// Some valid set of cardinality at most `budget`.
    pub fn find_within(&self, g: &Graph, kind: SetKind, budget: usize) -> Result<Option<VertexSet>> {
        let adj = self.prepare(g, kind)?;
        Ok(first_set(&adj, kind.bounds(), 0, budget.min(g.n())).0.map(VertexSet::from_mask))
    }

    pub fn exists_within(&self, g: &Graph, kind: SetKind, budget: usize) -> Result<bool> {
        Ok(self.find_within(g, kind, budget)?.is_some())
    }

    /// Every valid set (of size at most `max_size`), ascending.
    pub fn all_sets(&self, g: &Graph, kind: SetKind, max_size: Option<usize>) -> Result<Vec<VertexSet>> {
        let adj = self.prepare(g, kind)?;
        let max = max_size.map_or(g.n(), |m| m.min(g.n()));
        let mut out = Vec::new();
        run(&adj, kind.bounds(), 0, max, |m| {
            out.push(VertexSet::from_mask(m));
            ControlFlow::Continue(())
        });
        out.sort();
        Ok(out)
    }

    /// Every valid set of minimum cardinality, ascending.
    pub fn all_min_sets(&self, g: &Graph, kind: SetKind) -> Result<Vec<VertexSet>> {
        let best = self.min_set(g, kind, None)?;
        let Some(size) = best.gamma else { return Ok(Vec::new()) };
        let adj = self.prepare(g, kind)?;
        let mut out = Vec::new();
        run(&adj, kind.bounds(), size, size, |m| {
            out.push(VertexSet::from_mask(m));
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Cardinality of the smallest valid set, if any.
    pub fn gamma(&self, g: &Graph, kind: SetKind) -> Result<Option<usize>> {
        Ok(self.min_set(g, kind, None)?.gamma)
    }
}

pub fn min_set(g: &Graph, kind: SetKind, limit: Option<usize>) -> Result<SolveResult> {
    Solver::default().min_set(g, kind, limit)
}

pub fn exists_set(g: &Graph, kind: SetKind) -> Result<bool> {
    Solver::default().exists_set(g, kind)
}

fn first_set(adj: &[u64], bounds: Bounds, min_size: usize, max_size: usize) -> (Option<u64>, u64) {
    let mut found = None;
    let nodes = run(adj, bounds, min_size, max_size, |m| {
        found = Some(m);
        ControlFlow::Break(())
    });
    (found, nodes)
}

/// Runs the search and returns the node count.
fn run<F>(adj: &[u64], bounds: Bounds, min_size: usize, max_size: usize, visit: F) -> u64
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    let n = adj.len();
    let mut search = Search {
        adj,
        outside: bounds.outside,
        inside: bounds.inside,
        lo_any: bounds.outside.lo.min(bounds.inside.lo),
        hi_any: bounds.outside.hi.max(bounds.inside.hi),
        cnt: vec![0; n],
        avail: adj.iter().map(|m| m.count_ones() as usize).collect(),
        mask: 0,
        size: 0,
        min_size,
        max_size,
        nodes: 0,
        visit,
    };
    if min_size > n || min_size > max_size {
        return 0;
    }
    if search.avail.iter().all(|&a| a >= search.lo_any) {
        let _ = search.dfs(0);
    }
    search.nodes
}

struct Search<'a, F> {
    adj: &'a [u64],
    outside: Range,
    inside: Range,
    lo_any: usize,
    hi_any: usize,
    /// Neighbors already in the set.
    cnt: Vec<usize>,
    /// Neighbors not yet decided.
    avail: Vec<usize>,
    mask: u64,
    size: usize,
    min_size: usize,
    max_size: usize,
    nodes: u64,
    visit: F,
}

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

impl<F> Search<'_, F>
where
    F: FnMut(u64) -> ControlFlow<()>,
{
    #[inline]
    fn range_of(&self, v: usize) -> Range {
        if self.mask & (1 << v) != 0 {
            self.inside
        } else {
            self.outside
        }
    }

    fn dfs(&mut self, i: usize) -> ControlFlow<()> {
        self.nodes += 1;
        let n = self.adj.len();
        if i == n {
            return if self.size >= self.min_size { (self.visit)(self.mask) } else { ControlFlow::Continue(()) };
        }
        if self.size < self.max_size {
            let ok = self.include(i);
            let flow = if ok { self.dfs(i + 1) } else { ControlFlow::Continue(()) };
            self.undo_include(i);
            flow?;
        }
        if self.size + (n - i - 1) >= self.min_size {
            let ok = self.exclude(i);
            let flow = if ok { self.dfs(i + 1) } else { ControlFlow::Continue(()) };
            self.undo_exclude(i);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn include(&mut self, i: usize) -> bool {
        self.mask |= 1 << i;
        self.size += 1;
        let nb = self.adj[i];
        for w in bits(nb) {
            self.cnt[w] += 1;
            self.avail[w] -= 1;
        }
        let own = self.cnt[i];
        if own > self.inside.hi || own + self.avail[i] < self.inside.lo {
            return false;
        }
        // Lower bounds are unchanged: each neighbor trades an undecided slot
        // for a member.
        bits(nb).all(|w| {
            let hi = if w < i { self.range_of(w).hi } else { self.hi_any };
            self.cnt[w] <= hi
        })
    }

    fn undo_include(&mut self, i: usize) {
        for w in bits(self.adj[i]) {
            self.cnt[w] -= 1;
            self.avail[w] += 1;
        }
        self.mask &= !(1 << i);
        self.size -= 1;
    }

    fn exclude(&mut self, i: usize) -> bool {
        let nb = self.adj[i];
        for w in bits(nb) {
            self.avail[w] -= 1;
        }
        let own = self.cnt[i];
        if own > self.outside.hi || own + self.avail[i] < self.outside.lo {
            return false;
        }
        bits(nb).all(|w| {
            let lo = if w < i { self.range_of(w).lo } else { self.lo_any };
            self.cnt[w] + self.avail[w] >= lo
        })
    }

    fn undo_exclude(&mut self, i: usize) {
        for w in bits(self.adj[i]) {
            self.avail[w] += 1;
        }
    }
}

/// Set kinds with a path/cycle closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormKind {
    /// Total `[1,k]`-sets.
    TotalOneK,
    OneK,
    /// Independent `[1,k]`-sets.
    IndependentOneK,
}

impl ClosedFormKind {
    pub fn set_kind(self, k: usize) -> SetKind {
        match self {
            ClosedFormKind::TotalOneK => SetKind::total_one_k(k),
            ClosedFormKind::OneK => SetKind::one_k(k),
            ClosedFormKind::IndependentOneK => SetKind::independent_one_k(k),
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            ClosedFormKind::TotalOneK => "t1k",
            ClosedFormKind::OneK => "1k",
            ClosedFormKind::IndependentOneK => "i1k",
        }
    }
}

impl FromStr for ClosedFormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t1k" => Ok(ClosedFormKind::TotalOneK),
            "1k" | "one_k" => Ok(ClosedFormKind::OneK),
            "i1k" => Ok(ClosedFormKind::IndependentOneK),
            other => Err(Error::InvalidKind(format!("no closed form for kind `{other}`"))),
        }
    }
}

impl fmt::Display for ClosedFormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Minimum set size on a nontrivial path or a cycle. Independent of `k`
/// for `k >= 2`.
pub fn closed_form(family: Family, n: usize, kind: ClosedFormKind, k: usize) -> Result<usize> {
    let min = match family {
        Family::Path => 2,
        Family::Cycle => 3,
        other => return Err(Error::InvalidFamily(format!("no closed form for {other}"))),
    };
    if n < min {
        return Err(Error::InvalidFamily(format!("{family} needs n >= {min}, got {n}")));
    }
    if k < 2 {
        return Err(Error::InvalidKind(format!("closed forms need k >= 2, got {k}")));
    }
    Ok(match kind {
        ClosedFormKind::TotalOneK => match n % 4 {
            0 => n / 2,
            1 | 3 => n.div_ceil(2),
            _ => (n + 2) / 2,
        },
        ClosedFormKind::OneK | ClosedFormKind::IndependentOneK => n.div_ceil(3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domsets::satisfies;
    use crate::graph::{complete, cycle, lex_product, path};

    #[test]
    fn k3_one_k() {
        let r = min_set(&complete(3), SetKind::one_k(2), None).unwrap();
        assert_eq!((r.gamma, r.witness), (Some(1), Some(VertexSet::from([0]))));
    }

    #[test]
    fn c5_total() {
        let r = min_set(&cycle(5), SetKind::total_one_k(2), None).unwrap();
        assert_eq!(r.gamma, Some(3));
        assert_eq!(r.witness, Some(VertexSet::from([0, 1, 2])));
    }

    #[test]
    fn c6_efficient() {
        let r = min_set(&cycle(6), SetKind::Efficient, None).unwrap();
        assert_eq!((r.gamma, r.witness), (Some(2), Some(VertexSet::from([0, 3]))));
    }

    #[test]
    fn c5_c3_has_no_total_one_two_set() {
        let (p, _) = lex_product(&cycle(5), &cycle(3));
        let r = min_set(&p, SetKind::total_one_k(2), None).unwrap();
        assert!(!r.exists);
        assert_eq!((r.gamma, r.witness), (None, None));
    }

    #[test]
    fn k1_edge_cases() {
        let k1 = path(1);
        let r = min_set(&k1, SetKind::Dominating, None).unwrap();
        assert_eq!((r.gamma, r.witness), (Some(1), Some(VertexSet::from([0]))));
        assert!(!exists_set(&k1, SetKind::TotalDominating).unwrap());
        assert!(!exists_set(&k1, SetKind::total_one_k(3)).unwrap());
    }

    #[test]
    fn existence_examples() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert!(exists_set(&g, SetKind::one_k(1)).unwrap());
        assert!(!exists_set(&g, SetKind::TotalDominating).unwrap());
        assert!(!exists_set(&cycle(5), SetKind::j_dependent_total(1, 2)).unwrap());
    }

    #[test]
    fn limit_reports_absence() {
        let r = min_set(&cycle(9), SetKind::Dominating, Some(2)).unwrap();
        assert!(!r.exists);
        let r = min_set(&cycle(9), SetKind::Dominating, Some(3)).unwrap();
        assert_eq!(r.gamma, Some(3));
    }

    #[test]
    fn cap_and_force() {
        let big = path(40);
        assert_eq!(min_set(&big, SetKind::Dominating, Some(0)), Err(Error::TooLarge { n: 40, cap: DEFAULT_CAP }));
        let r = Solver::new().force(true).min_set(&big, SetKind::Dominating, Some(1)).unwrap();
        assert!(!r.exists);
        assert!(Solver::new().force(true).exists_set(&path(65), SetKind::Dominating).is_err());
    }

    #[test]
    fn invalid_kind_is_rejected() {
        assert!(matches!(min_set(&path(3), SetKind::one_k(0), None), Err(Error::InvalidKind(_))));
    }

    #[test]
    fn all_min_sets_of_c6_efficient() {
        let sets = Solver::new().all_min_sets(&cycle(6), SetKind::Efficient).unwrap();
        let expect: Vec<VertexSet> = [[0, 3], [1, 4], [2, 5]].into_iter().map(VertexSet::from).collect();
        assert_eq!(sets, expect);
    }

    #[test]
    fn all_sets_are_valid_and_sorted() {
        let g = path(5);
        let kind = SetKind::total_one_k(2);
        let sets = Solver::new().all_sets(&g, kind, None).unwrap();
        assert!(!sets.is_empty());
        assert!(sets.iter().all(|s| satisfies(&g, s, kind).unwrap()));
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(Family::Path, 8, ClosedFormKind::TotalOneK, 2).unwrap(), 4);
        assert_eq!(closed_form(Family::Cycle, 7, ClosedFormKind::TotalOneK, 3).unwrap(), 4);
        assert_eq!(closed_form(Family::Path, 7, ClosedFormKind::OneK, 2).unwrap(), 3);
        assert_eq!(closed_form(Family::Cycle, 6, ClosedFormKind::TotalOneK, 2).unwrap(), 4);
        assert!(closed_form(Family::Path, 1, ClosedFormKind::OneK, 2).is_err());
        assert!(closed_form(Family::Cycle, 2, ClosedFormKind::OneK, 2).is_err());
        assert!(closed_form(Family::Path, 5, ClosedFormKind::OneK, 1).is_err());
        assert!(closed_form(Family::Star, 5, ClosedFormKind::OneK, 2).is_err());
    }
}
