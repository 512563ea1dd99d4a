//! Lexicographic-product theorems: existence characterizations for total
//! and independent `[1,k]`-sets of `G∘H`, minimum-size formulas, the
//! path/cycle corollary table, and a harness comparing each prediction with
//! exhaustive search on the explicit product.
//!
//! Every prediction is computed from the factors alone. Witnesses are built
//! from factor sets, checked against the product, and dropped with a note if
//! the check fails, so a reported witness is always valid.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domsets::{isolated_members, satisfies, sd_separated, SetKind};
use crate::error::{Error, Result};
use crate::graph::{lex_product, Family, Graph, ProductIndex};
use crate::solvers::Solver;
use crate::vertex_set::VertexSet;

/// Quantity a product formula predicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    /// Domination number.
    Plain,
    /// Total domination number.
    Total,
    OneTwo,
    TotalOneTwo,
    IndependentOneTwo,
    /// Independent `[1,k]` with the caller's `k`.
    IndependentOneK,
}

impl ProductKind {
    pub const ALL: [ProductKind; 6] = [
        ProductKind::Plain,
        ProductKind::Total,
        ProductKind::OneTwo,
        ProductKind::TotalOneTwo,
        ProductKind::IndependentOneTwo,
        ProductKind::IndependentOneK,
    ];

    pub fn code(self) -> &'static str {
        match self {
            ProductKind::Plain => "plain",
            ProductKind::Total => "total",
            ProductKind::OneTwo => "one2",
            ProductKind::TotalOneTwo => "t12",
            ProductKind::IndependentOneTwo => "i12",
            ProductKind::IndependentOneK => "i1k",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Plain => "plain",
            ProductKind::Total => "total",
            ProductKind::OneTwo => "one_2",
            ProductKind::TotalOneTwo => "total_one_2",
            ProductKind::IndependentOneTwo => "i_one_2",
            ProductKind::IndependentOneK => "i_one_k",
        }
    }

    /// The parameter actually used: 2 for the fixed-k kinds.
    pub fn effective_k(self, k: usize) -> usize {
        match self {
            ProductKind::IndependentOneK => k,
            _ => 2,
        }
    }

    pub fn set_kind(self, k: usize) -> SetKind {
        match self {
            ProductKind::Plain => SetKind::Dominating,
            ProductKind::Total => SetKind::TotalDominating,
            ProductKind::OneTwo => SetKind::one_k(2),
            ProductKind::TotalOneTwo => SetKind::total_one_k(2),
            ProductKind::IndependentOneTwo => SetKind::independent_one_k(2),
            ProductKind::IndependentOneK => SetKind::independent_one_k(k),
        }
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|kind| kind.code() == s || kind.name() == s)
            .ok_or_else(|| Error::InvalidKind(format!("unknown product kind `{s}`")))
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which existence theorem to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipKind {
    Total,
    Independent,
}

impl MembershipKind {
    pub fn set_kind(self, k: usize) -> SetKind {
        match self {
            MembershipKind::Total => SetKind::total_one_k(k),
            MembershipKind::Independent => SetKind::independent_one_k(k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MembershipKind::Total => "membership_total",
            MembershipKind::Independent => "membership_independent",
        }
    }
}

/// Outcome of evaluating a product theorem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductAnalysis {
    /// The product has a set of the queried kind.
    pub membership: bool,
    /// First condition (or case label) that applied.
    pub matched_condition: Option<String>,
    /// Every condition that applied, in theorem order.
    pub fired: Vec<String>,
    pub predicted_gamma: Option<usize>,
    /// Product ids, validated against the product.
    pub witness: Option<VertexSet>,
    /// `|witness ∩ H^g|` for each vertex `g` of G.
    pub layer_profile: Vec<usize>,
    pub notes: Vec<String>,
}

/// One applicable theorem branch.
struct Branch {
    label: &'static str,
    /// `None` when the branch states that no set exists.
    value: Option<usize>,
    witness: Option<VertexSet>,
}

impl Branch {
    fn new(label: &'static str, value: Option<usize>, witness: Option<VertexSet>) -> Self {
        Self { label, value, witness }
    }
}

/// Theorem evaluator; the solver is only ever applied to factor graphs.
#[derive(Debug, Clone, Copy, Default)]
pub struct Theory {
    solver: Solver,
}

struct Product {
    graph: Graph,
    index: ProductIndex,
}

impl Theory {
    pub fn new(solver: Solver) -> Self {
        Self { solver }
    }

    pub fn solver(&self) -> &Solver {
        &self.solver
    }

    fn min_witness(&self, g: &Graph, kind: SetKind) -> Result<Option<VertexSet>> {
        Ok(self.solver.min_set(g, kind, None)?.witness)
    }

    fn setup(&self, g: &Graph, h: &Graph) -> Result<Product> {
        if g.n() == 0 || h.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let (graph, index) = lex_product(g, h);
        Ok(Product { graph, index })
    }

    /// Member sets of the distance-separated class of `dep`-dependent
    /// `[1,k]`-sets, ranked by `|S| + α(S)` then lexicographically.
    fn best_sd_set(&self, g: &Graph, dep: usize, k: usize) -> Result<Option<(VertexSet, usize)>> {
        let sets = self.solver.all_sets(g, SetKind::j_dependent(dep, k), None)?;
        Ok(sets
            .into_iter()
            .filter(|s| sd_separated(g, s))
            .map(|s| {
                let cost = s.len() + isolated_members(g, &s).len();
                (s, cost)
            })
            .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0))))
    }

    /// Existence of a total `[1,k]`-set in `G∘H`, decided from the factors.
    pub fn characterize_total(&self, g: &Graph, h: &Graph, k: usize) -> Result<ProductAnalysis> {
        if k < 2 {
            return Err(Error::InvalidKind(format!("characterization needs k >= 2, got {k}")));
        }
        let product = self.setup(g, h)?;
        let idx = product.index;
        let kind = SetKind::total_one_k(k);
        let mut branches = Vec::new();

        if g.n() == 1 {
            if let Some(t) = self.min_witness(h, kind)? {
                branches.push(Branch::new("1", Some(t.len()), Some(t)));
            }
        }

        // Members with k in-set neighbors are harmless only above an
        // isolated vertex of H.
        let iso = h.isolated_vertex();
        let g_kind = if iso.is_some() { kind } else { SetKind::j_dependent_total(k - 1, k) };
        if let Some(s) = self.min_witness(g, g_kind)? {
            let anchor = VertexSet::from([iso.unwrap_or(0)]);
            branches.push(Branch::new("2", Some(s.len()), Some(idx.cross(&s, &anchor))));
        }

        let h_total = self.solver.min_set(h, kind, None)?;
        let h_small = h_total.gamma.is_some_and(|t| t <= k);
        if h_small {
            if let Some(eff) = self.min_witness(g, SetKind::Efficient)? {
                let t = h_total.witness.clone().unwrap_or_default();
                let w = idx.cross(&eff, &t);
                branches.push(Branch::new("3", Some(w.len()), Some(w)));
            }
        }

        if let (Some(t_size), Some(t)) = (h_total.gamma, h_total.witness.as_ref()) {
            let mut qualifying = self
                .solver
                .all_sets(g, SetKind::j_dependent(k - 1, k), None)?
                .into_iter()
                .filter(|s| if sd_separated(g, s) { t_size <= k } else { t_size <= k / 2 })
                .peekable();
            if qualifying.peek().is_some() {
                let witness = qualifying
                    .map(|s| mixed_witness(g, &idx, &s, t))
                    .find(|w| satisfies(&product.graph, w, kind).unwrap_or(false));
                let size = witness.as_ref().map(VertexSet::len);
                branches.push(Branch::new("4", size, witness));
            }
        }

        Ok(finish_membership(&product, kind, branches))
    }

    /// Existence of an independent `[1,k]`-set in `G∘H`.
    pub fn characterize_independent(&self, g: &Graph, h: &Graph, k: usize) -> Result<ProductAnalysis> {
        if k < 2 {
            return Err(Error::InvalidKind(format!("characterization needs k >= 2, got {k}")));
        }
        let product = self.setup(g, h)?;
        let idx = product.index;
        let kind = SetKind::independent_one_k(k);
        let mut branches = Vec::new();

        if g.n() == 1 {
            if let Some(t) = self.min_witness(h, kind)? {
                branches.push(Branch::new("1", Some(t.len()), Some(t)));
            }
        }

        let h_ind = self.solver.min_set(h, kind, None)?;
        if let (Some(t_size), Some(t)) = (h_ind.gamma, h_ind.witness.as_ref()) {
            if t_size <= k {
                if let Some(eff) = self.min_witness(g, SetKind::Efficient)? {
                    let w = idx.cross(&eff, t);
                    branches.push(Branch::new("2", Some(w.len()), Some(w)));
                }
            }
            if t_size <= k / 2 {
                let candidates = self.solver.all_sets(g, kind, None)?;
                if !candidates.is_empty() {
                    let witness = candidates
                        .iter()
                        .map(|s| idx.cross(s, t))
                        .find(|w| satisfies(&product.graph, w, kind).unwrap_or(false));
                    let size = witness.as_ref().map(VertexSet::len);
                    branches.push(Branch::new("3", size, witness));
                }
            }
        }

        Ok(finish_membership(&product, kind, branches))
    }

    /// Minimum size of the queried set kind in `G∘H`, from the factors.
    /// Overlapping cases are all evaluated and the smallest value wins.
    pub fn product_gamma(&self, g: &Graph, h: &Graph, kind: ProductKind, k: usize) -> Result<ProductAnalysis> {
        let k = kind.effective_k(k);
        if k < 2 {
            return Err(Error::InvalidKind(format!("product formulas need k >= 2, got {k}")));
        }
        let product = self.setup(g, h)?;
        let set_kind = kind.set_kind(k);

        if g.n() == 1 || h.n() == 1 {
            // K1 is a two-sided identity and the ids line up unchanged.
            let other = if g.n() == 1 { h } else { g };
            let r = self.solver.min_set(other, set_kind, None)?;
            let branch = Branch::new("identity", r.gamma, r.witness);
            return Ok(finish_gamma(&product, set_kind, vec![branch], Vec::new()));
        }

        let mut notes = Vec::new();
        let branches = match kind {
            ProductKind::Plain => self.plain_branches(g, h, &product.index)?,
            ProductKind::Total => self.total_branches(g, &product.index)?,
            ProductKind::OneTwo => self.one_two_branches(g, h, &product.index)?,
            ProductKind::TotalOneTwo => self.total_one_two_branches(g, h, &product.index)?,
            ProductKind::IndependentOneTwo | ProductKind::IndependentOneK => {
                self.independent_branches(g, h, &product.index, k, &mut notes)?
            }
        };
        Ok(finish_gamma(&product, set_kind, branches, notes))
    }

    fn plain_branches(&self, g: &Graph, h: &Graph, idx: &ProductIndex) -> Result<Vec<Branch>> {
        let mut out = Vec::new();
        let h_dom = self.solver.min_set(h, SetKind::Dominating, None)?;
        if h_dom.gamma == Some(1) {
            if let Some(s) = self.min_witness(g, SetKind::Dominating)? {
                let w = idx.cross(&s, &h_dom.witness.unwrap_or_default());
                out.push(Branch::new("gamma_h_one", Some(s.len()), Some(w)));
            }
        }
        if let Some(s) = self.min_witness(g, SetKind::TotalDominating)? {
            let w = idx.cross(&s, &VertexSet::from([0]));
            out.push(Branch::new("g_has_total", Some(s.len()), Some(w)));
        }
        if out.is_empty() {
            out.push(everything(idx));
        }
        Ok(out)
    }

    fn total_branches(&self, g: &Graph, idx: &ProductIndex) -> Result<Vec<Branch>> {
        Ok(match self.min_witness(g, SetKind::TotalDominating)? {
            Some(s) => {
                let w = idx.cross(&s, &VertexSet::from([0]));
                vec![Branch::new("g_has_total", Some(s.len()), Some(w))]
            }
            None => vec![Branch::new("no_total_set", None, None)],
        })
    }

    fn one_two_branches(&self, g: &Graph, h: &Graph, idx: &ProductIndex) -> Result<Vec<Branch>> {
        let mut out = Vec::new();
        let h_one_two = self.solver.min_set(h, SetKind::one_k(2), None)?;
        let h_set = h_one_two.witness.unwrap_or_default();

        if let Some(iso) = h.isolated_vertex() {
            if let Some(s) = self.min_witness(g, SetKind::total_one_k(2))? {
                let w = idx.cross(&s, &VertexSet::from([iso]));
                out.push(Branch::new("1a", Some(s.len()), Some(w)));
            }
            if h_one_two.gamma == Some(2) {
                if let Some((s, cost)) = self.best_sd_set(g, 2, 2)? {
                    // The isolated vertex of H must carry the single-copy layers.
                    let other = h_set.iter().find(|&u| u != iso).unwrap_or(iso);
                    let w = layered_witness(g, idx, &s, iso, other);
                    out.push(Branch::new("1b", Some(cost), Some(w)));
                }
            }
            if out.is_empty() {
                out.push(everything(idx).relabel("1c"));
            }
        } else {
            if h_one_two.gamma == Some(1) {
                if let Some(s) = self.min_witness(g, SetKind::j_dependent(1, 2))? {
                    let w = idx.cross(&s, &h_set);
                    out.push(Branch::new("2a", Some(s.len()), Some(w)));
                }
            }
            if let Some(s) = self.min_witness(g, SetKind::j_dependent_total(1, 2))? {
                let w = idx.cross(&s, &VertexSet::from([0]));
                out.push(Branch::new("2b", Some(s.len()), Some(w)));
            }
            if h_one_two.gamma == Some(2) {
                if let Some((s, cost)) = self.best_sd_set(g, 1, 2)? {
                    let mut it = h_set.iter();
                    let (a, b) = (it.next().unwrap_or(0), it.next().unwrap_or(0));
                    let w = layered_witness(g, idx, &s, a, b);
                    out.push(Branch::new("2c", Some(cost), Some(w)));
                }
            }
            if out.is_empty() {
                out.push(everything(idx).relabel("2d"));
            }
        }
        Ok(out)
    }

    fn total_one_two_branches(&self, g: &Graph, h: &Graph, idx: &ProductIndex) -> Result<Vec<Branch>> {
        let mut out = Vec::new();
        if let Some(iso) = h.isolated_vertex() {
            match self.min_witness(g, SetKind::total_one_k(2))? {
                Some(s) => {
                    let w = idx.cross(&s, &VertexSet::from([iso]));
                    out.push(Branch::new("1a", Some(s.len()), Some(w)));
                }
                None => out.push(Branch::new("1b", None, None)),
            }
            return Ok(out);
        }
        if let Some(s) = self.min_witness(g, SetKind::j_dependent_total(1, 2))? {
            let w = idx.cross(&s, &VertexSet::from([0]));
            out.push(Branch::new("2a", Some(s.len()), Some(w)));
        }
        // Doubled layers must be totally dominated inside H, so the size-2
        // set has to be a total one.
        let h_total = self.solver.min_set(h, SetKind::total_one_k(2), None)?;
        if h_total.gamma == Some(2) {
            if let Some((s, cost)) = self.best_sd_set(g, 1, 2)? {
                let t = h_total.witness.unwrap_or_default();
                let mut it = t.iter();
                let (a, b) = (it.next().unwrap_or(0), it.next().unwrap_or(0));
                let w = layered_witness(g, idx, &s, a, b);
                out.push(Branch::new("2b", Some(cost), Some(w)));
            }
        }
        if out.is_empty() {
            out.push(Branch::new("2c", None, None));
        }
        Ok(out)
    }

    fn independent_branches(
        &self,
        g: &Graph,
        h: &Graph,
        idx: &ProductIndex,
        k: usize,
        notes: &mut Vec<String>,
    ) -> Result<Vec<Branch>> {
        let mut out = Vec::new();
        let kind = SetKind::independent_one_k(k);
        let h_ind = self.solver.min_set(h, kind, None)?;
        if let (Some(t_size), Some(t)) = (h_ind.gamma, h_ind.witness.as_ref()) {
            if t_size <= k {
                let effs = self.solver.all_sets(g, SetKind::Efficient, None)?;
                if let Some(eff) = effs.iter().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b))) {
                    if effs.iter().any(|e| e.len() != eff.len()) {
                        notes.push("efficient dominating sets of G differ in size".to_string());
                    }
                    out.push(Branch::new("a", Some(eff.len() * t_size), Some(idx.cross(eff, t))));
                }
            }
            if t_size <= k / 2 {
                if let Some(s) = self.min_witness(g, kind)? {
                    out.push(Branch::new("b", Some(s.len() * t_size), Some(idx.cross(&s, t))));
                }
            }
        }
        if out.is_empty() {
            out.push(Branch::new("c", None, None));
        }
        Ok(out)
    }
}

impl Branch {
    fn relabel(mut self, label: &'static str) -> Self {
        self.label = label;
        self
    }
}

fn everything(idx: &ProductIndex) -> Branch {
    let all: VertexSet = (0..idx.order()).collect();
    Branch::new("otherwise", Some(idx.order()), Some(all))
}

/// `{(v, a) : v ∈ S} ∪ {(v, b) : v ∈ S, v has no neighbor in S}`.
fn layered_witness(g: &Graph, idx: &ProductIndex, s: &VertexSet, a: usize, b: usize) -> VertexSet {
    let lonely = isolated_members(g, s);
    let mut w: VertexSet = s.iter().map(|v| idx.id(v, a)).collect();
    for v in lonely.iter() {
        w.insert(idx.id(v, b));
    }
    w
}

/// Lonely members of `S` get the whole of `T`; the rest get `min T`.
fn mixed_witness(g: &Graph, idx: &ProductIndex, s: &VertexSet, t: &VertexSet) -> VertexSet {
    let lonely = isolated_members(g, s);
    let anchor = t.iter().next().unwrap_or(0);
    let mut w = VertexSet::new();
    for v in s.iter() {
        if lonely.contains(v) {
            for u in t.iter() {
                w.insert(idx.id(v, u));
            }
        } else {
            w.insert(idx.id(v, anchor));
        }
    }
    w
}

fn finish_membership(product: &Product, kind: SetKind, branches: Vec<Branch>) -> ProductAnalysis {
    let fired: Vec<String> = branches.iter().map(|b| b.label.to_string()).collect();
    let mut notes = Vec::new();
    let mut witness = None;
    for b in &branches {
        match &b.witness {
            Some(w) if satisfies(&product.graph, w, kind).unwrap_or(false) => {
                if Some(b.label) != branches.first().map(|f| f.label) {
                    notes.push(format!("witness built from condition {}", b.label));
                }
                witness = Some(w.clone());
                break;
            }
            _ => notes.push(format!("condition {} produced no valid witness", b.label)),
        }
    }
    let layer_profile = witness.as_ref().map(|w| product.index.layer_profile(w)).unwrap_or_default();
    ProductAnalysis {
        membership: !branches.is_empty(),
        matched_condition: fired.first().cloned(),
        fired,
        predicted_gamma: None,
        witness,
        layer_profile,
        notes,
    }
}

fn finish_gamma(product: &Product, kind: SetKind, branches: Vec<Branch>, mut notes: Vec<String>) -> ProductAnalysis {
    let fired: Vec<String> = branches.iter().map(|b| b.label.to_string()).collect();
    let best = branches.iter().filter(|b| b.value.is_some()).min_by_key(|b| b.value);
    let (matched, predicted, witness) = match best {
        Some(b) => (b.label, b.value, b.witness.clone()),
        None => (branches.first().map_or("none", |b| b.label), None, None),
    };
    let witness = witness.filter(|w| {
        let ok = satisfies(&product.graph, w, kind).unwrap_or(false) && Some(w.len()) == predicted;
        if !ok {
            notes.push(format!("witness for case {matched} failed validation"));
        }
        ok
    });
    let layer_profile = witness.as_ref().map(|w| product.index.layer_profile(w)).unwrap_or_default();
    ProductAnalysis {
        membership: predicted.is_some(),
        matched_condition: Some(matched.to_string()),
        fired,
        predicted_gamma: predicted,
        witness,
        layer_profile,
        notes,
    }
}

pub fn characterize_total(g: &Graph, h: &Graph, k: usize) -> Result<ProductAnalysis> {
    Theory::default().characterize_total(g, h, k)
}

pub fn characterize_independent(g: &Graph, h: &Graph, k: usize) -> Result<ProductAnalysis> {
    Theory::default().characterize_independent(g, h, k)
}

pub fn product_gamma(g: &Graph, h: &Graph, kind: ProductKind, k: usize) -> Result<ProductAnalysis> {
    Theory::default().product_gamma(g, h, kind, k)
}

/// Closed values for products of paths and cycles. The first factor's family
/// selects the table; cases are tried top to bottom. `None` means no set of
/// that kind exists.
pub fn corollary_value(
    family_g: Family,
    family_h: Family,
    n: usize,
    m: usize,
    kind: ProductKind,
) -> Result<Option<usize>> {
    let n_min = match family_g {
        Family::Path => 2,
        Family::Cycle => 3,
        other => return Err(Error::InvalidFamily(format!("no corollary for first factor {other}"))),
    };
    if !matches!(family_h, Family::Path | Family::Cycle) {
        return Err(Error::InvalidFamily(format!("no corollary for second factor {family_h}")));
    }
    if n < n_min {
        return Err(Error::InvalidFamily(format!("{family_g} factor needs n >= {n_min}, got {n}")));
    }
    // m = 2 on the cycle side stands for a single edge.
    if m < 2 {
        return Err(Error::InvalidFamily(format!("second factor needs m >= 2, got {m}")));
    }
    let thirds = n.div_ceil(3);
    let quarters = 2 * n.div_ceil(4);
    let small_m = m == 2 || m == 3;
    let value = match (family_g, kind) {
        (Family::Path, ProductKind::OneTwo) => Some(if small_m { thirds } else { quarters }),
        (Family::Path, ProductKind::TotalOneTwo) => Some(quarters),
        (Family::Path, ProductKind::IndependentOneTwo) => match m {
            2 | 3 => Some(thirds),
            4..=6 => Some(2 * thirds),
            _ => None,
        },
        (_, ProductKind::OneTwo) => Some(if small_m {
            thirds
        } else if n == 5 {
            5 * m
        } else {
            quarters
        }),
        (_, ProductKind::TotalOneTwo) => (n != 5).then_some(quarters),
        (_, ProductKind::IndependentOneTwo) => match m {
            2 | 3 => Some(thirds),
            4..=6 if n.is_multiple_of(3) => Some(2 * thirds),
            _ => None,
        },
        (_, other) => return Err(Error::InvalidKind(format!("no corollary for kind {other}"))),
    };
    Ok(value)
}

/// Either a cardinality or an existence verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Outcome {
    Gamma(Option<usize>),
    Member(bool),
}

/// Theorem prediction next to exhaustive search on the explicit product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub kind: String,
    pub k: usize,
    pub prediction: Outcome,
    pub oracle: Outcome,
    pub agree: bool,
    pub matched_condition: Option<String>,
    pub witness_pred: Option<VertexSet>,
    pub witness_oracle: Option<VertexSet>,
    pub layer_profile: Vec<usize>,
}

impl Theory {
    fn oracle_product(&self, g: &Graph, h: &Graph) -> Result<Graph> {
        self.solver.check_size(g.n() * h.n())?;
        Ok(lex_product(g, h).0)
    }

    /// Compares `product_gamma` with the exact minimum on `G∘H`.
    pub fn verify_against_oracle(
        &self,
        g: &Graph,
        h: &Graph,
        kind: ProductKind,
        k: usize,
    ) -> Result<DiscrepancyReport> {
        let k = kind.effective_k(k);
        let p = self.oracle_product(g, h)?;
        let analysis = self.product_gamma(g, h, kind, k)?;
        let oracle = self.solver.min_set(&p, kind.set_kind(k), None)?;
        Ok(DiscrepancyReport {
            kind: kind.name().to_string(),
            k,
            prediction: Outcome::Gamma(analysis.predicted_gamma),
            oracle: Outcome::Gamma(oracle.gamma),
            agree: analysis.predicted_gamma == oracle.gamma,
            matched_condition: analysis.matched_condition,
            witness_pred: analysis.witness,
            witness_oracle: oracle.witness,
            layer_profile: analysis.layer_profile,
        })
    }

    /// Compares a characterization verdict with exhaustive existence search.
    pub fn verify_membership(&self, g: &Graph, h: &Graph, kind: MembershipKind, k: usize) -> Result<DiscrepancyReport> {
        let p = self.oracle_product(g, h)?;
        let analysis = match kind {
            MembershipKind::Total => self.characterize_total(g, h, k)?,
            MembershipKind::Independent => self.characterize_independent(g, h, k)?,
        };
        let oracle = self.solver.min_set(&p, kind.set_kind(k), None)?;
        Ok(DiscrepancyReport {
            kind: kind.name().to_string(),
            k,
            prediction: Outcome::Member(analysis.membership),
            oracle: Outcome::Member(oracle.exists),
            agree: analysis.membership == oracle.exists,
            matched_condition: analysis.matched_condition,
            witness_pred: analysis.witness,
            witness_oracle: oracle.witness,
            layer_profile: analysis.layer_profile,
        })
    }
}

pub fn verify_against_oracle(g: &Graph, h: &Graph, kind: ProductKind, k: usize) -> Result<DiscrepancyReport> {
    Theory::default().verify_against_oracle(g, h, kind, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn total_k1_times_p4() {
        let a = characterize_total(&path(1), &path(4), 2).unwrap();
        assert!(a.membership);
        assert_eq!(a.matched_condition.as_deref(), Some("1"));
        assert_eq!(a.witness.map(|w| w.len()), Some(2));
    }

    #[test]
    fn total_c5_times_c4_is_empty() {
        let a = characterize_total(&cycle(5), &cycle(4), 2).unwrap();
        assert!(!a.membership);
        assert!(a.fired.is_empty() && a.witness.is_none());
    }

    #[test]
    fn total_p4_times_p5_uses_single_layer() {
        let a = characterize_total(&path(4), &path(5), 2).unwrap();
        assert!(a.membership);
        assert_eq!(a.matched_condition.as_deref(), Some("2"));
        let idx = ProductIndex::new(4, 5);
        assert_eq!(a.witness, Some(idx.cross(&VertexSet::from([1, 2]), &VertexSet::from([0]))));
        assert_eq!(a.layer_profile, vec![0, 1, 1, 0]);
    }

    #[test]
    fn characterization_rejects_bad_input() {
        let two = Graph::empty(2);
        assert_eq!(characterize_total(&two, &path(2), 2).unwrap_err(), Error::Disconnected);
        assert!(matches!(characterize_total(&path(2), &path(2), 1), Err(Error::InvalidKind(_))));
        assert_eq!(characterize_independent(&two, &path(2), 2).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn independent_examples() {
        let a = characterize_independent(&cycle(6), &path(2), 2).unwrap();
        assert!(a.membership);
        assert_eq!(a.matched_condition.as_deref(), Some("2"));
        assert_eq!(a.witness.as_ref().map(VertexSet::len), Some(2));

        let a = characterize_independent(&path(1), &cycle(4), 2).unwrap();
        assert!(a.membership);
        assert_eq!(a.witness.map(|w| w.len()), Some(2));

        assert!(!characterize_independent(&path(2), &cycle(7), 2).unwrap().membership);
    }

    #[test]
    fn gamma_examples() {
        let a = product_gamma(&cycle(5), &cycle(4), ProductKind::OneTwo, 2).unwrap();
        assert_eq!(a.predicted_gamma, Some(20));
        assert_eq!(a.matched_condition.as_deref(), Some("2d"));

        let a = product_gamma(&path(4), &path(4), ProductKind::OneTwo, 2).unwrap();
        assert_eq!(a.predicted_gamma, Some(2));

        let a = product_gamma(&path(2), &path(2), ProductKind::Total, 2).unwrap();
        assert_eq!(a.predicted_gamma, Some(2));

        let a = product_gamma(&path(3), &cycle(4), ProductKind::Plain, 2).unwrap();
        assert_eq!((a.predicted_gamma, a.matched_condition.as_deref()), (Some(2), Some("g_has_total")));
    }

    #[test]
    fn witnesses_match_predictions() {
        let a = product_gamma(&path(4), &path(4), ProductKind::OneTwo, 2).unwrap();
        let w = a.witness.unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(a.layer_profile.iter().sum::<usize>(), 2);
    }

    #[test]
    fn gamma_total_undefined_for_c5() {
        let a = product_gamma(&cycle(5), &cycle(3), ProductKind::TotalOneTwo, 2).unwrap();
        assert!(!a.membership);
        assert_eq!(a.predicted_gamma, None);
    }

    #[test]
    fn gamma_identity_on_k1() {
        let a = product_gamma(&path(1), &cycle(6), ProductKind::TotalOneTwo, 2).unwrap();
        assert_eq!((a.predicted_gamma, a.matched_condition.as_deref()), (Some(4), Some("identity")));
        let a = product_gamma(&path(3), &path(1), ProductKind::OneTwo, 2).unwrap();
        assert_eq!(a.predicted_gamma, Some(1));
    }

    #[test]
    fn corollary_examples() {
        use Family::{Cycle, Path};
        assert_eq!(corollary_value(Path, Path, 5, 2, ProductKind::OneTwo).unwrap(), Some(2));
        assert_eq!(corollary_value(Cycle, Cycle, 6, 4, ProductKind::IndependentOneTwo).unwrap(), Some(4));
        assert_eq!(corollary_value(Path, Path, 3, 7, ProductKind::IndependentOneTwo).unwrap(), None);
        assert_eq!(corollary_value(Cycle, Cycle, 5, 4, ProductKind::OneTwo).unwrap(), Some(20));
        assert_eq!(corollary_value(Cycle, Cycle, 5, 3, ProductKind::TotalOneTwo).unwrap(), None);
        assert_eq!(corollary_value(Cycle, Path, 7, 5, ProductKind::IndependentOneTwo).unwrap(), None);
        assert_eq!(corollary_value(Path, Cycle, 8, 9, ProductKind::TotalOneTwo).unwrap(), Some(4));
        assert!(corollary_value(Cycle, Cycle, 2, 4, ProductKind::OneTwo).is_err());
        assert!(corollary_value(Path, Path, 4, 1, ProductKind::OneTwo).is_err());
        assert!(corollary_value(Path, Path, 4, 4, ProductKind::Plain).is_err());
    }

    #[test]
    fn oracle_harness_examples() {
        let r = verify_against_oracle(&path(4), &path(4), ProductKind::OneTwo, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.prediction, Outcome::Gamma(Some(2)));

        let r = verify_against_oracle(&cycle(5), &cycle(3), ProductKind::TotalOneTwo, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.oracle, Outcome::Gamma(None));

        let r = verify_against_oracle(&path(1), &cycle(6), ProductKind::TotalOneTwo, 2).unwrap();
        assert!(r.agree);
        assert_eq!(r.oracle, Outcome::Gamma(Some(4)));

        let json = serde_json::to_value(&r).unwrap();
        for key in [
            "kind",
            "k",
            "prediction",
            "oracle",
            "agree",
            "matched_condition",
            "witness_pred",
            "witness_oracle",
            "layer_profile",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn oracle_harness_respects_cap() {
        let g = complete(6);
        let h = path(6);
        assert!(matches!(verify_against_oracle(&g, &h, ProductKind::Plain, 2), Err(Error::TooLarge { n: 36, .. })));
    }

    #[test]
    fn product_kind_codes() {
        for kind in ProductKind::ALL {
            assert_eq!(kind.code().parse::<ProductKind>().unwrap(), kind);
            assert_eq!(kind.name().parse::<ProductKind>().unwrap(), kind);
        }
        assert!("bogus".parse::<ProductKind>().is_err());
    }
}
