//! Domination predicates: spanning numbers, set-kind validators and the
//! distance-separated class used by the product theorems.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A domination variant together with its `j`/`k` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    Dominating,
    TotalDominating,
    /// Every vertex outside has between 1 and `k` neighbors inside.
    OneK {
        k: usize,
    },
    /// The `[1,k]` bound holds for every vertex.
    TotalOneK {
        k: usize,
    },
    /// `[1,k]`-set with no edges inside.
    IndependentOneK {
        k: usize,
    },
    /// `[1,k]`-set whose members have at most `j` neighbors inside.
    JDependentOneK {
        j: usize,
        k: usize,
    },
    /// Members have between 1 and `j` neighbors inside.
    JDependentTotalOneK {
        j: usize,
        k: usize,
    },
    /// Perfect code.
    Efficient,
    OpenEfficient,
}

/// Allowed range of `|N(v) ∩ S|`, inclusive. `hi == usize::MAX` is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    const fn new(lo: usize, hi: usize) -> Self {
        Self { lo, hi }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Spanning-number ranges for vertices outside and inside the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub outside: Range,
    pub inside: Range,
}

const ANY: usize = usize::MAX;

impl SetKind {
    pub fn one_k(k: usize) -> Self {
        SetKind::OneK { k }
    }

    pub fn total_one_k(k: usize) -> Self {
        SetKind::TotalOneK { k }
    }

    pub fn independent_one_k(k: usize) -> Self {
        SetKind::IndependentOneK { k }
    }

    pub fn j_dependent(j: usize, k: usize) -> Self {
        SetKind::JDependentOneK { j, k }
    }

    pub fn j_dependent_total(j: usize, k: usize) -> Self {
        SetKind::JDependentTotalOneK { j, k }
    }

    pub fn j(&self) -> Option<usize> {
        match *self {
            SetKind::JDependentOneK { j, .. } | SetKind::JDependentTotalOneK { j, .. } => Some(j),
            _ => None,
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            SetKind::OneK { k }
            | SetKind::TotalOneK { k }
            | SetKind::IndependentOneK { k }
            | SetKind::JDependentOneK { k, .. }
            | SetKind::JDependentTotalOneK { k, .. } => Some(k),
            _ => None,
        }
    }

    /// Full name used in JSON reports.
    pub fn name(&self) -> &'static str {
        match self {
            SetKind::Dominating => "dominating",
            SetKind::TotalDominating => "total_dominating",
            SetKind::OneK { .. } => "one_k",
            SetKind::TotalOneK { .. } => "total_one_k",
            SetKind::IndependentOneK { .. } => "independent_one_k",
            SetKind::JDependentOneK { .. } => "j_dependent_one_k",
            SetKind::JDependentTotalOneK { .. } => "j_dependent_total_one_k",
            SetKind::Efficient => "efficient",
            SetKind::OpenEfficient => "open_efficient",
        }
    }

    /// Short code used on the command line.
    pub fn code(&self) -> &'static str {
        match self {
            SetKind::Dominating => "dom",
            SetKind::TotalDominating => "total",
            SetKind::OneK { .. } => "1k",
            SetKind::TotalOneK { .. } => "t1k",
            SetKind::IndependentOneK { .. } => "i1k",
            SetKind::JDependentOneK { .. } => "jd1k",
            SetKind::JDependentTotalOneK { .. } => "jdt1k",
            SetKind::Efficient => "eff",
            SetKind::OpenEfficient => "oeff",
        }
    }

    /// Builds a kind from its short code; `j` and `k` are required exactly
    /// when the kind takes them.
    pub fn from_code(code: &str, j: Option<usize>, k: Option<usize>) -> Result<Self> {
        let need_k = || k.ok_or_else(|| Error::InvalidKind(format!("kind `{code}` needs k")));
        let need_j = || j.ok_or_else(|| Error::InvalidKind(format!("kind `{code}` needs j")));
        let kind = match code {
            "dom" => SetKind::Dominating,
            "total" => SetKind::TotalDominating,
            "1k" => SetKind::OneK { k: need_k()? },
            "t1k" => SetKind::TotalOneK { k: need_k()? },
            "i1k" => SetKind::IndependentOneK { k: need_k()? },
            "jd1k" => SetKind::JDependentOneK { j: need_j()?, k: need_k()? },
            "jdt1k" => SetKind::JDependentTotalOneK { j: need_j()?, k: need_k()? },
            "eff" => SetKind::Efficient,
            "oeff" => SetKind::OpenEfficient,
            other => return Err(Error::InvalidKind(format!("unknown kind `{other}`"))),
        };
        if kind.j().is_none() && j.is_some() {
            return Err(Error::InvalidKind(format!("kind `{code}` takes no j")));
        }
        if kind.k().is_none() && k.is_some() {
            return Err(Error::InvalidKind(format!("kind `{code}` takes no k")));
        }
        kind.validate()?;
        Ok(kind)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(k) = self.k() {
            if k < 1 {
                return Err(Error::InvalidKind(format!("{}: k must be at least 1", self.name())));
            }
        }
        if let (Some(j), Some(k)) = (self.j(), self.k()) {
            if j > k {
                return Err(Error::InvalidKind(format!("{}: j = {j} exceeds k = {k}", self.name())));
            }
        }
        Ok(())
    }

    /// Row conditions as spanning-number ranges.
    pub fn bounds(&self) -> Bounds {
        let (outside, inside) = match *self {
            SetKind::Dominating => (Range::new(1, ANY), Range::new(0, ANY)),
            SetKind::TotalDominating => (Range::new(1, ANY), Range::new(1, ANY)),
            SetKind::OneK { k } => (Range::new(1, k), Range::new(0, ANY)),
            SetKind::TotalOneK { k } => (Range::new(1, k), Range::new(1, k)),
            SetKind::IndependentOneK { k } => (Range::new(1, k), Range::new(0, 0)),
            SetKind::JDependentOneK { j, k } => (Range::new(1, k), Range::new(0, j)),
            SetKind::JDependentTotalOneK { j, k } => (Range::new(1, k), Range::new(1, j)),
            SetKind::Efficient => (Range::new(1, 1), Range::new(0, 0)),
            SetKind::OpenEfficient => (Range::new(1, 1), Range::new(1, 1)),
        };
        Bounds { outside, inside }
    }

    /// Kinds that require every member to have a neighbor in the set.
    pub fn is_total(&self) -> bool {
        self.bounds().inside.lo > 0
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.j(), self.k()) {
            (Some(j), Some(k)) => write!(f, "{}(j={j},k={k})", self.name()),
            (None, Some(k)) => write!(f, "{}(k={k})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

/// JSON shape `{kind, j, k}` shared by solver and theorem reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindTag {
    pub kind: String,
    pub j: Option<usize>,
    pub k: Option<usize>,
}

impl From<SetKind> for KindTag {
    fn from(kind: SetKind) -> Self {
        Self { kind: kind.name().to_string(), j: kind.j(), k: kind.k() }
    }
}

impl FromStr for SetKind {
    type Err = Error;

    /// Parses parameter-free codes only; use [`SetKind::from_code`] otherwise.
    fn from_str(s: &str) -> Result<Self> {
        SetKind::from_code(s, None, None)
    }
}

fn check_members(g: &Graph, s: &VertexSet) -> Result<()> {
    match s.iter().last() {
        Some(v) if v >= g.n() => Err(Error::VertexOutOfRange { vertex: v, n: g.n() }),
        _ => Ok(()),
    }
}

/// `|N(v) ∩ S|`.
pub fn spanning_number(g: &Graph, s: &VertexSet, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(g.count_in(v, s))
}

/// True iff `S` meets every row condition of `kind` on `G`.
pub fn satisfies(g: &Graph, s: &VertexSet, kind: SetKind) -> Result<bool> {
    kind.validate()?;
    check_members(g, s)?;
    Ok(satisfies_unchecked(g, s, kind.bounds()))
}

pub(crate) fn satisfies_unchecked(g: &Graph, s: &VertexSet, bounds: Bounds) -> bool {
    (0..g.n()).all(|v| {
        let range = if s.contains(v) { bounds.inside } else { bounds.outside };
        range.contains(g.count_in(v, s))
    })
}

/// Members of `S` with no neighbor in `S`.
pub fn isolated_members(g: &Graph, s: &VertexSet) -> VertexSet {
    s.iter().filter(|&v| g.count_in(v, s) == 0).collect()
}

/// Membership in the class of `j`-dependent `[1,k]`-sets where every member
/// without an in-set neighbor is at distance at least 3 from all other
/// members.
pub fn in_sd_class(g: &Graph, s: &VertexSet, j: usize, k: usize) -> Result<bool> {
    if !satisfies(g, s, SetKind::j_dependent(j, k))? {
        return Ok(false);
    }
    Ok(sd_separated(g, s))
}

pub(crate) fn sd_separated(g: &Graph, s: &VertexSet) -> bool {
    isolated_members(g, s).iter().all(|v| {
        let dist = g.bfs_distances(v);
        s.iter().filter(|&w| w != v).all(|w| dist[w].is_none_or(|d| d >= 3))
    })
}
