//! Exact 3-Cover to total `[1,2]`-set reduction.
//!
//! Set `i` becomes a 4-cycle `uᵢ aᵢ bᵢ cᵢ` plus three connectors joined to
//! `uᵢ` and to the element vertices of the set. The instance has an exact
//! cover iff the gadget has a total `[1,2]`-set of size at most `2t + q`.
//!
//! Ids: cycle vertices `4i..4i+3` in the order `u, a, b, c`, then connectors
//! `4t + 3i + l`, then elements `7t + j`.

use serde::{Deserialize, Serialize};

use crate::domsets::{satisfies, SetKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::Solver;
use crate::vertex_set::VertexSet;

/// Universe `0..universe` with `universe = 3q` and a collection of triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3CInstance {
    pub universe: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3CInstance {
    pub fn new(universe: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        let inst = Self { universe, sets };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.universe == 0 || !self.universe.is_multiple_of(3) {
            return Err(Error::InvalidInstance(format!(
                "universe size {} is not a positive multiple of 3",
                self.universe
            )));
        }
        if self.sets.is_empty() {
            return Err(Error::InvalidInstance("empty collection".into()));
        }
        for (i, set) in self.sets.iter().enumerate() {
            if let Some(&x) = set.iter().find(|&&x| x >= self.universe) {
                return Err(Error::InvalidInstance(format!("set {i}: element {x} outside 0..{}", self.universe)));
            }
            if set[0] == set[1] || set[0] == set[2] || set[1] == set[2] {
                return Err(Error::InvalidInstance(format!("set {i}: repeated element in {set:?}")));
            }
        }
        Ok(())
    }

    /// Parses `{"universe": 3q, "sets": [[a,b,c], ...]}`; sets of the wrong
    /// size are reported as invalid instances rather than JSON errors.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            universe: usize,
            sets: Vec<Vec<usize>>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        let sets = raw
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| {
                <[usize; 3]>::try_from(s.as_slice())
                    .map_err(|_| Error::InvalidInstance(format!("set {i} has {} elements, expected 3", s.len())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(raw.universe, sets)
    }

    pub fn q(&self) -> usize {
        self.universe / 3
    }

    pub fn t(&self) -> usize {
        self.sets.len()
    }

    /// `Ok` iff the chosen sets partition the universe.
    pub fn check_exact(&self, chosen: &[usize]) -> Result<()> {
        let mut hits = vec![0usize; self.universe];
        for &i in chosen {
            let set = self.sets.get(i).ok_or_else(|| Error::NotExactCover(format!("set index {i} out of range")))?;
            for &x in set {
                hits[x] += 1;
            }
        }
        if let Some(x) = hits.iter().position(|&c| c != 1) {
            let what = if hits[x] == 0 { "uncovered" } else { "covered more than once" };
            return Err(Error::NotExactCover(format!("element {x} {what}")));
        }
        Ok(())
    }

    fn has_uncovered_element(&self) -> bool {
        let mut seen = vec![false; self.universe];
        for &x in self.sets.iter().flatten() {
            seen[x] = true;
        }
        seen.contains(&false)
    }
}

/// Role of one gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    /// `pos` 0 is `uᵢ`; 1..3 follow the cycle.
    Cycle {
        set: usize,
        pos: usize,
    },
    Connector {
        set: usize,
        l: usize,
    },
    Element {
        j: usize,
    },
}

/// Id bookkeeping for a gadget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMeta {
    pub cycles: Vec<[usize; 4]>,
    pub connectors: Vec<[usize; 3]>,
    pub elements: Vec<usize>,
    pub budget: usize,
}

/// The sidecar written next to a gadget: budget and one role per id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleMap {
    pub budget: usize,
    pub roles: Vec<Role>,
}

impl GadgetMeta {
    pub fn order(&self) -> usize {
        7 * self.cycles.len() + self.elements.len()
    }

    pub fn u(&self, i: usize) -> usize {
        self.cycles[i][0]
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        let t = self.cycles.len();
        if v < 4 * t {
            Some(Role::Cycle { set: v / 4, pos: v % 4 })
        } else if v < 7 * t {
            let r = v - 4 * t;
            Some(Role::Connector { set: r / 3, l: r % 3 })
        } else if v < self.order() {
            Some(Role::Element { j: v - 7 * t })
        } else {
            None
        }
    }

    pub fn role_map(&self) -> RoleMap {
        RoleMap { budget: self.budget, roles: (0..self.order()).filter_map(|v| self.role(v)).collect() }
    }
}

pub fn build_gadget(inst: &X3CInstance) -> Result<(Graph, GadgetMeta)> {
    inst.validate()?;
    let t = inst.t();
    let cycles: Vec<[usize; 4]> = (0..t).map(|i| [4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3]).collect();
    let connectors: Vec<[usize; 3]> = (0..t).map(|i| [4 * t + 3 * i, 4 * t + 3 * i + 1, 4 * t + 3 * i + 2]).collect();
    let elements: Vec<usize> = (0..inst.universe).map(|j| 7 * t + j).collect();

    let mut edges = Vec::with_capacity(16 * t);
    for (i, set) in inst.sets.iter().enumerate() {
        let c = cycles[i];
        edges.extend([(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]);
        for &v in &connectors[i] {
            edges.push((c[0], v));
            edges.extend(set.iter().map(|&x| (v, elements[x])));
        }
    }
    let meta = GadgetMeta { cycles, connectors, elements, budget: 2 * t + inst.q() };
    let g = Graph::from_edges(meta.order(), edges)?;
    Ok((g, meta))
}

/// `{uᵢ, aᵢ : every i} ∪ {v_{i,1} : i chosen}`.
pub fn cover_to_witness(inst: &X3CInstance, meta: &GadgetMeta, cover: &[usize]) -> Result<VertexSet> {
    inst.check_exact(cover)?;
    let mut d = VertexSet::new();
    for c in &meta.cycles {
        d.insert(c[0]);
        d.insert(c[1]);
    }
    for &i in cover {
        d.insert(meta.connectors[i][0]);
    }
    Ok(d)
}

/// Sets with at least one connector in `d`, checked to be an exact cover.
pub fn witness_to_cover(inst: &X3CInstance, gadget: &Graph, meta: &GadgetMeta, d: &VertexSet) -> Result<Vec<usize>> {
    if d.len() > meta.budget {
        return Err(Error::InvalidWitness(format!("{} vertices exceed budget {}", d.len(), meta.budget)));
    }
    if !satisfies(gadget, d, SetKind::total_one_k(2))? {
        return Err(Error::InvalidWitness("not a total [1,2]-set of the gadget".into()));
    }
    let chosen: Vec<usize> = (0..inst.t()).filter(|&i| meta.connectors[i].iter().any(|&v| d.contains(v))).collect();
    inst.check_exact(&chosen)?;
    Ok(chosen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ViaGadget,
    BruteForce,
}

/// Some subcollection, by ascending bitmask over set indices.
pub fn brute_force_cover(inst: &X3CInstance) -> Result<Option<Vec<usize>>> {
    inst.validate()?;
    let t = inst.t();
    if t >= 64 {
        return Err(Error::TooLarge { n: t, cap: 63 });
    }
    let q = inst.q();
    for mask in 0u64..1 << t {
        if mask.count_ones() as usize != q {
            continue;
        }
        let chosen: Vec<usize> = (0..t).filter(|&i| mask >> i & 1 == 1).collect();
        if inst.check_exact(&chosen).is_ok() {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

pub fn decide_x3c(inst: &X3CInstance, mode: Mode) -> Result<bool> {
    decide_x3c_with(&Solver::default(), inst, mode)
}

pub fn decide_x3c_with(solver: &Solver, inst: &X3CInstance, mode: Mode) -> Result<bool> {
    match mode {
        Mode::BruteForce => Ok(brute_force_cover(inst)?.is_some()),
        Mode::ViaGadget => {
            let (g, meta) = build_gadget(inst)?;
            solver.check_size(g.n())?;
            // An element in no set is an isolated vertex.
            if inst.has_uncovered_element() {
                return Ok(false);
            }
            solver.exists_within(&g, SetKind::total_one_k(2), meta.budget)
        }
    }
}
