//! Exact toolkit for `[1,k]`-domination: set-kind validators, exhaustive
//! minimum-set solvers, path/cycle closed forms, lexicographic-product
//! theorems with an oracle harness, and the Exact-3-Cover gadget.

pub mod catalog;
pub mod domsets;
pub mod edge_list;
pub mod error;
pub mod graph;
pub mod lex_theory;
pub mod npc_reduction;
pub mod solvers;
pub mod vertex_set;

pub use domsets::{in_sd_class, satisfies, spanning_number, SetKind};
pub use error::{Error, Result};
pub use graph::{build_standard, lex_product, Family, Graph, ProductIndex};
pub use lex_theory::{
    characterize_independent, characterize_total, corollary_value, product_gamma, verify_against_oracle,
    DiscrepancyReport, MembershipKind, ProductAnalysis, ProductKind, Theory,
};
pub use npc_reduction::{build_gadget, cover_to_witness, decide_x3c, witness_to_cover, GadgetMeta, Mode, X3CInstance};
pub use solvers::{closed_form, exists_set, min_set, ClosedFormKind, SolveResult, Solver};
pub use vertex_set::VertexSet;
