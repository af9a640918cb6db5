//! The cell datum: the poset of cell labels, the bilinear forms on cell
//! modules, Gram matrices, the action of diagrams on cell modules and the
//! restriction (branching) checks.

mod action;
mod branching;
mod form;
mod gram;
mod label;

pub use action::{act, action_matrix, diagram_action_matrix, ActionMatrix, ActionResult};
pub use branching::{branching_check, branching_check_cell, BranchingReport};
pub use form::{bilinear, bilinear_type_a, pairing, Pairing};
pub use gram::{gram, gram_pseudo, gram_type_a, GramKind, GramMatrix};
pub use label::{cells, CellLabel};
