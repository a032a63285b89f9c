//! The blue-red functional `g`, the symmetrization pipeline that can only
//! raise it, and closed-form bound evaluation.

mod bluered;
mod report;
mod symmetrize;

pub use bluered::{count_cliques, g_value, BlueRedGraph, Colour};
pub use report::{
    clique_extremal, blue_red_bound, theorem_bounds, BoundPattern, BoundReport, BoundValue,
};
pub use symmetrize::{symmetrize, Step, StepKind, Symmetrization};
