//! Virtual braid closures, their quandle colorings and cocycle invariants.

pub mod burau;
pub mod constructions;
pub mod coloring;
pub mod diagram;
pub mod moves;
pub mod shadow;

pub use burau::{burau_color_matrix, PolyMatrix};
pub use constructions::{attach_virtual_loops, fig5_family, Fig5};
pub use coloring::{enumerate_colorings, state_sum, Coloring, GroupRingValue};
pub use diagram::{virtual_hopf, Letter, VirtualBraidWord, VirtualLinkDiagram, VirtualLoop};
pub use shadow::{enumerate_shadow_colorings, shadow_cycle, ShadowColoring};
