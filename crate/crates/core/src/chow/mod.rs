//! Chow rings of products of projective spaces and intersection lattices of
//! blown-up surfaces, with adjunction for complete intersections and pencils.

mod expr;
mod lattice;
mod ring;

pub use expr::{default_generators, eval_expression, parse_dims};
pub use lattice::{
    lattice_intersect, pencil_family, BaseSurface, BlowUpLattice, LatticeClass, PencilFamily,
};
pub use ring::{
    adjunction_canonical, chow_integrate, chow_mul, relative_dualizing_linear, ChowElement,
    MultiProjRing,
};
