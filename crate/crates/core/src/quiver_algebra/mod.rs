//! Finite-dimensional algebras given by quivers with admissible relations,
//! and their module categories: Hom, `Ext¹`, radical and socle filtrations,
//! and Serre quotients realized as idempotent truncations.
//!
//! Paths are written in traversal order. With composition read right to
//! left, the path `[a, b]` is the product `b·a`.

pub mod algebra;
pub mod homological;
pub mod indecomposables;
pub mod quiver;
pub mod rep;

pub use algebra::{
    build_algebra, ground_field, serre_quotient, tensor_product, BasisElement, FdAlgebra, SerreQuotient, SparseVec,
    DEFAULT_MAX_LENGTH,
};
pub use homological::{
    ext1, ext1_dim, ext_matrix, find_isomorphism, hom_basis, hom_dim, indecomposables_isomorphic,
    is_absolutely_indecomposable, is_injective, is_isomorphic, is_projective, projective_cover, Ext1, Hom,
};
pub use quiver::{Arrow, Quiver, QuiverSpec, Relation};
pub use rep::{QuiverRep, RepJson, SubRep};

impl SerreQuotient {
    /// The quotient functor `M ↦ eM`, exact.
    pub fn apply(&self, parent: &FdAlgebra, m: &QuiverRep) -> QuiverRep {
        let dims = self.retained.iter().map(|&v| m.dims()[v]).collect();
        let maps = self.algebra.generators().iter().map(|&g| m.action(parent, self.parent_basis[g])).collect();
        QuiverRep::new_unchecked(dims, maps)
    }
}
