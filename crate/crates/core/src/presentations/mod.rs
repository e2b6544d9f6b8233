//! Presentations as data: generators, relations, matrix assignments,
//! verification and word-span dimensions.

mod assignment;
mod expr;
mod semisimple;
mod suites;

pub use assignment::{algebra_dimension, suite_gens, verify, Assignment, RelationCheck, Substitution, VerifyReport};
pub use expr::{Expr, Gen, GenKind, Relation};
pub use semisimple::{
    indecomposable_witness, invariant_line_has_complement, semisimple_a, semisimple_cyclotomic, semisimple_rook, QPoint,
};
pub use suites::{
    ideal_generator_p, map_p_to_x, map_x_to_p, relations_a_algebra, relations_a_algebra_variant, relations_affine,
    relations_affine_variant, relations_ak_presentation, relations_bprime, relations_cyclotomic, relations_e,
    relations_projection_nesting, relations_rook, AffineVariant, QuadraticVariant,
};
