//! Finite topological spaces and their decision procedures.

mod bits;
pub mod enumerate;
mod props;
mod space;

pub use bits::{PointSet, Points, Subsets, MAX_POINTS};
pub use props::{
    compact_saturated_sets, compactness_methods_agree, generic_points, irreducible_closed_sets,
    is_compact, property_report, ultrafilter_limits, ultrafilter_limits_by_closures,
    ultrafilter_limits_by_definition, weakly_hausdorff_compact_pairs, weakly_hausdorff_pointwise,
    CompactnessMethod, CompactnessOracle, IrreducibleClosed, PrincipalUltrafilter, SpaceProperties,
    PROPERTY_LIMIT,
};
pub use space::{
    alexandroff_space, build_space, hulls, specialization_preorder, FinSpace, Hulls, Preorder,
};
