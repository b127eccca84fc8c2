//! Finite lattices and frames.

mod duality;
mod filters;
mod lattice;

pub use duality::{
    hofmann_mislove_report, points_space, stone_round_trip, DualityReport, HmConvention,
    PointsSpace,
};
pub use filters::{
    check_filter, filter_join, filters_of, is_completely_prime, is_scott_open, opens_join_failure,
    temperance_report, waybelow, waybelow_and_stability, Filter, FilterKind, TemperanceReport,
    WayBelowReport, WEAKLY_TEMPERATE_NOTE,
};
pub use lattice::{
    frame_report, lattice_of_opens, preimage_of_opens, random_distributive_lattice, ElemSet,
    FinLattice, FrameReport, OpensLattice,
};
