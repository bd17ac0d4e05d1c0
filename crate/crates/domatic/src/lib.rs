//! Proper k-distance domatic colorings of two-dimensional grid graphs.
//!
//! A coloring is proper for radius `k` when every vertex sees every color
//! within L1 distance `k`; the domatic number is the largest palette
//! admitting one, bounded above by the smallest k-ball. This crate builds
//! such colorings from overlapping stamped blocks, verifies arbitrary
//! colorings, produces pigeonhole infeasibility certificates, solves small
//! grids exactly, and ships a verified catalogue settling every grid at
//! radius 3 together with the modular coloring of the infinite grid.

pub mod bounds;
pub mod construct;
pub mod gallery;
pub mod grid;
pub mod perm;
pub mod solver;

pub use bounds::{
    check_certificate, singleton_pigeonhole, two_ball_pigeonhole, Certificate, CertificateData,
    CertificateError, CertificateKind, TwoBallWitness,
};
pub use construct::{
    apply_plan, infinite_ball_is_rainbow, infinite_color, infinite_window, plan_grid,
    stamp, standard_block, ApplyError, BlockSpec, ConstructError, InfiniteColoringSpec,
    InfiniteWindow, Placement, ShiftOp, StampPlan, UnsupportedShape,
};
pub use gallery::{d3_value, gallery_entries, GalleryEntry, NON_FULL_GRIDS};
pub use grid::{
    ball_size, checked_grid_distance, distance_field, dominating_vertices, grid_distance,
    min_k_degree, verify_coloring, Coloring, DistanceField, GridDims, GridError,
    VerificationReport, Vertex,
};
pub use perm::{
    commute_check, compose, h_shift, modified_remainder, v_shift, PermError, Permutation,
    ShiftParams,
};
pub use solver::{
    exact_domatic_number, feasible, ExactResult, ExactTimeout, SolveConfig, SolveResult,
    SolveStatus, UpperBoundEvidence,
};
