//! Representation theory of acyclic simply-laced Dynkin quivers and the
//! combinatorics of their cluster categories.

mod ar;
mod cluster;
mod denom;
mod linalg;
mod representation;
mod tilting;

pub use ar::{knit_ar_quiver, ArObject, ArQuiver};
pub use cluster::{CcObject, ClusterCategory};
pub use denom::{cluster_image, denominator_correspondence};
pub use representation::{build_indecomposables, euler_form, ext_dim, hom_dim, Representation};
pub use tilting::{
    check_selfinjective, cluster_tilting_graph, enumerate_cluster_tilting, exchange_pairs,
    tilting_seed_quivers, ClusterTilting, TiltingGraph,
};
