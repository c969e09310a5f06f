//! Packing colorings of finite super subdivisions and neighborhood coronas.
//!
//! * [`graph`], [`distance`], [`stats`]: the graph type and its metric data.
//! * [`families`]: generators with canonical vertex names (`u_i`, `u_{i,j}^k`, ...).
//! * [`coloring`]: the verifier and explicit colorings of the families.
//! * [`solver`]: exact packing chromatic number plus a brute-force oracle.
//! * [`harness`]: claim checks over parameter grids.
//! * [`io`]: JSON and DOT formats.

pub mod coloring;
pub mod distance;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod label;
pub mod solver;
pub mod stats;

pub use coloring::{verify, PackingColoring, VerificationReport};
pub use distance::{all_pairs_distances, DistanceMatrix};
pub use families::{generate, FamilySpec};
pub use graph::{Graph, VertexId};
pub use label::VertexLabel;
pub use solver::{packing_chromatic_number, SolveOptions, SolveResult};
