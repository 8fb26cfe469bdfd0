//! Zigzags and z-monodromy of triangulated closed surfaces.
//!
//! - [`surface`]: validated triangulations, Euler characteristic, orientability.
//! - [`zigzag`]: zigzag enumeration as orbits of a state permutation, face shadows.
//! - [`monodromy`]: per-face z-monodromy and its seven types (M1)-(M7).
//! - [`dual`]: the dual graph, the M1/M2 subgraphs and forest certificates.
//! - [`sum`]: connected sums along special maps and the z-knotted sum search.
//! - [`generators`]: bipyramids, Platonic solids, small surfaces, random moves.
//! - [`report`]: aggregate report used by the command-line tool.

pub mod dual;
pub mod generators;
pub mod monodromy;
pub mod report;
pub mod sum;
pub mod surface;
pub mod zigzag;

pub use monodromy::{Analysis, MonodromyTag};
pub use surface::{Edge, Face, OrientedEdge, Triangulation, VertexLabel};
