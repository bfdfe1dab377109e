//! Fast exact solvers for interdiction and assistance problems on interval
//! graphs under the shrink/expand model: shortest path, independence number,
//! clique number, scattering number and its Hamiltonicity consequences,
//! plus the edge-contraction blocker for the independence number.

pub mod error;
pub mod igraph;
pub mod independence;
pub mod scattering;
pub mod shortest_path;

pub use error::SolverError;
