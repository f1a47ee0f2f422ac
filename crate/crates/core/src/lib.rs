//! Linear Jaco graphs and their Gutman index.
//!
//! * [`graph`]: simple graphs, BFS distances, Gutman and Wiener indices.
//! * [`jaco`]: construction of `J_n(mx + c)` and its structural checks.
//! * [`recursion`]: `Gut(J*_{n+1}(x))` from `J*_n(x)`, stated and exact.
//! * [`joint`]: edge-joints of two graphs and their Gutman index.
//! * [`sequences`], [`export`]: tabulated invariants and text formats.

pub mod count;
pub mod error;
pub mod export;
pub mod graph;
pub mod jaco;
pub mod joint;
pub mod recursion;
pub mod sequences;
pub mod term;

pub use count::BigCount;
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, SimpleGraph};
pub use jaco::{JacoGraph, JaconianInfo, LinearFunction, PropertyReport};
pub use joint::{JointSpec, JointTrace};
pub use recursion::{DeltaTrace, RecursionTerms};
pub use sequences::{SequenceKind, SequenceTable};
pub use term::Term;
