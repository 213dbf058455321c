//! Compact visibility representations of plane triangulations.
//!
//! Pipeline: build a [`plane_graph::PlaneTriangulation`], compute a Schnyder
//! realizer with [`realizer::compute_realizer`], derive its three canonical
//! orderings, and draw each with [`layout::draw`]; [`layout::best_of_three`]
//! keeps the narrowest. [`layout::best_drawing`] also tries a dedicated
//! ordering on four-connected inputs.

#![allow(clippy::needless_range_loop)]

pub mod generators;
pub mod layout;
pub mod metrics;
pub mod plane_graph;
pub mod realizer;

pub use plane_graph::{GraphError, NodeId, PlaneTriangulation};
pub use realizer::{compute_realizer, validate_realizer, Realizer};
