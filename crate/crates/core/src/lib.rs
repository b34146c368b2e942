//! Exact visibility, guarding and colouring algorithms for polygons.
//!
//! Every predicate runs on exact rationals; nothing here rounds.

pub mod arrangement;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod funnel;
pub mod geodesic;
pub mod geom;
pub mod oracle;
pub mod proper;
pub mod random;
pub mod triangulate;
pub mod udvg;
pub mod visibility;
pub mod weakvis;

pub use error::{Diagnostic, Error, Result};
pub use geom::{orientation, point_in_polygon, segment_in_polygon, Location, Orientation, Point, Polygon, Segment, Q};
