//! Exact areal-coordinate geometry of the nine circles through the orthocentre
//! and the two Brocard points, their centres, and the similar triangles the
//! centres form.

pub mod areal;
pub mod circle;
pub mod embed;
pub mod error;
pub mod hagge;
pub mod nine;
pub mod points;
pub mod sample;
pub mod scalar;
pub mod similar;
pub mod triangle;
pub mod verify;

pub use areal::{ArealLine, ArealPoint, Displacement};
pub use circle::{circle_through, Circle, Tangency};
pub use error::{GeometryError, Result};
pub use scalar::Scalar;
pub use triangle::{RefTriangle, Side, Vertex};
