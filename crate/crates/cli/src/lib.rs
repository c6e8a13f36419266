//! Front end for the `brocard-nine` command: report documents, SVG figures
//! and the golden fixture check used by `verify --sides`.

pub mod golden;
pub mod render;
pub mod report;
