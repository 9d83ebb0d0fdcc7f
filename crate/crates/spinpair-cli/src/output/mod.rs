//! Serialization of results: CSV data tables, JSON objects, SVG plots.
//! Every renderer is a pure function from a result to the complete byte
//! payload, so identical inputs always produce identical files.

pub mod csv;
pub mod json;
pub mod svg;
