//! Text formats for structures and mappings, and DOT output.

pub mod dot;
pub mod format;

pub use dot::{emit_dot, DotComponent};
pub use format::{parse_mapping, parse_pair, parse_structure, serialize_mapping, serialize_pair, serialize_structure};
