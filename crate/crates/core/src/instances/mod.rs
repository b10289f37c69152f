//! Benchmark instance generation and the instance file formats.

mod format;
mod generate;

pub use format::{parse_caserta, parse_instance, write_instance};
pub use generate::{generate, make_class, GeneratorParams, HeightPolicy};
