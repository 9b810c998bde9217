//! Scene files, polynomial text format, reports and the command line.

pub mod cli;
pub mod parser;
pub mod report;
pub mod scene;
pub mod printer;

pub use parser::parse_polynomial;
pub use printer::{format_monomial, format_polynomial};
pub use report::ReportDocument;
pub use scene::{load_scene, read_scene, Scene};
