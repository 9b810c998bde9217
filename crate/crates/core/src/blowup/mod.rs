//! Extended Rees presentations and equivariant blow-up charts.

mod charts;
mod crosscheck;
mod lambda;
mod rees;

pub use charts::{blowup_charts, chart_images, kirwan_charts, Chart};
pub use crosscheck::crosscheck_truncation;
pub use lambda::{lambda_matrix, LambdaMatrix};
pub use rees::{rees_presentation, ReesPresentation, ReesRelation};
