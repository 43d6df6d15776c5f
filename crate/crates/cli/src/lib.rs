//! Command-line front end: curve files in, reports and SVG renderings out.

pub mod app;
pub mod error;
pub mod input;
pub mod render;
pub mod report;

pub use app::{run, Cli, Command};
pub use error::{CliError, EXIT_DEGENERATE, EXIT_INPUT, EXIT_OK};
pub use input::{Curve, CurveFile};
