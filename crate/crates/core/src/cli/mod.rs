//! Text front end: expression parsing, canonical formatting, structured
//! reports and the `medial` command line.

mod app;
mod format;
mod parser;
pub mod report;

pub use app::{run, EXIT_DISAGREEMENT, EXIT_FAILURE, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
pub use format::format;
pub use parser::{parse, parse_expr, Expr, ParseError, MAX_EXPONENT};
pub use report::{ClassReport, OutputReport, VerdictTag};
