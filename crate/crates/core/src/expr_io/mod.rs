//! Text formats: polynomial expressions, map files and equation-system files.

mod mapfile;
mod parse;
mod print;

pub use mapfile::{MapFile, SystemFile};
pub use parse::{is_identifier, parse_polynomial, parse_polynomial_at, ParseError, ParseErrorKind};
pub use print::{display_cmp, format_rational, print_polynomial};
