//! Expression grammar and report rendering behind the `lauricella`
//! command line binary, exposed as a library so tests can drive the
//! parser and printer directly.

pub mod parser;
pub mod report;
