//! Process exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | unparseable or invalid input (clap usage errors also exit 2) |
//! | 3 | parameters outside an operation's domain |
//! | 4 | brute-force state cap or search budget exceeded |
//! | 5 | a `--verify` cross-check disagreed |
//! | 6 | profile is not a 2-cover |
//! | 7 | streams are not the output of any input |

use colorkit::Error;
use serde_json::Value;

use crate::parse::ParseError;

pub const OK: u8 = 0;
pub const INPUT: u8 = 2;
pub const DOMAIN: u8 = 3;
pub const LIMIT: u8 = 4;
pub const VERIFY: u8 = 5;
pub const NOT_A_COVER: u8 = 6;
pub const INCONSISTENT: u8 = 7;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Partial result worth printing anyway, e.g. a search incumbent.
    pub partial: Option<(Value, String)>,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            partial: None,
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(INPUT, message)
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Self::new(DOMAIN, message)
    }
}

pub fn code_of(e: &Error) -> u8 {
    match e {
        Error::Domain(_) => DOMAIN,
        Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => LIMIT,
        Error::NotACover { .. } => NOT_A_COVER,
        Error::InconsistentOutput { .. } => INCONSISTENT,
        _ => INPUT,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(code_of(&e), e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::input(e.to_string())
    }
}
