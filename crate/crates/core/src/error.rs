use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the engine, the rulesets and the closure checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown game id {0}")]
    UnknownGame(u32),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("malformed dyadic `{0}`: denominator must be a positive power of two")]
    MalformedDyadic(String),

    #[error("invalid {ruleset} position `{text}`: {msg}")]
    Position {
        ruleset: &'static str,
        text: String,
        msg: String,
    },

    #[error("unknown ruleset `{0}`")]
    UnknownRuleset(String),

    #[error("arena budget exceeded: more than {limit} forms")]
    ArenaBudget { limit: usize },

    #[error("depth budget exceeded: birthday above {limit}")]
    DepthBudget { limit: u32 },

    #[error("closure budget exceeded: more than {limit} positions, {frontier} still queued")]
    ClosureBudget { limit: usize, frontier: usize },

    #[error("dyadic arithmetic overflow")]
    Overflow,

    #[error("{0}")]
    Domain(String),
}

impl Error {
    /// True for errors caused by a configured resource cap.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ArenaBudget { .. } | Error::DepthBudget { .. } | Error::ClosureBudget { .. }
        )
    }

    /// True for errors caused by malformed user input.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::MalformedDyadic(_)
                | Error::Position { .. }
                | Error::UnknownRuleset(_)
                | Error::UnknownGame(_)
                | Error::Domain(_)
        )
    }
}
