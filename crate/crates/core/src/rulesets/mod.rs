//! Concrete rulesets behind one move-generation interface.

mod chomp;
mod cutcake;
mod divisors;
mod hackenbush;
mod subtraction;
mod turtles;

use std::fmt::Debug;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::game::{Engine, GameId};

pub use chomp::{Cell, Chomp, ChompGrid};
pub use cutcake::{Cutcake, CutcakeSum};
pub use divisors::{Divisors, DivisorsPosition};
pub use hackenbush::{Edge, Hackenbush, HackenbushString};
pub use subtraction::{Subtraction, SubtractionPosition};
pub use turtles::{Turtle, TurtleLine, Turtles};

/// A partizan ruleset: position text format plus move generation.
///
/// Move lists are deterministic and duplicate-free. A player without moves
/// simply has an empty list.
pub trait Ruleset {
    type Position: Clone + Eq + Hash + Debug;

    fn name(&self) -> &'static str;
    fn parse_position(&self, text: &str) -> Result<Self::Position>;
    fn render_position(&self, p: &Self::Position) -> String;
    fn left_moves(&self, p: &Self::Position) -> Vec<Self::Position>;
    fn right_moves(&self, p: &Self::Position) -> Vec<Self::Position>;
}

/// Names accepted by [`with_ruleset!`].
pub const RULESET_NAMES: [&str; 6] = [
    "divisors",
    "turtles",
    "chomp",
    "cutcake",
    "hackenbush",
    "subtraction",
];

/// Runs `$body` with `$r` bound to the ruleset named `$name`, or evaluates
/// to `Err(Error::UnknownRuleset)`.
#[macro_export]
macro_rules! with_ruleset {
    ($name:expr, $r:ident => $body:expr) => {
        match $name {
            "divisors" => {
                let $r = $crate::rulesets::Divisors;
                Ok($body)
            }
            "turtles" => {
                let $r = $crate::rulesets::Turtles;
                Ok($body)
            }
            "chomp" => {
                let $r = $crate::rulesets::Chomp;
                Ok($body)
            }
            "cutcake" => {
                let $r = $crate::rulesets::Cutcake;
                Ok($body)
            }
            "hackenbush" => {
                let $r = $crate::rulesets::Hackenbush;
                Ok($body)
            }
            "subtraction" => {
                let $r = $crate::rulesets::Subtraction;
                Ok($body)
            }
            other => Err($crate::Error::UnknownRuleset(other.to_string())),
        }
    };
}

/// Memoized conversion of positions into literal game forms.
pub struct PositionGames<R: Ruleset> {
    ruleset: R,
    forms: FxHashMap<R::Position, GameId>,
}

impl<R: Ruleset> PositionGames<R> {
    pub fn new(ruleset: R) -> Self {
        PositionGames {
            ruleset,
            forms: FxHashMap::default(),
        }
    }

    pub fn ruleset(&self) -> &R {
        &self.ruleset
    }

    /// The form `{ to_game(left moves) | to_game(right moves) }`.
    pub fn to_game(&mut self, engine: &mut Engine, p: &R::Position) -> Result<GameId> {
        if let Some(&g) = self.forms.get(p) {
            return Ok(g);
        }
        let mut left = Vec::new();
        for q in self.ruleset.left_moves(p) {
            left.push(self.to_game(engine, &q)?);
        }
        let mut right = Vec::new();
        for q in self.ruleset.right_moves(p) {
            right.push(self.to_game(engine, &q)?);
        }
        let g = engine.make_game(&left, &right)?;
        self.forms.insert(p.clone(), g);
        Ok(g)
    }
}

/// Convenience wrapper: one-off conversion without keeping the memo.
pub fn to_game<R: Ruleset>(engine: &mut Engine, ruleset: R, p: &R::Position) -> Result<GameId> {
    PositionGames::new(ruleset).to_game(engine, p)
}

pub(crate) fn position_error(ruleset: &'static str, text: &str, msg: impl Into<String>) -> crate::Error {
    crate::Error::Position {
        ruleset,
        text: text.to_string(),
        msg: msg.into(),
    }
}
