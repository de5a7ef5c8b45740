//! Short partizan game engine with first-move-disadvantage checks.
//!
//! [`game`] holds the interned arena of forms and every value computation on
//! it. [`rulesets`] turns concrete board positions into forms, and
//! [`properties`] classifies option pairs and verifies the number and integer
//! criteria over hereditarily closed sets of positions.

pub mod dyadic;
pub mod error;
pub mod game;
pub mod properties;
pub mod rulesets;

pub use dyadic::DyadicRational;
pub use error::{Error, Result};
pub use game::{simplest_between, Engine, GameId, Limits, Outcome};
