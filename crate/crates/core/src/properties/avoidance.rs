use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Engine, GameId};

/// Result of checking that a winning first move on `G + H`, with `G` a
/// number and `H` not, can be found in `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidanceVerdict {
    pub left_first_wins: bool,
    /// A left option `H^L` with `G + H^L ≥ 0`.
    pub left_witness: Option<GameId>,
    pub right_first_wins: bool,
    /// A right option `H^R` with `G + H^R ≤ 0`.
    pub right_witness: Option<GameId>,
    pub passed: bool,
}

/// Checks both players: whoever wins moving first on `number + h` must have
/// a winning move inside `h`.
pub fn number_avoidance_probe(engine: &mut Engine, number: GameId, h: GameId) -> Result<AvoidanceVerdict> {
    if engine.to_number(number)?.is_none() {
        return Err(Error::Domain(format!(
            "{} is not a number",
            engine.render(number)
        )));
    }
    if engine.to_number(h)?.is_some() {
        return Err(Error::Domain(format!("{} is a number", engine.render(h))));
    }
    let total = engine.sum(number, h)?;
    let left_first_wins = engine.left_first_wins(total);
    let right_first_wins = engine.right_first_wins(total);

    let mut left_witness = None;
    if left_first_wins {
        for hl in engine.left_options(h).to_vec() {
            let s = engine.sum(number, hl)?;
            if engine.ge(s, GameId::ZERO) {
                left_witness = Some(hl);
                break;
            }
        }
    }
    let mut right_witness = None;
    if right_first_wins {
        for hr in engine.right_options(h).to_vec() {
            let s = engine.sum(number, hr)?;
            if engine.le(s, GameId::ZERO) {
                right_witness = Some(hr);
                break;
            }
        }
    }
    let passed = (!left_first_wins || left_witness.is_some())
        && (!right_first_wins || right_witness.is_some());
    Ok(AvoidanceVerdict {
        left_first_wins,
        left_witness,
        right_first_wins,
        right_witness,
        passed,
    })
}
