//! F1/F2 classification of option pairs and the closure-wide checks built
//! on it.
//!
//! For a pair `(G^L, G^R)`:
//!
//! * **F1** holds when some `G^{RL} ≥ G^L` or some `G^{LR} ≤ G^R`;
//! * **F2** holds when some `G^{LR} ≤ G^{RL}`.
//!
//! Both are decided by value comparison. Positions reached by the same board
//! in two move orders are additionally flagged as *identities*; an identity
//! implies the property but never replaces the comparison.

mod avoidance;
mod closure;
mod con;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Engine, GameId};

pub use avoidance::{number_avoidance_probe, AvoidanceVerdict};
pub use closure::{
    analyze, check_closure, check_game_closure, hcr_closure, AuditStats, CheckOptions, CheckStatus,
    ClassCounts, ClosureAnalysis, ClosureGraph, ClosureLimits, ClosureReport, FastPathStats,
    IncentiveStats, NodePair, PairRecord, SubclosureStats, TheoremCheck, Violation, WitnessRecord,
    MAX_LISTED,
};
pub use con::{confirm_con, confirm_con_games, default_x_set, ConProbe, ConVerdict, ConWitness};

/// Which two-move sequence certifies F1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum F1Witness {
    /// A left option of `G^R` that is at least `G^L`.
    RightLeft(GameId),
    /// A right option of `G^L` that is at most `G^R`.
    LeftRight(GameId),
}

impl F1Witness {
    pub fn game(self) -> GameId {
        match self {
            F1Witness::RightLeft(g) | F1Witness::LeftRight(g) => g,
        }
    }
}

/// F1/F2 verdicts for one `(G^L, G^R)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClassification {
    pub left_option: GameId,
    pub right_option: GameId,
    pub f1: bool,
    pub f1_witness: Option<F1Witness>,
    /// The F1 witness inequality is strict.
    pub f1_strict: bool,
    pub f2: bool,
    /// `(G^{LR}, G^{RL})` with `G^{LR} ≤ G^{RL}`.
    pub f2_witness: Option<(GameId, GameId)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    F1Only,
    F2Only,
    Both,
    Neither,
}

impl PairClassification {
    pub fn class(&self) -> PairClass {
        match (self.f1, self.f2) {
            (true, true) => PairClass::Both,
            (true, false) => PairClass::F1Only,
            (false, true) => PairClass::F2Only,
            (false, false) => PairClass::Neither,
        }
    }

    /// Re-checks every recorded witness with direct order comparisons.
    pub fn audit(&self, engine: &mut Engine) -> Result<bool> {
        let gl = engine.canonical_form(self.left_option)?;
        let gr = engine.canonical_form(self.right_option)?;
        let f1_ok = match self.f1_witness {
            None => !self.f1 && !self.f1_strict,
            Some(F1Witness::RightLeft(w)) => {
                let w = engine.canonical_form(w)?;
                self.f1 && engine.le(gl, w) && (!self.f1_strict || !engine.le(w, gl))
            }
            Some(F1Witness::LeftRight(w)) => {
                let w = engine.canonical_form(w)?;
                self.f1 && engine.le(w, gr) && (!self.f1_strict || !engine.le(gr, w))
            }
        };
        let f2_ok = match self.f2_witness {
            None => !self.f2,
            Some((lr, rl)) => {
                let lr = engine.canonical_form(lr)?;
                let rl = engine.canonical_form(rl)?;
                self.f2 && engine.le(lr, rl)
            }
        };
        Ok(f1_ok && f2_ok)
    }
}

/// Witness positions found by [`search_pair`], as indices into the lists it
/// was given.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct PairSearch {
    /// `(right_left, index, strict)`: `right_left` selects the `G^{RL}` list.
    pub f1: Option<(bool, usize, bool)>,
    /// `(index into G^{LR} list, index into G^{RL} list)`.
    pub f2: Option<(usize, usize)>,
}

/// Decides F1 and F2 by order comparisons. All ids should be canonical for
/// speed; correctness does not depend on it. A strict F1 witness is
/// preferred when one exists.
pub(crate) fn search_pair(
    engine: &mut Engine,
    gl: GameId,
    gr: GameId,
    gl_right: &[GameId],
    gr_left: &[GameId],
) -> PairSearch {
    let mut f1 = None;
    for (i, &grl) in gr_left.iter().enumerate() {
        if engine.le(gl, grl) {
            let strict = !engine.le(grl, gl);
            if f1.is_none() || strict {
                f1 = Some((true, i, strict));
            }
            if strict {
                break;
            }
        }
    }
    if !matches!(f1, Some((_, _, true))) {
        for (i, &glr) in gl_right.iter().enumerate() {
            if engine.le(glr, gr) {
                let strict = !engine.le(gr, glr);
                if f1.is_none() || strict {
                    f1 = Some((false, i, strict));
                }
                if strict {
                    break;
                }
            }
        }
    }
    let mut f2 = None;
    'outer: for (i, &glr) in gl_right.iter().enumerate() {
        for (j, &grl) in gr_left.iter().enumerate() {
            if engine.le(glr, grl) {
                f2 = Some((i, j));
                break 'outer;
            }
        }
    }
    PairSearch { f1, f2 }
}

pub(crate) fn assemble(
    left_option: GameId,
    right_option: GameId,
    search: PairSearch,
    gl_right: &[GameId],
    gr_left: &[GameId],
) -> PairClassification {
    let f1_witness = search.f1.map(|(rl, i, _)| {
        if rl {
            F1Witness::RightLeft(gr_left[i])
        } else {
            F1Witness::LeftRight(gl_right[i])
        }
    });
    PairClassification {
        left_option,
        right_option,
        f1: search.f1.is_some(),
        f1_witness,
        f1_strict: matches!(search.f1, Some((_, _, true))),
        f2: search.f2.is_some(),
        f2_witness: search.f2.map(|(i, j)| (gl_right[i], gr_left[j])),
    }
}

/// Classifies the pair `(gl, gr)` of options of the form `g`.
pub fn classify_pair(
    engine: &mut Engine,
    g: GameId,
    gl: GameId,
    gr: GameId,
) -> Result<PairClassification> {
    if !engine.contains(g) || !engine.contains(gl) || !engine.contains(gr) {
        return Err(Error::Domain("unknown game id in pair".into()));
    }
    if !engine.left_options(g).contains(&gl) {
        return Err(Error::Domain(format!(
            "{} is not a left option of {}",
            engine.render(gl),
            engine.render(g)
        )));
    }
    if !engine.right_options(g).contains(&gr) {
        return Err(Error::Domain(format!(
            "{} is not a right option of {}",
            engine.render(gr),
            engine.render(g)
        )));
    }
    let gl_right = engine.right_options(gl).to_vec();
    let gr_left = engine.left_options(gr).to_vec();
    let canon = |engine: &mut Engine, v: &[GameId]| -> Result<Vec<GameId>> {
        v.iter().map(|&x| engine.canonical_form(x)).collect()
    };
    let cl = engine.canonical_form(gl)?;
    let cr = engine.canonical_form(gr)?;
    let cl_right = canon(engine, &gl_right)?;
    let cr_left = canon(engine, &gr_left)?;
    let search = search_pair(engine, cl, cr, &cl_right, &cr_left);
    Ok(assemble(gl, gr, search, &gl_right, &gr_left))
}

/// Classifies every `(G^L, G^R)` pair of `g`, left options outermost.
pub fn classify_all_pairs(engine: &mut Engine, g: GameId) -> Result<Vec<PairClassification>> {
    let left = engine.left_options(g).to_vec();
    let right = engine.right_options(g).to_vec();
    let mut out = Vec::with_capacity(left.len() * right.len());
    for &gl in &left {
        for &gr in &right {
            out.push(classify_pair(engine, g, gl, gr)?);
        }
    }
    Ok(out)
}
