//! Probe relating "every position is a number" to the absence of sums
//! `G + x` with outcome N for numbers `x`.

use serde::Serialize;

use super::closure::{ClosureAnalysis, ClosureGraph, ClosureLimits, MAX_LISTED};
use crate::dyadic::DyadicRational;
use crate::error::Result;
use crate::game::{Engine, GameId, Outcome};
use crate::rulesets::Ruleset;

/// The fifteen numbers born by day 3, simplest first.
pub fn default_x_set() -> Vec<DyadicRational> {
    ["0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3", "3/2", "-3/2", "3/4", "-3/4", "1/4", "-1/4"]
        .iter()
        .map(|s| s.parse().expect("static dyadic"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConVerdict {
    /// Every position is a number and no tested sum has outcome N.
    NoNSum,
    /// Every position is a number, yet some tested sum has outcome N.
    ForwardViolation,
    /// Some position is not a number and a sum with outcome N was found.
    WitnessFound,
    /// Some position is not a number but no candidate produced outcome N.
    NoWitnessInSearchedSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConWitness {
    pub position: String,
    pub x: DyadicRational,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConProbe {
    pub verdict: ConVerdict,
    pub sums_checked: u64,
    pub witnesses: Vec<ConWitness>,
}

/// Candidates suggested by the options of a non-number canonical form
/// `{a | b}` with number options: `-a` and `-(a+b)/2`.
fn option_candidates(
    engine: &mut Engine,
    canonical: GameId,
) -> Result<Vec<DyadicRational>> {
    let mut lefts = Vec::new();
    for o in engine.left_options(canonical).to_vec() {
        if let Some(a) = engine.to_number(o)? {
            lefts.push(a);
        }
    }
    let mut rights = Vec::new();
    for o in engine.right_options(canonical).to_vec() {
        if let Some(b) = engine.to_number(o)? {
            rights.push(b);
        }
    }
    let mut out = Vec::new();
    for &a in &lefts {
        out.push(a.checked_neg()?);
        for &b in &rights {
            out.push(a.mean(b)?.checked_neg()?);
        }
    }
    Ok(out)
}

pub(crate) fn confirm_con_on(
    engine: &mut Engine,
    analysis: &ClosureAnalysis,
    x_set: &[DyadicRational],
) -> Result<ConProbe> {
    let mut xs = Vec::with_capacity(x_set.len());
    for &x in x_set {
        xs.push((x, engine.number_to_game(x)?));
    }
    let mut sums_checked = 0u64;
    let mut witnesses = Vec::new();

    if analysis.all_numbers() {
        for i in 0..analysis.len() {
            let g = analysis.values[i];
            for &(x, xg) in &xs {
                let s = engine.sum(g, xg)?;
                sums_checked += 1;
                let outcome = engine.outcome(s);
                if outcome == Outcome::N && witnesses.len() < MAX_LISTED {
                    witnesses.push(ConWitness {
                        position: analysis.graph.label(i).to_string(),
                        x,
                        outcome,
                    });
                }
            }
        }
        let verdict = if witnesses.is_empty() {
            ConVerdict::NoNSum
        } else {
            ConVerdict::ForwardViolation
        };
        return Ok(ConProbe {
            verdict,
            sums_checked,
            witnesses,
        });
    }

    for i in 0..analysis.len() {
        if analysis.numbers[i].is_some() {
            continue;
        }
        let g = analysis.values[i];
        let mut candidates: Vec<DyadicRational> = x_set.to_vec();
        for c in option_candidates(engine, g)? {
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
        for x in candidates {
            let xg = engine.number_to_game(x)?;
            let s = engine.sum(g, xg)?;
            sums_checked += 1;
            let outcome = engine.outcome(s);
            if outcome == Outcome::N {
                witnesses.push(ConWitness {
                    position: analysis.graph.label(i).to_string(),
                    x,
                    outcome,
                });
                return Ok(ConProbe {
                    verdict: ConVerdict::WitnessFound,
                    sums_checked,
                    witnesses,
                });
            }
        }
    }
    Ok(ConProbe {
        verdict: ConVerdict::NoWitnessInSearchedSet,
        sums_checked,
        witnesses,
    })
}

/// Builds the closure of `seeds` and runs the probe on it.
///
/// When every position is a number, every `G + x` is checked for outcome N
/// (none may exist). Otherwise the search looks for one non-number `G` and a
/// number `x` with `G + x` in N, trying `x_set` and then the candidates
/// derived from `G`'s number options.
pub fn confirm_con<R: Ruleset>(
    engine: &mut Engine,
    ruleset: &R,
    seeds: &[R::Position],
    limits: ClosureLimits,
    x_set: &[DyadicRational],
) -> Result<ConProbe> {
    let graph = ClosureGraph::from_ruleset(engine, ruleset, seeds, limits)?;
    let analysis = ClosureAnalysis::new(engine, graph)?;
    confirm_con_on(engine, &analysis, x_set)
}

/// [`confirm_con`] over the closure of game forms.
pub fn confirm_con_games(
    engine: &mut Engine,
    roots: &[GameId],
    limits: ClosureLimits,
    x_set: &[DyadicRational],
) -> Result<ConProbe> {
    let graph = ClosureGraph::from_games(engine, roots, limits)?;
    let analysis = ClosureAnalysis::new(engine, graph)?;
    confirm_con_on(engine, &analysis, x_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rulesets::{Divisors, Subtraction};

    #[test]
    fn default_set_is_day_three() {
        let xs = default_x_set();
        assert_eq!(xs.len(), 15);
        let mut e = Engine::new();
        for x in xs {
            let g = e.number_to_game(x).unwrap();
            assert!(e.birthday(g) <= 3, "{x}");
        }
    }

    #[test]
    fn switch_has_witness_zero() {
        let mut e = Engine::new();
        let s = Subtraction;
        let seed = s.parse_position("n=2;L=1;R=2").unwrap();
        let probe = confirm_con(&mut e, &s, &[seed], ClosureLimits::default(), &default_x_set()).unwrap();
        assert_eq!(probe.verdict, ConVerdict::WitnessFound);
        assert_eq!(probe.witnesses[0].position, "n=2;L=1;R=2");
        assert_eq!(probe.witnesses[0].x, DyadicRational::ZERO);
    }

    #[test]
    fn divisors_have_no_n_sums() {
        let mut e = Engine::new();
        let d = Divisors;
        let seed = d.parse_position("5,4").unwrap();
        let probe = confirm_con(&mut e, &d, &[seed], ClosureLimits::default(), &default_x_set()).unwrap();
        assert_eq!(probe.verdict, ConVerdict::NoNSum);
        assert!(probe.sums_checked > 0);
    }

    #[test]
    fn zero_alone() {
        let mut e = Engine::new();
        let probe = confirm_con_games(&mut e, &[GameId::ZERO], ClosureLimits::default(), &[DyadicRational::ZERO]).unwrap();
        assert_eq!(probe.verdict, ConVerdict::NoNSum);
        assert_eq!(probe.sums_checked, 1);
    }

    #[test]
    fn derived_candidates_find_hot_witness() {
        // {3|1} is L; the first derived candidate -3 gives {0|-2}, outcome N
        let mut e = Engine::new();
        let g = e.parse_game("{3|1}").unwrap();
        let probe = confirm_con_games(&mut e, &[g], ClosureLimits::default(), &[DyadicRational::ZERO]).unwrap();
        assert_eq!(probe.verdict, ConVerdict::WitnessFound);
        assert_eq!(probe.witnesses[0].x, DyadicRational::integer(-3));
    }
}
