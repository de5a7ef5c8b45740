//! Browser bindings. Every export takes plain strings and returns a JSON
//! string: the result object on success, `{"error": ...}` otherwise.

use numbergate::properties::{check_closure, classify_all_pairs, CheckOptions, ClosureLimits, PairClassification};
use numbergate::rulesets::{PositionGames, Ruleset};
use numbergate::{with_ruleset, Engine, Error, GameId};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest closure the page will explore.
const MAX_POSITIONS: usize = 200_000;

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn summary(engine: &mut Engine, g: GameId) -> Result<Value, Error> {
    let canonical = engine.canonical_form(g)?;
    Ok(json!({
        "value": engine.to_number(g)?.map(|d| d.to_string()),
        "outcome": engine.outcome(g).to_string(),
        "canonical": engine.render_form(canonical),
        "birthday": engine.birthday(canonical),
    }))
}

fn pairs(engine: &mut Engine, g: GameId) -> Result<Value, Error> {
    let list: Vec<PairClassification> = classify_all_pairs(engine, g)?;
    Ok(list
        .iter()
        .map(|p| {
            json!({
                "left": engine.render(p.left_option),
                "right": engine.render(p.right_option),
                "f1": p.f1,
                "f2": p.f2,
            })
        })
        .collect())
}

/// Value, outcome, canonical form and option-pair classes of a game literal
/// such as `{0,*|*}`.
#[wasm_bindgen]
pub fn evaluate(literal: &str) -> String {
    respond((|| {
        let mut engine = Engine::new();
        let g = engine.parse_game(literal)?;
        let mut out = summary(&mut engine, g)?;
        out["pairs"] = pairs(&mut engine, g)?;
        Ok(out)
    })())
}

/// One ruleset position with its moves for both players, so the page can
/// walk the game tree.
#[wasm_bindgen]
pub fn explore(ruleset: &str, position: &str) -> String {
    respond((|| {
        let mut engine = Engine::new();
        with_ruleset!(ruleset, r => {
            let p = r.parse_position(position)?;
            let mut games = PositionGames::new(r);
            let g = games.to_game(&mut engine, &p)?;
            let mut out = summary(&mut engine, g)?;
            out["position"] = json!(games.ruleset().render_position(&p));
            out["pairs"] = pairs(&mut engine, g)?;
            for (key, moves) in [("left_moves", r.left_moves(&p)), ("right_moves", r.right_moves(&p))] {
                let mut list = Vec::new();
                for q in moves {
                    let h = games.to_game(&mut engine, &q)?;
                    list.push(json!({
                        "position": games.ruleset().render_position(&q),
                        "value": engine.to_number(h)?.map(|d| d.to_string()),
                    }));
                }
                out[key] = Value::Array(list);
            }
            out
        })
    })())
}

/// Closure-wide checks over the positions reachable from the seeds, which
/// are separated by whitespace.
#[wasm_bindgen]
pub fn closure_check(ruleset: &str, seeds: &str) -> String {
    respond((|| {
        let mut engine = Engine::new();
        let options = CheckOptions {
            include_values: false,
            ..CheckOptions::default()
        };
        let limits = ClosureLimits { max_positions: MAX_POSITIONS };
        with_ruleset!(ruleset, r => {
            let seeds = seeds
                .split_whitespace()
                .map(|s| r.parse_position(s))
                .collect::<Result<Vec<_>, _>>()?;
            if seeds.is_empty() {
                return Err(Error::Domain("no seed positions".into()));
            }
            let report = check_closure(&mut engine, &r, &seeds, limits, &options)?;
            serde_json::to_value(&report).expect("report serializes")
        })
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn evaluates_literals() {
        let v = parse(evaluate("{0|1}"));
        assert_eq!(v["value"], "1/2");
        assert_eq!(v["outcome"], "L");
        assert_eq!(v["pairs"][0]["f1"], true);
        assert_eq!(v["pairs"][0]["f2"], false);
        let v = parse(evaluate("{0|0}"));
        assert!(v["value"].is_null());
        assert_eq!(v["outcome"], "N");
        assert!(parse(evaluate("{0|")).get("error").is_some());
    }

    #[test]
    fn explores_positions() {
        let v = parse(explore("divisors", "5,4"));
        let left: Vec<&str> = v["left_moves"].as_array().unwrap().iter().map(|m| m["position"].as_str().unwrap()).collect();
        assert!(left.contains(&"2,4"));
        let v = parse(explore("turtles", "UD"));
        assert_eq!(v["value"], "-1");
        assert!(parse(explore("go", "x")).get("error").is_some());
        assert!(parse(explore("chomp", "BX")).get("error").is_some());
    }

    #[test]
    fn checks_closures() {
        let v = parse(closure_check("cutcake", "3x4 2x5"));
        assert_eq!(v["all_integers"], true);
        assert_eq!(v["violation_count"], 0);
        let v = parse(closure_check("subtraction", "n=2;L=1;R=2"));
        assert_eq!(v["all_pairs_f1_or_f2"], false);
        assert_eq!(v["con_probe"]["verdict"], "witness-found");
        assert!(parse(closure_check("cutcake", " ")).get("error").is_some());
        assert!(parse(closure_check("cutcake", "6x6")).get("error").is_some());
    }
}
