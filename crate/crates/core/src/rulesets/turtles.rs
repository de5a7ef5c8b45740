use super::{position_error, Ruleset};
use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Turtle {
    /// On its feet.
    Up,
    /// On its back.
    Down,
}

impl Turtle {
    fn flipped(self) -> Turtle {
        match self {
            Turtle::Up => Turtle::Down,
            Turtle::Down => Turtle::Up,
        }
    }
}

/// A line of turtles, written left to right with `U` and `D`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TurtleLine(pub Vec<Turtle>);

/// Left turns two upside-down turtles onto their feet. Right turns over a
/// pair whose leftmost turtle is up and whose other turtle is down.
#[derive(Clone, Copy, Debug, Default)]
pub struct Turtles;

impl Turtles {
    fn flip_pairs(line: &TurtleLine, first: Turtle, second: Turtle) -> Vec<TurtleLine> {
        let t = &line.0;
        let mut out = Vec::new();
        for i in 0..t.len() {
            if t[i] != first {
                continue;
            }
            for j in i + 1..t.len() {
                if t[j] == second {
                    let mut next = t.clone();
                    next[i] = next[i].flipped();
                    next[j] = next[j].flipped();
                    out.push(TurtleLine(next));
                }
            }
        }
        out
    }
}

impl Ruleset for Turtles {
    type Position = TurtleLine;

    fn name(&self) -> &'static str {
        "turtles"
    }

    fn parse_position(&self, text: &str) -> Result<TurtleLine> {
        text.chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Turtle::Up),
                'D' | 'd' => Ok(Turtle::Down),
                _ => Err(position_error("turtles", text, format!("unexpected `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TurtleLine)
    }

    fn render_position(&self, p: &TurtleLine) -> String {
        p.0.iter()
            .map(|t| match t {
                Turtle::Up => 'U',
                Turtle::Down => 'D',
            })
            .collect()
    }

    fn left_moves(&self, p: &TurtleLine) -> Vec<TurtleLine> {
        Self::flip_pairs(p, Turtle::Down, Turtle::Down)
    }

    fn right_moves(&self, p: &TurtleLine) -> Vec<TurtleLine> {
        Self::flip_pairs(p, Turtle::Up, Turtle::Down)
    }
}
