use super::{position_error, Ruleset};
use crate::error::Result;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Edge {
    Blue,
    Red,
}

/// A blue-red Hackenbush string, listed from the ground upward.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HackenbushString(pub Vec<Edge>);

impl HackenbushString {
    /// Every edge recolored.
    pub fn flipped(&self) -> Self {
        HackenbushString(
            self.0
                .iter()
                .map(|e| match e {
                    Edge::Blue => Edge::Red,
                    Edge::Red => Edge::Blue,
                })
                .collect(),
        )
    }
}

/// Left cuts blue edges, Right cuts red ones; everything above the cut falls.
#[derive(Clone, Copy, Debug, Default)]
pub struct Hackenbush;

impl Hackenbush {
    fn cuts(p: &HackenbushString, color: Edge) -> Vec<HackenbushString> {
        p.0.iter()
            .enumerate()
            .filter(|(_, &e)| e == color)
            .map(|(i, _)| HackenbushString(p.0[..i].to_vec()))
            .collect()
    }
}

impl Ruleset for Hackenbush {
    type Position = HackenbushString;

    fn name(&self) -> &'static str {
        "hackenbush"
    }

    fn parse_position(&self, text: &str) -> Result<HackenbushString> {
        text.chars()
            .map(|c| match c.to_ascii_lowercase() {
                'b' => Ok(Edge::Blue),
                'r' => Ok(Edge::Red),
                _ => Err(position_error("hackenbush", text, format!("unexpected `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(HackenbushString)
    }

    fn render_position(&self, p: &HackenbushString) -> String {
        p.0.iter()
            .map(|e| match e {
                Edge::Blue => 'b',
                Edge::Red => 'r',
            })
            .collect()
    }

    fn left_moves(&self, p: &HackenbushString) -> Vec<HackenbushString> {
        Self::cuts(p, Edge::Blue)
    }

    fn right_moves(&self, p: &HackenbushString) -> Vec<HackenbushString> {
        Self::cuts(p, Edge::Red)
    }
}
