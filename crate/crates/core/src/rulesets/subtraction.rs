use std::sync::Arc;

use super::{position_error, Ruleset};
use crate::error::Result;

/// A heap together with the subtraction sets of both players.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubtractionPosition {
    pub heap: u32,
    left: Arc<[u32]>,
    right: Arc<[u32]>,
}

impl SubtractionPosition {
    pub fn new(heap: u32, left: &[u32], right: &[u32]) -> Result<Self> {
        let norm = |s: &[u32]| -> Result<Arc<[u32]>> {
            let mut v = s.to_vec();
            v.sort_unstable();
            v.dedup();
            if v.first() == Some(&0) {
                return Err(crate::Error::Domain(
                    "subtraction amounts must be positive".into(),
                ));
            }
            Ok(v.into())
        };
        Ok(SubtractionPosition {
            heap,
            left: norm(left)?,
            right: norm(right)?,
        })
    }

    pub fn left_set(&self) -> &[u32] {
        &self.left
    }

    pub fn right_set(&self) -> &[u32] {
        &self.right
    }

    fn with_heap(&self, heap: u32) -> Self {
        SubtractionPosition {
            heap,
            left: Arc::clone(&self.left),
            right: Arc::clone(&self.right),
        }
    }
}

/// Partizan subtraction: Left removes an amount from `L`, Right one from `R`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Subtraction;

fn take(p: &SubtractionPosition, set: &[u32]) -> Vec<SubtractionPosition> {
    set.iter()
        .filter(|&&k| k <= p.heap)
        .map(|&k| p.with_heap(p.heap - k))
        .collect()
}

impl Ruleset for Subtraction {
    type Position = SubtractionPosition;

    fn name(&self) -> &'static str {
        "subtraction"
    }

    /// Parses `n=5;L=1,3;R=2`.
    fn parse_position(&self, text: &str) -> Result<SubtractionPosition> {
        let err = |msg: String| position_error("subtraction", text, msg);
        let mut heap = None;
        let mut left = None;
        let mut right = None;
        for field in text.split(';') {
            let (key, val) = field
                .split_once('=')
                .ok_or_else(|| err(format!("field `{field}` lacks `=`")))?;
            let list = |v: &str| -> Result<Vec<u32>> {
                if v.trim().is_empty() {
                    return Ok(Vec::new());
                }
                v.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u32>()
                            .map_err(|_| err(format!("bad amount `{x}`")))
                    })
                    .collect()
            };
            match key.trim() {
                "n" => {
                    heap = Some(
                        val.trim()
                            .parse::<u32>()
                            .map_err(|_| err(format!("bad heap `{val}`")))?,
                    )
                }
                "L" => left = Some(list(val)?),
                "R" => right = Some(list(val)?),
                k => return Err(err(format!("unknown field `{k}`"))),
            }
        }
        let heap = heap.ok_or_else(|| err("missing `n=`".into()))?;
        let left = left.ok_or_else(|| err("missing `L=`".into()))?;
        let right = right.ok_or_else(|| err("missing `R=`".into()))?;
        SubtractionPosition::new(heap, &left, &right).map_err(|e| err(e.to_string()))
    }

    fn render_position(&self, p: &SubtractionPosition) -> String {
        let join = |s: &[u32]| {
            s.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("n={};L={};R={}", p.heap, join(&p.left), join(&p.right))
    }

    fn left_moves(&self, p: &SubtractionPosition) -> Vec<SubtractionPosition> {
        take(p, &p.left)
    }

    fn right_moves(&self, p: &SubtractionPosition) -> Vec<SubtractionPosition> {
        take(p, &p.right)
    }
}
