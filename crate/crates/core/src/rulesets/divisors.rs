use super::{position_error, Ruleset};
use crate::error::Result;

/// Ordered pair `(l, r)` of positive integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DivisorsPosition {
    pub l: u32,
    pub r: u32,
}

/// Left replaces `l` by a smaller divisor of `r`; Right replaces `r` by a
/// smaller divisor of `l`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Divisors;

fn divisors_below(n: u32, bound: u32) -> impl Iterator<Item = u32> {
    (1..bound).filter(move |d| n % d == 0)
}

impl Ruleset for Divisors {
    type Position = DivisorsPosition;

    fn name(&self) -> &'static str {
        "divisors"
    }

    fn parse_position(&self, text: &str) -> Result<DivisorsPosition> {
        let err = |msg: &str| position_error("divisors", text, msg);
        let (l, r) = text.split_once(',').ok_or_else(|| err("expected `l,r`"))?;
        let l: u32 = l.trim().parse().map_err(|_| err("l is not a positive integer"))?;
        let r: u32 = r.trim().parse().map_err(|_| err("r is not a positive integer"))?;
        if l == 0 || r == 0 {
            return Err(err("coordinates must be at least 1"));
        }
        Ok(DivisorsPosition { l, r })
    }

    fn render_position(&self, p: &DivisorsPosition) -> String {
        format!("{},{}", p.l, p.r)
    }

    fn left_moves(&self, p: &DivisorsPosition) -> Vec<DivisorsPosition> {
        divisors_below(p.r, p.l)
            .map(|l| DivisorsPosition { l, r: p.r })
            .collect()
    }

    fn right_moves(&self, p: &DivisorsPosition) -> Vec<DivisorsPosition> {
        divisors_below(p.l, p.r)
            .map(|r| DivisorsPosition { l: p.l, r })
            .collect()
    }
}
