use super::{position_error, Ruleset};
use crate::error::Result;

/// A sum of cutcake boards, each `rows x columns`, kept as a sorted multiset.
/// `(m, n)` and `(n, m)` are different boards.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CutcakeSum(Box<[(u8, u8)]>);

impl CutcakeSum {
    pub fn new(mut boards: Vec<(u8, u8)>) -> Self {
        boards.sort_unstable();
        CutcakeSum(boards.into_boxed_slice())
    }

    pub fn boards(&self) -> &[(u8, u8)] {
        &self.0
    }

    fn replace(&self, i: usize, a: (u8, u8), b: (u8, u8)) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..i]);
        v.extend_from_slice(&self.0[i + 1..]);
        v.push(a);
        v.push(b);
        Self::new(v)
    }
}

/// Left cuts a board along a column line, Right along a row line.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cutcake;

impl Cutcake {
    fn cuts(p: &CutcakeSum, vertical: bool) -> Vec<CutcakeSum> {
        let mut out = Vec::new();
        for (i, &(m, n)) in p.0.iter().enumerate() {
            if i > 0 && p.0[i - 1] == (m, n) {
                continue;
            }
            if vertical {
                for l in 1..=n / 2 {
                    out.push(p.replace(i, (m, l), (m, n - l)));
                }
            } else {
                for r in 1..=m / 2 {
                    out.push(p.replace(i, (r, n), (m - r, n)));
                }
            }
        }
        out
    }
}

impl Ruleset for Cutcake {
    type Position = CutcakeSum;

    fn name(&self) -> &'static str {
        "cutcake"
    }

    /// Parses `MxN` or `MxN+MxN+...`.
    fn parse_position(&self, text: &str) -> Result<CutcakeSum> {
        let err = |msg: String| position_error("cutcake", text, msg);
        let mut boards = Vec::new();
        for part in text.split('+') {
            let (m, n) = part
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| err(format!("board `{part}` is not `MxN`")))?;
            let dim = |s: &str| -> Result<u8> {
                match s.trim().parse::<u8>() {
                    Ok(v) if v >= 1 => Ok(v),
                    _ => Err(err(format!("bad dimension `{s}`"))),
                }
            };
            boards.push((dim(m)?, dim(n)?));
        }
        Ok(CutcakeSum::new(boards))
    }

    fn render_position(&self, p: &CutcakeSum) -> String {
        p.0.iter()
            .map(|(m, n)| format!("{m}x{n}"))
            .collect::<Vec<_>>()
            .join("+")
    }

    fn left_moves(&self, p: &CutcakeSum) -> Vec<CutcakeSum> {
        Self::cuts(p, true)
    }

    fn right_moves(&self, p: &CutcakeSum) -> Vec<CutcakeSum> {
        Self::cuts(p, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rulesets::testing::{moves, value};
    use crate::{DyadicRational, Engine};

    #[test]
    fn move_lists() {
        assert_eq!(moves(&Cutcake, "2x2"), (vec!["2x1+2x1".into()], vec!["1x2+1x2".into()]));
        assert_eq!(moves(&Cutcake, "1x1"), (vec![], vec![]));
        let (l, r) = moves(&Cutcake, "1x4+2x1");
        assert_eq!(l, ["1x1+1x3+2x1", "1x2+1x2+2x1"]);
        assert_eq!(r, ["1x1+1x1+1x4"]);
    }

    #[test]
    fn multiset_order_is_irrelevant() {
        let a = Cutcake.parse_position("2x3+1x1").unwrap();
        let b = Cutcake.parse_position("1x1 + 2X3").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_values() {
        let mut e = Engine::new();
        assert_eq!(value(&mut e, Cutcake, "2x2"), Some(DyadicRational::ZERO));
        for n in 1..=6i64 {
            assert_eq!(
                value(&mut e, Cutcake, &format!("1x{n}")),
                Some(DyadicRational::integer(n - 1))
            );
            assert_eq!(
                value(&mut e, Cutcake, &format!("{n}x1")),
                Some(DyadicRational::integer(1 - n))
            );
        }
    }

    #[test]
    fn rejects_bad_text() {
        for t in ["2x", "0x3", "2y3", "", "2x2+"] {
            assert!(Cutcake.parse_position(t).is_err(), "{t}");
        }
    }
}
