use super::{Engine, GameId};
use crate::dyadic::{DyadicRational, MAX_EXPONENT};
use crate::error::{Error, Result};

/// The simplest number strictly between two optional bounds.
///
/// A missing bound is unconstrained. If some integer fits, the one of least
/// magnitude is returned; otherwise the unique fitting dyadic of least
/// exponent.
pub fn simplest_between(
    lo: Option<DyadicRational>,
    hi: Option<DyadicRational>,
) -> Result<DyadicRational> {
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(Error::Domain(format!(
                "simplest_between needs lo < hi, got {a} and {b}"
            )));
        }
    }
    let zero = DyadicRational::ZERO;
    let above_lo = |x: DyadicRational| lo.is_none_or(|a| a < x);
    let below_hi = |x: DyadicRational| hi.is_none_or(|b| x < b);
    if above_lo(zero) && below_hi(zero) {
        return Ok(zero);
    }
    // zero is excluded, so the interval lies entirely on one side of it
    let candidate = match (lo, hi) {
        (Some(a), _) if a >= zero => DyadicRational::integer(a.floor() + 1),
        (_, Some(b)) => DyadicRational::integer(b.ceil() - 1),
        _ => unreachable!("zero fits an interval unbounded on both sides"),
    };
    if above_lo(candidate) && below_hi(candidate) {
        return Ok(candidate);
    }
    // No integer fits: both bounds lie within one unit interval.
    let a = lo.unwrap();
    for exponent in 1..=MAX_EXPONENT {
        // floor(a * 2^exponent)
        let grid = if a.exponent() <= exponent {
            (a.numerator() as i128) << (exponent - a.exponent())
        } else {
            (a.numerator() as i128) >> (a.exponent() - exponent)
        };
        let step = i64::try_from(grid + 1).map_err(|_| Error::Overflow)?;
        let next = DyadicRational::new(step, exponent)?;
        if below_hi(next) {
            return Ok(next);
        }
    }
    Err(Error::Overflow)
}

impl Engine {
    /// The exact value of `g` if it is a number.
    pub fn to_number(&mut self, g: GameId) -> Result<Option<DyadicRational>> {
        let c = self.canonical_form(g)?;
        self.canonical_to_number(c)
    }

    fn canonical_to_number(&mut self, c: GameId) -> Result<Option<DyadicRational>> {
        if let Some(&v) = self.numbers.get(&c) {
            return Ok(v);
        }
        let value = self.decode_canonical(c)?;
        self.numbers.insert(c, value);
        Ok(value)
    }

    fn decode_canonical(&mut self, c: GameId) -> Result<Option<DyadicRational>> {
        let left = self.left_options(c).to_vec();
        let right = self.right_options(c).to_vec();
        if left.len() > 1 || right.len() > 1 {
            return Ok(None);
        }
        let lo = match left.first() {
            Some(&o) => match self.canonical_to_number(o)? {
                Some(v) => Some(v),
                None => return Ok(None),
            },
            None => None,
        };
        let hi = match right.first() {
            Some(&o) => match self.canonical_to_number(o)? {
                Some(v) => Some(v),
                None => return Ok(None),
            },
            None => None,
        };
        if let (Some(a), Some(b)) = (lo, hi) {
            if a >= b {
                return Ok(None);
            }
        }
        simplest_between(lo, hi).map(Some)
    }

    /// The canonical form of a number.
    pub fn number_to_game(&mut self, d: DyadicRational) -> Result<GameId> {
        if let Some(&g) = self.number_forms.get(&d) {
            return Ok(g);
        }
        let g = if d.is_integer() {
            let n = d.numerator();
            if n == 0 {
                GameId::ZERO
            } else {
                // walk the integer ladder from the nearest known rung
                let step: i64 = n.signum();
                let mut k = n - step;
                while k != 0 && !self.number_forms.contains_key(&DyadicRational::integer(k)) {
                    k -= step;
                }
                let mut prev = if k == 0 {
                    GameId::ZERO
                } else {
                    self.number_forms[&DyadicRational::integer(k)]
                };
                while k != n {
                    k += step;
                    prev = if step > 0 {
                        self.intern(vec![prev], vec![])?
                    } else {
                        self.intern(vec![], vec![prev])?
                    };
                    self.number_forms.insert(DyadicRational::integer(k), prev);
                }
                prev
            }
        } else {
            let unit = DyadicRational::unit(d.exponent())?;
            let lo = d.checked_sub(unit)?;
            let hi = d.checked_add(unit)?;
            let l = self.number_to_game(lo)?;
            let r = self.number_to_game(hi)?;
            self.intern(vec![l], vec![r])?
        };
        self.number_forms.insert(d, g);
        self.numbers.insert(g, Some(d));
        self.canon.insert(g, g);
        Ok(g)
    }

    /// Recognizes a form that is literally a canonical number form, without
    /// interning anything.
    pub fn as_number_form(&self, g: GameId) -> Option<DyadicRational> {
        let left = self.left_options(g);
        let right = self.right_options(g);
        match (left, right) {
            ([], []) => Some(DyadicRational::ZERO),
            ([l], []) => {
                let v = self.as_number_form(*l)?;
                (v.is_integer() && v.numerator() >= 0)
                    .then(|| DyadicRational::integer(v.numerator() + 1))
            }
            ([], [r]) => {
                let v = self.as_number_form(*r)?;
                (v.is_integer() && v.numerator() <= 0)
                    .then(|| DyadicRational::integer(v.numerator() - 1))
            }
            ([l], [r]) => {
                let a = self.as_number_form(*l)?;
                let b = self.as_number_form(*r)?;
                let mid = a.mean(b).ok()?;
                if mid.is_integer() {
                    return None;
                }
                let unit = DyadicRational::unit(mid.exponent()).ok()?;
                (b.checked_sub(a).ok()? == unit.checked_add(unit).ok()?).then_some(mid)
            }
            _ => None,
        }
    }
}
