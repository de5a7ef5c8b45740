use super::{Engine, GameId};
use crate::error::Result;

impl Engine {
    /// The canonical (simplest) form equal to `g`.
    ///
    /// Options are canonicalized first; then dominated options are removed
    /// and reversible options bypassed until neither applies.
    pub fn canonical_form(&mut self, g: GameId) -> Result<GameId> {
        if let Some(&c) = self.canon.get(&g) {
            return Ok(c);
        }
        let mut left = Vec::new();
        for o in self.left_options(g).to_vec() {
            left.push(self.canonical_form(o)?);
        }
        let mut right = Vec::new();
        for o in self.right_options(g).to_vec() {
            right.push(self.canonical_form(o)?);
        }
        // Same value as g, with canonical options; reversibility is
        // tested against it.
        let reference = self.intern(left.clone(), right.clone())?;
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();

        loop {
            self.remove_dominated(&mut left, true);
            self.remove_dominated(&mut right, false);
            if self.bypass_one_left(reference, &mut left) {
                continue;
            }
            if self.bypass_one_right(reference, &mut right) {
                continue;
            }
            break;
        }

        let c = self.intern(left, right)?;
        self.canon.insert(g, c);
        self.canon.insert(reference, c);
        self.canon.insert(c, c);
        Ok(c)
    }

    /// Drops options dominated by another option of the same side. Among
    /// equal options the earliest is kept.
    fn remove_dominated(&mut self, opts: &mut Vec<GameId>, left_side: bool) {
        let mut i = 0;
        while i < opts.len() {
            let a = opts[i];
            let mut dominated = false;
            for (j, &b) in opts.iter().enumerate() {
                if i == j {
                    continue;
                }
                let worse = if left_side {
                    self.le(a, b)
                } else {
                    self.le(b, a)
                };
                if worse {
                    // equal options: keep the one with the smaller index
                    let tie = if left_side { self.le(b, a) } else { self.le(a, b) };
                    if !tie || j < i {
                        dominated = true;
                        break;
                    }
                }
            }
            if dominated {
                opts.remove(i);
            } else {
                i += 1;
            }
        }
    }

    /// Replaces the first left option `gL` having some `gLR ≤ g` by the
    /// left options of that `gLR`.
    fn bypass_one_left(&mut self, reference: GameId, left: &mut Vec<GameId>) -> bool {
        for i in 0..left.len() {
            let gl = left[i];
            for glr in self.right_options(gl).to_vec() {
                if self.le(glr, reference) {
                    left.remove(i);
                    left.extend_from_slice(self.left_options(glr));
                    left.sort_unstable();
                    left.dedup();
                    return true;
                }
            }
        }
        false
    }

    /// Dual of [`Self::bypass_one_left`]: `gR` with some `gRL ≥ g` is
    /// replaced by the right options of that `gRL`.
    fn bypass_one_right(&mut self, reference: GameId, right: &mut Vec<GameId>) -> bool {
        for i in 0..right.len() {
            let gr = right[i];
            for grl in self.left_options(gr).to_vec() {
                if self.le(reference, grl) {
                    right.remove(i);
                    right.extend_from_slice(self.right_options(grl));
                    right.sort_unstable();
                    right.dedup();
                    return true;
                }
            }
        }
        false
    }

    /// Whether `g` is already in canonical form.
    pub fn is_canonical(&mut self, g: GameId) -> Result<bool> {
        Ok(self.canonical_form(g)? == g)
    }
}
