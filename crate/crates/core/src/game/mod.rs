//! Interned arena of short partizan game forms.
//!
//! Every form lives in an append-only [`Engine`] and is referred to by a
//! [`GameId`]. Option lists are deduplicated and sorted before interning, so
//! two structurally equal forms always share an id. All derived relations
//! (order, outcome, sums, canonical forms, number values) are memoized on ids.

mod canonical;
mod literal;
mod number;

use std::fmt;
use std::hash::{BuildHasher, Hash, Hasher};

use hashbrown::HashTable;
use rustc_hash::{FxBuildHasher, FxHashMap};
use serde::Serialize;

use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};

pub use number::simplest_between;

/// Handle to an interned game form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct GameId(u32);

impl GameId {
    /// The empty game `{|}`. Always the first form of every engine.
    pub const ZERO: GameId = GameId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Result of perfect play.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Outcome {
    /// Left wins whoever starts.
    L,
    /// Right wins whoever starts.
    R,
    /// The second player wins.
    P,
    /// The first player wins.
    N,
}

impl Outcome {
    pub fn from_first_player_wins(left_first_wins: bool, right_first_wins: bool) -> Self {
        match (left_first_wins, right_first_wins) {
            (true, true) => Outcome::N,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
            (false, false) => Outcome::P,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::L => "L",
            Outcome::R => "R",
            Outcome::P => "P",
            Outcome::N => "N",
        };
        f.write_str(s)
    }
}

/// Resource caps for an engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Maximum number of interned forms.
    pub max_arena: usize,
    /// Maximum formal birthday of any interned form. Bounds recursion depth.
    pub max_birthday: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_arena: 5_000_000,
            max_birthday: 1024,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    start: u32,
    left_len: u32,
    right_len: u32,
    birthday: u32,
}

/// Append-only arena of interned forms plus the memo tables built over it.
pub struct Engine {
    limits: Limits,
    nodes: Vec<Node>,
    options: Vec<GameId>,
    index: HashTable<GameId>,
    hasher: FxBuildHasher,
    le_cache: FxHashMap<(GameId, GameId), bool>,
    left_wins: FxHashMap<GameId, bool>,
    right_wins: FxHashMap<GameId, bool>,
    negs: FxHashMap<GameId, GameId>,
    sums: FxHashMap<(GameId, GameId), GameId>,
    canon: FxHashMap<GameId, GameId>,
    numbers: FxHashMap<GameId, Option<DyadicRational>>,
    number_forms: FxHashMap<DyadicRational, GameId>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine")
            .field("limits", &self.limits)
            .field("forms", &self.nodes.len())
            .finish()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::with_limits(Limits::default())
    }

    pub fn with_limits(limits: Limits) -> Self {
        let mut engine = Engine {
            limits,
            nodes: Vec::new(),
            options: Vec::new(),
            index: HashTable::new(),
            hasher: FxBuildHasher,
            le_cache: FxHashMap::default(),
            left_wins: FxHashMap::default(),
            right_wins: FxHashMap::default(),
            negs: FxHashMap::default(),
            sums: FxHashMap::default(),
            canon: FxHashMap::default(),
            numbers: FxHashMap::default(),
            number_forms: FxHashMap::default(),
        };
        let zero = engine
            .intern(Vec::new(), Vec::new())
            .expect("empty game fits any budget");
        debug_assert_eq!(zero, GameId::ZERO);
        engine
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Number of interned forms.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, g: GameId) -> bool {
        g.index() < self.nodes.len()
    }

    /// Every interned form, in creation order.
    pub fn ids(&self) -> impl Iterator<Item = GameId> {
        (0..self.nodes.len() as u32).map(GameId)
    }

    fn check(&self, g: GameId) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::UnknownGame(g.0))
        }
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        let n = self.nodes[g.index()];
        let s = n.start as usize;
        &self.options[s..s + n.left_len as usize]
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        let n = self.nodes[g.index()];
        let s = (n.start + n.left_len) as usize;
        &self.options[s..s + n.right_len as usize]
    }

    /// Formal birthday: 0 for `{|}`, otherwise one more than the largest
    /// option birthday.
    pub fn birthday(&self, g: GameId) -> u32 {
        self.nodes[g.index()].birthday
    }

    fn hash_options(&self, left: &[GameId], right: &[GameId]) -> u64 {
        let mut h = self.hasher.build_hasher();
        left.hash(&mut h);
        right.hash(&mut h);
        h.finish()
    }

    /// Interns a form whose option lists are already validated.
    fn intern(&mut self, mut left: Vec<GameId>, mut right: Vec<GameId>) -> Result<GameId> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let hash = self.hash_options(&left, &right);
        let (nodes, options) = (&self.nodes, &self.options);
        let found = self.index.find(hash, |&id| {
            let n = nodes[id.index()];
            let s = n.start as usize;
            let l = n.left_len as usize;
            let r = n.right_len as usize;
            options[s..s + l] == left[..] && options[s + l..s + l + r] == right[..]
        });
        if let Some(&id) = found {
            return Ok(id);
        }
        if self.nodes.len() >= self.limits.max_arena {
            return Err(Error::ArenaBudget {
                limit: self.limits.max_arena,
            });
        }
        let birthday = left
            .iter()
            .chain(&right)
            .map(|o| self.nodes[o.index()].birthday + 1)
            .max()
            .unwrap_or(0);
        if birthday > self.limits.max_birthday {
            return Err(Error::DepthBudget {
                limit: self.limits.max_birthday,
            });
        }
        let id = GameId(self.nodes.len() as u32);
        self.nodes.push(Node {
            start: self.options.len() as u32,
            left_len: left.len() as u32,
            right_len: right.len() as u32,
            birthday,
        });
        self.options.extend_from_slice(&left);
        self.options.extend_from_slice(&right);
        let (nodes, options, hasher) = (&self.nodes, &self.options, &self.hasher);
        self.index.insert_unique(hash, id, |&other| {
            let n = nodes[other.index()];
            let s = n.start as usize;
            let mut h = hasher.build_hasher();
            options[s..s + n.left_len as usize].hash(&mut h);
            options[s + n.left_len as usize..s + (n.left_len + n.right_len) as usize]
                .hash(&mut h);
            h.finish()
        });
        Ok(id)
    }

    /// Interns `{left | right}`. Duplicates and ordering are irrelevant.
    pub fn make_game(&mut self, left: &[GameId], right: &[GameId]) -> Result<GameId> {
        for &g in left.iter().chain(right) {
            self.check(g)?;
        }
        self.intern(left.to_vec(), right.to_vec())
    }

    /// `*` = `{0|0}`.
    pub fn star(&mut self) -> GameId {
        self.intern(vec![GameId::ZERO], vec![GameId::ZERO])
            .expect("star fits any budget")
    }

    /// Conway negation.
    pub fn neg(&mut self, g: GameId) -> Result<GameId> {
        if let Some(&n) = self.negs.get(&g) {
            return Ok(n);
        }
        let left = self.right_options(g).to_vec();
        let right = self.left_options(g).to_vec();
        let left = left
            .into_iter()
            .map(|o| self.neg(o))
            .collect::<Result<Vec<_>>>()?;
        let right = right
            .into_iter()
            .map(|o| self.neg(o))
            .collect::<Result<Vec<_>>>()?;
        let n = self.intern(left, right)?;
        self.negs.insert(g, n);
        self.negs.insert(n, g);
        Ok(n)
    }

    /// Disjunctive sum, expanded eagerly.
    pub fn sum(&mut self, g: GameId, h: GameId) -> Result<GameId> {
        if g == GameId::ZERO {
            return Ok(h);
        }
        if h == GameId::ZERO {
            return Ok(g);
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.sums.get(&key) {
            return Ok(s);
        }
        let (gl, gr) = (self.left_options(g).to_vec(), self.right_options(g).to_vec());
        let (hl, hr) = (self.left_options(h).to_vec(), self.right_options(h).to_vec());
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        for o in gl {
            left.push(self.sum(o, h)?);
        }
        for o in hl {
            left.push(self.sum(g, o)?);
        }
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for o in gr {
            right.push(self.sum(o, h)?);
        }
        for o in hr {
            right.push(self.sum(g, o)?);
        }
        let s = self.intern(left, right)?;
        self.sums.insert(key, s);
        Ok(s)
    }

    /// `g - h`.
    pub fn difference(&mut self, g: GameId, h: GameId) -> Result<GameId> {
        let nh = self.neg(h)?;
        self.sum(g, nh)
    }

    /// `g ≤ h`: no left option of `g` is ≥ `h` and no right option of `h`
    /// is ≤ `g`.
    pub fn le(&mut self, g: GameId, h: GameId) -> bool {
        if g == h {
            return true;
        }
        if let Some(&b) = self.le_cache.get(&(g, h)) {
            return b;
        }
        let mut result = true;
        let gl = self.nodes[g.index()];
        for i in 0..gl.left_len {
            let o = self.options[(gl.start + i) as usize];
            if self.le(h, o) {
                result = false;
                break;
            }
        }
        if result {
            let hn = self.nodes[h.index()];
            for i in 0..hn.right_len {
                let o = self.options[(hn.start + hn.left_len + i) as usize];
                if self.le(o, g) {
                    result = false;
                    break;
                }
            }
        }
        self.le_cache.insert((g, h), result);
        result
    }

    pub fn ge(&mut self, g: GameId, h: GameId) -> bool {
        self.le(h, g)
    }

    /// Value equality: `g ≤ h` and `h ≤ g`.
    pub fn equal(&mut self, g: GameId, h: GameId) -> bool {
        self.le(g, h) && self.le(h, g)
    }

    /// Strict order: `g ≤ h` and not `h ≤ g`.
    pub fn lt(&mut self, g: GameId, h: GameId) -> bool {
        self.le(g, h) && !self.le(h, g)
    }

    /// Whether Left, moving first, has a winning move.
    pub fn left_first_wins(&mut self, g: GameId) -> bool {
        if let Some(&b) = self.left_wins.get(&g) {
            return b;
        }
        let n = self.nodes[g.index()];
        let mut wins = false;
        for i in 0..n.left_len {
            let o = self.options[(n.start + i) as usize];
            if !self.right_first_wins(o) {
                wins = true;
                break;
            }
        }
        self.left_wins.insert(g, wins);
        wins
    }

    /// Whether Right, moving first, has a winning move.
    pub fn right_first_wins(&mut self, g: GameId) -> bool {
        if let Some(&b) = self.right_wins.get(&g) {
            return b;
        }
        let n = self.nodes[g.index()];
        let mut wins = false;
        for i in 0..n.right_len {
            let o = self.options[(n.start + n.left_len + i) as usize];
            if !self.left_first_wins(o) {
                wins = true;
                break;
            }
        }
        self.right_wins.insert(g, wins);
        wins
    }

    pub fn outcome(&mut self, g: GameId) -> Outcome {
        let l = self.left_first_wins(g);
        let r = self.right_first_wins(g);
        Outcome::from_first_player_wins(l, r)
    }

    /// True when every incentive of the form is negative: `gL - g < 0` for
    /// each left option and `g - gR < 0` for each right option.
    ///
    /// Incentives depend only on values, so they are computed on canonical
    /// forms.
    pub fn incentives_negative(&mut self, g: GameId) -> Result<bool> {
        let cg = self.canonical_form(g)?;
        for o in self.left_options(g).to_vec() {
            let co = self.canonical_form(o)?;
            let inc = self.difference(co, cg)?;
            if self.outcome(inc) != Outcome::R {
                return Ok(false);
            }
        }
        for o in self.right_options(g).to_vec() {
            let co = self.canonical_form(o)?;
            let inc = self.difference(cg, co)?;
            if self.outcome(inc) != Outcome::R {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_idempotent() {
        let mut e = Engine::new();
        assert_eq!(e.make_game(&[], &[]).unwrap(), GameId::ZERO);
        let star = e.make_game(&[GameId::ZERO], &[GameId::ZERO]).unwrap();
        assert_eq!(e.make_game(&[GameId::ZERO], &[GameId::ZERO]).unwrap(), star);
        let one = e.make_game(&[GameId::ZERO, GameId::ZERO], &[]).unwrap();
        assert_eq!(e.make_game(&[GameId::ZERO], &[]).unwrap(), one);
        let a = e.make_game(&[one, GameId::ZERO], &[star]).unwrap();
        let b = e.make_game(&[GameId::ZERO, one, one], &[star]).unwrap();
        assert_eq!(a, b);
        assert_eq!(e.left_options(a), &[GameId::ZERO, one]);
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let mut e = Engine::new();
        assert_eq!(e.make_game(&[GameId(7)], &[]), Err(Error::UnknownGame(7)));
    }

    #[test]
    fn arena_budget_is_enforced() {
        let mut e = Engine::with_limits(Limits {
            max_arena: 3,
            max_birthday: 100,
        });
        let one = e.make_game(&[GameId::ZERO], &[]).unwrap();
        let two = e.make_game(&[one], &[]).unwrap();
        assert!(e.make_game(&[two], &[]).unwrap_err().is_budget());
        // already interned forms are still found
        assert_eq!(e.make_game(&[one], &[]).unwrap(), two);
    }

    #[test]
    fn depth_budget_is_enforced() {
        let mut e = Engine::with_limits(Limits {
            max_arena: 100,
            max_birthday: 1,
        });
        let one = e.make_game(&[GameId::ZERO], &[]).unwrap();
        assert_eq!(
            e.make_game(&[one], &[]),
            Err(Error::DepthBudget { limit: 1 })
        );
    }

    #[test]
    fn birthdays() {
        let mut e = Engine::new();
        let star = e.star();
        assert_eq!(e.birthday(GameId::ZERO), 0);
        assert_eq!(e.birthday(star), 1);
        let g = e.make_game(&[GameId::ZERO, star], &[star]).unwrap();
        assert_eq!(e.birthday(g), 2);
    }

    #[test]
    fn star_is_fuzzy_and_self_negative() {
        let mut e = Engine::new();
        let star = e.star();
        assert!(!e.le(GameId::ZERO, star));
        assert!(!e.le(star, GameId::ZERO));
        assert_eq!(e.outcome(star), Outcome::N);
        assert_eq!(e.neg(star).unwrap(), star);
        assert_eq!(e.neg(GameId::ZERO).unwrap(), GameId::ZERO);
        let twice = e.sum(star, star).unwrap();
        assert_eq!(e.outcome(twice), Outcome::P);
    }

    #[test]
    fn zero_is_the_additive_identity() {
        let mut e = Engine::new();
        let star = e.star();
        let g = e.make_game(&[GameId::ZERO, star], &[star]).unwrap();
        assert_eq!(e.sum(GameId::ZERO, g).unwrap(), g);
        assert_eq!(e.sum(g, GameId::ZERO).unwrap(), g);
    }

    #[test]
    fn outcome_of_zero() {
        let mut e = Engine::new();
        assert_eq!(e.outcome(GameId::ZERO), Outcome::P);
    }
}
