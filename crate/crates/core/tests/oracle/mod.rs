//! Brute-force reference implementations used only by tests.
//!
//! Nothing here shares code with the engine: forms are plain trees without
//! interning or simplification, the order is the recursive definition,
//! outcomes are minimax, and numbers come from the day-by-day construction.

#![allow(dead_code)]

use std::collections::HashMap;

use numbergate::rulesets::Ruleset;
use numbergate::{DyadicRational, Engine, GameId, Outcome};

/// Exact rational `num / 2^exp` kept unreduced-free via i128 arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Q {
    pub num: i128,
    pub exp: u32,
}

impl Q {
    pub fn int(n: i128) -> Q {
        Q { num: n, exp: 0 }
    }

    fn norm(mut self) -> Q {
        while self.exp > 0 && self.num % 2 == 0 {
            self.num /= 2;
            self.exp -= 1;
        }
        self
    }

    fn scaled(self, exp: u32) -> i128 {
        self.num << (exp - self.exp)
    }

    pub fn mid(self, other: Q) -> Q {
        let e = self.exp.max(other.exp) + 1;
        Q {
            num: self.scaled(e) + other.scaled(e),
            exp: e + 1,
        }
        .norm()
    }

    pub fn add(self, other: Q) -> Q {
        let e = self.exp.max(other.exp);
        Q {
            num: self.scaled(e) + other.scaled(e),
            exp: e,
        }
        .norm()
    }

    pub fn to_dyadic(self) -> DyadicRational {
        DyadicRational::new(self.num as i64, self.exp).unwrap()
    }

    pub fn from_dyadic(d: DyadicRational) -> Q {
        Q {
            num: d.numerator() as i128,
            exp: d.exponent(),
        }
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> std::cmp::Ordering {
        let e = self.exp.max(other.exp);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

fn next_day(prev: &[Q]) -> Vec<Q> {
    let mut next = vec![prev[0].add(Q::int(-1))];
    for w in prev.windows(2) {
        next.push(w[0]);
        next.push(w[0].mid(w[1]));
    }
    next.push(*prev.last().unwrap());
    next.push(prev.last().unwrap().add(Q::int(1)));
    next
}

/// Sorted lists of the numbers born by each day: day 0 is `[0]`, and day
/// `d + 1` adds one below the minimum, one above the maximum and the
/// midpoint of every adjacent pair.
pub fn numbers_by_day(days: u32) -> Vec<Vec<Q>> {
    let mut out = vec![vec![Q::int(0)]];
    for _ in 0..days {
        let next = next_day(out.last().unwrap());
        out.push(next);
    }
    out
}

/// The first-born number strictly between the bounds, by enumeration.
pub fn simplest_by_enumeration(lo: Option<Q>, hi: Option<Q>, max_day: u32) -> Option<Q> {
    let mut day = vec![Q::int(0)];
    for _ in 0..=max_day {
        let fits: Vec<Q> = day
            .iter()
            .copied()
            .filter(|&x| lo.is_none_or(|a| a < x) && hi.is_none_or(|b| x < b))
            .collect();
        if let Some(&x) = fits.first() {
            assert_eq!(fits.len(), 1, "two numbers of the same day fit");
            return Some(x);
        }
        day = next_day(&day);
    }
    None
}

/// Hackenbush string value, ground first, `true` for a blue edge: the
/// leading run counts ±1 per edge, then each later edge counts half the
/// previous one.
pub fn hackenbush_value(blue: &[bool]) -> Q {
    let mut v = Q::int(0);
    let Some(&first) = blue.first() else {
        return v;
    };
    let mut i = 0;
    while i < blue.len() && blue[i] == first {
        v = v.add(Q::int(if first { 1 } else { -1 }));
        i += 1;
    }
    let mut exp = 1;
    for &b in &blue[i..] {
        let step = Q { num: if b { 1 } else { -1 }, exp };
        v = v.add(step);
        exp += 1;
    }
    v
}

/// Plain game trees in an append-only list; no interning.
#[derive(Default)]
pub struct Forest {
    nodes: Vec<(Vec<usize>, Vec<usize>)>,
    le_memo: HashMap<(usize, usize), bool>,
    lw_memo: HashMap<usize, bool>,
    rw_memo: HashMap<usize, bool>,
    sum_memo: HashMap<(usize, usize), usize>,
    neg_memo: HashMap<usize, usize>,
    number_memo: HashMap<(i128, u32), usize>,
}

impl Forest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(&mut self, left: Vec<usize>, right: Vec<usize>) -> usize {
        self.nodes.push((left, right));
        self.nodes.len() - 1
    }

    pub fn left(&self, g: usize) -> &[usize] {
        &self.nodes[g].0
    }

    pub fn right(&self, g: usize) -> &[usize] {
        &self.nodes[g].1
    }

    pub fn birthday(&self, g: usize) -> u32 {
        let (l, r) = &self.nodes[g];
        l.iter().chain(r).map(|&c| self.birthday(c) + 1).max().unwrap_or(0)
    }

    /// `g ≤ h`: no `g^L ≥ h` and no `h^R ≤ g`.
    pub fn le(&mut self, g: usize, h: usize) -> bool {
        if let Some(&v) = self.le_memo.get(&(g, h)) {
            return v;
        }
        let gl = self.nodes[g].0.clone();
        let hr = self.nodes[h].1.clone();
        let v = !gl.iter().any(|&x| self.le(h, x)) && !hr.iter().any(|&y| self.le(y, g));
        self.le_memo.insert((g, h), v);
        v
    }

    pub fn eq(&mut self, g: usize, h: usize) -> bool {
        self.le(g, h) && self.le(h, g)
    }

    pub fn left_first_wins(&mut self, g: usize) -> bool {
        if let Some(&v) = self.lw_memo.get(&g) {
            return v;
        }
        let gl = self.nodes[g].0.clone();
        let v = gl.iter().any(|&x| !self.right_first_wins(x));
        self.lw_memo.insert(g, v);
        v
    }

    pub fn right_first_wins(&mut self, g: usize) -> bool {
        if let Some(&v) = self.rw_memo.get(&g) {
            return v;
        }
        let gr = self.nodes[g].1.clone();
        let v = gr.iter().any(|&x| !self.left_first_wins(x));
        self.rw_memo.insert(g, v);
        v
    }

    pub fn outcome(&mut self, g: usize) -> Outcome {
        match (self.left_first_wins(g), self.right_first_wins(g)) {
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
            (false, false) => Outcome::P,
            (true, true) => Outcome::N,
        }
    }

    pub fn neg(&mut self, g: usize) -> usize {
        if let Some(&v) = self.neg_memo.get(&g) {
            return v;
        }
        let (l, r) = self.nodes[g].clone();
        let nl = r.iter().map(|&x| self.neg(x)).collect();
        let nr = l.iter().map(|&x| self.neg(x)).collect();
        let v = self.node(nl, nr);
        self.neg_memo.insert(g, v);
        v
    }

    pub fn sum(&mut self, g: usize, h: usize) -> usize {
        if let Some(&v) = self.sum_memo.get(&(g, h)) {
            return v;
        }
        let (gl, gr) = self.nodes[g].clone();
        let (hl, hr) = self.nodes[h].clone();
        let mut l = Vec::new();
        let mut r = Vec::new();
        for &x in &gl {
            l.push(self.sum(x, h));
        }
        for &y in &hl {
            l.push(self.sum(g, y));
        }
        for &x in &gr {
            r.push(self.sum(x, h));
        }
        for &y in &hr {
            r.push(self.sum(g, y));
        }
        let v = self.node(l, r);
        self.sum_memo.insert((g, h), v);
        v
    }

    /// `{x - 1 |}` ladders for integers, `{x - u | x + u}` otherwise.
    pub fn number(&mut self, x: Q) -> usize {
        let x = x.norm();
        if let Some(&v) = self.number_memo.get(&(x.num, x.exp)) {
            return v;
        }
        let v = self.build_number(x);
        self.number_memo.insert((x.num, x.exp), v);
        v
    }

    fn build_number(&mut self, x: Q) -> usize {
        if x.exp == 0 {
            let mut g = self.node(vec![], vec![]);
            for _ in 0..x.num.unsigned_abs() {
                g = if x.num > 0 {
                    self.node(vec![g], vec![])
                } else {
                    self.node(vec![], vec![g])
                };
            }
            return g;
        }
        let u = Q { num: 1, exp: x.exp };
        let lo = self.number(x.add(Q { num: -1, exp: x.exp }));
        let hi = self.number(x.add(u));
        self.node(vec![lo], vec![hi])
    }

    /// The number equal to `g`, searched among all numbers born no later
    /// than `g` itself.
    pub fn value(&mut self, g: usize) -> Option<Q> {
        let day = self.birthday(g);
        let candidates = numbers_by_day(day).pop().unwrap();
        for x in candidates {
            let n = self.number(x);
            if self.eq(g, n) {
                return Some(x);
            }
        }
        None
    }

    /// Copies the literal form of an engine game.
    pub fn import(&mut self, engine: &Engine, g: GameId, memo: &mut HashMap<GameId, usize>) -> usize {
        if let Some(&v) = memo.get(&g) {
            return v;
        }
        let l = engine.left_options(g).iter().map(|&x| self.import(engine, x, memo)).collect();
        let r = engine.right_options(g).iter().map(|&x| self.import(engine, x, memo)).collect();
        let v = self.node(l, r);
        memo.insert(g, v);
        v
    }

    /// Builds the game tree of a ruleset position straight from its moves.
    pub fn from_position<R: Ruleset>(
        &mut self,
        ruleset: &R,
        p: &R::Position,
        memo: &mut HashMap<R::Position, usize>,
    ) -> usize {
        if let Some(&v) = memo.get(p) {
            return v;
        }
        let l = ruleset
            .left_moves(p)
            .iter()
            .map(|q| self.from_position(ruleset, q, memo))
            .collect();
        let r = ruleset
            .right_moves(p)
            .iter()
            .map(|q| self.from_position(ruleset, q, memo))
            .collect();
        let v = self.node(l, r);
        memo.insert(p.clone(), v);
        v
    }

    /// F1 and F2 for the pair `(g^L, g^R)` straight from the definitions.
    pub fn pair_properties(&mut self, gl: usize, gr: usize) -> (bool, bool) {
        let glr = self.nodes[gl].1.clone();
        let grl = self.nodes[gr].0.clone();
        let f1 = grl.iter().any(|&x| self.le(gl, x)) || glr.iter().any(|&y| self.le(y, gr));
        let f2 = glr.iter().any(|&y| grl.iter().any(|&x| self.le(y, x)));
        (f1, f2)
    }
}

/// A small literal form used to drive random tests.
#[derive(Clone, Debug)]
pub struct Lit {
    pub left: Vec<Lit>,
    pub right: Vec<Lit>,
}

impl Lit {
    pub fn build(&self, engine: &mut Engine) -> GameId {
        let l: Vec<GameId> = self.left.iter().map(|x| x.build(engine)).collect();
        let r: Vec<GameId> = self.right.iter().map(|x| x.build(engine)).collect();
        engine.make_game(&l, &r).unwrap()
    }

    pub fn plant(&self, forest: &mut Forest) -> usize {
        let l = self.left.iter().map(|x| x.plant(forest)).collect();
        let r = self.right.iter().map(|x| x.plant(forest)).collect();
        forest.node(l, r)
    }
}
