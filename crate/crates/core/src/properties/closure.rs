//! Hereditarily closed position sets and the closure-wide theorem checks.

use std::hash::Hash;

use indexmap::{IndexMap, IndexSet};
use rustc_hash::FxBuildHasher;
use serde::Serialize;

use super::con::{confirm_con_on, default_x_set, ConProbe, ConVerdict};
use super::{assemble, search_pair, PairClass, PairClassification, PairSearch};
use crate::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::game::{Engine, GameId};
use crate::rulesets::Ruleset;

/// Cap on listed witnesses and violations in a report.
pub const MAX_LISTED: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureLimits {
    pub max_positions: usize,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_positions: 1_000_000,
        }
    }
}

type PositionSet<P> = IndexSet<P, FxBuildHasher>;

/// Breadth-first closure: positions in discovery order plus CSR child lists
/// (`starts[2i]..starts[2i+1]` left, `starts[2i+1]..starts[2i+2]` right).
fn explore<P, F>(
    seeds: impl IntoIterator<Item = P>,
    limits: ClosureLimits,
    mut moves: F,
) -> Result<(PositionSet<P>, Vec<u32>, Vec<u32>)>
where
    P: Clone + Eq + Hash,
    F: FnMut(&P) -> (Vec<P>, Vec<P>),
{
    let mut set = PositionSet::default();
    for s in seeds {
        set.insert(s);
    }
    let over = |set: &PositionSet<P>, done: usize| {
        Err(Error::ClosureBudget {
            limit: limits.max_positions,
            frontier: set.len() - done,
        })
    };
    if set.len() > limits.max_positions {
        return over(&set, 0);
    }
    let mut starts = vec![0u32];
    let mut edges = Vec::new();
    let mut i = 0;
    while i < set.len() {
        let p = set[i].clone();
        let (left, right) = moves(&p);
        for side in [left, right] {
            for q in side {
                let (idx, _) = set.insert_full(q);
                edges.push(idx as u32);
            }
            starts.push(edges.len() as u32);
        }
        i += 1;
        if set.len() > limits.max_positions {
            return over(&set, i);
        }
    }
    Ok((set, starts, edges))
}

/// The least option-closed superset of `seeds`, in breadth-first order.
pub fn hcr_closure<R: Ruleset>(
    ruleset: &R,
    seeds: &[R::Position],
    limits: ClosureLimits,
) -> Result<Vec<R::Position>> {
    let (set, _, _) = explore(seeds.iter().cloned(), limits, |p| {
        (ruleset.left_moves(p), ruleset.right_moves(p))
    })?;
    Ok(set.into_iter().collect())
}

/// A hereditarily closed set of positions with its move graph and the
/// literal game form of every position.
#[derive(Clone, Debug)]
pub struct ClosureGraph {
    labels: Vec<String>,
    games: Vec<GameId>,
    starts: Vec<u32>,
    edges: Vec<u32>,
}

impl ClosureGraph {
    /// Closure of ruleset positions; every position is converted to its
    /// literal form.
    pub fn from_ruleset<R: Ruleset>(
        engine: &mut Engine,
        ruleset: &R,
        seeds: &[R::Position],
        limits: ClosureLimits,
    ) -> Result<Self> {
        let (set, starts, edges) = explore(seeds.iter().cloned(), limits, |p| {
            (ruleset.left_moves(p), ruleset.right_moves(p))
        })?;
        let labels = set.iter().map(|p| ruleset.render_position(p)).collect();
        drop(set);
        let mut graph = ClosureGraph {
            labels,
            games: Vec::new(),
            starts,
            edges,
        };
        let mut games = vec![GameId::ZERO; graph.len()];
        for i in graph.topological_order() {
            let left: Vec<GameId> = graph.left(i).iter().map(|&c| games[c as usize]).collect();
            let right: Vec<GameId> = graph.right(i).iter().map(|&c| games[c as usize]).collect();
            games[i] = engine.make_game(&left, &right)?;
        }
        graph.games = games;
        Ok(graph)
    }

    /// Closure of game forms under taking (literal) options.
    pub fn from_games(engine: &Engine, roots: &[GameId], limits: ClosureLimits) -> Result<Self> {
        for &g in roots {
            if !engine.contains(g) {
                return Err(Error::UnknownGame(g.index() as u32));
            }
        }
        let (set, starts, edges) = explore(roots.iter().copied(), limits, |&g| {
            (engine.left_options(g).to_vec(), engine.right_options(g).to_vec())
        })?;
        Ok(ClosureGraph {
            labels: set.iter().map(|&g| engine.render(g)).collect(),
            games: set.into_iter().collect(),
            starts,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn game(&self, i: usize) -> GameId {
        self.games[i]
    }

    pub fn left(&self, i: usize) -> &[u32] {
        &self.edges[self.starts[2 * i] as usize..self.starts[2 * i + 1] as usize]
    }

    pub fn right(&self, i: usize) -> &[u32] {
        &self.edges[self.starts[2 * i + 1] as usize..self.starts[2 * i + 2] as usize]
    }

    /// Children before parents.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.len();
        let mut done = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if done[root] {
                continue;
            }
            stack.push((root, 0));
            while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                let lo = self.starts[2 * node] as usize;
                let hi = self.starts[2 * node + 2] as usize;
                if lo + *next < hi {
                    let child = self.edges[lo + *next] as usize;
                    *next += 1;
                    if !done[child] {
                        stack.push((child, 0));
                    }
                } else {
                    stack.pop();
                    if !done[node] {
                        done[node] = true;
                        order.push(node);
                    }
                }
            }
        }
        order
    }
}

/// Extreme number among one side's options of a position.
#[derive(Clone, Copy, Debug)]
enum Extreme {
    Empty,
    NotNumeric,
    Value(DyadicRational, u32),
}

/// Values of every position of a closure, plus pair classification over it.
#[derive(Debug)]
pub struct ClosureAnalysis {
    pub graph: ClosureGraph,
    /// Canonical form of each position.
    pub values: Vec<GameId>,
    pub numbers: Vec<Option<DyadicRational>>,
    left_max: Vec<Extreme>,
    right_min: Vec<Extreme>,
}

/// One classified pair of a closure, by node index.
#[derive(Clone, Debug)]
pub struct NodePair {
    pub position: usize,
    pub left: usize,
    pub right: usize,
    pub class: PairClassification,
    /// Node of the F1 witness, with `true` for the `G^{RL}` side.
    pub f1_node: Option<(bool, usize)>,
    /// Nodes `(G^{LR}, G^{RL})` of the F2 witness.
    pub f2_nodes: Option<(usize, usize)>,
    /// `G^{RL}` is the very position `G^L`, or `G^{LR}` the very `G^R`.
    pub identity_f1: bool,
    /// Some `G^{LR}` and `G^{RL}` are the very same position.
    pub identity_f2: bool,
}

fn sorted_intersects(a: &[u32], b: &[u32]) -> bool {
    a.iter().any(|x| b.contains(x))
}

impl ClosureAnalysis {
    pub fn new(engine: &mut Engine, graph: ClosureGraph) -> Result<Self> {
        let n = graph.len();
        let mut values = Vec::with_capacity(n);
        let mut numbers = Vec::with_capacity(n);
        for i in 0..n {
            let c = engine.canonical_form(graph.game(i))?;
            values.push(c);
            numbers.push(engine.to_number(c)?);
        }
        let extreme = |children: &[u32], want_max: bool| -> Extreme {
            let mut best: Option<(DyadicRational, u32)> = None;
            for &c in children {
                let Some(v) = numbers[c as usize] else {
                    return Extreme::NotNumeric;
                };
                let better = match best {
                    None => true,
                    Some((b, _)) => {
                        if want_max {
                            v > b
                        } else {
                            v < b
                        }
                    }
                };
                if better {
                    best = Some((v, c));
                }
            }
            best.map_or(Extreme::Empty, |(v, c)| Extreme::Value(v, c))
        };
        let left_max = (0..n).map(|i| extreme(graph.left(i), true)).collect();
        let right_min = (0..n).map(|i| extreme(graph.right(i), false)).collect();
        Ok(ClosureAnalysis {
            graph,
            values,
            numbers,
            left_max,
            right_min,
        })
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn all_numbers(&self) -> bool {
        self.numbers.iter().all(Option::is_some)
    }

    /// Exact search when every value involved is a number.
    fn numeric_search(&self, gl: usize, gr: usize) -> Option<(PairSearch, Option<(bool, usize)>, Option<(usize, usize)>)> {
        let a = self.numbers[gl]?;
        let b = self.numbers[gr]?;
        let rl = self.left_max[gr];
        let lr = self.right_min[gl];
        if matches!(rl, Extreme::NotNumeric) || matches!(lr, Extreme::NotNumeric) {
            return None;
        }
        let pos_in = |list: &[u32], node: u32| list.iter().position(|&c| c == node).unwrap();
        let mut f1 = None;
        let mut f1_node = None;
        if let Extreme::Value(v, node) = rl {
            if v >= a {
                f1 = Some((true, pos_in(self.graph.left(gr), node), v > a));
                f1_node = Some((true, node as usize));
            }
        }
        if !matches!(f1, Some((_, _, true))) {
            if let Extreme::Value(u, node) = lr {
                if u <= b && (f1.is_none() || u < b) {
                    f1 = Some((false, pos_in(self.graph.right(gl), node), u < b));
                    f1_node = Some((false, node as usize));
                }
            }
        }
        let (f2, f2_nodes) = match (lr, rl) {
            (Extreme::Value(u, x), Extreme::Value(v, y)) if u <= v => (
                Some((pos_in(self.graph.right(gl), x), pos_in(self.graph.left(gr), y))),
                Some((x as usize, y as usize)),
            ),
            _ => (None, None),
        };
        Some((PairSearch { f1, f2 }, f1_node, f2_nodes))
    }

    /// Classifies the pair `(left, right)` of child nodes of `position`.
    pub fn classify(&self, engine: &mut Engine, position: usize, left: usize, right: usize) -> NodePair {
        let g = &self.graph;
        let gl_right = g.right(left);
        let gr_left = g.left(right);
        let identity_f2 = sorted_intersects(gl_right, gr_left);
        let identity_f1 = gr_left.contains(&(left as u32)) || gl_right.contains(&(right as u32));
        let (search, f1_node, f2_nodes) = match self.numeric_search(left, right) {
            Some(found) => found,
            None => {
                let vr: Vec<GameId> = gl_right.iter().map(|&c| self.values[c as usize]).collect();
                let vl: Vec<GameId> = gr_left.iter().map(|&c| self.values[c as usize]).collect();
                let s = search_pair(engine, self.values[left], self.values[right], &vr, &vl);
                let f1_node = s.f1.map(|(rl, i, _)| {
                    (rl, if rl { gr_left[i] } else { gl_right[i] } as usize)
                });
                let f2_nodes = s.f2.map(|(i, j)| (gl_right[i] as usize, gr_left[j] as usize));
                (s, f1_node, f2_nodes)
            }
        };
        let lit_right: Vec<GameId> = gl_right.iter().map(|&c| g.game(c as usize)).collect();
        let lit_left: Vec<GameId> = gr_left.iter().map(|&c| g.game(c as usize)).collect();
        let class = assemble(g.game(left), g.game(right), search, &lit_right, &lit_left);
        NodePair {
            position,
            left,
            right,
            class,
            f1_node,
            f2_nodes,
            identity_f1,
            identity_f2,
        }
    }

    /// Classifies every pair of every position, in position order then
    /// option order.
    pub fn for_each_pair(&self, engine: &mut Engine, mut f: impl FnMut(&mut Engine, NodePair) -> Result<()>) -> Result<()> {
        for i in 0..self.len() {
            for &l in self.graph.left(i) {
                for &r in self.graph.right(i) {
                    let p = self.classify(engine, i, l as usize, r as usize);
                    f(engine, p)?;
                }
            }
        }
        Ok(())
    }

    /// Serializable record of one pair.
    pub fn record(&self, p: &NodePair) -> PairRecord {
        let g = &self.graph;
        PairRecord {
            position: g.label(p.position).to_string(),
            left_option: g.label(p.left).to_string(),
            right_option: g.label(p.right).to_string(),
            f1: p.class.f1,
            f1_strict: p.class.f1_strict,
            f1_witness: p.f1_node.map(|(rl, n)| WitnessRecord {
                side: if rl { "RL" } else { "LR" },
                option: g.label(n).to_string(),
            }),
            f2: p.class.f2,
            f2_witness: p
                .f2_nodes
                .map(|(a, b)| (g.label(a).to_string(), g.label(b).to_string())),
            identity_f1: p.identity_f1,
            identity_f2: p.identity_f2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    /// `RL` for `G^{RL} ≥ G^L`, `LR` for `G^{LR} ≤ G^R`.
    pub side: &'static str,
    pub option: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub position: String,
    pub left_option: String,
    pub right_option: String,
    pub f1: bool,
    pub f1_strict: bool,
    pub f1_witness: Option<WitnessRecord>,
    pub f2: bool,
    pub f2_witness: Option<(String, String)>,
    pub identity_f1: bool,
    pub identity_f2: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub f1_only: u64,
    pub f2_only: u64,
    pub both: u64,
    pub neither: u64,
}

impl ClassCounts {
    fn add(&mut self, class: PairClass) {
        match class {
            PairClass::F1Only => self.f1_only += 1,
            PairClass::F2Only => self.f2_only += 1,
            PairClass::Both => self.both += 1,
            PairClass::Neither => self.neither += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.f1_only + self.f2_only + self.both + self.neither
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// Hypothesis met and conclusion verified.
    Holds,
    /// Hypothesis not met.
    Vacuous,
    Violated,
}

impl CheckStatus {
    fn of(hypothesis: bool, conclusion: bool) -> Self {
        match (hypothesis, conclusion) {
            (false, _) => CheckStatus::Vacuous,
            (true, true) => CheckStatus::Holds,
            (true, false) => CheckStatus::Violated,
        }
    }
}

/// One implication verified over the whole closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub status: CheckStatus,
}

/// The same implications verified over the closure of every single
/// position. Counts how many sub-closures met each hypothesis, and how many
/// of those violated the conclusion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubclosureStats {
    pub f1_or_f2: u64,
    pub f1_or_f2_not_numbers: u64,
    pub numbers: u64,
    pub numbers_not_f1: u64,
    pub f1: u64,
    pub f1_not_numbers: u64,
    pub f2: u64,
    pub f2_not_integers: u64,
    pub f2_not_strict_f1: u64,
}

impl SubclosureStats {
    pub fn violations(&self) -> u64 {
        self.f1_or_f2_not_numbers
            + self.numbers_not_f1
            + self.f1_not_numbers
            + self.f2_not_integers
            + self.f2_not_strict_f1
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FastPathStats {
    pub f1_identities: u64,
    pub f2_identities: u64,
    pub disagreements: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditStats {
    pub audited: u64,
    pub failed: u64,
}

/// Positions whose incentives are all negative, and how many of those are
/// not numbers (expected zero).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IncentiveStats {
    pub negative_incentives: u64,
    pub not_numbers: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `theorem`, `fast-path`, `audit` or `incentive`.
    pub kind: &'static str,
    pub check: String,
    pub position: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub ruleset: String,
    pub seeds: Vec<String>,
    pub position_count: usize,
    pub pair_count: u64,
    pub classes: ClassCounts,
    pub neither_witnesses: Vec<PairRecord>,
    pub all_numbers: bool,
    pub all_integers: bool,
    pub all_pairs_f1: bool,
    pub all_pairs_f2: bool,
    pub all_pairs_f1_or_f2: bool,
    /// Every pair satisfies F2, so every value is claimed to be an integer.
    pub all_integers_claim: bool,
    /// Numbers-iff-F1 verified in both directions.
    pub snc_consistent: bool,
    pub checks: Vec<TheoremCheck>,
    pub subclosures: SubclosureStats,
    pub fast_path: FastPathStats,
    pub witness_audit: AuditStats,
    pub incentives: IncentiveStats,
    pub con_probe: ConProbe,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub values: IndexMap<String, Option<DyadicRational>>,
}

impl ClosureReport {
    /// No theorem, fast-path, audit or incentive check tripped.
    pub fn consistent(&self) -> bool {
        self.violation_count == 0
    }

    /// The probes found non-number behaviour: a pair with neither property
    /// or a number sum with outcome N.
    pub fn found_probe_witness(&self) -> bool {
        self.classes.neither > 0
            || matches!(
                self.con_probe.verdict,
                ConVerdict::WitnessFound | ConVerdict::ForwardViolation
            )
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub x_set: Vec<DyadicRational>,
    pub audit_witnesses: bool,
    pub incentives: bool,
    pub include_values: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            x_set: default_x_set(),
            audit_witnesses: true,
            incentives: true,
            include_values: true,
        }
    }
}

#[derive(Default)]
struct Flags {
    all_f1: bool,
    all_f2: bool,
    all_f1_or_f2: bool,
    all_strict_f1: bool,
}

/// Builds the closure of `seeds` and verifies every check on it.
pub fn check_closure<R: Ruleset>(
    engine: &mut Engine,
    ruleset: &R,
    seeds: &[R::Position],
    limits: ClosureLimits,
    options: &CheckOptions,
) -> Result<ClosureReport> {
    let graph = ClosureGraph::from_ruleset(engine, ruleset, seeds, limits)?;
    let analysis = ClosureAnalysis::new(engine, graph)?;
    let seeds = seeds.iter().map(|s| ruleset.render_position(s)).collect();
    analyze(engine, &analysis, ruleset.name().to_string(), seeds, options)
}

/// [`check_closure`] over game forms and their literal options.
pub fn check_game_closure(
    engine: &mut Engine,
    roots: &[GameId],
    limits: ClosureLimits,
    options: &CheckOptions,
) -> Result<ClosureReport> {
    let graph = ClosureGraph::from_games(engine, roots, limits)?;
    let analysis = ClosureAnalysis::new(engine, graph)?;
    let seeds = roots.iter().map(|&g| engine.render(g)).collect();
    analyze(engine, &analysis, "game".to_string(), seeds, options)
}

/// Runs every closure-wide and per-position check over an analysis.
pub fn analyze(
    engine: &mut Engine,
    analysis: &ClosureAnalysis,
    ruleset: String,
    seeds: Vec<String>,
    options: &CheckOptions,
) -> Result<ClosureReport> {
    let n = analysis.len();
    let graph = &analysis.graph;
    let mut classes = ClassCounts::default();
    let mut neither_witnesses = Vec::new();
    let mut fast_path = FastPathStats::default();
    let mut audit = AuditStats::default();
    let mut violations: Vec<Violation> = Vec::new();
    let mut violation_count = 0u64;
    let mut local: Vec<Flags> = (0..n)
        .map(|_| Flags {
            all_f1: true,
            all_f2: true,
            all_f1_or_f2: true,
            all_strict_f1: true,
        })
        .collect();

    let push = |violations: &mut Vec<Violation>, count: &mut u64, v: Violation| {
        *count += 1;
        if violations.len() < MAX_LISTED {
            violations.push(v);
        }
    };

    analysis.for_each_pair(engine, |engine, p| {
        let c = &p.class;
        classes.add(c.class());
        let flags = &mut local[p.position];
        flags.all_f1 &= c.f1;
        flags.all_f2 &= c.f2;
        flags.all_f1_or_f2 &= c.f1 || c.f2;
        flags.all_strict_f1 &= c.f1 && c.f1_strict;
        if !c.f1 && !c.f2 && neither_witnesses.len() < MAX_LISTED {
            neither_witnesses.push(analysis.record(&p));
        }
        fast_path.f1_identities += p.identity_f1 as u64;
        fast_path.f2_identities += p.identity_f2 as u64;
        if (p.identity_f1 && !c.f1) || (p.identity_f2 && !c.f2) {
            fast_path.disagreements += 1;
            push(
                &mut violations,
                &mut violation_count,
                Violation {
                    kind: "fast-path",
                    check: "identity implies property".into(),
                    position: Some(graph.label(p.position).to_string()),
                    detail: format!(
                        "pair ({}, {})",
                        graph.label(p.left),
                        graph.label(p.right)
                    ),
                },
            );
        }
        if options.audit_witnesses {
            audit.audited += 1;
            if !c.audit(engine)? {
                audit.failed += 1;
                push(
                    &mut violations,
                    &mut violation_count,
                    Violation {
                        kind: "audit",
                        check: "witness re-validation".into(),
                        position: Some(graph.label(p.position).to_string()),
                        detail: format!(
                            "pair ({}, {})",
                            graph.label(p.left),
                            graph.label(p.right)
                        ),
                    },
                );
            }
        }
        Ok(())
    })?;

    let all_numbers = analysis.numbers.iter().all(Option::is_some);
    let all_integers = analysis
        .numbers
        .iter()
        .all(|v| v.is_some_and(DyadicRational::is_integer));
    let all_pairs_f1 = local.iter().all(|f| f.all_f1);
    let all_pairs_f2 = local.iter().all(|f| f.all_f2);
    let all_pairs_f1_or_f2 = local.iter().all(|f| f.all_f1_or_f2);
    let all_strict_f1 = local.iter().all(|f| f.all_strict_f1);

    let checks = vec![
        TheoremCheck {
            name: "f1-or-f2-implies-numbers",
            status: CheckStatus::of(all_pairs_f1_or_f2, all_numbers),
        },
        TheoremCheck {
            name: "numbers-imply-f1",
            status: CheckStatus::of(all_numbers, all_pairs_f1),
        },
        TheoremCheck {
            name: "f1-implies-numbers",
            status: CheckStatus::of(all_pairs_f1, all_numbers),
        },
        TheoremCheck {
            name: "f2-implies-integers",
            status: CheckStatus::of(all_pairs_f2, all_integers),
        },
        TheoremCheck {
            name: "f2-implies-strict-f1",
            status: CheckStatus::of(all_pairs_f2, all_strict_f1),
        },
    ];
    for c in &checks {
        if c.status == CheckStatus::Violated {
            push(
                &mut violations,
                &mut violation_count,
                Violation {
                    kind: "theorem",
                    check: c.name.to_string(),
                    position: None,
                    detail: "closure-wide implication failed".into(),
                },
            );
        }
    }
    let snc_consistent = all_numbers == all_pairs_f1;

    // Per-position closures, children first.
    let mut sub: Vec<Flags> = (0..n).map(|_| Flags::default()).collect();
    let mut sub_numbers = vec![false; n];
    let mut sub_integers = vec![false; n];
    let mut stats = SubclosureStats::default();
    for i in graph.topological_order() {
        let mut f = Flags {
            all_f1: local[i].all_f1,
            all_f2: local[i].all_f2,
            all_f1_or_f2: local[i].all_f1_or_f2,
            all_strict_f1: local[i].all_strict_f1,
        };
        let mut numbers = analysis.numbers[i].is_some();
        let mut integers = analysis.numbers[i].is_some_and(DyadicRational::is_integer);
        for &c in graph.left(i).iter().chain(graph.right(i)) {
            let c = c as usize;
            f.all_f1 &= sub[c].all_f1;
            f.all_f2 &= sub[c].all_f2;
            f.all_f1_or_f2 &= sub[c].all_f1_or_f2;
            f.all_strict_f1 &= sub[c].all_strict_f1;
            numbers &= sub_numbers[c];
            integers &= sub_integers[c];
        }
        let mut flag = |hyp: bool, concl: bool, seen: &mut u64, bad: &mut u64, name: &str| {
            if hyp {
                *seen += 1;
                if !concl {
                    *bad += 1;
                    push(
                        &mut violations,
                        &mut violation_count,
                        Violation {
                            kind: "theorem",
                            check: name.to_string(),
                            position: Some(graph.label(i).to_string()),
                            detail: "fails on the closure of this position".into(),
                        },
                    );
                }
            }
        };
        let s = &mut stats;
        flag(f.all_f1_or_f2, numbers, &mut s.f1_or_f2, &mut s.f1_or_f2_not_numbers, "f1-or-f2-implies-numbers");
        flag(numbers, f.all_f1, &mut s.numbers, &mut s.numbers_not_f1, "numbers-imply-f1");
        flag(f.all_f1, numbers, &mut s.f1, &mut s.f1_not_numbers, "f1-implies-numbers");
        flag(f.all_f2, integers, &mut s.f2, &mut s.f2_not_integers, "f2-implies-integers");
        // the hypothesis count is shared with the integer check above
        let mut f2_again = 0;
        flag(f.all_f2, f.all_strict_f1, &mut f2_again, &mut s.f2_not_strict_f1, "f2-implies-strict-f1");
        sub[i] = f;
        sub_numbers[i] = numbers;
        sub_integers[i] = integers;
    }

    let mut incentives = IncentiveStats::default();
    if options.incentives {
        for i in 0..n {
            if engine.incentives_negative(graph.game(i))? {
                incentives.negative_incentives += 1;
                if analysis.numbers[i].is_none() {
                    incentives.not_numbers += 1;
                    push(
                        &mut violations,
                        &mut violation_count,
                        Violation {
                            kind: "incentive",
                            check: "negative incentives imply a number".into(),
                            position: Some(graph.label(i).to_string()),
                            detail: "all incentives negative but not a number".into(),
                        },
                    );
                }
            }
        }
    }

    let con_probe = confirm_con_on(engine, analysis, &options.x_set)?;
    if con_probe.verdict == ConVerdict::ForwardViolation {
        push(
            &mut violations,
            &mut violation_count,
            Violation {
                kind: "theorem",
                check: "numbers-have-no-n-sums".into(),
                position: con_probe.witnesses.first().map(|w| w.position.clone()),
                detail: "a number plus a closure position has outcome N".into(),
            },
        );
    }

    let values = if options.include_values {
        graph
            .labels()
            .iter()
            .cloned()
            .zip(analysis.numbers.iter().copied())
            .collect()
    } else {
        IndexMap::new()
    };

    Ok(ClosureReport {
        ruleset,
        seeds,
        position_count: n,
        pair_count: classes.total(),
        classes,
        neither_witnesses,
        all_numbers,
        all_integers,
        all_pairs_f1,
        all_pairs_f2,
        all_pairs_f1_or_f2,
        all_integers_claim: all_pairs_f2,
        snc_consistent,
        checks,
        subclosures: stats,
        fast_path,
        witness_audit: audit,
        incentives,
        con_probe,
        violation_count,
        violations,
        values,
    })
}
