//! Crossing resolution in the matching module.
//!
//! A crossing `(a,c), (b,d)` with `a < b < c < d` equals the sum of its two
//! smoothings: `VV` gives `(a,b), (c,d)` and `Nested` gives `(a,d), (b,c)`.
//! Repeating this until no crossings are left expands any matching in the web
//! basis; the coefficient of a web is the number of leaves carrying it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::actions::DiagramVector;
use crate::diagrams::{crossings, f_matching, phi, Crossing, CupDiagram, Matching};
use crate::error::{Error, Result};
use crate::young::{dominance_violation, StandardTableau};
use crate::Limits;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum MoveKind {
    /// `(a,c),(b,d) -> (a,b),(c,d)`
    VV,
    /// `(a,c),(b,d) -> (a,d),(b,c)`
    #[serde(rename = "V")]
    Nested,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::VV => "VV",
            MoveKind::Nested => "V",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Move {
    pub crossing: Crossing,
    pub kind: MoveKind,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.crossing)
    }
}

/// Replace the two arcs of `c` by the smoothing `kind`.
pub fn resolve_step(m: &Matching, c: &Crossing, kind: MoveKind) -> Result<Matching> {
    let ((a, cc), (b, d)) = (c.left, c.right);
    let valid = a < b && b < cc && cc < d && d <= m.n2() && m.has_arc(a, cc) && m.has_arc(b, d);
    if !valid {
        return Err(Error::Argument(format!("{c} is not a crossing of {m}")));
    }
    let new = match kind {
        MoveKind::VV => [(a, b), (cc, d)],
        MoveKind::Nested => [(a, d), (b, cc)],
    };
    Ok(m.rewire([c.left, c.right], new))
}

/// Picks which crossing of a node to resolve.
pub trait Strategy {
    /// Index into `crossings`, which is nonempty and sorted by left endpoints.
    fn choose(&mut self, m: &Matching, crossings: &[Crossing]) -> usize;
}

/// Always the lexicographically least crossing.
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstCrossing;

impl Strategy for FirstCrossing {
    fn choose(&mut self, _: &Matching, _: &[Crossing]) -> usize {
        0
    }
}

/// Follows a list of choices (taken modulo the number of crossings), then
/// falls back to the first crossing.
#[derive(Clone, Debug)]
pub struct Scripted {
    choices: Vec<usize>,
    next: usize,
}

impl Scripted {
    pub fn new(choices: Vec<usize>) -> Self {
        Scripted { choices, next: 0 }
    }
}

impl Strategy for Scripted {
    fn choose(&mut self, _: &Matching, crossings: &[Crossing]) -> usize {
        let k = self
            .choices
            .get(self.next)
            .map_or(0, |c| c % crossings.len());
        self.next += 1;
        k
    }
}

/// Uniformly random crossing at every node.
#[derive(Clone, Debug)]
pub struct RandomStrategy<R> {
    rng: R,
}

impl<R: Rng> RandomStrategy<R> {
    pub fn new(rng: R) -> Self {
        RandomStrategy { rng }
    }
}

impl<R: Rng> Strategy for RandomStrategy<R> {
    fn choose(&mut self, _: &Matching, crossings: &[Crossing]) -> usize {
        self.rng.gen_range(0..crossings.len())
    }
}

/// Tree of node occurrences; identical matchings reached along different
/// branches are separate nodes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionGraph {
    pub nodes: Vec<Matching>,
    pub edges: Vec<(usize, Move, usize)>,
}

impl ResolutionGraph {
    pub fn root(&self) -> &Matching {
        &self.nodes[0]
    }

    pub fn sink_indices(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for (s, _, _) in &self.edges {
            has_out[*s] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_out[k]).collect()
    }

    pub fn sinks(&self) -> SinkMultiset {
        let mut out = SinkMultiset::default();
        for k in self.sink_indices() {
            let w = CupDiagram::new(self.nodes[k].clone()).expect("sinks are noncrossing");
            *out.counts.entry(w).or_default() += 1;
        }
        out
    }
}

pub fn build_resolution_graph(
    m: &Matching,
    strategy: &mut dyn Strategy,
) -> Result<ResolutionGraph> {
    build_resolution_graph_with(m, strategy, Limits::default().node_budget)
}

pub fn build_resolution_graph_with(
    m: &Matching,
    strategy: &mut dyn Strategy,
    node_budget: usize,
) -> Result<ResolutionGraph> {
    let mut graph = ResolutionGraph {
        nodes: vec![m.clone()],
        edges: Vec::new(),
    };
    let mut stack = vec![0];
    while let Some(k) = stack.pop() {
        let node = graph.nodes[k].clone();
        let cs = crossings(&node);
        if cs.is_empty() {
            continue;
        }
        let c = cs[strategy.choose(&node, &cs)];
        // Nested pushed first so the VV child is expanded first.
        for kind in [MoveKind::VV, MoveKind::Nested] {
            if graph.nodes.len() >= node_budget {
                return Err(Error::Budget(node_budget));
            }
            let child = resolve_step(&node, &c, kind)?;
            graph.nodes.push(child);
            graph
                .edges
                .push((k, Move { crossing: c, kind }, graph.nodes.len() - 1));
        }
        let last = graph.nodes.len();
        stack.push(last - 1);
        stack.push(last - 2);
    }
    Ok(graph)
}

/// Webs with multiplicities, as read off the leaves of a resolution tree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SinkMultiset {
    pub counts: BTreeMap<CupDiagram, u64>,
}

impl SinkMultiset {
    pub fn get(&self, w: &CupDiagram) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn to_vector(&self) -> DiagramVector {
        self.counts
            .iter()
            .map(|(w, &c)| (w.matching().clone(), BigInt::from(c)))
            .collect()
    }
}

pub fn resolve_full(m: &Matching) -> Result<SinkMultiset> {
    resolve_full_with(m, &mut FirstCrossing, Limits::default().node_budget)
}

/// Leaf multiplicities of the resolution tree of `m` under `strategy`,
/// without materialising the tree.
pub fn resolve_full_with(
    m: &Matching,
    strategy: &mut dyn Strategy,
    node_budget: usize,
) -> Result<SinkMultiset> {
    let mut out = SinkMultiset::default();
    let mut stack = vec![m.clone()];
    let mut visited = 1usize;
    while let Some(node) = stack.pop() {
        let cs = crossings(&node);
        if cs.is_empty() {
            *out.counts
                .entry(CupDiagram::new(node).expect("no crossings"))
                .or_default() += 1;
            continue;
        }
        visited += 2;
        if visited > node_budget {
            return Err(Error::Budget(node_budget));
        }
        let c = cs[strategy.choose(&node, &cs)];
        stack.push(resolve_step(&node, &c, MoveKind::Nested)?);
        stack.push(resolve_step(&node, &c, MoveKind::VV)?);
    }
    Ok(out)
}

/// Linear extension of [`resolve_full`]: re-express any vector of matchings
/// in the web basis.
pub fn expand_in_webs(v: &DiagramVector) -> Result<DiagramVector> {
    v.try_map_linear(|m| Ok(resolve_full(m)?.to_vector()))
}

/// A resolution path from `f(v_T)` down to the web `phi(S)`, certifying that
/// `phi(S)` occurs as a leaf of some resolution tree of `f(v_T)`.
///
/// Requires `S.top[j] >= T.top[j]` for all `j`. Peels one cup per level: with
/// `a` the last left endpoint of the current matching (joined to the last
/// dot `N`) and `b` the last left endpoint of the current web, resolve the
/// long arc against the arcs ending at `a+1..=b` by VV moves (in increasing
/// order) so it becomes `(b, N)`, then against the arcs ending at
/// `N-1, ..., b+1` by Nested moves, leaving the cup `(b, b+1)`. Remove that
/// cup from both sides and repeat.
pub fn witness_path(t: &StandardTableau, s: &StandardTableau) -> Result<Vec<Move>> {
    if t.n() != s.n() {
        return Err(Error::Argument("tableaux of different size".into()));
    }
    if let Some(col) = dominance_violation(s, t) {
        return Err(Error::Domain(format!(
            "first row of S does not dominate first row of T at column {col}"
        )));
    }
    let mut current = f_matching(&t.columns())?;
    let mut target = phi(s).into_matching();
    let mut labels: Vec<usize> = (1..=current.n2()).collect();
    let mut script = Vec::new();
    let mut level = 0;

    while current.n2() > 0 {
        level += 1;
        let last = current.n2();
        let a = *current.left_endpoints().last().expect("nonempty");
        let b = *target.left_endpoints().last().expect("nonempty");
        if a > b || current.partner(a) != last || target.partner(b) != b + 1 {
            return Err(Error::Witness(format!(
                "level {level}: expected long arc ({a},{last}) and cup ({b},{})",
                b + 1
            )));
        }
        let original = |d: usize| labels[d - 1];
        let mut apply = |m: &Matching, left, right, kind| -> Result<Matching> {
            let c = Crossing::new(left, right)
                .map_err(|e| Error::Witness(format!("level {level}: {e}")))?;
            let next = resolve_step(m, &c, kind)?;
            let (l, r) = (
                (original(left.0), original(left.1)),
                (original(right.0), original(right.1)),
            );
            script.push(Move {
                crossing: Crossing { left: l, right: r },
                kind,
            });
            Ok(next)
        };

        let mut root = a;
        for r in a + 1..=b {
            let l = current.partner(r);
            current = apply(&current, (l, r), (root, last), MoveKind::VV)?;
            root = r;
        }
        let mut end = last;
        for r in (b + 1..last).rev() {
            let l = current.partner(r);
            current = apply(&current, (l, r), (b, end), MoveKind::Nested)?;
            end = r;
        }
        if current.partner(b) != b + 1 {
            return Err(Error::Witness(format!(
                "level {level}: cup ({b},{}) did not appear",
                b + 1
            )));
        }
        current = current.remove_cup(b);
        target = target.remove_cup(b);
        labels.drain(b - 1..=b);
    }
    Ok(script)
}

/// Apply `script` to `start`, returning every intermediate matching
/// (including `start`).
pub fn replay(start: &Matching, script: &[Move]) -> Result<Vec<Matching>> {
    let mut out = vec![start.clone()];
    for mv in script {
        let next = resolve_step(out.last().expect("nonempty"), &mv.crossing, mv.kind)?;
        out.push(next);
    }
    Ok(out)
}

/// `script` is applicable to `f(v_T)` step by step and ends at `phi(S)`.
pub fn check_witness(t: &StandardTableau, s: &StandardTableau, script: &[Move]) -> bool {
    if t.n() != s.n() {
        return false;
    }
    let Ok(start) = f_matching(&t.columns()) else {
        return false;
    };
    match replay(&start, script) {
        Ok(states) => states.last() == Some(phi(s).matching()),
        Err(_) => false,
    }
}
