//! Standard Young tableaux of shape (n,n), the tableau graph and the order it
//! induces.
//!
//! Entries are 1-based throughout. The graph has an edge `S -> s_i.S` whenever
//! `i` sits in the bottom row of `S` and `i+1` in the top row; `S <= T` means a
//! directed path from `S` to `T` exists, so the column tableau `T_0` is the
//! unique minimum.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Limits;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct StandardTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TryFrom<RawTableau> for StandardTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        StandardTableau::new(raw.top, raw.bottom)
    }
}

impl From<StandardTableau> for RawTableau {
    fn from(t: StandardTableau) -> Self {
        RawTableau {
            top: t.top,
            bottom: t.bottom,
        }
    }
}

impl StandardTableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let n = top.len();
        if n == 0 || bottom.len() != n {
            return Err(Error::Domain(format!(
                "rows must be nonempty and of equal length (got {} and {})",
                top.len(),
                bottom.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &e in top.iter().chain(bottom.iter()) {
            if e == 0 || e > 2 * n || seen[e] {
                return Err(Error::Domain(format!(
                    "entries must be a permutation of 1..={}",
                    2 * n
                )));
            }
            seen[e] = true;
        }
        if top.windows(2).any(|w| w[0] >= w[1]) || bottom.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("rows must strictly increase".into()));
        }
        if let Some(j) = (0..n).find(|&j| top[j] >= bottom[j]) {
            return Err(Error::Domain(format!("column {} is not increasing", j + 1)));
        }
        Ok(StandardTableau { top, bottom })
    }

    /// The tableau with `1, 2, ..., 2n` down successive columns.
    pub fn column_tableau(n: usize) -> Self {
        StandardTableau {
            top: (0..n).map(|j| 2 * j + 1).collect(),
            bottom: (0..n).map(|j| 2 * j + 2).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn columns(&self) -> Vec<(usize, usize)> {
        self.top
            .iter()
            .copied()
            .zip(self.bottom.iter().copied())
            .collect()
    }

    /// Row words, e.g. `"1 2 4 7 / 3 5 6 8"`.
    pub fn row_word(&self) -> String {
        let join = |r: &[usize]| {
            r.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{} / {}", join(&self.top), join(&self.bottom))
    }

    /// `(row, column)` of entry `e`, row 0 being the top row; columns 0-based.
    pub fn position(&self, e: usize) -> Option<(usize, usize)> {
        if let Some(j) = self.top.iter().position(|&x| x == e) {
            return Some((0, j));
        }
        self.bottom.iter().position(|&x| x == e).map(|j| (1, j))
    }

    /// Swap the entries `i` and `i+1`. Only meaningful when the result is
    /// standard, i.e. outside the same-row and same-column cases.
    pub(crate) fn swap_entries(&self, i: usize) -> Result<Self> {
        let relabel = |e: usize| {
            if e == i {
                i + 1
            } else if e == i + 1 {
                i
            } else {
                e
            }
        };
        StandardTableau::new(
            self.top.iter().map(|&e| relabel(e)).collect(),
            self.bottom.iter().map(|&e| relabel(e)).collect(),
        )
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.row_word())
    }
}

pub(crate) fn check_n(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::Size("n must be at least 1".into()));
    }
    if n > limits.max_n {
        return Err(Error::Size(format!(
            "n = {n} exceeds the configured limit of {}",
            limits.max_n
        )));
    }
    Ok(())
}

/// All standard tableaux of shape (n,n) in the canonical linear extension:
/// by rank, then lexicographically by top row.
pub fn enumerate_syt(n: usize) -> Result<Vec<StandardTableau>> {
    enumerate_syt_with(n, &Limits::default())
}

pub fn enumerate_syt_with(n: usize, limits: &Limits) -> Result<Vec<StandardTableau>> {
    check_n(n, limits)?;
    let mut out = Vec::new();
    let mut top = Vec::with_capacity(n);
    let mut bottom = Vec::with_capacity(n);
    fill(n, 1, &mut top, &mut bottom, &mut out);
    let t0 = StandardTableau::column_tableau(n);
    let mut keyed: Vec<(usize, StandardTableau)> = out
        .into_iter()
        .map(|t| (coxeter_length(&perm_between(&t0, &t)), t))
        .collect();
    keyed.sort_by(|(ra, a), (rb, b)| ra.cmp(rb).then_with(|| a.top.cmp(&b.top)));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

// Ballot-sequence recursion: entry k goes on top while the top row has room,
// and on the bottom while the bottom row is shorter than the top row.
fn fill(
    n: usize,
    k: usize,
    top: &mut Vec<usize>,
    bottom: &mut Vec<usize>,
    out: &mut Vec<StandardTableau>,
) {
    if k > 2 * n {
        out.push(StandardTableau {
            top: top.clone(),
            bottom: bottom.clone(),
        });
        return;
    }
    if top.len() < n {
        top.push(k);
        fill(n, k + 1, top, bottom, out);
        top.pop();
    }
    if bottom.len() < top.len() {
        bottom.push(k);
        fill(n, k + 1, top, bottom, out);
        bottom.pop();
    }
}

/// How `i` and `i+1` sit relative to each other in a standard tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Adjacency {
    /// Adjacent in one row.
    SameRow,
    /// The two entries of one column.
    SameColumn,
    /// `i` in the bottom row, `i+1` in the top row: `s_i.T` is an edge target.
    Below,
    /// `i` in the top row, `i+1` in the bottom row of another column:
    /// `s_i.T` is standard and is the source of an edge into `T`.
    Above,
}

pub fn classify(t: &StandardTableau, i: usize) -> Result<Adjacency> {
    let n2 = 2 * t.n();
    if i == 0 || i >= n2 {
        return Err(Error::Argument(format!(
            "generator index {i} outside 1..={}",
            n2 - 1
        )));
    }
    let (ri, ci) = t.position(i).expect("entries cover 1..=2n");
    let (rj, cj) = t.position(i + 1).expect("entries cover 1..=2n");
    Ok(match (ri, rj) {
        _ if ri == rj => Adjacency::SameRow,
        _ if ci == cj => Adjacency::SameColumn,
        (1, 0) => Adjacency::Below,
        _ => Adjacency::Above,
    })
}

/// A permutation of `{1, ..., len}`, stored 1-based: `images[k-1] = w(k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (1..=len).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len() + 1];
        for &x in &images {
            if x == 0 || x > images.len() || seen[x] {
                return Err(Error::Domain("images must form a bijection".into()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The simple transposition `s_i = (i i+1)`.
    pub fn simple(len: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= len {
            return Err(Error::Argument(format!(
                "generator index {i} outside 1..{len}"
            )));
        }
        let mut p = Self::identity(len);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        }
    }

    /// Product `s_{w[0]} s_{w[1]} ... s_{w[k-1]}` as written (rightmost acts first).
    pub fn from_word(len: usize, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(Self::identity(len), |acc, &i| {
            Ok(acc.compose(&Self::simple(len, i)?))
        })
    }
}

/// Number of letters in a reduced word, i.e. the inversion count.
pub fn coxeter_length(w: &Permutation) -> usize {
    let im = w.images();
    (0..im.len())
        .map(|a| (a + 1..im.len()).filter(|&b| im[a] > im[b]).count())
        .sum()
}

/// The permutation `w` with `w(A(p)) = B(p)` for every box `p`.
pub fn perm_between(a: &StandardTableau, b: &StandardTableau) -> Permutation {
    assert_eq!(a.n(), b.n(), "tableaux of different size");
    let mut images = vec![0; 2 * a.n()];
    for (x, y) in a
        .top
        .iter()
        .zip(&b.top)
        .chain(a.bottom.iter().zip(&b.bottom))
    {
        images[x - 1] = *y;
    }
    Permutation { images }
}

/// `S.top[j] >= T.top[j]` for every column `j`.
pub fn first_row_dominates(s: &StandardTableau, t: &StandardTableau) -> bool {
    s.n() == t.n() && s.top.iter().zip(&t.top).all(|(a, b)| a >= b)
}

/// First column (1-based) at which `S.top[j] < T.top[j]`, if any.
pub fn dominance_violation(s: &StandardTableau, t: &StandardTableau) -> Option<usize> {
    s.top
        .iter()
        .zip(&t.top)
        .position(|(a, b)| a < b)
        .map(|j| j + 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub generator: usize,
}

#[derive(Clone, Debug)]
pub struct TableauGraph {
    n: usize,
    vertices: Vec<StandardTableau>,
    edges: Vec<Edge>,
    lookup: HashMap<StandardTableau, usize>,
    ranks: Vec<usize>,
    // descendants[v] is a bitset over vertex indices, v included.
    descendants: Vec<Vec<u64>>,
}

pub fn build_tableau_graph(n: usize) -> Result<TableauGraph> {
    build_tableau_graph_with(n, &Limits::default())
}

pub fn build_tableau_graph_with(n: usize, limits: &Limits) -> Result<TableauGraph> {
    let vertices = enumerate_syt_with(n, limits)?;
    let lookup: HashMap<_, _> = vertices
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let mut edges = Vec::new();
    for (k, s) in vertices.iter().enumerate() {
        for i in 1..2 * n {
            if classify(s, i)? == Adjacency::Below {
                let t = s.swap_entries(i)?;
                edges.push(Edge {
                    source: k,
                    target: lookup[&t],
                    generator: i,
                });
            }
        }
    }

    let count = vertices.len();
    let mut out_adj = vec![Vec::new(); count];
    for e in &edges {
        out_adj[e.source].push(e.target);
    }

    // BFS layers from T_0, which sits at index 0 of the linear extension.
    let mut ranks = vec![usize::MAX; count];
    ranks[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &u in &out_adj[v] {
            if ranks[u] == usize::MAX {
                ranks[u] = ranks[v] + 1;
                queue.push_back(u);
            }
        }
    }

    // Every edge goes forward in the linear extension, so a reverse sweep
    // sees all successors before their predecessors.
    let words = count.div_ceil(64);
    let mut descendants = vec![vec![0u64; words]; count];
    for v in (0..count).rev() {
        let mut bits = vec![0u64; words];
        bits[v / 64] |= 1 << (v % 64);
        for &u in &out_adj[v] {
            debug_assert!(u > v, "edge against the linear extension");
            for (b, d) in bits.iter_mut().zip(&descendants[u]) {
                *b |= d;
            }
        }
        descendants[v] = bits;
    }

    Ok(TableauGraph {
        n,
        vertices,
        edges,
        lookup,
        ranks,
        descendants,
    })
}

impl TableauGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[StandardTableau] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, t: &StandardTableau) -> Result<usize> {
        self.lookup
            .get(t)
            .copied()
            .ok_or_else(|| Error::Argument(format!("tableau {t} is not a vertex of the graph")))
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.source == v)
    }

    pub fn leq_index(&self, s: usize, t: usize) -> bool {
        self.descendants[s][t / 64] >> (t % 64) & 1 == 1
    }

    /// `S <= T`: `T` is reachable from `S`.
    pub fn leq(&self, s: &StandardTableau, t: &StandardTableau) -> Result<bool> {
        Ok(self.leq_index(self.index_of(s)?, self.index_of(t)?))
    }

    pub fn rank(&self, t: &StandardTableau) -> Result<usize> {
        Ok(self.ranks[self.index_of(t)?])
    }

    pub fn rank_index(&self, v: usize) -> usize {
        self.ranks[v]
    }

    /// Every directed path from `from` to `to`, as lists of generator
    /// indices in path order, stopping after `limit` paths.
    pub fn paths(&self, from: usize, to: usize, limit: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.collect_paths(from, to, limit, &mut word, &mut out);
        out
    }

    fn collect_paths(
        &self,
        v: usize,
        to: usize,
        limit: usize,
        word: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if v == to {
            out.push(word.clone());
            return;
        }
        for e in self.out_edges(v) {
            if self.leq_index(e.target, to) {
                word.push(e.generator);
                self.collect_paths(e.target, to, limit, word, out);
                word.pop();
            }
        }
    }
}
