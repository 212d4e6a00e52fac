//! Perfect matchings of `2n` dots, cup diagrams, and the maps connecting them
//! to tableaux.
//!
//! A crossing is a pair of arcs `(a,c)`, `(b,d)` with `a < b < c < d`; only
//! which dots are joined matters, never how the arcs are drawn.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::young::StandardTableau;

/// Perfect matching of the dots `1..=n2`. Two matchings are equal iff they
/// have the same arcs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawMatching", into = "RawMatching")]
pub struct Matching {
    // partner[d - 1] is the dot joined to d.
    partner: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawMatching {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n2: Option<usize>,
    arcs: Vec<(usize, usize)>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = Error;
    fn try_from(raw: RawMatching) -> Result<Self> {
        let n2 = raw.n2.unwrap_or(2 * raw.arcs.len());
        Matching::from_arcs(n2, &raw.arcs)
    }
}

impl From<Matching> for RawMatching {
    fn from(m: Matching) -> Self {
        RawMatching {
            n2: Some(m.n2()),
            arcs: m.arcs(),
        }
    }
}

impl Matching {
    pub fn from_arcs(n2: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n2 == 0 || !n2.is_multiple_of(2) || arcs.len() * 2 != n2 {
            return Err(Error::Domain(format!(
                "{} arcs cannot perfectly match {n2} dots",
                arcs.len()
            )));
        }
        let mut partner = vec![0; n2];
        for &(x, y) in arcs {
            for d in [x, y] {
                if d == 0 || d > n2 || partner[d - 1] != 0 {
                    return Err(Error::Domain(format!(
                        "dot {d} is out of range or used twice"
                    )));
                }
            }
            if x == y {
                return Err(Error::Domain(format!("arc ({x},{y}) is a loop")));
            }
            partner[x - 1] = y;
            partner[y - 1] = x;
        }
        Ok(Matching { partner })
    }

    /// `n` adjacent cups `(1,2), (3,4), ...`.
    pub fn adjacent_cups(n: usize) -> Self {
        let partner = (1..=2 * n)
            .map(|d| if d % 2 == 1 { d + 1 } else { d - 1 })
            .collect();
        Matching { partner }
    }

    pub fn n2(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, d: usize) -> usize {
        self.partner[d - 1]
    }

    pub fn is_left_endpoint(&self, d: usize) -> bool {
        self.partner(d) > d
    }

    /// Arcs `(left, right)` sorted by left endpoint.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (1..=self.n2())
            .filter(|&d| self.is_left_endpoint(d))
            .map(|d| (d, self.partner(d)))
            .collect()
    }

    pub fn left_endpoints(&self) -> Vec<usize> {
        (1..=self.n2())
            .filter(|&d| self.is_left_endpoint(d))
            .collect()
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        (1..=self.n2()).contains(&x) && self.partner(x) == y
    }

    pub fn crossing_count(&self) -> usize {
        crossings(self).len()
    }

    /// Replace the arcs through the dots of `old` by `new`.
    pub(crate) fn rewire(&self, old: [(usize, usize); 2], new: [(usize, usize); 2]) -> Matching {
        let mut partner = self.partner.clone();
        for (x, y) in old {
            partner[x - 1] = 0;
            partner[y - 1] = 0;
        }
        for (x, y) in new {
            partner[x - 1] = y;
            partner[y - 1] = x;
        }
        debug_assert!(partner.iter().all(|&p| p != 0));
        Matching { partner }
    }

    /// Delete the arc `(x, x+1)` and close the gap: dots above `x+1` move down
    /// by two.
    pub(crate) fn remove_cup(&self, x: usize) -> Matching {
        debug_assert_eq!(self.partner(x), x + 1);
        let relabel = |d: usize| if d > x + 1 { d - 2 } else { d };
        let partner = (1..=self.n2())
            .filter(|&d| d != x && d != x + 1)
            .map(|d| relabel(self.partner(d)))
            .collect();
        Matching { partner }
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self
            .arcs()
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{{{}}}", arcs.join(","))
    }
}

/// A noncrossing matching: a web basis element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Matching", into = "Matching")]
pub struct CupDiagram(Matching);

impl TryFrom<Matching> for CupDiagram {
    type Error = Error;
    fn try_from(m: Matching) -> Result<Self> {
        CupDiagram::new(m)
    }
}

impl From<CupDiagram> for Matching {
    fn from(w: CupDiagram) -> Self {
        w.0
    }
}

impl CupDiagram {
    pub fn new(m: Matching) -> Result<Self> {
        match crossings(&m).first() {
            None => Ok(CupDiagram(m)),
            Some(c) => Err(Error::Domain(format!("matching {m} has a crossing {c}"))),
        }
    }

    pub fn from_arcs(n2: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        CupDiagram::new(Matching::from_arcs(n2, arcs)?)
    }

    pub fn matching(&self) -> &Matching {
        &self.0
    }

    pub fn into_matching(self) -> Matching {
        self.0
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Two crossing arcs `left = (a,c)` and `right = (b,d)` with `a < b < c < d`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Crossing {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

impl Crossing {
    pub fn new(left: (usize, usize), right: (usize, usize)) -> Result<Self> {
        let ((a, c), (b, d)) = (left, right);
        if a < b && b < c && c < d {
            Ok(Crossing { left, right })
        } else {
            Err(Error::Argument(format!(
                "arcs ({a},{c}) and ({b},{d}) do not cross"
            )))
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),({},{}))",
            self.left.0, self.left.1, self.right.0, self.right.1
        )
    }
}

/// All crossings, sorted by the two left endpoints.
pub fn crossings(m: &Matching) -> Vec<Crossing> {
    let arcs = m.arcs();
    let mut out = Vec::new();
    for (k, &(a, c)) in arcs.iter().enumerate() {
        for &(b, d) in &arcs[k + 1..] {
            if b < c && c < d {
                out.push(Crossing {
                    left: (a, c),
                    right: (b, d),
                });
            }
        }
    }
    out
}

pub fn is_noncrossing(m: &Matching) -> bool {
    let arcs = m.arcs();
    !arcs
        .iter()
        .enumerate()
        .any(|(k, &(_, c))| arcs[k + 1..].iter().any(|&(b, d)| b < c && c < d))
}

/// The cup diagram whose left endpoints are the top row of `t`.
pub fn phi(t: &StandardTableau) -> CupDiagram {
    let n2 = 2 * t.n();
    let mut in_top = vec![false; n2 + 1];
    for &e in t.top() {
        in_top[e] = true;
    }
    let mut stack = Vec::with_capacity(t.n());
    let mut arcs = Vec::with_capacity(t.n());
    for d in 1..=n2 {
        if in_top[d] {
            stack.push(d);
        } else {
            let l = stack
                .pop()
                .expect("standard tableaux satisfy the ballot condition");
            arcs.push((l, d));
        }
    }
    CupDiagram(Matching::from_arcs(n2, &arcs).expect("stack scan yields a perfect matching"))
}

pub fn phi_inverse(w: &CupDiagram) -> StandardTableau {
    let m = w.matching();
    let top = m.left_endpoints();
    let bottom = (1..=m.n2()).filter(|&d| !m.is_left_endpoint(d)).collect();
    StandardTableau::new(top, bottom).expect("noncrossing matchings give standard tableaux")
}

/// [`phi_inverse`] on a matching not yet known to be noncrossing.
pub fn phi_inverse_matching(m: &Matching) -> Result<StandardTableau> {
    Ok(phi_inverse(&CupDiagram::new(m.clone())?))
}

/// Matching joining the two entries of each column.
pub fn f_matching(columns: &[(usize, usize)]) -> Result<Matching> {
    Matching::from_arcs(2 * columns.len(), columns)
}

/// Exchange the dots `i` and `i+1`.
pub fn swap_dots(m: &Matching, i: usize) -> Result<Matching> {
    if i == 0 || i >= m.n2() {
        return Err(Error::Argument(format!(
            "generator index {i} outside 1..{}",
            m.n2()
        )));
    }
    if m.partner(i) == i + 1 {
        return Err(Error::Precondition(format!(
            "dots {i} and {} are joined by one arc",
            i + 1
        )));
    }
    let (p, q) = (m.partner(i), m.partner(i + 1));
    Ok(m.rewire([(i, p), (i + 1, q)], [(i + 1, p), (i, q)]))
}

const CELL: usize = 3;

fn column_of(d: usize) -> usize {
    CELL * (d - 1) + 1
}

/// Depth of each arc in the drawing: above every arc it contains and apart
/// from every already placed arc it overlaps. For noncrossing matchings this
/// is the nesting depth.
fn arc_depths(arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&k| (arcs[k].1 - arcs[k].0, arcs[k].0));
    let mut depth = vec![0; arcs.len()];
    for &k in &order {
        let (a, b) = arcs[k];
        let mut d = 1 + order
            .iter()
            .filter(|&&j| depth[j] > 0 && a < arcs[j].0 && arcs[j].1 < b)
            .map(|&j| depth[j])
            .max()
            .unwrap_or(0);
        let overlapping: Vec<usize> = (0..arcs.len())
            .filter(|&j| j != k && depth[j] > 0 && arcs[j].0 < b && a < arcs[j].1)
            .map(|j| depth[j])
            .collect();
        while overlapping.contains(&d) {
            d += 1;
        }
        depth[k] = d;
    }
    depth
}

/// Plain-text picture: a label line, then one line per depth level. Arcs
/// run `\___/`; a `+` marks a vertical stroke passing through a deeper arc.
pub fn render_ascii(m: &Matching) -> String {
    let arcs = m.arcs();
    let depths = arc_depths(&arcs);
    let rows = depths.iter().copied().max().unwrap_or(0);
    let width = column_of(m.n2()) + 1;
    let mut grid = vec![vec![' '; width]; rows];
    for (&(a, b), &d) in arcs.iter().zip(&depths) {
        let (ca, cb) = (column_of(a), column_of(b));
        for c in ca + 1..cb {
            grid[d - 1][c] = '_';
        }
        grid[d - 1][ca] = '\\';
        grid[d - 1][cb] = '/';
    }
    for (&(a, b), &d) in arcs.iter().zip(&depths) {
        for c in [column_of(a), column_of(b)] {
            for row in grid.iter_mut().take(d - 1) {
                row[c] = if row[c] == '_' { '+' } else { '|' };
            }
        }
    }
    let mut labels = vec![' '; width];
    for d in 1..=m.n2() {
        let s = d.to_string();
        let end = column_of(d) + 1;
        for (k, ch) in s.chars().enumerate() {
            labels[end - s.len() + k] = ch;
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&labels).chain(grid.iter()) {
        out.push_str(line.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out
}

/// Inverse of [`render_ascii`].
pub fn parse_ascii(text: &str) -> Result<Matching> {
    let mut lines = text.lines();
    let labels = lines
        .next()
        .ok_or_else(|| Error::Parse("empty picture".into()))?;
    let n2 = labels.split_whitespace().count();
    let grid: Vec<Vec<char>> = lines.map(|l| l.chars().collect()).collect();
    let at = |r: usize, c: usize| grid[r].get(c).copied().unwrap_or(' ');
    let mut arcs = Vec::new();
    for d in 1..=n2 {
        let c = column_of(d);
        let row = (0..grid.len())
            .find(|&r| matches!(at(r, c), '\\' | '/'))
            .ok_or_else(|| Error::Parse(format!("dot {d} has no arc end")))?;
        if at(row, c) == '\\' {
            let end = (c + 1..grid[row].len())
                .find(|&x| at(row, x) == '/')
                .ok_or_else(|| Error::Parse(format!("arc from dot {d} is not closed")))?;
            if (end - 1) % CELL != 0 {
                return Err(Error::Parse(format!("arc from dot {d} ends between dots")));
            }
            arcs.push((d, (end - 1) / CELL + 1));
        }
    }
    Matching::from_arcs(n2, &arcs)
}

/// Standalone LaTeX document drawing the matching with TikZ.
pub fn render_tikz(m: &Matching) -> String {
    let mut out = String::from(
        "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}[scale=0.8]\n",
    );
    out.push_str(&format!("\\draw[dotted] (0.5,0) -- ({}.5,0);\n", m.n2()));
    for d in 1..=m.n2() {
        out.push_str(&format!(
            "\\node[above] at ({d},0) {{\\footnotesize ${d}$}};\n"
        ));
    }
    for (a, b) in m.arcs() {
        let span = (b - a) as f64;
        out.push_str(&format!(
            "\\draw[thick] ({a},0) .. controls +(0,{:.2}) and +(0,{:.2}) .. ({b},0);\n",
            -0.6 * span,
            -0.6 * span
        ));
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::enumerate_syt;

    fn m(arcs: &[(usize, usize)]) -> Matching {
        Matching::from_arcs(2 * arcs.len(), arcs).unwrap()
    }

    fn t(top: &[usize], bottom: &[usize]) -> StandardTableau {
        StandardTableau::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let w = phi(&t(&[1, 2, 4, 7], &[3, 5, 6, 8]));
        assert_eq!(w.matching().arcs(), vec![(1, 6), (2, 3), (4, 5), (7, 8)]);
        assert_eq!(phi(&t(&[1], &[2])).matching().arcs(), vec![(1, 2)]);
        let s = t(&[1, 3, 4, 6, 9], &[2, 5, 7, 8, 10]);
        assert_eq!(
            phi(&s).matching().arcs(),
            vec![(1, 2), (3, 8), (4, 5), (6, 7), (9, 10)]
        );
    }

    #[test]
    fn phi_inverse_examples() {
        let w = CupDiagram::from_arcs(8, &[(1, 6), (2, 3), (4, 5), (7, 8)]).unwrap();
        assert_eq!(phi_inverse(&w), t(&[1, 2, 4, 7], &[3, 5, 6, 8]));
        let w0 = CupDiagram::new(Matching::adjacent_cups(3)).unwrap();
        assert_eq!(phi_inverse(&w0), StandardTableau::column_tableau(3));
        assert!(matches!(
            phi_inverse_matching(&m(&[(1, 3), (2, 4)])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn phi_is_a_bijection() {
        for n in 1..=6 {
            let all = enumerate_syt(n).unwrap();
            let webs: std::collections::HashSet<_> = all.iter().map(phi).collect();
            assert_eq!(webs.len(), all.len());
            for tab in &all {
                assert_eq!(&phi_inverse(&phi(tab)), tab);
            }
        }
    }

    #[test]
    fn f_matching_examples() {
        assert_eq!(
            f_matching(&[(1, 3), (2, 5), (4, 6)]).unwrap().arcs(),
            vec![(1, 3), (2, 5), (4, 6)]
        );
        let tt = t(&[1, 2, 4, 5, 7], &[3, 6, 8, 9, 10]);
        assert_eq!(
            f_matching(&tt.columns()).unwrap().arcs(),
            vec![(1, 3), (2, 6), (4, 8), (5, 9), (7, 10)]
        );
        assert_eq!(
            f_matching(&StandardTableau::column_tableau(4).columns()).unwrap(),
            Matching::adjacent_cups(4)
        );
        assert!(f_matching(&[(1, 2), (2, 3)]).is_err());
        assert!(f_matching(&[(1, 2), (3, 5)]).is_err());
    }

    #[test]
    fn crossing_enumeration() {
        assert!(crossings(&Matching::adjacent_cups(3)).is_empty());
        assert_eq!(
            crossings(&m(&[(1, 3), (2, 5), (4, 6)])),
            vec![
                Crossing {
                    left: (1, 3),
                    right: (2, 5)
                },
                Crossing {
                    left: (2, 5),
                    right: (4, 6)
                }
            ]
        );
        assert!(crossings(&m(&[(1, 4), (2, 3)])).is_empty());
        assert!(!is_noncrossing(&m(&[(1, 3), (2, 4)])));
        assert!(is_noncrossing(&m(&[(1, 6), (2, 3), (4, 5)])));
        assert!(Crossing::new((1, 4), (2, 3)).is_err());
    }

    #[test]
    fn swap_examples() {
        let base = m(&[(1, 3), (2, 4), (5, 6)]);
        assert_eq!(swap_dots(&base, 4).unwrap(), m(&[(1, 3), (2, 5), (4, 6)]));
        assert_eq!(swap_dots(&base, 1).unwrap(), m(&[(1, 4), (2, 3), (5, 6)]));
        assert_eq!(swap_dots(&base, 3).unwrap(), m(&[(1, 4), (2, 3), (5, 6)]));
        assert!(matches!(swap_dots(&base, 5), Err(Error::Precondition(_))));
        assert!(matches!(swap_dots(&base, 6), Err(Error::Argument(_))));
        for i in 1..=4 {
            assert_eq!(swap_dots(&swap_dots(&base, i).unwrap(), i).unwrap(), base);
        }
    }

    #[test]
    fn remove_cup_relabels() {
        let x = m(&[(1, 3), (2, 5), (4, 8), (6, 7)]);
        assert_eq!(x.remove_cup(6), m(&[(1, 3), (2, 5), (4, 6)]));
    }

    #[test]
    fn ascii_golden() {
        assert_eq!(
            render_ascii(&Matching::adjacent_cups(2)),
            " 1  2  3  4\n \\__/  \\__/\n"
        );
        assert_eq!(
            render_ascii(&m(&[(1, 3), (2, 4)])),
            " 1  2  3  4\n \\__+__/  |\n    \\_____/\n"
        );
    }

    #[test]
    fn ascii_round_trip() {
        for n in 1..=4 {
            for tab in enumerate_syt(n).unwrap() {
                let x = f_matching(&tab.columns()).unwrap();
                assert_eq!(parse_ascii(&render_ascii(&x)).unwrap(), x);
                let w = phi(&tab).into_matching();
                assert_eq!(parse_ascii(&render_ascii(&w)).unwrap(), w);
            }
        }
        let wide = m(&[(1, 2), (3, 8), (4, 5), (6, 7), (9, 12), (10, 11)]);
        assert_eq!(parse_ascii(&render_ascii(&wide)).unwrap(), wide);
    }

    #[test]
    fn json_form() {
        let x = m(&[(1, 6), (2, 3), (4, 5), (7, 8)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n2":8,"arcs":[[1,6],[2,3],[4,5],[7,8]]}"#);
        assert_eq!(serde_json::from_str::<Matching>(&s).unwrap(), x);
        assert_eq!(
            serde_json::from_str::<Matching>(r#"{"arcs":[[6,1],[2,3],[5,4],[7,8]]}"#).unwrap(),
            x
        );
        assert!(serde_json::from_str::<Matching>(r#"{"n2":4,"arcs":[[1,2],[2,3]]}"#).is_err());
        assert!(serde_json::from_str::<CupDiagram>(r#"{"n2":4,"arcs":[[1,3],[2,4]]}"#).is_err());
    }
}
