//! The `S_2n` action on polytabloids, webs and matchings, Garnir
//! straightening, and the preimage of a web under the basis isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagrams::{crossings, f_matching, swap_dots, CupDiagram, Matching};
use crate::error::{Error, Result};
use crate::resolution::{resolve_full_with, FirstCrossing};
use crate::vector::SparseVector;
use crate::young::{classify, Adjacency, StandardTableau};
use crate::Limits;

/// A filling of the (n,n) diagram by `1..=2n`, stored column by column.
///
/// Polytabloids satisfy `v_T = -v_{T'}` when `T'` flips one column and
/// `v_T = v_{T'}` when `T'` permutes columns, so every filling has a signed
/// canonical form: each column increasing, columns ordered by top entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGeneral", into = "RawGeneral")]
pub struct GeneralTwoRowTableau {
    columns: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGeneral {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TryFrom<RawGeneral> for GeneralTwoRowTableau {
    type Error = Error;
    fn try_from(raw: RawGeneral) -> Result<Self> {
        if raw.top.len() != raw.bottom.len() {
            return Err(Error::Domain("rows must have equal length".into()));
        }
        GeneralTwoRowTableau::new(raw.top.into_iter().zip(raw.bottom).collect())
    }
}

impl From<GeneralTwoRowTableau> for RawGeneral {
    fn from(g: GeneralTwoRowTableau) -> Self {
        RawGeneral {
            top: g.top(),
            bottom: g.bottom(),
        }
    }
}

impl GeneralTwoRowTableau {
    pub fn new(columns: Vec<(usize, usize)>) -> Result<Self> {
        let n2 = 2 * columns.len();
        if n2 == 0 {
            return Err(Error::Domain("tableau has no columns".into()));
        }
        let mut seen = vec![false; n2 + 1];
        for &(x, y) in &columns {
            for e in [x, y] {
                if e == 0 || e > n2 || seen[e] {
                    return Err(Error::Domain(format!(
                        "entries must be a permutation of 1..={n2}"
                    )));
                }
                seen[e] = true;
            }
        }
        Ok(GeneralTwoRowTableau { columns })
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    pub fn top(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn bottom(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.1).collect()
    }

    /// Signed canonical form: `v_self = sign * v_canonical`.
    pub fn canonical(&self) -> (i32, GeneralTwoRowTableau) {
        let mut sign = 1;
        let mut columns: Vec<(usize, usize)> = self
            .columns
            .iter()
            .map(|&(x, y)| {
                if x > y {
                    sign = -sign;
                    (y, x)
                } else {
                    (x, y)
                }
            })
            .collect();
        columns.sort_unstable();
        (sign, GeneralTwoRowTableau { columns })
    }

    pub fn is_canonical(&self) -> bool {
        self.columns.iter().all(|c| c.0 < c.1) && self.columns.windows(2).all(|w| w[0].0 < w[1].0)
    }

    pub fn to_standard(&self) -> Option<StandardTableau> {
        StandardTableau::new(self.top(), self.bottom()).ok()
    }

    /// Relabel entries by the transposition `(i i+1)`.
    pub fn swap_entries(&self, i: usize) -> GeneralTwoRowTableau {
        let r = |e: usize| {
            if e == i {
                i + 1
            } else if e == i + 1 {
                i
            } else {
                e
            }
        };
        GeneralTwoRowTableau {
            columns: self.columns.iter().map(|&(x, y)| (r(x), r(y))).collect(),
        }
    }
}

impl From<&StandardTableau> for GeneralTwoRowTableau {
    fn from(t: &StandardTableau) -> Self {
        GeneralTwoRowTableau {
            columns: t.columns(),
        }
    }
}

impl fmt::Display for GeneralTwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: Vec<usize>| {
            r.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{} / {}", join(self.top()), join(self.bottom()))
    }
}

/// Linear combination of polytabloids, keyed by canonical fillings.
pub type TabloidVector = SparseVector<GeneralTwoRowTableau>;

/// Linear combination of matchings. Elements of the web module are the
/// vectors supported on noncrossing matchings.
pub type DiagramVector = SparseVector<Matching>;

pub fn polytabloid(t: &StandardTableau) -> TabloidVector {
    TabloidVector::basis(GeneralTwoRowTableau::from(t))
}

/// `v_g` as a (signed) basis vector in canonical form, without straightening.
pub fn signed_polytabloid(g: &GeneralTwoRowTableau) -> TabloidVector {
    let (sign, key) = g.canonical();
    TabloidVector::term(key, BigInt::from(sign))
}

fn check_generator(i: usize, n2: usize) -> Result<()> {
    if i == 0 || i >= n2 {
        return Err(Error::Argument(format!(
            "generator index {i} outside 1..{n2}"
        )));
    }
    Ok(())
}

pub fn garnir_straighten(g: &GeneralTwoRowTableau) -> Result<TabloidVector> {
    garnir_straighten_with(g, &Limits::default())
}

/// Expand `v_g` in the standard polytabloid basis.
///
/// Works on canonical forms. While two adjacent columns `(a/b), (c/x)` have
/// `b > x`, the three-term relation
/// `v[a c / b x] = v[c a / b x] + v[a b / c x]` replaces the key; the first
/// term fixes the descent with the same top row, the second raises the top
/// row, so the rewriting terminates.
pub fn garnir_straighten_with(g: &GeneralTwoRowTableau, limits: &Limits) -> Result<TabloidVector> {
    garnir_straighten_vector_with(&signed_polytabloid(g), limits)
}

pub fn garnir_straighten_vector(v: &TabloidVector) -> Result<TabloidVector> {
    garnir_straighten_vector_with(v, &Limits::default())
}

pub fn garnir_straighten_vector_with(v: &TabloidVector, limits: &Limits) -> Result<TabloidVector> {
    let mut pending: BTreeMap<GeneralTwoRowTableau, BigInt> = BTreeMap::new();
    for (k, c) in v.iter() {
        let (sign, key) = k.canonical();
        *pending.entry(key).or_default() += c * sign;
    }
    let mut out = TabloidVector::zero();
    let mut steps = 0usize;
    while let Some((key, coeff)) = pending.pop_first() {
        if coeff.is_zero() {
            continue;
        }
        let cols = key.columns();
        let Some(j) = (0..cols.len() - 1).find(|&j| cols[j].1 > cols[j + 1].1) else {
            out.add_term(key, coeff);
            continue;
        };
        steps += 1;
        if steps > limits.step_budget {
            return Err(Error::NonTermination(limits.step_budget));
        }
        let ((a, b), (c, x)) = (cols[j], cols[j + 1]);
        for (first, second) in [((c, b), (a, x)), ((a, c), (b, x))] {
            let mut child = cols.to_vec();
            child[j] = first;
            child[j + 1] = second;
            let (sign, child) = GeneralTwoRowTableau { columns: child }.canonical();
            *pending.entry(child).or_default() += &coeff * sign;
        }
    }
    Ok(out)
}

pub fn act_polytabloid(i: usize, v: &TabloidVector) -> Result<TabloidVector> {
    act_polytabloid_with(i, v, &Limits::default())
}

/// `s_i . v` for `v` supported on standard tableaux.
pub fn act_polytabloid_with(i: usize, v: &TabloidVector, limits: &Limits) -> Result<TabloidVector> {
    v.try_map_linear(|key| {
        let t = key
            .to_standard()
            .ok_or_else(|| Error::Argument(format!("key {key} is not a standard tableau")))?;
        check_generator(i, 2 * t.n())?;
        match classify(&t, i)? {
            Adjacency::SameColumn => Ok(TabloidVector::term(key.clone(), -BigInt::one())),
            Adjacency::Below | Adjacency::Above => Ok(polytabloid(&t.swap_entries(i)?)),
            Adjacency::SameRow => garnir_straighten_with(&key.swap_entries(i), limits),
        }
    })
}

/// `s_i . v` on arbitrary matchings: a joined pair `(i, i+1)` flips the sign,
/// otherwise the two dots trade arcs.
pub fn act_matching(i: usize, v: &DiagramVector) -> Result<DiagramVector> {
    v.try_map_linear(|m| {
        check_generator(i, m.n2())?;
        if m.has_arc(i, i + 1) {
            Ok(DiagramVector::term(m.clone(), -BigInt::one()))
        } else {
            Ok(DiagramVector::basis(swap_dots(m, i)?))
        }
    })
}

pub fn act_web(i: usize, v: &DiagramVector) -> Result<DiagramVector> {
    act_web_with(i, v, &Limits::default())
}

/// `s_i . v` for `v` supported on cup diagrams, re-expanded in the web basis.
pub fn act_web_with(i: usize, v: &DiagramVector, limits: &Limits) -> Result<DiagramVector> {
    v.try_map_linear(|m| {
        if let Some(c) = crossings(m).first() {
            return Err(Error::Domain(format!(
                "support element {m} has a crossing {c}"
            )));
        }
        check_generator(i, m.n2())?;
        if m.has_arc(i, i + 1) {
            return Ok(DiagramVector::term(m.clone(), -BigInt::one()));
        }
        let swapped = swap_dots(m, i)?;
        Ok(resolve_full_with(&swapped, &mut FirstCrossing, limits.node_budget)?.to_vector())
    })
}

/// The signed f-image: each canonical key goes to the matching of its columns.
pub fn f_on_vector(v: &TabloidVector) -> Result<DiagramVector> {
    v.try_map_linear(|key| {
        let (sign, canon) = key.canonical();
        Ok(DiagramVector::term(
            f_matching(canon.columns())?,
            BigInt::from(sign),
        ))
    })
}

pub fn psi_web(w: &CupDiagram) -> Result<(GeneralTwoRowTableau, TabloidVector)> {
    psi_web_with(w, &Limits::default())
}

/// Preimage of a web: the filling whose columns are the arcs of `w` (left
/// endpoint on top), together with its standard expansion.
pub fn psi_web_with(
    w: &CupDiagram,
    limits: &Limits,
) -> Result<(GeneralTwoRowTableau, TabloidVector)> {
    let g = GeneralTwoRowTableau::new(w.matching().arcs())?;
    let v = garnir_straighten_with(&g, limits)?;
    Ok((g, v))
}

pub fn kl_product(n: usize, word: &[usize]) -> Result<TabloidVector> {
    kl_product_with(n, word, &Limits::default())
}

/// `(s_{i_1} - 1)(s_{i_2} - 1)...(s_{i_t} - 1) v_{T_0}`, rightmost factor
/// applied first.
pub fn kl_product_with(n: usize, word: &[usize], limits: &Limits) -> Result<TabloidVector> {
    crate::young::check_n(n, limits)?;
    let mut v = polytabloid(&StandardTableau::column_tableau(n));
    for &i in word.iter().rev() {
        v = &act_polytabloid_with(i, &v, limits)? - &v;
    }
    Ok(v)
}

/// Reverse a tableau-graph path `T_0 -> T` into the word of [`kl_product`].
pub fn word_from_path(path: &[usize]) -> Vec<usize> {
    path.iter().rev().copied().collect()
}
