#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use webbasis::actions::polytabloid;
use webbasis::resolution::expand_in_webs;
use webbasis::{
    act_matching, act_polytabloid, act_web, enumerate_syt, f_on_vector, phi, DiagramVector,
    Matching, Result, TabloidVector,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random perfect matching on `2n` dots.
pub fn random_matching(n: usize, rng: &mut impl Rng) -> Matching {
    let mut dots: Vec<usize> = (1..=2 * n).collect();
    dots.shuffle(rng);
    let arcs: Vec<(usize, usize)> = dots
        .chunks(2)
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    Matching::from_arcs(2 * n, &arcs).unwrap()
}

/// Every perfect matching on `2n` dots, built by pairing the smallest free
/// dot with each other free dot.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    fn go(free: Vec<usize>, arcs: &mut Vec<(usize, usize)>, n2: usize, out: &mut Vec<Matching>) {
        let Some((&a, rest)) = free.split_first() else {
            out.push(Matching::from_arcs(n2, arcs).unwrap());
            return;
        };
        for (k, &b) in rest.iter().enumerate() {
            let mut left = rest.to_vec();
            left.remove(k);
            arcs.push((a, b));
            go(left, arcs, n2, out);
            arcs.pop();
        }
    }
    let mut out = Vec::new();
    go((1..=2 * n).collect(), &mut Vec::new(), 2 * n, &mut out);
    out
}

pub fn web_basis(n: usize) -> Vec<DiagramVector> {
    enumerate_syt(n)
        .unwrap()
        .iter()
        .map(|t| DiagramVector::basis(phi(t).into_matching()))
        .collect()
}

pub fn tabloid_basis(n: usize) -> Vec<TabloidVector> {
    enumerate_syt(n).unwrap().iter().map(polytabloid).collect()
}

/// Image of a polytabloid combination in the web module.
pub fn rho(v: &TabloidVector) -> Result<DiagramVector> {
    expand_in_webs(&f_on_vector(v)?)
}

/// One of the three `S_2n` actions, applied as a word (rightmost first).
#[derive(Clone, Copy, Debug)]
pub enum Model {
    Tabloids,
    Matchings,
    Webs,
}

pub enum Element {
    Tabloid(TabloidVector),
    Diagram(DiagramVector),
}

impl Element {
    pub fn act_word(&self, model: Model, word: &[usize]) -> Result<Element> {
        let mut cur = match self {
            Element::Tabloid(v) => Element::Tabloid(v.clone()),
            Element::Diagram(v) => Element::Diagram(v.clone()),
        };
        for &i in word.iter().rev() {
            cur = match (model, cur) {
                (Model::Tabloids, Element::Tabloid(v)) => Element::Tabloid(act_polytabloid(i, &v)?),
                (Model::Matchings, Element::Diagram(v)) => Element::Diagram(act_matching(i, &v)?),
                (Model::Webs, Element::Diagram(v)) => Element::Diagram(act_web(i, &v)?),
                _ => unreachable!("element does not belong to the model"),
            };
        }
        Ok(cur)
    }

    pub fn same(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Tabloid(a), Element::Tabloid(b)) => a == b,
            (Element::Diagram(a), Element::Diagram(b)) => a == b,
            _ => false,
        }
    }
}

/// The Coxeter relation between generators `i` and `j` as two words that
/// must act identically.
pub fn coxeter_relation(i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    if i == j {
        (vec![i, i], vec![])
    } else if i.abs_diff(j) == 1 {
        (vec![i, j, i], vec![j, i, j])
    } else {
        (vec![i, j], vec![j, i])
    }
}

/// A random integer combination of up to three elements of `basis`.
pub fn random_combination<K: Ord + Clone>(
    basis: &[webbasis::SparseVector<K>],
    rng: &mut impl Rng,
) -> webbasis::SparseVector<K> {
    let mut v = webbasis::SparseVector::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let b = basis.choose(rng).unwrap();
        v.add_scaled(b, &BigInt::from(rng.gen_range(-3i32..=3)));
    }
    v
}
pub mod criteria;
