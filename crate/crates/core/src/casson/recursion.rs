use num_bigint::BigInt;
use serde::Serialize;

use super::BorromeanConfig;

/// Pairs `(i, j)` in the order of `l`: l12, l13, l23.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    Framing,
    Clasp,
}

/// One unit step of the reduction to the base link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub lemma: Lemma,
    /// `f1`..`f3` or `l12`, `l13`, `l23`.
    pub parameter: String,
    pub from: i64,
    pub to: i64,
    /// λ(before) − λ(after).
    #[serde(serialize_with = "crate::json::bigint")]
    pub increment: BigInt,
}

/// Order in which framings (leaves) and then clasps (pairs, indexed as
/// in [`PAIRS`]) are reduced to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ordering {
    pub framings: [usize; 3],
    pub clasps: [usize; 3],
}

impl Default for Ordering {
    fn default() -> Self {
        Ordering { framings: [0, 1, 2], clasps: [0, 1, 2] }
    }
}

impl Ordering {
    /// All 36 orderings.
    pub fn all() -> Vec<Ordering> {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        perms
            .iter()
            .flat_map(|&framings| perms.iter().map(move |&clasps| Ordering { framings, clasps }))
            .collect()
    }
}

fn opposite_pair(leaf: usize) -> usize {
    2 - leaf
}

fn third(i: usize, j: usize) -> usize {
    3 - i - j
}

fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap()
}

/// Framing increment, λ(f) − λ(f − e_i). Independent of f_i.
fn framing_increment(f: &[i64; 3], l: &[i64; 3], leaf: usize) -> BigInt {
    let (j, k) = match leaf {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let ljk = BigInt::from(l[opposite_pair(leaf)]);
    -(BigInt::from(f[j]) * f[k]) + &ljk * (&ljk + 1)
}

/// Clasp increment, λ(l) − λ(l − e_ij), taken at the current `l_ij`.
fn clasp_increment(f: &[i64; 3], l: &[i64; 3], pair: usize) -> BigInt {
    let (i, j) = PAIRS[pair];
    let k = third(i, j);
    let lik = BigInt::from(l[pair_index(i, k)]);
    let ljk = BigInt::from(l[pair_index(j, k)]);
    -2 * lik * ljk + 2 * BigInt::from(f[k]) * l[pair]
}

/// Surgery value of the leaves with `μ₁₂₃` ignored, reduced step by step to
/// the base link of zero framings and linkings, whose value is zero.
/// Steps are recorded when `trace` is given.
pub fn reduce(c: &BorromeanConfig, order: Ordering, mut trace: Option<&mut Vec<Step>>) -> BigInt {
    let mut f = c.f;
    let mut l = c.l;
    let mut total = BigInt::from(0);
    let mut record = |lemma, parameter: String, from: i64, to: i64, inc: &BigInt| {
        if let Some(t) = trace.as_deref_mut() {
            t.push(Step { lemma, parameter, from, to, increment: inc.clone() });
        }
    };
    for leaf in order.framings {
        while f[leaf] != 0 {
            let inc = framing_increment(&f, &l, leaf);
            let from = f[leaf];
            let (to, inc) = if from > 0 { (from - 1, inc) } else { (from + 1, -inc) };
            f[leaf] = to;
            record(Lemma::Framing, format!("f{}", leaf + 1), from, to, &inc);
            total += inc;
        }
    }
    for pair in order.clasps {
        while l[pair] != 0 {
            let from = l[pair];
            let (to, inc) = if from > 0 {
                (from - 1, clasp_increment(&f, &l, pair))
            } else {
                l[pair] = from + 1;
                let inc = -clasp_increment(&f, &l, pair);
                (from + 1, inc)
            };
            l[pair] = to;
            let (i, j) = PAIRS[pair];
            record(Lemma::Clasp, format!("l{}{}", i + 1, j + 1), from, to, &inc);
            total += inc;
        }
    }
    total
}
