//! Exhaustive and seeded property sweeps over surgery data.
//!
//! Every sweep has a sequential and a parallel form with identical
//! results; the parallel form needs the `parallel` feature and otherwise
//! runs sequentially.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::casson::{
    delta_single, delta_single_lescop, delta_single_recursive_ordered, fti_bracket, johannes_delta, kirby_reduce,
    pairwise_correction, BorromeanConfig, CrossLinkMatrix, CrossMatrices, Ordering, TwoComponentSurgeryData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

/// Outcome of one property over all its cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: String,
    pub cases: u64,
    pub failures: u64,
    /// The failing case of smallest index.
    pub counterexample: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub radius: i64,
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

type Found = (u64, Option<(u64, String)>);

fn merge(a: Found, b: Found) -> Found {
    let first = match (a.1, b.1) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, y) => x.or(y),
    };
    (a.0 + b.0, first)
}

/// Run `check` on case indices `0..cases`; it returns a description of the
/// case when it fails.
pub fn sweep<F>(property: &str, cases: u64, mode: Mode, check: F) -> PropertyResult
where
    F: Fn(u64) -> Option<String> + Sync + Send,
{
    let one = |i: u64| -> Found {
        match check(i) {
            Some(e) => (1, Some((i, e))),
            None => (0, None),
        }
    };
    let (failures, first) = match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..cases).into_par_iter().map(one).reduce(|| (0, None), merge)
        }
        _ => (0..cases).map(one).fold((0, None), merge),
    };
    PropertyResult { property: property.to_string(), cases, failures, counterexample: first.map(|f| f.1) }
}

/// Number of integer points of `[-radius, radius]^dims`.
pub fn grid_size(radius: i64, dims: u32) -> u64 {
    ((2 * radius + 1) as u64).pow(dims)
}

/// The `index`-th point of `[-radius, radius]^N`, first coordinate slowest.
pub fn grid_point<const N: usize>(radius: i64, mut index: u64) -> [i64; N] {
    let side = (2 * radius + 1) as u64;
    let mut p = [0; N];
    for x in p.iter_mut().rev() {
        *x = (index % side) as i64 - radius;
        index /= side;
    }
    p
}

/// Configuration at `index` of the grid with every entry in `[-radius, radius]`.
pub fn grid_config(radius: i64, index: u64) -> BorromeanConfig {
    let [f1, f2, f3, l12, l13, l23, mu] = grid_point::<7>(radius, index);
    BorromeanConfig::new([f1, f2, f3], [l12, l13, l23], mu)
}

fn show(c: &BorromeanConfig) -> String {
    serde_json::to_string(c).unwrap()
}

pub fn route_agreement(radius: i64, mode: Mode) -> PropertyResult {
    sweep("route agreement", grid_size(radius, 7), mode, |i| {
        let c = grid_config(radius, i);
        let closed = delta_single(&c);
        let rec = delta_single_recursive_ordered(&c, Ordering::default(), None);
        let lescop = delta_single_lescop(&c);
        (closed != rec || closed != lescop)
            .then(|| format!("{} closed {closed} recursion {rec} lescop {lescop}", show(&c)))
    })
}

pub fn mod2_coherence(radius: i64, mode: Mode) -> PropertyResult {
    sweep("mod 2 coherence", grid_size(radius, 7), mode, |i| {
        let c = grid_config(radius, i);
        let d = delta_single(&c);
        let p = BigInt::from(c.f[0]) * c.f[1] * c.f[2];
        ((d - p) % 2 != BigInt::from(0)).then(|| show(&c))
    })
}

pub fn kirby_facts(radius: i64, mode: Mode) -> PropertyResult {
    sweep("kirby reduction facts", grid_size(radius, 7), mode, |i| {
        let c = grid_config(radius, i);
        let k = kirby_reduce(&c);
        (k.determinant != -1 || k.linking != 1 || k.zero_framed > 1).then(|| show(&c))
    })
}

pub fn recursion_confluence(radius: i64, mode: Mode) -> PropertyResult {
    let orders = Ordering::all();
    sweep("recursion confluence", grid_size(radius, 7), mode, |i| {
        let c = grid_config(radius, i);
        let reference = delta_single_recursive_ordered(&c, orders[0], None);
        orders.iter().skip(1).find_map(|&o| {
            let v = delta_single_recursive_ordered(&c, o, None);
            (v != reference).then(|| format!("{} order {:?}: {v} vs {reference}", show(&c), o))
        })
    })
}

pub fn johannes_integrality(radius: i64, mode: Mode) -> PropertyResult {
    sweep("johannes integrality", grid_size(radius, 6), mode, |i| {
        let [f1, f2, l12, l_ab, l_a2, l_b2] = grid_point::<6>(radius, i);
        if (f1 * f2 - l12 * l12).abs() != 1 {
            return None;
        }
        let d = TwoComponentSurgeryData { f1, f2, l12, l_ab, l_a2, l_b2 };
        match johannes_delta(&d) {
            Ok(q) if q.is_integer() => None,
            other => Some(format!("{d:?} gives {other:?}")),
        }
    })
}

fn seeded(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

fn random_config(rng: &mut ChaCha8Rng, r: i64) -> BorromeanConfig {
    let mut e = || rng.gen_range(-r..=r);
    BorromeanConfig::new([e(), e(), e()], [e(), e(), e()], e())
}

fn random_matrix(rng: &mut ChaCha8Rng, r: i64) -> CrossLinkMatrix {
    let mut m = [[0; 3]; 3];
    for x in m.iter_mut().flatten() {
        *x = rng.gen_range(-r..=r);
    }
    CrossLinkMatrix(m)
}

/// A random family of three surgeries with entries in `[-2, 2]`, and a base value.
pub fn random_triple(seed: u64, case: u64) -> (BigInt, Vec<BorromeanConfig>, CrossMatrices) {
    let mut rng = seeded(seed, case);
    let base = BigInt::from(rng.gen_range(-2..=2));
    let configs = (0..3).map(|_| random_config(&mut rng, 2)).collect();
    let cross = [(0, 1), (0, 2), (1, 2)].into_iter().map(|p| (p, random_matrix(&mut rng, 2))).collect();
    (base, configs, cross)
}

pub fn degree_two_vanishing(seed: u64, cases: u64, mode: Mode) -> PropertyResult {
    sweep("degree 2 vanishing", cases, mode, |i| {
        let (base, configs, cross) = random_triple(seed, i);
        match fti_bracket(&base, &configs, &cross) {
            Ok(v) if v == BigInt::from(0) => None,
            other => Some(format!("case {i}: {other:?}")),
        }
    })
}

pub fn correction_antisymmetry(seed: u64, cases: u64, mode: Mode) -> PropertyResult {
    sweep("pairwise correction antisymmetry", cases, mode, |i| {
        let mut rng = seeded(seed, i);
        let m = random_matrix(&mut rng, 3);
        let (a, b) = [(0, 1), (0, 2), (1, 2)][rng.gen_range(0..3)];
        let mut swapped = m;
        swapped.0.swap(a, b);
        let mut repeated = m;
        repeated.0[b] = repeated.0[a];
        let v = pairwise_correction(&m);
        let ok = pairwise_correction(&swapped) == -v.clone() && pairwise_correction(&repeated) == BigInt::from(0);
        (!ok).then(|| format!("{:?} rows {a},{b}", m.0))
    })
}

/// Every grid and seeded property. Confluence uses radius at most 2 and
/// Johannes integrality at most 3.
pub fn verify_all(radius: i64, seed: u64, mode: Mode) -> VerifyReport {
    assert!(radius >= 0, "grid radius must be non-negative");
    let properties = vec![
        route_agreement(radius, mode),
        mod2_coherence(radius, mode),
        kirby_facts(radius, mode),
        recursion_confluence(radius.min(2), mode),
        johannes_integrality(radius.min(3), mode),
        degree_two_vanishing(seed, 100, mode),
        correction_antisymmetry(seed, 100, mode),
    ];
    VerifyReport { radius, seed, properties }
}
