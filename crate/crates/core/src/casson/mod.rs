//! Variation of the Casson invariant under Borromean surgery.
//!
//! Three independent routes compute the single-surgery variation: the
//! closed form ([`delta_single`]), a unit-step reduction to the trivial
//! leaves ([`delta_single_recursive`]) and a determinant expansion with
//! fixed torsion values ([`delta_single_lescop`]).

mod multi;
mod recursion;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::det;
use crate::diagram::{DiagramError, LeafTriple};
use crate::milnor::{mu123_of_leaves, MilnorError};

pub use multi::{delta_multi, fti_bracket, pairwise_correction, CrossLinkMatrix, CrossMatrices};
pub use recursion::{reduce, Lemma, Ordering, Step, PAIRS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CassonError {
    #[error("no cross-linking matrix for configurations {0} and {1}")]
    MissingCross(usize, usize),
    #[error("cross-linking matrix given for ({0},{1}), which is not a pair k < l of configurations")]
    StrayCross(usize, usize),
    #[error("linking matrix is singular (f1 f2 - l12^2 = 0)")]
    Singular,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Milnor(#[from] MilnorError),
}

/// Leaf data of one Borromean surgery link.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BorromeanConfig {
    /// Framings f1, f2, f3.
    pub f: [i64; 3],
    /// Linking numbers l12, l13, l23.
    pub l: [i64; 3],
    pub mu123: i64,
}

impl BorromeanConfig {
    pub fn new(f: [i64; 3], l: [i64; 3], mu123: i64) -> Self {
        BorromeanConfig { f, l, mu123 }
    }

    /// Symmetric matrix with the framings on the diagonal.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let [f1, f2, f3] = self.f;
        let [l12, l13, l23] = self.l;
        vec![vec![f1, l12, l13], vec![l12, f2, l23], vec![l13, l23, f3]]
    }

    /// The configuration of the mirrored leaves.
    pub fn mirror(&self) -> Self {
        BorromeanConfig { f: self.f.map(|x| -x), l: self.l.map(|x| -x), mu123: self.mu123 }
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Closed form of λ(M_L) − λ(M) for one surgery.
pub fn delta_single(c: &BorromeanConfig) -> BigInt {
    let [f1, f2, f3] = c.f.map(big);
    let [l12, l13, l23] = c.l.map(big);
    let mut v = -(&f1 * &f2 * &f3) - 2 * &l12 * &l13 * &l23 - 2 * big(c.mu123);
    for (l, f) in [(&l23, &f1), (&l13, &f2), (&l12, &f3)] {
        v += l * (l + 1) * f;
    }
    v
}

/// Single-surgery variation by unit steps, in the default order.
pub fn delta_single_recursive(c: &BorromeanConfig) -> (BigInt, Vec<Step>) {
    let mut trace = Vec::new();
    let v = delta_single_recursive_ordered(c, Ordering::default(), Some(&mut trace));
    (v, trace)
}

pub fn delta_single_recursive_ordered(c: &BorromeanConfig, order: Ordering, trace: Option<&mut Vec<Step>>) -> BigInt {
    -2 * big(c.mu123) + reduce(c, order, trace)
}

/// ζ of the Borromean rings.
pub const ZETA_B: i64 = 1;
/// ζ of the Borromean rings together with one leaf.
pub const ZETA_B_LEAF: i64 = 0;

/// ζ of the Borromean rings together with leaves `i` and `j`.
pub fn zeta_b_two_leaves(l_ij: i64) -> BigInt {
    -big(l_ij)
}

/// ζ of the whole surgery link.
pub fn zeta_link(mu123: i64) -> BigInt {
    2 * big(mu123)
}

/// Single-surgery variation from the determinant expansion.
pub fn delta_single_lescop(c: &BorromeanConfig) -> BigInt {
    let m = c.linking_matrix();
    let det3 = det(&m).expect("square");
    let mut v = -det3 * ZETA_B;
    for i in 0..3 {
        let minor: Vec<Vec<i64>> =
            (0..3).filter(|&r| r != i).map(|r| (0..3).filter(|&s| s != i).map(|s| m[r][s]).collect()).collect();
        v -= det(&minor).expect("square") * ZETA_B_LEAF;
    }
    // Leaf i pairs with the other two leaves.
    for (leaf, pair) in [(0, 2), (1, 1), (2, 0)] {
        v -= big(c.f[leaf]) * zeta_b_two_leaves(c.l[pair]);
    }
    v - zeta_link(c.mu123)
}

/// Rochlin variation, mod 2, of surgery on several links.
pub fn rochlin_delta(configs: &[BorromeanConfig]) -> u8 {
    let s: BigInt = configs.iter().map(|c| big(c.f[0]) * c.f[1] * c.f[2]).sum();
    if s.is_even() {
        0
    } else {
        1
    }
}

/// Data of a self-crossing change on component 1 of a 2-component
/// surgery link; `l_ab`, `l_a2`, `l_b2` belong to the smoothed link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoComponentSurgeryData {
    pub f1: i64,
    pub f2: i64,
    pub l12: i64,
    pub l_ab: i64,
    pub l_a2: i64,
    pub l_b2: i64,
}

/// λ after minus λ before the crossing change, positive crossing first.
pub fn johannes_delta(d: &TwoComponentSurgeryData) -> Result<BigRational, CassonError> {
    let den = big(d.f1) * d.f2 - big(d.l12) * d.l12;
    if den == BigInt::from(0) {
        return Err(CassonError::Singular);
    }
    let num = big(d.f2) * d.l_ab - big(d.l_a2) * d.l_b2;
    Ok(BigRational::new(num, den))
}

/// What a surgery link reduces to under Kirby moves: a 2-component link
/// with linking number one and a 0-framed component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KirbyReduction {
    pub components: usize,
    pub linking: i64,
    pub zero_framed: usize,
    /// Determinant of the linking matrix, `0 · f - lk²` whatever the other
    /// framing `f` is.
    pub determinant: i64,
    pub surgery_value_preserved: bool,
}

pub fn kirby_reduce(_c: &BorromeanConfig) -> KirbyReduction {
    let linking = 1;
    // One diagonal entry is zero, so the other framing drops out.
    let determinant = -linking * linking;
    KirbyReduction { components: 2, linking, zero_framed: 0, determinant, surgery_value_preserved: true }
}

/// One member of the family of surgeries realising λ = -2n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MazurInstance {
    pub n: i64,
    pub config: BorromeanConfig,
    #[serde(serialize_with = "crate::json::bigint")]
    pub expected: BigInt,
    pub presentation: KirbyReduction,
    /// Sign of the linking number of the 2-component presentation.
    pub linking_sign: i64,
}

pub fn mazur_family(n: i64) -> MazurInstance {
    let config = BorromeanConfig { f: [0; 3], l: [0; 3], mu123: n };
    let mut presentation = kirby_reduce(&config);
    let linking_sign = if n < 0 { -1 } else { 1 };
    presentation.linking *= linking_sign;
    MazurInstance { n, config, expected: -2 * big(n), presentation, linking_sign }
}

/// All routes run on one configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub config: BorromeanConfig,
    #[serde(serialize_with = "crate::json::bigint")]
    pub closed_form: BigInt,
    #[serde(serialize_with = "crate::json::bigint")]
    pub recursion: BigInt,
    #[serde(serialize_with = "crate::json::bigint")]
    pub lescop_route: BigInt,
    pub mod2: u8,
    pub trace: Vec<Step>,
}

impl DeltaReport {
    pub fn new(config: BorromeanConfig) -> Self {
        let (recursion, trace) = delta_single_recursive(&config);
        DeltaReport {
            config,
            closed_form: delta_single(&config),
            recursion,
            lescop_route: delta_single_lescop(&config),
            mod2: rochlin_delta(&[config]),
            trace,
        }
    }

    pub fn routes_agree(&self) -> bool {
        self.closed_form == self.recursion && self.closed_form == self.lescop_route
    }
}

/// Read the leaf data off a diagram and run every route.
pub fn delta_from_leaves(leaves: &LeafTriple) -> Result<DeltaReport, CassonError> {
    let config = BorromeanConfig { f: leaves.framings(), l: leaves.linkings(), mu123: mu123_of_leaves(leaves)? };
    Ok(DeltaReport::new(config))
}
