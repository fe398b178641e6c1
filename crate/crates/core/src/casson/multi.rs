use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{delta_single, BorromeanConfig, CassonError};
use crate::algebra::{det, permutations};

/// Entry `(i, j)` is the linking number of leaf `i` of link `k` with leaf
/// `j` of link `l`, for a pair `k < l`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossLinkMatrix(pub [[i64; 3]; 3]);

impl CrossLinkMatrix {
    pub const IDENTITY: CrossLinkMatrix = CrossLinkMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    fn rows(&self) -> Vec<Vec<i64>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }
}

/// Cross-linking matrices keyed by `(k, l)` with `k < l`.
pub type CrossMatrices = BTreeMap<(usize, usize), CrossLinkMatrix>;

/// `-2 Σ_σ s(σ) m_{1σ(1)} m_{2σ(2)} m_{3σ(3)}`.
pub fn pairwise_correction(m: &CrossLinkMatrix) -> BigInt {
    let mut sum = BigInt::from(0);
    for (sigma, sign) in permutations(3) {
        let mut term = BigInt::from(sign);
        for (i, &j) in sigma.iter().enumerate() {
            term *= m.0[i][j];
        }
        sum += term;
    }
    assert_eq!(sum, det(&m.rows()).expect("square"), "permutation sum against elimination");
    -2 * sum
}

fn check_pairs(n: usize, cross: &CrossMatrices) -> Result<(), CassonError> {
    for &(k, l) in cross.keys() {
        if k >= l || l >= n {
            return Err(CassonError::StrayCross(k, l));
        }
    }
    Ok(())
}

/// λ(M_{L1 ∪ ... ∪ Ln}) − λ(M) for disjoint surgery links.
pub fn delta_multi(configs: &[BorromeanConfig], cross: &CrossMatrices) -> Result<BigInt, CassonError> {
    check_pairs(configs.len(), cross)?;
    let mut v: BigInt = configs.iter().map(delta_single).sum();
    for k in 0..configs.len() {
        for l in k + 1..configs.len() {
            let m = cross.get(&(k, l)).ok_or(CassonError::MissingCross(k, l))?;
            v += pairwise_correction(m);
        }
    }
    Ok(v)
}

/// `Σ_{G' ⊆ G} (-1)^{|G'|} λ(M_{G'})` with `λ(M) = base`.
pub fn fti_bracket(base: &BigInt, configs: &[BorromeanConfig], cross: &CrossMatrices) -> Result<BigInt, CassonError> {
    check_pairs(configs.len(), cross)?;
    let n = configs.len();
    assert!(n < usize::BITS as usize, "too many surgeries for subset enumeration");
    let mut total = BigInt::from(0);
    for mask in 0usize..1 << n {
        let chosen: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<BorromeanConfig> = chosen.iter().map(|&i| configs[i]).collect();
        let mut sub_cross = CrossMatrices::new();
        for (a, &k) in chosen.iter().enumerate() {
            for (b, &l) in chosen.iter().enumerate().skip(a + 1) {
                let m = cross.get(&(k, l)).ok_or(CassonError::MissingCross(k, l))?;
                sub_cross.insert((a, b), *m);
            }
        }
        let value = base + delta_multi(&sub, &sub_cross)?;
        if chosen.len().is_multiple_of(2) {
            total += value;
        } else {
            total -= value;
        }
    }
    Ok(total)
}
