use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{AlgebraError, FreeWord, Letter};

/// Power series in non-commuting variables `X_0 … X_{rank-1}` truncated
/// above a fixed total degree. Keys are index words; the empty key is the
/// constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

impl MagnusSeries {
    pub fn one(rank: usize, degree: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Vec::new(), BigInt::from(1));
        Self { rank, degree, coeffs }
    }

    /// Image of a single letter: `1 + X` or `1 - X + X^2 - …`.
    pub fn of_letter(rank: usize, degree: usize, letter: Letter) -> Self {
        let mut s = Self::one(rank, degree);
        for k in 1..=degree {
            let c = if letter.inverse && k % 2 == 1 { -1 } else { 1 };
            if !letter.inverse && k > 1 {
                break;
            }
            s.coeffs.insert(vec![letter.gen; k], BigInt::from(c));
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, word: &[usize]) -> BigInt {
        self.coeffs.get(word).cloned().unwrap_or_default()
    }

    /// Nonzero terms of exactly total degree `k`.
    pub fn homogeneous(&self, k: usize) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.coeffs.iter().filter(move |(w, _)| w.len() == k)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.rank, self.degree), (other.rank, other.degree));
        let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                if a.len() + b.len() > self.degree {
                    continue;
                }
                let mut w = a.clone();
                w.extend_from_slice(b);
                *coeffs.entry(w).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { rank: self.rank, degree: self.degree, coeffs }
    }
}

/// Magnus expansion of `word`, truncated above total degree `degree`.
pub fn magnus_expand(word: &FreeWord, degree: usize) -> Result<MagnusSeries, AlgebraError> {
    if degree == 0 {
        return Err(AlgebraError::ZeroDegree);
    }
    let rank = word.rank();
    Ok(word
        .letters()
        .iter()
        .fold(MagnusSeries::one(rank, degree), |acc, &l| {
            acc.mul(&MagnusSeries::of_letter(rank, degree, l))
        }))
}
