use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::AlgebraError;

/// The operations fraction-free elimination needs from an integral domain.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Quotient `self / divisor`, or `None` when the division is not exact.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

/// Bareiss fraction-free determinant over an integral domain.
///
/// `unit` supplies the ring's `1` for the empty matrix. Every intermediate
/// division is exact by Sylvester's identity; a failed division means the
/// `Ring` implementation is broken and is reported as `InexactDivision`.
pub fn bareiss_det<R: Ring>(rows: &[Vec<R>], unit: &R) -> Result<R, AlgebraError> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::NotSquare { row: i, len: row.len(), expected: n });
        }
    }
    if n == 0 {
        return Ok(unit.one_like());
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut negate = false;
    let mut prev = unit.one_like();
    for k in 0..n {
        if m[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero_elem()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(unit.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num.exact_div(&prev).ok_or(AlgebraError::InexactDivision)?;
            }
            m[i][k] = unit.zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg_ref() } else { d })
}

/// Exact determinant of a square integer matrix.
pub fn det(rows: &[Vec<i64>]) -> Result<BigInt, AlgebraError> {
    let big: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_det(&big, &BigInt::one())
}

/// Determinant by the Leibniz expansion. Only sensible for small matrices;
/// used where a formula is stated as an explicit signed sum over `S_n`.
pub fn det_by_permutations(rows: &[Vec<i64>]) -> Result<BigInt, AlgebraError> {
    let n = rows.len();
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(AlgebraError::NotSquare { row: i, len: row.len(), expected: n });
        }
    }
    let mut total = BigInt::zero();
    for (perm, sign) in permutations(n) {
        let mut term = BigInt::from(sign);
        for (i, &j) in perm.iter().enumerate() {
            term *= rows[i][j];
        }
        total += term;
    }
    Ok(total)
}

/// All permutations of `0..n` paired with their signature, in
/// lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push((current.clone(), signature(&current)));
        // next lexicographic permutation
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn signature(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
