//! Alexander polynomials: Seifert-matrix route for knots, Fox calculus on
//! the Wirtinger presentation for links.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{bareiss_det, AlgebraError, LaurentPoly};
use crate::diagram::{seifert_matrix, Diagram, DiagramError};
use crate::milnor::wirtinger;

/// Global sign applied after unit normalization of multivariable
/// polynomials, chosen so the Borromean rings have zeta = +1.
pub const ALEXANDER_CALIBRATION: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("determinant of V - tV^T has no symmetric representative: {0}")]
    NotSymmetric(String),
    #[error("second derivative at 1 is odd ({0}); normalization is broken")]
    OddSecondDerivative(BigInt),
    #[error("value {0} does not fit in 64 bits")]
    Overflow(BigInt),
}

fn variables(n: usize) -> Vec<String> {
    if n == 1 {
        vec!["t".to_string()]
    } else {
        (1..=n).map(|k| format!("t{k}")).collect()
    }
}

/// `det(V - t V^T)` with exponents centred on zero and value 1 at `t = 1`.
pub fn alexander_knot(d: &Diagram) -> Result<LaurentPoly, AlexanderError> {
    let v = seifert_matrix(d)?;
    alexander_from_seifert(&v)
}

/// The symmetrized `det(V - t V^T)` for a Seifert matrix `V`.
pub fn alexander_from_seifert(v: &[Vec<i64>]) -> Result<LaurentPoly, AlexanderError> {
    let vars = variables(1);
    let t = LaurentPoly::variable_power(&vars, 0, 1);
    let rows: Vec<Vec<LaurentPoly>> = (0..v.len())
        .map(|i| {
            (0..v.len())
                .map(|j| {
                    let a = LaurentPoly::constant_in(vars.clone(), v[i][j]);
                    let b = LaurentPoly::constant_in(vars.clone(), v[j][i]);
                    &a - &(&t * &b)
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(&rows, &LaurentPoly::constant_in(vars, 1))?;
    det.symmetrize().ok_or_else(|| AlexanderError::NotSymmetric(det.to_string()))
}

/// Half the second derivative at 1 of the knot's Alexander polynomial.
pub fn half_ddelta1(d: &Diagram) -> Result<i64, AlexanderError> {
    half_second_derivative(&alexander_knot(d)?)
}

pub fn half_second_derivative(p: &LaurentPoly) -> Result<i64, AlexanderError> {
    let dd = p.derivative_at_ones(&[2])?;
    let (half, rem) = dd.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(AlexanderError::OddSecondDerivative(dd));
    }
    half.to_i64().ok_or(AlexanderError::Overflow(half))
}

/// Alexander polynomial from the Fox matrix of the Wirtinger presentation,
/// before any normalization. One variable per component (`t` for a knot,
/// `t1..tn` otherwise). The column of component 1's meridian and the last
/// relation are dropped; for links the minor is divided by `t1 - 1`.
/// Split diagrams give 0.
pub fn fox_alexander_raw(d: &Diagram) -> Result<LaurentPoly, AlexanderError> {
    let n = d.num_components();
    let vars = variables(n);
    if n > 1 && !d.is_connected() {
        return Ok(LaurentPoly::zero_in(vars));
    }
    let p = wirtinger(d);
    let rank = p.rank();
    let rows = p.relations.len();
    if n > 1 && rank != rows {
        // some component passes over everything and lifts off
        return Ok(LaurentPoly::zero_in(vars));
    }
    let images: Vec<Vec<i64>> = p
        .generator_component
        .iter()
        .map(|&k| (0..n).map(|j| i64::from(j == k)).collect())
        .collect();
    let drop_col = p.meridians[0];
    let mut matrix = Vec::new();
    for r in p.relations.iter().take(rows.saturating_sub(1)) {
        let mut row = Vec::new();
        for g in (0..rank).filter(|&g| g != drop_col) {
            row.push(r.fox_derivative(g, &vars, &images)?);
        }
        matrix.push(row);
    }
    let one = LaurentPoly::constant_in(vars.clone(), 1);
    let minor = bareiss_det(&matrix, &one)?;
    if n == 1 {
        return Ok(minor);
    }
    let t1_minus_1 = &LaurentPoly::variable_power(&vars, 0, 1) - &one;
    Ok(minor.exact_div(&t1_minus_1)?)
}

/// Multivariable Alexander polynomial in canonical form: lowest exponent of
/// each variable zero, lexicographically smallest monomial positive, then
/// multiplied by [`ALEXANDER_CALIBRATION`]. A knot gets the symmetric form
/// of [`alexander_knot`].
pub fn alexander_link(d: &Diagram) -> Result<LaurentPoly, AlexanderError> {
    let raw = fox_alexander_raw(d)?;
    if d.num_components() == 1 {
        return raw.symmetrize().ok_or_else(|| AlexanderError::NotSymmetric(raw.to_string()));
    }
    Ok(raw.normalize_units().scale(&BigInt::from(ALEXANDER_CALIBRATION)))
}

/// Mixed first partial derivative of [`alexander_link`] at all ones.
pub fn zeta(d: &Diagram) -> Result<i64, AlexanderError> {
    let p = alexander_link(d)?;
    let z = p.derivative_at_ones(&vec![1; p.nvars()])?;
    z.to_i64().ok_or(AlexanderError::Overflow(z))
}
