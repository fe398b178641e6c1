use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Ring};

/// Laurent polynomial with integer coefficients in commuting variables.
///
/// Terms map exponent vectors (one entry per variable) to nonzero
/// coefficients. The variable list is fixed per value; arithmetic between
/// polynomials over different variable lists panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_in(vars: Vec<String>) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn constant_in(vars: Vec<String>, c: impl Into<BigInt>) -> Self {
        let exps = vec![0; vars.len()];
        Self::monomial_in(vars, exps, c)
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        Self::constant_in(vars.iter().map(|s| s.to_string()).collect(), c)
    }

    pub fn monomial_in(vars: Vec<String>, exps: Vec<i64>, c: impl Into<BigInt>) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero_in(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The single variable `vars[index]` raised to `power`.
    pub fn variable_power(vars: &[String], index: usize, power: i64) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[index] = power;
        Self::monomial_in(vars.to_vec(), exps, 1)
    }

    /// Build from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, i64)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    /// Univariate helper: `coeffs[k]` is the coefficient of `t^(low + k)`.
    pub fn univariate(var: &str, low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            &[var],
            coeffs.iter().enumerate().map(|(k, &c)| (vec![low + k as i64], c)),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "Laurent polynomials over different variables");
    }

    pub fn same_vars(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch(self.vars.clone(), other.vars.clone()))
        }
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        Self { vars: self.vars.clone(), terms }
    }

    /// Per-variable minimum exponent; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        self.fold_exponents(i64::min)
    }

    /// Per-variable maximum exponent; `None` for the zero polynomial.
    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: fn(i64, i64) -> i64) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(&a, &b)| f(a, b)).collect()))
    }

    /// Value at `(1, …, 1)`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact mixed partial derivative evaluated at `(1, …, 1)`.
    ///
    /// `orders[i]` is the number of derivatives taken in variable `i`. A
    /// monomial `t^e` contributes the falling factorial `e (e-1) … (e-k+1)`
    /// per variable, which is also correct for negative exponents.
    pub fn derivative_at_ones(&self, orders: &[u32]) -> Result<BigInt, AlgebraError> {
        if orders.len() != self.vars.len() {
            return Err(AlgebraError::OrderArity { expected: self.vars.len(), got: orders.len() });
        }
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (&exp, &k) in e.iter().zip(orders) {
                for step in 0..k as i64 {
                    term *= exp - step;
                }
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Like [`derivative_at_ones`](Self::derivative_at_ones) with orders
    /// given by variable name; unnamed variables get order 0.
    pub fn derivative_at_ones_named(&self, orders: &[(&str, u32)]) -> Result<BigInt, AlgebraError> {
        let mut dense = vec![0u32; self.vars.len()];
        for (name, k) in orders {
            let idx = self
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
            dense[idx] += k;
        }
        self.derivative_at_ones(&dense)
    }

    /// Substitute `t_i -> t_i^{-1}` in every variable.
    pub fn invert_variables(&self) -> Self {
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect();
        Self { vars: self.vars.clone(), terms }
    }

    /// Same terms, new variable names (same count).
    pub fn rename(&self, vars: Vec<String>) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        Self { vars, terms: self.terms.clone() }
    }

    /// Canonical representative of the class `±t^a · self`: lowest exponent
    /// of every variable is zero and the lexicographically smallest
    /// monomial has a positive coefficient.
    pub fn normalize_units(&self) -> Self {
        let Some(low) = self.min_exponents() else {
            return self.clone();
        };
        let shifted = self.shift(&low.iter().map(|x| -x).collect::<Vec<_>>());
        let lead_negative = shifted.terms.values().next().map(|c| c.is_negative()).unwrap_or(false);
        if lead_negative {
            -shifted
        } else {
            shifted
        }
    }

    /// Univariate only: multiply by `±t^k` so the exponents are centred on
    /// zero and the value at `1` is positive. Returns `None` when the
    /// exponent span is odd (no symmetric representative exists).
    pub fn symmetrize(&self) -> Option<Self> {
        assert_eq!(self.vars.len(), 1, "symmetrize is univariate");
        let (Some(lo), Some(hi)) = (self.min_exponents(), self.max_exponents()) else {
            return Some(self.clone());
        };
        let span = hi[0] - lo[0];
        if span % 2 != 0 {
            return None;
        }
        let centred = self.shift(&[-(lo[0] + span / 2)]);
        Some(if centred.eval_ones().is_negative() { -centred } else { centred })
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Division proceeds by lex-leading terms. Every exponent of a true
    /// quotient lies in the box `[min(self) - min(d), max(self) - max(d)]`
    /// coordinatewise, so a candidate term outside that box proves the
    /// division is not exact.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        self.same_vars(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::InexactDivision);
        }
        let mut quotient = Self::zero_in(self.vars.clone());
        if self.is_zero() {
            return Ok(quotient);
        }
        let (dlo, dhi) = (divisor.min_exponents().unwrap(), divisor.max_exponents().unwrap());
        let (plo, phi) = (self.min_exponents().unwrap(), self.max_exponents().unwrap());
        let qlo: Vec<i64> = plo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let qhi: Vec<i64> = phi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        let (dlead_e, dlead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rest = self.clone();
        while let Some((e, c)) = rest.terms.iter().next_back() {
            let qe: Vec<i64> = e.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            let in_box = qe.iter().zip(&qlo).zip(&qhi).all(|((x, lo), hi)| lo <= x && x <= hi);
            let (qc, rem) = c.div_rem(dlead_c);
            if !in_box || !rem.is_zero() {
                return Err(AlgebraError::InexactDivision);
            }
            let term = Self::monomial_in(self.vars.clone(), qe, qc);
            rest = &rest - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Ok(quotient)
    }

    /// Univariate coefficient list from the lowest to the highest exponent,
    /// together with that lowest exponent.
    pub fn univariate_coefficients(&self) -> (i64, Vec<BigInt>) {
        assert_eq!(self.vars.len(), 1);
        let (Some(lo), Some(hi)) = (self.min_exponents(), self.max_exponents()) else {
            return (0, Vec::new());
        };
        let coeffs = (lo[0]..=hi[0]).map(|k| self.coefficient(&[k])).collect();
        (lo[0], coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_vars(rhs);
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly { vars: self.vars.clone(), terms: acc }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero_in(self.vars.clone())
    }
    fn one_like(&self) -> Self {
        Self::constant_in(self.vars.clone(), 1)
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
        LaurentPoly::exact_div(self, divisor).ok()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.vars.join(","))
    }
}
