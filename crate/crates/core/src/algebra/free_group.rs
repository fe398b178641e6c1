use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, LaurentPoly};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Self { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in the free group on `rank` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, gen: usize) -> Result<Self, AlgebraError> {
        Self::from_letters(rank, [Letter::new(gen, false)])
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(
        rank: usize,
        letters: I,
    ) -> Result<Self, AlgebraError> {
        let mut w = Self::identity(rank);
        for l in letters {
            if l.gen >= rank {
                return Err(AlgebraError::GeneratorOutOfRange { gen: l.gen, rank });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// Word from `(generator, exponent)` syllables.
    pub fn from_syllables(rank: usize, syllables: &[(usize, i64)]) -> Result<Self, AlgebraError> {
        let letters = syllables.iter().flat_map(|&(g, e)| {
            std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)
        });
        Self::from_letters(rank, letters)
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "free groups of different rank");
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        Self { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g · self · g^{-1}`
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exponent()).sum()
    }

    /// Replace each generator `i` by the word `images[i]` (which may live in a
    /// free group of a different rank).
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord, AlgebraError> {
        let target = images.first().map(|w| w.rank).unwrap_or(0);
        let mut out = FreeWord::identity(target);
        for l in &self.letters {
            let img = images
                .get(l.gen)
                .ok_or(AlgebraError::GeneratorOutOfRange { gen: l.gen, rank: images.len() })?;
            out = out.mul(&if l.inverse { img.inverse() } else { img.clone() });
        }
        Ok(out)
    }

    /// Image under the abelianization sending generator `i` to the monomial
    /// with exponent vector `images[i]` in `vars`.
    pub fn abelianize(&self, vars: &[String], images: &[Vec<i64>]) -> Result<LaurentPoly, AlgebraError> {
        let mut e = vec![0i64; vars.len()];
        for l in &self.letters {
            let img = self.image(images, l.gen)?;
            for (x, y) in e.iter_mut().zip(img) {
                *x += l.exponent() * y;
            }
        }
        Ok(LaurentPoly::monomial_in(vars.to_vec(), e, 1))
    }

    fn image<'a>(&self, images: &'a [Vec<i64>], gen: usize) -> Result<&'a Vec<i64>, AlgebraError> {
        images.get(gen).ok_or(AlgebraError::GeneratorOutOfRange { gen, rank: images.len() })
    }

    /// Fox derivative with respect to generator `wrt`, pushed through the
    /// abelianization described by `images` (see [`abelianize`](Self::abelianize)).
    pub fn fox_derivative(
        &self,
        wrt: usize,
        vars: &[String],
        images: &[Vec<i64>],
    ) -> Result<LaurentPoly, AlgebraError> {
        if wrt >= self.rank {
            return Err(AlgebraError::GeneratorOutOfRange { gen: wrt, rank: self.rank });
        }
        let mut acc = LaurentPoly::zero_in(vars.to_vec());
        let mut prefix = vec![0i64; vars.len()];
        for l in &self.letters {
            let img = self.image(images, l.gen)?;
            if l.inverse {
                for (x, y) in prefix.iter_mut().zip(img) {
                    *x -= y;
                }
                if l.gen == wrt {
                    acc = &acc - &LaurentPoly::monomial_in(vars.to_vec(), prefix.clone(), BigInt::one());
                }
            } else {
                if l.gen == wrt {
                    acc = &acc + &LaurentPoly::monomial_in(vars.to_vec(), prefix.clone(), BigInt::one());
                }
                for (x, y) in prefix.iter_mut().zip(img) {
                    *x += y;
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inverse { format!("x{}^-1", l.gen) } else { format!("x{}", l.gen) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &[(usize, i64)]) -> FreeWord {
        FreeWord::from_syllables(rank, s).unwrap()
    }

    #[test]
    fn free_reduction() {
        let a = w(2, &[(0, 1), (1, 1)]);
        assert!(a.mul(&a.inverse()).is_identity());
        assert_eq!(w(2, &[(0, 2), (0, -1), (1, 1)]), w(2, &[(0, 1), (1, 1)]));
    }

    #[test]
    fn out_of_range_generator() {
        assert!(matches!(
            FreeWord::generator(2, 5),
            Err(AlgebraError::GeneratorOutOfRange { gen: 5, rank: 2 })
        ));
    }

    #[test]
    fn fox_derivative_of_commutator() {
        // [x0, x1] = x0 x1 x0^-1 x1^-1; d/dx0 = 1 - x0 x1 x0^-1 -> 1 - t1
        let vars = vec!["t0".to_string(), "t1".to_string()];
        let images = vec![vec![1, 0], vec![0, 1]];
        let c = w(2, &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let d0 = c.fox_derivative(0, &vars, &images).unwrap();
        let expected = LaurentPoly::from_terms(&["t0", "t1"], [(vec![0, 0], 1), (vec![0, 1], -1)]);
        assert_eq!(d0, expected);
    }

    #[test]
    fn fundamental_formula() {
        // sum_j (d w / d x_j)(t_j - 1) = w - 1 after abelianization
        let vars = vec!["a".to_string(), "b".to_string()];
        let images = vec![vec![1, 0], vec![0, 1]];
        let word = w(2, &[(0, 2), (1, -3), (0, -1), (1, 1)]);
        let mut lhs = LaurentPoly::zero_in(vars.clone());
        for j in 0..2 {
            let tj = &LaurentPoly::monomial_in(vars.clone(), images[j].clone(), 1)
                - &LaurentPoly::constant_in(vars.clone(), 1);
            lhs = &lhs + &(&word.fox_derivative(j, &vars, &images).unwrap() * &tj);
        }
        let rhs = &word.abelianize(&vars, &images).unwrap() - &LaurentPoly::constant_in(vars, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn display() {
        assert_eq!(w(2, &[(0, 1), (1, -1)]).to_string(), "x0 x1^-1");
        assert_eq!(FreeWord::identity(3).to_string(), "1");
    }
}
