use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Real;

/// Dense univariate polynomial; `coeffs[k]` multiplies `t^k`.
///
/// The zero polynomial is the empty coefficient list, and the trailing
/// coefficient of a nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R: Real> {
    coeffs: Vec<R>,
}

impl<R: Real> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| *c == R::zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c == R::zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: R) -> R {
        let mut acc = R::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn scale(&self, s: R) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * R::from_usize(i + 1).unwrap())
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c / R::from_usize(i + 1).unwrap();
        }
        Self::new(coeffs)
    }

    /// Multiply by `t`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Composition `p(a t + b)`, expanded by Horner over the affine argument.
    pub fn compose_affine(&self, a: R, b: R) -> Self {
        let arg = Poly::new(vec![b, a]);
        let mut acc = Poly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &Poly::constant(c);
        }
        acc
    }
}

impl<R: Real> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = vec![R::zero(); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i] + c;
        }
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i] + c;
        }
        Poly::new(coeffs)
    }
}

impl<R: Real> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        self + &rhs.clone().neg()
    }
}

impl<R: Real> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Real> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j] + a * b;
            }
        }
        Poly::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Poly::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::<f64>::new(vec![0.0, 0.0]).is_zero());
    }

    #[test]
    fn compose_affine_matches_pointwise() {
        // p(t) = t^2 - 3t + 2 composed with 2t - 1
        let p = Poly::new(vec![2.0, -3.0, 1.0]);
        let q = p.compose_affine(2.0, -1.0);
        for t in [-1.5, 0.0, 0.7, 2.0] {
            assert!((q.eval(t) - p.eval(2.0 * t - 1.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn antiderivative_then_derivative_round_trips() {
        let p = Poly::new(vec![4.0, 0.0, -2.0, 1.0]);
        assert_eq!(p.antiderivative().derivative(), p);
    }
}
