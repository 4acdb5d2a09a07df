use std::ops::{Add, Mul};

use super::poly::Poly;
use crate::scalar::Real;

/// Affine form `a w + b`, used for chamber-dependent integration bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineForm<R: Real> {
    pub a: R,
    pub b: R,
}

impl<R: Real> AffineForm<R> {
    pub fn new(a: R, b: R) -> Self {
        Self { a, b }
    }

    pub fn constant(b: R) -> Self {
        Self { a: R::zero(), b }
    }

    pub fn eval(&self, w: R) -> R {
        self.a * w + self.b
    }

    pub fn as_poly(&self) -> Poly<R> {
        Poly::new(vec![self.b, self.a])
    }
}

/// Bivariate polynomial in `(w, t)`; `rows[i]` is the coefficient polynomial
/// of `w^i` as a polynomial in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<R: Real> {
    rows: Vec<Poly<R>>,
}

impl<R: Real> BiPoly<R> {
    /// Build from a coefficient matrix: `coeffs[i][j]` multiplies `w^i t^j`.
    pub fn new(coeffs: Vec<Vec<R>>) -> Self {
        let mut rows: Vec<Poly<R>> = coeffs.into_iter().map(Poly::new).collect();
        while rows.last().is_some_and(|p| p.is_zero()) {
            rows.pop();
        }
        Self { rows }
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![vec![c]])
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The polynomial `p(w)` viewed as a bivariate constant in `t`.
    pub fn from_w_poly(p: &Poly<R>) -> Self {
        Self {
            rows: p.coeffs().iter().map(|&c| Poly::constant(c)).collect(),
        }
    }

    /// The polynomial `q(t)` viewed as a bivariate constant in `w`.
    pub fn from_t_poly(q: &Poly<R>) -> Self {
        Self { rows: vec![q.clone()] }
    }

    /// An affine form `c_w w + c_t t + c`.
    pub fn affine(c_w: R, c_t: R, c: R) -> Self {
        Self::new(vec![vec![c, c_t], vec![c_w]])
    }

    pub fn eval(&self, w: R, t: R) -> R {
        let mut acc = R::zero();
        for row in self.rows.iter().rev() {
            acc = acc * w + row.eval(t);
        }
        acc
    }

    pub fn scale(&self, s: R) -> Self {
        Self {
            rows: self.rows.iter().map(|p| p.scale(s)).collect(),
        }
    }

    /// Antiderivative in `t` with zero constant.
    pub fn antiderivative_t(&self) -> Self {
        Self {
            rows: self.rows.iter().map(|p| p.antiderivative()).collect(),
        }
    }

    /// Substitute `t = bound(w)`, producing a polynomial in `w`.
    pub fn substitute_t(&self, bound: &AffineForm<R>) -> Poly<R> {
        // Horner in t over the affine argument, with w-polynomial coefficients.
        let max_t_deg = self.rows.iter().filter_map(|p| p.degree()).max();
        let Some(max_t_deg) = max_t_deg else {
            return Poly::zero();
        };
        let arg = bound.as_poly();
        let mut acc = Poly::zero();
        for j in (0..=max_t_deg).rev() {
            let mut coeff_j = Vec::with_capacity(self.rows.len());
            for row in &self.rows {
                coeff_j.push(row.coeffs().get(j).copied().unwrap_or_else(R::zero));
            }
            acc = &(&acc * &arg) + &Poly::new(coeff_j);
        }
        acc
    }
}

impl<R: Real> Add for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn add(self, rhs: &BiPoly<R>) -> BiPoly<R> {
        let n = self.rows.len().max(rhs.rows.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let zero = Poly::zero();
            let a = self.rows.get(i).unwrap_or(&zero);
            let b = rhs.rows.get(i).unwrap_or(&zero);
            rows.push(a + b);
        }
        while rows.last().is_some_and(|p: &Poly<R>| p.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }
}

impl<R: Real> Mul for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn mul(self, rhs: &BiPoly<R>) -> BiPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![Poly::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in rhs.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly { rows }
    }
}

/// `int_{lower(w)}^{upper(w)} q(w, t) dt` as an exact polynomial in `w`.
pub fn inner_integrate<R: Real>(
    q: &BiPoly<R>,
    lower: &AffineForm<R>,
    upper: &AffineForm<R>,
) -> Poly<R> {
    let anti = q.antiderivative_t();
    &anti.substitute_t(upper) - &anti.substitute_t(lower)
}
