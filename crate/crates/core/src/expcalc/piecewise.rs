use super::integrate::integrate_exp_poly;
use super::poly::Poly;
use crate::scalar::{CompensatedSum, Real};

/// One exponential-polynomial term `p(t) e^{mu t}`.
#[derive(Clone, Debug)]
pub struct ExpTerm<R: Real> {
    pub poly: Poly<R>,
    pub mu: R,
}

impl<R: Real> ExpTerm<R> {
    pub fn new(poly: Poly<R>, mu: R) -> Self {
        Self { poly, mu }
    }

    pub fn eval(&self, t: R) -> R {
        self.poly.eval(t) * (self.mu * t).exp()
    }
}

/// Piecewise sum of exponential-polynomial terms over disjoint intervals.
///
/// Pieces are normalized on construction: sorted by left endpoint, zero-length
/// pieces rejected, overlaps rejected.
#[derive(Clone, Debug)]
pub struct PiecewiseExpPoly<R: Real> {
    pieces: Vec<(R, R, Vec<ExpTerm<R>>)>,
}

impl<R: Real> PiecewiseExpPoly<R> {
    pub fn new(pieces: Vec<(R, R, Vec<ExpTerm<R>>)>) -> crate::Result<Self> {
        let mut pieces = pieces;
        for &(lo, hi, _) in &pieces {
            if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
                return Err(crate::CalcError::InvalidProfile(format!(
                    "piece [{lo}, {hi}] is empty or unordered"
                )));
            }
        }
        pieces.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for pair in pieces.windows(2) {
            if pair[1].0 < pair[0].1 {
                return Err(crate::CalcError::InvalidProfile(format!(
                    "pieces [{}, {}] and [{}, {}] overlap",
                    pair[0].0, pair[0].1, pair[1].0, pair[1].1
                )));
            }
        }
        Ok(Self { pieces })
    }

    pub fn empty() -> Self {
        Self { pieces: Vec::new() }
    }

    pub fn pieces(&self) -> &[(R, R, Vec<ExpTerm<R>>)] {
        &self.pieces
    }
}

/// Total integral of a piecewise exponential-polynomial density.
pub fn integrate_piecewise<R: Real>(f: &PiecewiseExpPoly<R>) -> R {
    let mut acc = CompensatedSum::new();
    for (lo, hi, terms) in f.pieces() {
        for term in terms {
            acc.add(integrate_exp_poly(&term.poly, term.mu, *lo, *hi));
        }
    }
    acc.total()
}
