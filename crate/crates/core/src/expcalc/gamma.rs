//! Regularized lower incomplete gamma function for small integer shape.
//!
//! `int_0^L s^k e^{-nu s} ds = k! P(k+1, nu L) / nu^{k+1}`, so this single
//! special function carries the whole exp-poly calculus. The series is used
//! for `x < a + 1` and the Lentz continued fraction otherwise; both converge
//! without cancellation, which is what keeps [`super::integrate_exp_poly`]
//! accurate for every exponent rate.

use crate::scalar::{lit, Real};

const MAX_ITER: usize = 300;

/// Factorial as a scalar; shapes stay tiny so direct multiplication is exact.
pub fn factorial<R: Real>(n: usize) -> R {
    let mut acc = R::one();
    for i in 2..=n {
        acc = acc * R::from_usize(i).unwrap();
    }
    acc
}

/// Regularized lower incomplete gamma `P(a, x)` for integer `a >= 1`, `x >= 0`.
pub fn gamma_p<R: Real>(a: usize, x: R) -> R {
    debug_assert!(a >= 1);
    debug_assert!(x >= R::zero());
    if x == R::zero() {
        return R::zero();
    }
    // exp(a ln x - x - ln Gamma(a)); underflow to zero means P is 0 or 1
    // depending on which side of the mode we are on.
    let a_r = R::from_usize(a).unwrap();
    let log_pref = a_r * x.ln() - x - factorial::<R>(a - 1).ln();
    let prefactor = log_pref.exp();
    if prefactor == R::zero() {
        return if x > a_r { R::one() } else { R::zero() };
    }
    if x < a_r + R::one() {
        series_p(a_r, x, prefactor)
    } else {
        R::one() - cf_q(a_r, x, prefactor)
    }
}

/// Series for P(a, x): prefactor * sum x^n / (a (a+1) ... (a+n)).
fn series_p<R: Real>(a: R, x: R, prefactor: R) -> R {
    let mut ap = a;
    let mut term = R::one() / a;
    let mut sum = term;
    for _ in 0..MAX_ITER {
        ap = ap + R::one();
        term = term * x / ap;
        sum = sum + term;
        if term.abs() < sum.abs() * R::epsilon() {
            break;
        }
    }
    prefactor * sum
}

/// Continued fraction for Q(a, x) by the modified Lentz method.
fn cf_q<R: Real>(a: R, x: R, prefactor: R) -> R {
    let tiny = lit::<R>(1e-300);
    let mut b = x + R::one() - a;
    let mut c = R::one() / tiny;
    let mut d = R::one() / b;
    let mut h = d;
    for i in 1..=MAX_ITER {
        let i_r = R::from_usize(i).unwrap();
        let an = -i_r * (i_r - a);
        b = b + lit(2.0);
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = R::one() / d;
        let delta = d * c;
        h = h * delta;
        if (delta - R::one()).abs() < R::epsilon() {
            break;
        }
    }
    prefactor * h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_of_one_is_exponential_cdf() {
        for x in [1e-6, 0.3, 1.0, 5.0, 40.0] {
            let expected = 1.0 - (-x as f64).exp();
            assert!((gamma_p(1, x) - expected).abs() < 1e-15, "x={x}");
        }
    }

    #[test]
    fn p_matches_direct_sum_for_integer_shape() {
        // P(a, x) = 1 - e^{-x} sum_{i<a} x^i / i!
        for a in 1..=9usize {
            for x in [0.1, 1.0, 2.5, 7.0, 20.0] {
                let mut s = 0.0f64;
                let mut term = 1.0;
                for i in 0..a {
                    if i > 0 {
                        term *= x / i as f64;
                    }
                    s += term;
                }
                let expected = 1.0 - (-x).exp() * s;
                let got = gamma_p(a, x);
                assert!(
                    (got - expected).abs() < 1e-12 * (1.0 + expected.abs()),
                    "a={a} x={x} got={got} expected={expected}"
                );
            }
        }
    }

    #[test]
    fn saturates_for_large_argument() {
        assert_eq!(gamma_p::<f64>(4, 800.0), 1.0);
        assert_eq!(gamma_p::<f64>(4, 0.0), 0.0);
    }
}
