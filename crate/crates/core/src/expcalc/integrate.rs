use super::gamma::{factorial, gamma_p};
use super::poly::Poly;
use crate::scalar::{CompensatedSum, Real};

/// `int_lo^hi p(t) e^{mu t} dt` in closed form.
///
/// For `mu = 0` this is the polynomial antiderivative. Otherwise the integral
/// is anchored at the endpoint where the exponential peaks and reduced to
/// moments `int_0^L s^k e^{-nu s} ds = k! P(k+1, nu L) / nu^{k+1}`, which are
/// positive and uniformly stable in `nu`: the evaluation degrades smoothly
/// into the polynomial case as `mu -> 0` instead of dividing by `mu^{k+1}`.
pub fn integrate_exp_poly<R: Real>(p: &Poly<R>, mu: R, lo: R, hi: R) -> R {
    debug_assert!(lo.is_finite() && hi.is_finite() && mu.is_finite());
    if p.is_zero() || lo == hi {
        return R::zero();
    }
    if hi < lo {
        return -integrate_exp_poly(p, mu, hi, lo);
    }
    let len = hi - lo;
    if mu == R::zero() || (mu * len).abs() < R::min_positive_value() {
        let anti = p.antiderivative();
        return anti.eval(hi) - anti.eval(lo);
    }

    // Anchor at the peak of e^{mu t}: substitute t = anchor -/+ s so the
    // remaining exponential decays along s in [0, len].
    let (anchor, sign, nu) = if mu > R::zero() {
        (hi, -R::one(), mu)
    } else {
        (lo, R::one(), -mu)
    };
    let shifted = p.compose_affine(sign, anchor);
    let scale = (mu * anchor).exp();

    let x = nu * len;
    let mut acc = CompensatedSum::new();
    let mut nu_pow = nu; // nu^{k+1}
    for (k, &c) in shifted.coeffs().iter().enumerate() {
        if k > 0 {
            nu_pow = nu_pow * nu;
        }
        if c != R::zero() {
            let moment = factorial::<R>(k) * gamma_p(k + 1, x) / nu_pow;
            acc.add(c * moment);
        }
    }
    scale * acc.total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::lit;

    fn simpson(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
        let h = (hi - lo) / n as f64;
        let mut s = f(lo) + f(hi);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(lo + i as f64 * h);
        }
        s * h / 3.0
    }

    #[test]
    fn constant_integrand() {
        let one = Poly::constant(1.0);
        assert_eq!(integrate_exp_poly(&one, 0.0, 0.0, 1.0), 1.0);
    }

    #[test]
    fn polynomial_case_is_exact() {
        // (3 + 2t)^2 over [-1, 0] = 13/3
        let p = Poly::new(vec![9.0, 12.0, 4.0]);
        let got = integrate_exp_poly(&p, 0.0, -1.0, 0.0);
        assert!((got - 13.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn continuity_across_tiny_mu() {
        let p = Poly::new(vec![1.0, -2.0, 0.5, 3.0, 0.0, 1.0, 0.25]);
        let at_zero = integrate_exp_poly(&p, 0.0, -1.0, 3.0);
        for mu in [1e-13, -1e-13, 1e-9, -1e-9, 1e-6, -1e-6] {
            let got = integrate_exp_poly(&p, mu, -1.0, 3.0);
            // first-order drift is mu * int t p(t)
            let drift = mu * integrate_exp_poly(&p.shift_up(), 0.0, -1.0, 3.0);
            assert!(
                (got - at_zero - drift).abs() < 1e-10 * at_zero.abs() + 1e-12,
                "mu={mu}"
            );
        }
    }

    #[test]
    fn matches_quadrature_for_moderate_rates() {
        let p = Poly::new(vec![2.0, -1.0, 0.0, 1.0, -0.5, 0.0, 2.0]);
        for mu in [-6.0, -0.9377815595425358, -0.3, 0.4, 1.7, 5.0] {
            let got = integrate_exp_poly(&p, mu, -1.0, 3.0);
            let want = simpson(|t| p.eval(t) * (mu * t).exp(), -1.0, 3.0, 40_000);
            assert!(
                (got - want).abs() < 1e-9 * (1.0 + want.abs()),
                "mu={mu} got={got} want={want}"
            );
        }
    }

    #[test]
    fn reversed_bounds_flip_sign() {
        let p = Poly::new(vec![0.0, 1.0]);
        let a = integrate_exp_poly(&p, -0.7, 0.0, 2.0);
        let b = integrate_exp_poly(&p, -0.7, 2.0, 0.0);
        assert_eq!(a, -b);
    }

    #[test]
    fn generic_scalar_compiles_with_f32() {
        let p = Poly::new(vec![lit::<f32>(1.0), lit::<f32>(1.0)]);
        let v = integrate_exp_poly(&p, lit::<f32>(-0.5), lit::<f32>(0.0), lit::<f32>(1.0));
        // int (1+t) e^{-t/2} dt over [0,1]
        let want = 6.0 - 8.0 * (-0.5f64).exp();
        assert!((v as f64 - want).abs() < 1e-5);
    }
}
