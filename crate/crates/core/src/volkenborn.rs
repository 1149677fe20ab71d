//! Volkenborn integrals of polynomial integrands.
//!
//! For a polynomial `p = Σ a_n C(x,n)` the integral is the finite sum
//! `Σ (-1)^n a_n/(n+1)`, so everything here is plain rational arithmetic.

use num_traits::Zero;

use crate::kernel::{binomial_q, factorial_q, int};
use crate::scalar::sign_pow;
use crate::{Rational, UniPoly};

/// `p = Σ_n coefficients[n] · C(x, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MahlerExpansion {
    pub source: UniPoly,
    pub coefficients: Vec<Rational>,
}

impl MahlerExpansion {
    /// Rebuilds the source polynomial from the binomial basis.
    pub fn reconstruct(&self) -> UniPoly {
        self.coefficients
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (n, a)| {
                let basis = UniPoly::falling_factorial(n).scale(&(a / factorial_q(n)));
                &acc + &basis
            })
    }
}

/// Forward differences at zero: `a_n = Σ_i (-1)^{n-i} C(n,i) p(i)`.
pub fn mahler_coefficients(p: &UniPoly) -> MahlerExpansion {
    let degree = p.degree().unwrap_or(0);
    let values: Vec<Rational> = (0..=degree).map(|i| p.eval(&int(i as i64))).collect();
    let coefficients = (0..=degree)
        .map(|n| {
            (0..=n).fold(Rational::zero(), |acc, i| {
                acc + sign_pow::<Rational>(n - i) * binomial_q(n, i) * &values[i]
            })
        })
        .collect();
    MahlerExpansion { source: p.clone(), coefficients }
}

/// `∫_{Z_p} p(x) dμ_1(x) = Σ (-1)^n a_n/(n+1)`.
pub fn volkenborn_integral_poly(p: &UniPoly) -> Rational {
    mahler_coefficients(p)
        .coefficients
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (n, a)| acc + sign_pow::<Rational>(n) * a / int(n as i64 + 1))
}

/// Both sides of `∫ p(x+1) - ∫ p(x) = p'(0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftCheck {
    pub difference: Rational,
    pub derivative_at_zero: Rational,
}

impl ShiftCheck {
    pub fn holds(&self) -> bool {
        self.difference == self.derivative_at_zero
    }
}

pub fn volkenborn_shift_check(p: &UniPoly) -> ShiftCheck {
    let shifted = p.shift_arg(&int(1));
    ShiftCheck {
        difference: volkenborn_integral_poly(&shifted) - volkenborn_integral_poly(p),
        derivative_at_zero: p.derivative().eval(&Rational::zero()),
    }
}

/// `∫ x_(n) x_(m) dμ_1 = Σ_{k=0}^{m} (-1)^{m+n-k} C(n,k) C(m,k) k! (n+m-k)!/(n+m-k+1)`.
pub fn volkenborn_falling_product(n: usize, m: usize) -> Rational {
    (0..=m).fold(Rational::zero(), |acc, k| {
        let top = n + m - k;
        acc + sign_pow::<Rational>(top) * binomial_q(n, k) * binomial_q(m, k) * factorial_q(k) * factorial_q(top)
            / int(top as i64 + 1)
    })
}

/// `((-1)^n/n!) Σ_k C(n,k) t^{n-k} ∫ x_(k) x_(n-k) dμ_1`, as a polynomial in `t`.
pub fn theorem_a11_polynomial(n: usize) -> UniPoly {
    let scale = sign_pow::<Rational>(n) / factorial_q(n);
    let sum = (0..=n).fold(UniPoly::zero(), |acc, k| {
        let c = binomial_q(n, k) * volkenborn_falling_product(k, n - k);
        &acc + &UniPoly::monomial(c, n - k)
    });
    sum.scale(&scale)
}

/// Coefficient of `t^{n-k}` in the closed double sum, before the `1/n!`.
fn ki1_inner(n: usize, k: usize) -> Rational {
    (0..=n - k).fold(Rational::zero(), |acc, j| {
        acc + sign_pow::<Rational>(j)
            * binomial_q(n, k)
            * binomial_q(n - k, j)
            * binomial_q(k, j)
            * factorial_q(j)
            * factorial_q(n - j)
            / int((n - j + 1) as i64)
    })
}

/// `(1/n!) Σ_k Σ_j (-1)^j C(n,k) C(n-k,j) C(k,j) j!(n-j)!/(n-j+1) t^{n-k}`.
pub fn theorem_ki1_polynomial(n: usize) -> UniPoly {
    let sum = (0..=n).fold(UniPoly::zero(), |acc, k| &acc + &UniPoly::monomial(ki1_inner(n, k), n - k));
    sum.scale(&(factorial_q(n).recip()))
}

/// The double sum above at `t = 1`.
pub fn corollary_ki2_sum(n: usize) -> Rational {
    (0..=n).fold(Rational::zero(), |acc, k| acc + ki1_inner(n, k)) / factorial_q(n)
}
