//! The Leibnitz numbers and the Daehee, Changhee and `Y_n(λ)` families.
//!
//! `l(n,k)` has three independent evaluators: the closed form
//! `1/((n+1) C(n,k))`, an alternating binomial sum, and the recurrence
//! `l(n,k) = k/(n+1) · l(n-1,k-1)` seeded with `l(n,0) = 1/(n+1)`. The triangle
//! builder uses only the recurrence so the three can serve as oracles for one
//! another.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{binomial, binomial_q, factorial, factorial_q, int, rat};
use crate::scalar::{pow_u32, sign_pow};
use crate::{Rational, UniPoly};

fn check_index(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::IndexOutOfRange { n, k })
    } else {
        Ok(())
    }
}

/// `l(n,k) = 1/((n+1) C(n,k))`.
pub fn leibnitz(n: usize, k: usize) -> Result<Rational> {
    check_index(n, k)?;
    let denom = BigInt::from(binomial(n, k as i64)) * BigInt::from(n + 1);
    Ok(Rational::new(BigInt::one(), denom))
}

/// `Σ_{v=0}^{k} (-1)^{k-v} C(k,v)/(n-v+1)`.
pub fn leibnitz_sum_form(n: usize, k: usize) -> Result<Rational> {
    check_index(n, k)?;
    Ok((0..=k).fold(Rational::zero(), |acc, v| {
        acc + sign_pow::<Rational>(k - v) * binomial_q(k, v) / int((n - v + 1) as i64)
    }))
}

/// Rows `0..=n_max` of `l(n,k)`, built from the recurrence alone.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnitzTriangle {
    rows: Vec<Vec<Rational>>,
}

impl LeibnitzTriangle {
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = Vec::with_capacity(n + 1);
            row.push(rat(1, (n + 1) as i64));
            for k in 1..=n {
                let above = &rows[n - 1][k - 1];
                row.push(rat(k as i64, (n + 1) as i64) * above);
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&[Rational]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|r| r.get(k))
    }
}

/// `L_n(t) = Σ_k l(n,k) t^k`.
pub fn leibnitz_polynomial(n: usize) -> UniPoly {
    UniPoly::from_coeffs((0..=n).map(|k| leibnitz(n, k).expect("k <= n")).collect())
}

/// `L_n(1)`, the sum of row `n`.
pub fn row_sum(n: usize) -> Rational {
    (0..=n).map(|k| leibnitz(n, k).expect("k <= n")).sum()
}

/// `D_n = (-1)^n n!/(n+1)`.
pub fn daehee(n: usize) -> Rational {
    sign_pow::<Rational>(n) * Rational::new(BigInt::from(factorial(n)), BigInt::from(n + 1))
}

/// `Ch_n = (-1)^n n!/2^n`.
pub fn changhee(n: usize) -> Rational {
    sign_pow::<Rational>(n) * factorial_q(n) / pow_u32(&int(2), n as u32)
}

/// `Y_n(λ) = (-1)^n (2 n!/(λ-1)) (λ²/(λ-1))^n`, undefined at `λ = 1`.
pub fn y_number(n: usize, lambda: &Rational) -> Result<Rational> {
    let shifted = lambda - int(1);
    if shifted.is_zero() {
        return Err(Error::LambdaPole);
    }
    let ratio = lambda * lambda / &shifted;
    Ok(sign_pow::<Rational>(n) * int(2) * factorial_q(n) / shifted * pow_u32(&ratio, n as u32))
}

/// `(-1)^{n+1} Y_n(-1)`, which reproduces `Ch_n`.
pub fn changhee_from_y(n: usize) -> Rational {
    sign_pow::<Rational>(n + 1) * y_number(n, &int(-1)).expect("-1 is not the pole")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum NumberFamily {
    Daehee,
    Changhee,
    Y,
}

/// One member of a number family, evaluated from its closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct NumberFamilyValue {
    pub family: NumberFamily,
    pub index: usize,
    pub parameter: Option<Rational>,
    pub value: Rational,
}

impl NumberFamilyValue {
    /// `parameter` is `λ` and is required (and only used) for [`NumberFamily::Y`].
    pub fn compute(family: NumberFamily, index: usize, parameter: Option<Rational>) -> Result<Self> {
        let value = match family {
            NumberFamily::Daehee => daehee(index),
            NumberFamily::Changhee => changhee(index),
            NumberFamily::Y => {
                let lambda = parameter.as_ref().ok_or(Error::EmptySamples("lambda"))?;
                y_number(index, lambda)?
            }
        };
        let parameter = if family == NumberFamily::Y { parameter } else { None };
        Ok(Self { family, index, parameter, value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(leibnitz(0, 0).unwrap(), int(1));
        assert_eq!(leibnitz(4, 2).unwrap(), rat(1, 30));
        assert_eq!(leibnitz(2, 1).unwrap(), rat(1, 6));
        assert_eq!(leibnitz(2, 3), Err(Error::IndexOutOfRange { n: 2, k: 3 }));
    }

    #[test]
    fn sum_form_examples() {
        assert_eq!(leibnitz_sum_form(2, 1).unwrap(), rat(1, 6));
        assert_eq!(leibnitz_sum_form(5, 0).unwrap(), rat(1, 6));
        assert_eq!(leibnitz_sum_form(3, 3).unwrap(), rat(1, 4));
        assert!(leibnitz_sum_form(1, 2).is_err());
    }

    #[test]
    fn triangle_examples() {
        let t = LeibnitzTriangle::build(1);
        assert_eq!(t.rows(), &[vec![int(1)], vec![rat(1, 2), rat(1, 2)]]);
        assert_eq!(LeibnitzTriangle::build(2).get(2, 1), Some(&rat(1, 6)));
        assert_eq!(LeibnitzTriangle::build(0).n_max(), 0);
    }

    #[test]
    fn triangle_shape_and_symmetry() {
        let t = LeibnitzTriangle::build(40);
        for (n, row) in t.rows().iter().enumerate() {
            assert_eq!(row.len(), n + 1);
            assert_eq!(row[0], rat(1, (n + 1) as i64));
            for k in 0..=n {
                assert_eq!(row[k], row[n - k]);
                assert!(row[k] > Rational::zero());
            }
        }
    }

    #[test]
    fn triple_oracle_agreement() {
        let t = LeibnitzTriangle::build(40);
        for n in 0..=40 {
            for k in 0..=n {
                let closed = leibnitz(n, k).unwrap();
                assert_eq!(leibnitz_sum_form(n, k).unwrap(), closed, "sum form ({n},{k})");
                assert_eq!(t.get(n, k).unwrap(), &closed, "recurrence ({n},{k})");
            }
        }
    }

    #[test]
    fn harmonic_triangle_descent() {
        for n in 0..=39 {
            for k in 0..=n {
                assert_eq!(
                    leibnitz(n, k).unwrap(),
                    leibnitz(n + 1, k).unwrap() + leibnitz(n + 1, k + 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn pronic_edge_denominators() {
        for n in 1..=40i64 {
            let v = leibnitz(n as usize, 1).unwrap();
            assert_eq!(v.recip(), int(n * (n + 1)));
        }
    }

    #[test]
    fn leibnitz_polynomial_examples() {
        assert_eq!(leibnitz_polynomial(0), UniPoly::one());
        assert_eq!(leibnitz_polynomial(1).coeffs(), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(leibnitz_polynomial(2).eval(&int(1)), rat(5, 6));
        for n in 0..=20 {
            let p = leibnitz_polynomial(n);
            assert_eq!(p.degree(), Some(n));
            assert_eq!(p.eval(&int(0)), rat(1, (n + 1) as i64));
            assert_eq!(p.eval(&int(1)), row_sum(n));
        }
    }

    #[test]
    fn row_sum_recurrence() {
        for n in 1..=40usize {
            assert_eq!(row_sum(n) - row_sum(n - 1) / int(2), rat(1, (n + 1) as i64));
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(daehee(0), int(1));
        assert_eq!(daehee(1), rat(-1, 2));
        assert_eq!(daehee(4), rat(24, 5));
        assert_eq!(changhee(0), int(1));
        assert_eq!(changhee(2), rat(1, 2));
        assert_eq!(changhee(3), rat(-3, 4));
        assert_eq!(y_number(0, &int(3)).unwrap(), int(1));
        assert_eq!(y_number(2, &int(-1)).unwrap(), rat(-1, 2));
        assert_eq!(y_number(1, &int(2)).unwrap(), int(-8));
        assert_eq!(y_number(3, &int(1)), Err(Error::LambdaPole));
    }

    #[test]
    fn y_at_minus_one_is_scaled_changhee() {
        for n in 0..=12usize {
            let expected = -factorial_q(n) / pow_u32(&int(2), n as u32);
            assert_eq!(y_number(n, &int(-1)).unwrap(), expected);
        }
    }

    #[test]
    fn changhee_from_y_examples() {
        assert_eq!(changhee_from_y(0), int(1));
        assert_eq!(changhee_from_y(2), rat(1, 2));
        assert_eq!(changhee_from_y(5), rat(-15, 4));
        for n in 0..=40 {
            assert_eq!(changhee_from_y(n), changhee(n));
        }
    }

    #[test]
    fn family_values() {
        let v = NumberFamilyValue::compute(NumberFamily::Y, 1, Some(int(2))).unwrap();
        assert_eq!(v.value, int(-8));
        assert_eq!(v.parameter, Some(int(2)));
        let d = NumberFamilyValue::compute(NumberFamily::Daehee, 1, Some(int(2))).unwrap();
        assert_eq!(d.parameter, None);
        assert!(NumberFamilyValue::compute(NumberFamily::Y, 1, None).is_err());
        assert_eq!(
            NumberFamilyValue::compute(NumberFamily::Y, 1, Some(int(1))),
            Err(Error::LambdaPole)
        );
    }
}
