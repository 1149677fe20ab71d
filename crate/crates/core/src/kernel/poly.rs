//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::Scalar;

/// Coefficient `i` multiplies the `i`-th power. The zero polynomial has no
/// coefficients and the last stored coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> DensePoly<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: T) -> Self {
        Self::from_coeffs(vec![-root, T::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize_exact(i))
                .collect(),
        )
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(T::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone() / T::from_usize_exact(i + 1));
        }
        Self::from_coeffs(out)
    }

    /// `∫_a^b p(x) dx`.
    pub fn definite_integral(&self, a: &T, b: &T) -> T {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// `p(x + c)`, by Horner's scheme over the polynomial `x + c`.
    pub fn shift_arg(&self, c: &T) -> Self {
        let step = Self::from_coeffs(vec![c.clone(), T::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, coef| &(&acc * &step) + &Self::constant(coef.clone()))
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// `x(x-1)...(x-n+1)`, with the empty product `1` at `n = 0`.
    pub fn falling_factorial(n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, i| {
            &acc * &Self::linear_root(T::from_usize_exact(i))
        })
    }

    /// Synthetic division by `x - root`; returns `(quotient, remainder)`.
    pub fn div_rem_linear(&self, root: &T) -> (Self, T) {
        if self.is_zero() {
            return (Self::zero(), T::zero());
        }
        let n = self.coeffs.len();
        let mut quotient = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for i in (0..n).rev() {
            let value = self.coeffs[i].clone() + carry * root.clone();
            if i == 0 {
                return (Self::from_coeffs(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// `(x - a)^k (b - x)^m`, expanded.
    pub fn bernstein_kernel(a: &T, b: &T, k: u32, m: u32) -> Self {
        let left = Self::linear_root(a.clone()).pow(k);
        let right = Self::from_coeffs(vec![b.clone(), -T::one()]).pow(m);
        &left * &right
    }
}

impl<T: Scalar + Signed + fmt::Display> DensePoly<T> {
    /// Ascending powers: `1/2 + 1/2*t - t^3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        out
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for DensePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl<'a, T: Scalar> Add<&'a DensePoly<T>> for &'a DensePoly<T> {
    type Output = DensePoly<T>;
    fn add(self, rhs: &'a DensePoly<T>) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a DensePoly<T>> for &'a DensePoly<T> {
    type Output = DensePoly<T>;
    fn sub(self, rhs: &'a DensePoly<T>) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a DensePoly<T>> for &'a DensePoly<T> {
    type Output = DensePoly<T>;
    fn mul(self, rhs: &'a DensePoly<T>) -> DensePoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn neg(self) -> DensePoly<T> {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for DensePoly<T> {
            type Output = DensePoly<T>;
            fn $method(self, rhs: DensePoly<T>) -> DensePoly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Scalar> Neg for DensePoly<T> {
    type Output = DensePoly<T>;
    fn neg(self) -> DensePoly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat, Rational};
    use crate::UniPoly;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
        // cancellation in addition drops the leading term
        assert_eq!((&p(&[0, 1, 1]) + &p(&[0, 0, -1])).degree(), Some(1));
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(UniPoly::falling_factorial(0), UniPoly::one());
        assert_eq!(UniPoly::falling_factorial(2), p(&[0, -1, 1]));
        // repeated multiplication x·(x-1)·(x-2), written out
        let by_hand = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[-2, 1]);
        assert_eq!(by_hand, p(&[0, 2, -3, 1]));
        assert_eq!(UniPoly::falling_factorial(3), by_hand);
    }

    #[test]
    fn falling_factorial_matches_integer_products() {
        for n in 0..=20usize {
            let ff = UniPoly::falling_factorial(n);
            for m in 0..=20i64 {
                let direct: i64 = (0..n as i64).map(|i| m - i).product();
                assert_eq!(ff.eval(&int(m)), int(direct), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[0, -1, 1]) + &p(&[0, 1]), p(&[0, 0, 1]));
        assert_eq!(p(&[0, 2, -3, 1]).eval(&int(3)), int(6));
        assert_eq!(p(&[0, 0, 1]).shift_arg(&int(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[5, 0, 3, 1]).derivative(), p(&[0, 6, 3]));
        assert_eq!(p(&[1, 1]).scale(&rat(1, 2)).coeffs(), &[rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn definite_integral_examples() {
        assert_eq!(UniPoly::one().definite_integral(&int(0), &int(1)), int(1));
        assert_eq!(p(&[0, 1]).definite_integral(&int(0), &int(2)), int(2));
        // (x-a)(b-x) at a=0, b=1 is x - x^2; equals (b-a)^3 B(2,2) = 1/6
        assert_eq!(p(&[0, 1, -1]).definite_integral(&int(0), &int(1)), rat(1, 6));
    }

    #[test]
    fn renders_ascending() {
        assert_eq!(UniPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]).render("t"), "1/2 + 1/2*t");
        assert_eq!(p(&[0, -1, 1]).to_string(), "-x + x^2");
        assert_eq!(p(&[-1, 0, 0, -3]).render("t"), "-1 - 3*t^3");
        assert_eq!(UniPoly::zero().render("t"), "0");
    }

    #[test]
    fn synthetic_division() {
        // t^2 - 1 = (t + 1)(t - 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem_linear(&int(-1));
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, int(0));
        let (_, r) = p(&[1, 0, 1]).div_rem_linear(&int(-1));
        assert_eq!(r, int(2));
    }

    #[test]
    fn generic_over_f64() {
        let q = DensePoly::<f64>::from_coeffs(vec![0.0, 1.0, -1.0]);
        assert!((q.definite_integral(&0.0, &1.0) - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(DensePoly::<f64>::falling_factorial(3).eval(&5.0), 60.0);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-20i64..20, 1i64..9), 0..=max_deg + 1)
            .prop_map(|v| UniPoly::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..7).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn integral_is_antisymmetric(q in arb_poly(8), a in arb_rat(), b in arb_rat()) {
            prop_assert_eq!(q.definite_integral(&a, &b), -q.definite_integral(&b, &a));
        }

        #[test]
        fn shift_matches_pointwise(q in arb_poly(8), c in arb_rat(), at in arb_rat()) {
            prop_assert_eq!(q.shift_arg(&c).eval(&at), q.eval(&(at.clone() + c)));
        }

        #[test]
        fn product_evaluates_pointwise(a in arb_poly(6), b in arb_poly(6), at in arb_rat()) {
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
            prop_assert_eq!((&a + &b).eval(&at), a.eval(&at) + b.eval(&at));
        }

        #[test]
        fn antiderivative_inverts_derivative(q in arb_poly(8)) {
            prop_assert_eq!(q.antiderivative().derivative(), q);
        }
    }
}
