//! Sparse polynomials in two indeterminates `a` and `b`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::{pow_u32, Scalar};

/// Exponent pair `(deg_a, deg_b)`.
pub type Exponents = (u32, u32);

/// Map from exponent pair to a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseBiPoly<T> {
    terms: BTreeMap<Exponents, T>,
}

impl<T: Scalar> Default for SparseBiPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> SparseBiPoly<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn monomial(c: T, deg_a: u32, deg_b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_a, deg_b), c);
        p
    }

    pub fn a() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    /// Accumulates `c` into the term with exponents `e`, pruning zeros.
    pub fn add_term(&mut self, e: Exponents, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &T)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_a: u32, deg_b: u32) -> T {
        self.terms.get(&(deg_a, deg_b)).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (&e, v) in &self.terms {
            out.add_term(e, v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    pub fn eval_at(&self, a: &T, b: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * pow_u32(a, i) * pow_u32(b, j)
        })
    }

    /// Exchanges the roles of `a` and `b`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Largest `deg_a + deg_b` over the stored terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// True when every stored term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|(i, j)| i + j == d)
    }

    /// Terms in graded order: higher total degree first, then higher power of `a`.
    fn graded_terms(&self) -> Vec<(&Exponents, &T)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(x, _)| std::cmp::Reverse((x.0 + x.1, x.0)));
        v
    }
}

impl<T: Scalar + Signed + fmt::Display> SparseBiPoly<T> {
    /// Canonical text, e.g. `a^2/2 - a*b + b^2/2`.
    ///
    /// A coefficient `p/q` is written `p*m/q` around the monomial `m`, with
    /// unit numerators and denominators dropped.
    pub fn render(&self) -> String
    where
        T: RationalParts,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&(i, j), c) in self.graded_terms() {
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let (num, den) = c.abs().parts();
            let mono = monomial_text(i, j);
            let body = match (mono.is_empty(), num == "1") {
                (true, _) => num,
                (false, true) => mono,
                (false, false) => format!("{num}*{mono}"),
            };
            out.push_str(&body);
            if den != "1" {
                out.push('/');
                out.push_str(&den);
            }
        }
        out
    }
}

/// Numerator and denominator text of a nonnegative coefficient.
pub trait RationalParts {
    fn parts(&self) -> (String, String);
}

impl RationalParts for crate::Rational {
    fn parts(&self) -> (String, String) {
        (self.numer().to_string(), self.denom().to_string())
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let factor = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [factor("a", i), factor("b", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for SparseBiPoly<crate::Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a, T: Scalar> Add<&'a SparseBiPoly<T>> for &'a SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn add(self, rhs: &'a SparseBiPoly<T>) -> SparseBiPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Sub<&'a SparseBiPoly<T>> for &'a SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn sub(self, rhs: &'a SparseBiPoly<T>) -> SparseBiPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Mul<&'a SparseBiPoly<T>> for &'a SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn mul(self, rhs: &'a SparseBiPoly<T>) -> SparseBiPoly<T> {
        let mut out = SparseBiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn neg(self) -> SparseBiPoly<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Add for SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn add(self, rhs: SparseBiPoly<T>) -> SparseBiPoly<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn sub(self, rhs: SparseBiPoly<T>) -> SparseBiPoly<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for SparseBiPoly<T> {
    type Output = SparseBiPoly<T>;
    fn mul(self, rhs: SparseBiPoly<T>) -> SparseBiPoly<T> {
        &self * &rhs
    }
}
