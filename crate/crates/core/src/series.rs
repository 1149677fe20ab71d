//! Truncated power series in `u` whose coefficients are polynomials in `t`.
//!
//! Generating-function identities are verified by cross-multiplication: the
//! denominator side is multiplied out and the two numerators are compared
//! coefficient by coefficient, so no series division is ever needed.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{factorial_q, int, rat, DensePoly};
use crate::scalar::{sign_pow, Scalar};
use crate::special::{daehee, leibnitz_polynomial, row_sum, NumberFamily, NumberFamilyValue};
use crate::{Rational, UniPoly};

/// Coefficients of `u^0 ..= u^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries<T> {
    coeffs: Vec<DensePoly<T>>,
}

impl<T: Scalar> PowerSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![DensePoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, DensePoly::one())
    }

    pub fn constant(order: usize, c: DensePoly<T>) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Pads with zeros or truncates `polys` to `order + 1` entries.
    pub fn from_polys(order: usize, mut polys: Vec<DensePoly<T>>) -> Self {
        polys.resize(order + 1, DensePoly::zero());
        Self { coeffs: polys }
    }

    pub fn from_scalars(order: usize, scalars: Vec<T>) -> Self {
        Self::from_polys(order, scalars.into_iter().map(DensePoly::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[DensePoly<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &DensePoly<T> {
        &self.coeffs[n]
    }

    /// Same series viewed at another order (extra coefficients are zero).
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_polys(order, self.coeffs.clone())
    }

    pub fn scale_by_poly(&self, p: &DensePoly<T>) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Multiplies by `u^k`, dropping whatever passes the order.
    pub fn shift_by_u_power(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in k..=order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Formal substitution `u -> t·u`: coefficient `n` gains a factor `t^n`.
    pub fn substitute_u_times_t(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.shift_up(n)).collect(),
        }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&DensePoly<T>, &DensePoly<T>) -> DensePoly<T>) -> Self {
        let order = self.order().max(rhs.order());
        let (a, b) = (self.with_order(order), rhs.with_order(order));
        Self { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect() }
    }

    /// Indices `n` where the two series' coefficients differ.
    pub fn mismatches(&self, other: &Self) -> Vec<usize> {
        let order = self.order().max(other.order());
        let (a, b) = (self.with_order(order), other.with_order(order));
        (0..=order).filter(|&n| a.coeffs[n] != b.coeffs[n]).collect()
    }
}

impl<'a, T: Scalar> Add<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl<'a, T: Scalar> Sub<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        self.zip_with(rhs, |x, y| x - y)
    }
}

/// Cauchy product truncated at the larger of the two orders.
impl<'a, T: Scalar> Mul<&'a PowerSeries<T>> for &'a PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: &'a PowerSeries<T>) -> PowerSeries<T> {
        let order = self.order().max(rhs.order());
        let (a, b) = (self.with_order(order), rhs.with_order(order));
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(DensePoly::zero(), |acc, i| {
                    if a.coeffs[i].is_zero() || b.coeffs[n - i].is_zero() {
                        acc
                    } else {
                        &acc + &(&a.coeffs[i] * &b.coeffs[n - i])
                    }
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

impl<T: Scalar> Neg for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn neg(self) -> PowerSeries<T> {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

pub type TruncSeries = PowerSeries<Rational>;

/// `1 + t`.
fn one_plus_t() -> UniPoly {
    UniPoly::from_coeffs(vec![int(1), int(1)])
}

/// Which argument scaling `log(1 - scale·u)` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogScale {
    One,
    T,
}

/// `log(1 - u)` or `log(1 - t·u)`, i.e. `-Σ_{n>=1} (scale·u)^n / n`.
pub fn log_one_minus(order: usize, scale: LogScale) -> Result<TruncSeries> {
    if order < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: order });
    }
    let mut coeffs = vec![UniPoly::zero()];
    for n in 1..=order {
        let c = rat(-1, n as i64);
        coeffs.push(match scale {
            LogScale::One => UniPoly::constant(c),
            LogScale::T => UniPoly::monomial(c, n),
        });
    }
    Ok(TruncSeries::from_polys(order, coeffs))
}

/// `Σ L_n(t) u^n`.
pub fn leibnitz_series(order: usize) -> TruncSeries {
    TruncSeries::from_polys(order, (0..=order).map(leibnitz_polynomial).collect())
}

/// `Σ v_n u^n / n!` for one of the exponential-type families.
pub fn family_series(family: NumberFamily, order: usize, lambda: Option<&Rational>) -> Result<TruncSeries> {
    let values = (0..=order)
        .map(|n| {
            NumberFamilyValue::compute(family, n, lambda.cloned()).map(|v| v.value / factorial_q(n))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::from_scalars(order, values))
}

/// `G_D(-u) = Σ (-1)^n D_n u^n / n!`.
fn daehee_series_at_minus_u(order: usize) -> TruncSeries {
    TruncSeries::from_scalars(
        order,
        (0..=order).map(|n| sign_pow::<Rational>(n) * daehee(n) / factorial_q(n)).collect(),
    )
}

/// The two sides of a cross-multiplied identity, truncated at `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesCheck {
    pub name: &'static str,
    pub order: usize,
    pub lhs: TruncSeries,
    pub rhs: TruncSeries,
}

/// One differing coefficient, rendered in `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoefficientMismatch {
    pub power: usize,
    pub lhs: String,
    pub rhs: String,
}

impl SeriesCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn mismatches(&self) -> Vec<CoefficientMismatch> {
        self.lhs
            .mismatches(&self.rhs)
            .into_iter()
            .map(|power| CoefficientMismatch {
                power,
                lhs: self.lhs.coeff(power).render("t"),
                rhs: self.rhs.coeff(power).render("t"),
            })
            .collect()
    }
}

fn require_order(order: usize) -> Result<()> {
    if order < 1 {
        Err(Error::OrderTooSmall { min: 1, got: order })
    } else {
        Ok(())
    }
}

/// `((1-u)(1-tu) - 1) · Σ L_n(t) u^n = log(1-u) + log(1-tu)`.
pub fn check_gf_leibnitz(order: usize) -> Result<SeriesCheck> {
    require_order(order)?;
    let denominator = TruncSeries::from_polys(
        order,
        vec![UniPoly::zero(), -&one_plus_t(), UniPoly::monomial(int(1), 1)],
    );
    let lhs = &denominator * &leibnitz_series(order);
    let rhs = &log_one_minus(order, LogScale::One)? + &log_one_minus(order, LogScale::T)?;
    Ok(SeriesCheck { name: "GF-L", order, lhs, rhs })
}

/// Cross-multiplied definitions of the Daehee, Changhee and `Y_n(λ)` series:
/// `u·G_D = log(1+u)`, `(2+u)·G_Ch = 2`, `(λ(1+λu) - 1)·G_Y = 2`.
pub fn check_gf_family(family: NumberFamily, order: usize, lambda: Option<&Rational>) -> Result<SeriesCheck> {
    require_order(order)?;
    let series = family_series(family, order, lambda)?;
    let two = TruncSeries::constant(order, UniPoly::constant(int(2)));
    let (name, lhs, rhs) = match family {
        NumberFamily::Daehee => {
            let log_one_plus = TruncSeries::from_scalars(
                order,
                std::iter::once(Rational::zero())
                    .chain((1..=order).map(|n| sign_pow::<Rational>(n + 1) / int(n as i64)))
                    .collect(),
            );
            ("GF-D", series.shift_by_u_power(1), log_one_plus)
        }
        NumberFamily::Changhee => {
            let factor = TruncSeries::from_scalars(order, vec![int(2), int(1)]);
            ("GF-C", &factor * &series, two)
        }
        NumberFamily::Y => {
            let lambda = lambda.ok_or(Error::EmptySamples("lambda"))?;
            let factor =
                TruncSeries::from_scalars(order, vec![lambda - int(1), lambda * lambda]);
            ("GF-Y", &factor * &series, two)
        }
    };
    Ok(SeriesCheck { name, order, lhs, rhs })
}

/// `G_D(-u) = (1 - u/2) · G_l(1, u)`.
pub fn check_functional_eq_fe(order: usize) -> Result<SeriesCheck> {
    require_order(order)?;
    let at_one = TruncSeries::from_scalars(order, (0..=order).map(row_sum).collect());
    let factor = TruncSeries::from_scalars(order, vec![int(1), rat(-1, 2)]);
    Ok(SeriesCheck {
        name: "FE",
        order,
        lhs: daehee_series_at_minus_u(order),
        rhs: &factor * &at_one,
    })
}

/// `(1 + t - u·t) · G_l(t, u) = G_D(-u) + t · G_D(-u·t)`.
pub fn check_functional_eq_gl_daehee(order: usize) -> Result<SeriesCheck> {
    require_order(order)?;
    let factor = TruncSeries::from_polys(order, vec![one_plus_t(), UniPoly::monomial(int(-1), 1)]);
    let lhs = &factor * &leibnitz_series(order);
    let gd = daehee_series_at_minus_u(order);
    let rhs = &gd + &gd.substitute_u_times_t().scale_by_poly(&UniPoly::x());
    Ok(SeriesCheck { name: "FE-GLD", order, lhs, rhs })
}

/// Solves `((1-u)(1-tu) - 1)·X = log(1-u) + log(1-tu)` for `X_0 ..= X_order`.
///
/// After cancelling the common factor `u`, coefficient `n+1` gives
/// `-(1+t) X_n + t X_{n-1} = R_{n+1}`, so each step divides by `1 + t`. The
/// division must leave no remainder; a nonzero remainder is reported as an error.
pub fn solve_gf_leibnitz(order: usize) -> Result<Vec<UniPoly>> {
    let rhs = &log_one_minus(order + 1, LogScale::One)? + &log_one_minus(order + 1, LogScale::T)?;
    let mut out: Vec<UniPoly> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let prev = match n {
            0 => UniPoly::zero(),
            _ => out[n - 1].shift_up(1),
        };
        let numerator = &prev - rhs.coeff(n + 1);
        let (q, r) = numerator.div_rem_linear(&int(-1));
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "coefficient u^{n}: remainder {r} after dividing by 1 + t"
            )));
        }
        out.push(q);
    }
    Ok(out)
}
