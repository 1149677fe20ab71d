//! The containers only assume ring operations, so they also run over `f64`.

use leibnitz::kernel::{DensePoly, SparseBiPoly};
use leibnitz::series::PowerSeries;

#[test]
fn bivariate_polynomials_over_f64() {
    let diff = &SparseBiPoly::<f64>::b() - &SparseBiPoly::<f64>::a();
    let square = diff.pow(2);
    assert_eq!(square.term_count(), 3);
    assert!(square.is_homogeneous_of_degree(2));
    assert_eq!(square.eval_at(&1.5, &4.0), 6.25);
}

#[test]
fn geometric_series_over_f64() {
    // (1 - u) * Σ u^n = 1 modulo u^6.
    let geometric = PowerSeries::<f64>::from_scalars(5, vec![1.0; 6]);
    let one_minus_u = PowerSeries::<f64>::from_scalars(5, vec![1.0, -1.0]);
    assert_eq!(&one_minus_u * &geometric, PowerSeries::<f64>::one(5));
}

#[test]
fn series_with_polynomial_coefficients_over_f64() {
    // (1 - t u) * Σ t^n u^n = 1 modulo u^4.
    let powers = (0..=4).map(|n| DensePoly::<f64>::monomial(1.0, n)).collect();
    let series = PowerSeries::<f64>::from_polys(4, powers);
    let factor = PowerSeries::<f64>::from_polys(4, vec![DensePoly::one(), -DensePoly::<f64>::x()]);
    assert_eq!(&factor * &series, PowerSeries::<f64>::one(4));
}
