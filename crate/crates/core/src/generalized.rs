//! Generalized Leibnitz numbers `L(n,k;a,b)`.
//!
//! The defining double sum is a polynomial in `a` and `b`, so it is computed
//! both at rational points and as an exact [`BiPoly`]. The independent oracle
//! expands `(x-a)^k (b-x)^{n-k}` and integrates it over `[a, b]`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{beta_int, binomial_q, int, render};
use crate::scalar::{pow_u32, sign_pow};
use crate::{BiPoly, Rational, UniPoly};

fn check_index(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::IndexOutOfRange { n, k })
    } else {
        Ok(())
    }
}

/// Visits every `(j, v)` term of the double sum with its scalar weight
/// `(-1)^{n-j-v} C(k,j) C(n-k,v) / (n+j-k-v+1)`.
fn for_each_term(n: usize, k: usize, mut f: impl FnMut(usize, usize, Rational)) {
    for j in 0..=k {
        for v in 0..=n - k {
            let denom = n + j + 1 - k - v;
            debug_assert!(denom > j, "denominator n+j-k-v+1 is at least j+1");
            let weight = sign_pow::<Rational>(n - j - v) * binomial_q(k, j) * binomial_q(n - k, v)
                / int(denom as i64);
            f(j, v, weight);
        }
    }
}

/// `L(n,k;a,b)` at rational `a`, `b` (any values; `0^0 = 1`).
pub fn gen_leibnitz(n: usize, k: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    check_index(n, k)?;
    let mut acc = Rational::zero();
    for_each_term(n, k, |j, v, w| {
        let first = pow_u32(a, (k - j) as u32) * pow_u32(b, (n + j + 1 - k) as u32);
        let second = pow_u32(a, (n - v + 1) as u32) * pow_u32(b, v as u32);
        acc += w * (first - second);
    });
    Ok(acc)
}

/// `L(n,k;a,b)` with `a`, `b` left as indeterminates.
pub fn gen_leibnitz_symbolic(n: usize, k: usize) -> Result<BiPoly> {
    check_index(n, k)?;
    let mut acc = BiPoly::zero();
    for_each_term(n, k, |j, v, w| {
        acc.add_term(((k - j) as u32, (n + j + 1 - k) as u32), w.clone());
        acc.add_term(((n - v + 1) as u32, v as u32), -w);
    });
    Ok(acc)
}

/// A symbolic generalized Leibnitz number together with its indices.
#[derive(Clone, Debug, PartialEq)]
pub struct GenLeibnitzValue {
    pub n: usize,
    pub k: usize,
    pub symbolic: BiPoly,
}

impl GenLeibnitzValue {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Ok(Self { n, k, symbolic: gen_leibnitz_symbolic(n, k)? })
    }

    pub fn eval(&self, a: &Rational, b: &Rational) -> Rational {
        self.symbolic.eval_at(a, b)
    }
}

/// `∫_a^b (x-a)^k (b-x)^{n-k} dx` by expanding and integrating.
pub fn integration_oracle(n: usize, k: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    check_index(n, k)?;
    Ok(UniPoly::bernstein_kernel(a, b, k as u32, (n - k) as u32).definite_integral(a, b))
}

/// Whether `∫_a^b (x-a)^{α-1} (b-x)^{β-1} dx = (b-a)^{α+β-1} B(α, β)`.
pub fn ik_formula_check(alpha: usize, beta: usize, a: &Rational, b: &Rational) -> Result<bool> {
    let scale = beta_int(alpha, beta)?;
    let lhs = UniPoly::bernstein_kernel(a, b, (alpha - 1) as u32, (beta - 1) as u32)
        .definite_integral(a, b);
    let rhs = pow_u32(&(b - a), (alpha + beta - 1) as u32) * scale;
    Ok(lhs == rhs)
}

/// `∫_a^b B_k^n(x;a,b) dx` with `B_k^n = C(n,k) ((x-a)/(b-a))^k ((b-x)/(b-a))^{n-k}`.
pub fn bernstein_basis_integral(n: usize, k: usize, a: &Rational, b: &Rational) -> Result<Rational> {
    check_index(n, k)?;
    let width = b - a;
    if width.is_zero() {
        return Err(Error::DegenerateInterval);
    }
    let inv_width_pow = pow_u32(&width.recip(), n as u32);
    Ok(binomial_q(n, k) * inv_width_pow * integration_oracle(n, k, a, b)?)
}

/// `L(n,k;0,1)`, which reduces to `l(n,k)`.
pub fn specialize_classical(n: usize, k: usize) -> Result<Rational> {
    gen_leibnitz(n, k, &Rational::zero(), &Rational::one())
}

/// Which candidate closed form the integration oracle confirms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConfirmedForm {
    /// Both candidates agree with the oracle (only possible when they coincide).
    Both,
    /// `(b-a) B(k+1, n-k+1)`.
    Literal,
    /// `(b-a)^{n+1} B(k+1, n-k+1)`.
    Implied,
    Neither,
}

/// A point where a candidate and the oracle disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub a: String,
    pub b: String,
    pub candidate: String,
    pub oracle: String,
}

/// Evidence for which right-hand side of the double-sum/Beta relation holds.
///
/// Comparisons run on the lattice `{(i - s, j - s) : i + j <= n + 1}`, which is
/// unisolvent for bivariate polynomials of total degree `<= n + 1`, so pointwise
/// agreement there is polynomial identity.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GlnumAdjudication {
    pub n: usize,
    pub k: usize,
    pub definition: String,
    pub literal_form: String,
    pub implied_form: String,
    pub definition_matches_oracle: bool,
    pub literal_matches_oracle: bool,
    pub implied_matches_oracle: bool,
    pub confirmed: ConfirmedForm,
    pub literal_witness: Option<Witness>,
}

/// Lattice of `(a, b)` points unisolvent for total degree `<= degree`.
pub fn unisolvent_lattice(degree: usize) -> Vec<(Rational, Rational)> {
    let shift = (degree / 2) as i64;
    let mut pts = Vec::new();
    for i in 0..=degree {
        for j in 0..=degree - i {
            pts.push((int(i as i64 - shift), int(j as i64 - shift)));
        }
    }
    pts
}

pub fn glnum_adjudicate(n: usize, k: usize) -> Result<GlnumAdjudication> {
    let definition = gen_leibnitz_symbolic(n, k)?;
    let beta = beta_int(k + 1, n - k + 1)?;
    let b_minus_a = &BiPoly::b() - &BiPoly::a();
    let literal = b_minus_a.scale(&beta);
    let implied = b_minus_a.pow((n + 1) as u32).scale(&beta);

    let mut definition_ok = true;
    let mut literal_ok = true;
    let mut implied_ok = true;
    let mut literal_witness = None;
    for (a, b) in unisolvent_lattice(n + 1) {
        let oracle = integration_oracle(n, k, &a, &b)?;
        definition_ok &= definition.eval_at(&a, &b) == oracle;
        implied_ok &= implied.eval_at(&a, &b) == oracle;
        let lit = literal.eval_at(&a, &b);
        if lit != oracle {
            literal_ok = false;
            literal_witness.get_or_insert_with(|| Witness {
                a: render(&a),
                b: render(&b),
                candidate: render(&lit),
                oracle: render(&oracle),
            });
        }
    }
    let confirmed = match (literal_ok, implied_ok) {
        (true, true) => ConfirmedForm::Both,
        (true, false) => ConfirmedForm::Literal,
        (false, true) => ConfirmedForm::Implied,
        (false, false) => ConfirmedForm::Neither,
    };
    Ok(GlnumAdjudication {
        n,
        k,
        definition: definition.render(),
        literal_form: literal.render(),
        implied_form: implied.render(),
        definition_matches_oracle: definition_ok,
        literal_matches_oracle: literal_ok,
        implied_matches_oracle: implied_ok,
        confirmed,
        literal_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;
    use crate::special::leibnitz;

    fn grid() -> Vec<(Rational, Rational)> {
        let vals = [int(-2), rat(-1, 3), int(0), rat(1, 2), int(1), int(3)];
        let mut pts = Vec::new();
        for a in &vals {
            for b in &vals {
                pts.push((a.clone(), b.clone()));
            }
        }
        pts
    }

    #[test]
    fn gen_leibnitz_examples() {
        assert_eq!(gen_leibnitz(1, 0, &int(0), &int(1)).unwrap(), rat(1, 2));
        assert_eq!(gen_leibnitz(1, 0, &int(1), &int(3)).unwrap(), int(2));
        let (a, b) = (rat(-5, 3), rat(7, 2));
        assert_eq!(gen_leibnitz(0, 0, &a, &b).unwrap(), &b - &a);
        assert!(gen_leibnitz(2, 3, &a, &b).is_err());
    }

    #[test]
    fn symbolic_examples() {
        let b_minus_a = &BiPoly::b() - &BiPoly::a();
        assert_eq!(gen_leibnitz_symbolic(0, 0).unwrap(), b_minus_a);
        let half_sq = b_minus_a.pow(2).scale(&rat(1, 2));
        assert_eq!(gen_leibnitz_symbolic(1, 0).unwrap(), half_sq);
        assert_eq!(gen_leibnitz_symbolic(1, 1).unwrap(), half_sq);
        assert_eq!(gen_leibnitz_symbolic(1, 0).unwrap().render(), "a^2/2 - a*b + b^2/2");
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(integration_oracle(0, 0, &int(0), &int(1)).unwrap(), int(1));
        // ∫_0^1 x(1-x) dx by antiderivative: 1/2 - 1/3
        assert_eq!(integration_oracle(2, 1, &int(0), &int(1)).unwrap(), rat(1, 6));
        assert_eq!(integration_oracle(1, 0, &int(1), &int(3)).unwrap(), int(2));
    }

    #[test]
    fn definition_matches_oracle_on_grid() {
        for n in 0..=12 {
            for k in 0..=n {
                let sym = gen_leibnitz_symbolic(n, k).unwrap();
                assert!(sym.is_homogeneous_of_degree((n + 1) as u32));
                for (a, b) in grid() {
                    let direct = gen_leibnitz(n, k, &a, &b).unwrap();
                    assert_eq!(direct, integration_oracle(n, k, &a, &b).unwrap(), "({n},{k}) at ({a},{b})");
                    assert_eq!(sym.eval_at(&a, &b), direct);
                }
            }
        }
    }

    #[test]
    fn reflection_under_swap() {
        for n in 0..=10usize {
            for k in 0..=n {
                let swapped = gen_leibnitz_symbolic(n, k).unwrap().swap_vars();
                let mirrored = gen_leibnitz_symbolic(n, n - k).unwrap().scale(&sign_pow(n + 1));
                assert_eq!(swapped, mirrored);
                // oracle side: ∫_b^a with the kernel mirrored is the sign-flipped integral
                let (a, b) = (rat(-1, 2), int(2));
                let lhs = integration_oracle(n, k, &b, &a).unwrap();
                let rhs = sign_pow::<Rational>(n + 1) * integration_oracle(n, n - k, &a, &b).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn degenerate_interval_vanishes() {
        for c in [int(0), rat(-3, 4), int(5)] {
            for n in 0..=12 {
                for k in 0..=n {
                    assert!(gen_leibnitz(n, k, &c, &c).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn ik_examples() {
        assert!(ik_formula_check(1, 1, &int(0), &int(1)).unwrap());
        assert!(ik_formula_check(2, 2, &int(0), &int(1)).unwrap());
        assert!(ik_formula_check(3, 2, &int(-1), &int(2)).unwrap());
        assert!(matches!(ik_formula_check(0, 2, &int(0), &int(1)), Err(Error::BetaPole { .. })));
    }

    #[test]
    fn ik_holds_on_grid() {
        for alpha in 1..=10 {
            for beta in 1..=10 {
                for (a, b) in grid().into_iter().step_by(5) {
                    assert!(ik_formula_check(alpha, beta, &a, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn bernstein_examples() {
        assert_eq!(bernstein_basis_integral(0, 0, &int(0), &int(1)).unwrap(), int(1));
        assert_eq!(bernstein_basis_integral(3, 1, &int(0), &int(1)).unwrap(), rat(1, 4));
        assert_eq!(bernstein_basis_integral(2, 2, &int(1), &int(5)).unwrap(), rat(4, 3));
        assert_eq!(bernstein_basis_integral(2, 1, &int(2), &int(2)), Err(Error::DegenerateInterval));
        for n in 0..=8 {
            for k in 0..=n {
                let (a, b) = (rat(-2, 3), int(4));
                let expected = (&b - &a) / int(n as i64 + 1);
                assert_eq!(bernstein_basis_integral(n, k, &a, &b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(specialize_classical(0, 0).unwrap(), int(1));
        assert_eq!(specialize_classical(4, 2).unwrap(), rat(1, 30));
        assert_eq!(specialize_classical(8, 3).unwrap(), rat(1, 504));
        for n in 0..=40 {
            for k in 0..=n {
                assert_eq!(specialize_classical(n, k).unwrap(), leibnitz(n, k).unwrap());
            }
        }
    }

    #[test]
    fn adjudication_examples() {
        let r = glnum_adjudicate(0, 0).unwrap();
        assert_eq!(r.confirmed, ConfirmedForm::Both);
        assert!(r.definition_matches_oracle);

        let r = glnum_adjudicate(1, 0).unwrap();
        assert_eq!(r.confirmed, ConfirmedForm::Implied);
        assert_eq!(r.implied_form, "a^2/2 - a*b + b^2/2");
        assert_eq!(r.literal_form, "-a/2 + b/2");
        assert!(r.literal_witness.is_some());

        let r = glnum_adjudicate(4, 2).unwrap();
        assert_eq!(r.confirmed, ConfirmedForm::Implied);
        let expected = (&BiPoly::b() - &BiPoly::a()).pow(5).scale(&rat(1, 30));
        assert_eq!(r.implied_form, expected.render());
    }

    #[test]
    fn lattice_size() {
        assert_eq!(unisolvent_lattice(3).len(), 10);
        assert!(unisolvent_lattice(4).iter().any(|(a, b)| a == b));
        assert!(unisolvent_lattice(4).iter().any(|(a, _)| a < &int(0)));
    }

    #[test]
    fn value_wrapper_evaluates_symbolic_form() {
        let v = GenLeibnitzValue::new(3, 1).unwrap();
        assert_eq!(v.eval(&int(0), &int(1)), leibnitz(3, 1).unwrap());
        assert!(GenLeibnitzValue::new(1, 3).is_err());
    }
}
