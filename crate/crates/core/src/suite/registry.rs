//! The registered identities.

use num_traits::Zero;

use super::{IdentityCheck, Outcome, RunConfig, SampleNeeds};
use crate::error::Result;
use crate::generalized::{
    gen_leibnitz, glnum_adjudicate, integration_oracle, specialize_classical, ConfirmedForm,
};
use crate::kernel::{binomial_q, factorial_q, int, rat, render};
use crate::scalar::{pow_u32, sign_pow};
use crate::series::{
    check_functional_eq_fe, check_functional_eq_gl_daehee, check_gf_family, check_gf_leibnitz,
    SeriesCheck, TruncSeries,
};
use crate::special::{
    changhee, daehee, leibnitz, leibnitz_polynomial, leibnitz_sum_form, row_sum, y_number,
    LeibnitzTriangle, NumberFamily,
};
use crate::volkenborn::{
    corollary_ki2_sum, theorem_a11_polynomial, theorem_ki1_polynomial, volkenborn_falling_product,
    volkenborn_integral_poly, volkenborn_shift_check,
};
use crate::{Rational, UniPoly};

pub const REGISTRY_VERSION: u32 = 1;

/// `(a, b)` points for the generalized-number oracle comparison.
pub const GEN_GRID: [((i64, i64), (i64, i64)); 10] = [
    ((0, 1), (1, 1)),
    ((1, 1), (3, 1)),
    ((-1, 1), (2, 1)),
    ((-2, 1), (-1, 2)),
    ((1, 2), (1, 2)),
    ((3, 1), (-1, 1)),
    ((0, 1), (0, 1)),
    ((-3, 4), (5, 3)),
    ((2, 1), (-2, 1)),
    ((1, 3), (0, 1)),
];

const NONE: SampleNeeds = SampleNeeds { t: false, lambda: false };
const T: SampleNeeds = SampleNeeds { t: true, lambda: false };
const LAMBDA: SampleNeeds = SampleNeeds { t: false, lambda: true };

pub fn registry() -> Vec<IdentityCheck> {
    vec![
        IdentityCheck {
            id: "THM-IK1",
            anchor: "Σ_k l(n,k) t^k = (1/(t+1)) Σ_k (1/(n-k+1)) (t/(t+1))^k (1 + t^(n-k))",
            parameter_space: "n in 0..=depth, t in t-samples",
            needs: T,
            checker: thm_ik1,
        },
        IdentityCheck {
            id: "COR-IK2",
            anchor: "Σ_k l(n,k) = Σ_k 1/((n-k+1) 2^k)",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: cor_ik2,
        },
        IdentityCheck {
            id: "THM-1A",
            anchor: "Σ_k l(n,k) t^k = (1/(1+t)) Σ_j (-1)^j (D_j/j!) (t/(1+t))^(n-j) (1 + t^(j+1))",
            parameter_space: "n in 0..=depth, t in t-samples",
            needs: T,
            checker: thm_1a,
        },
        IdentityCheck {
            id: "COR-2",
            anchor: "Σ_k l(n,k) t^k = (1/(1+t)) Σ_j (1/(j+1)) (t/(1+t))^(n-j) (1 + t^(j+1)); \
                     right side equals the THM-IK1 right side",
            parameter_space: "n in 0..=depth, t in t-samples; form in {identity, equals THM-IK1}",
            needs: T,
            checker: cor_2,
        },
        IdentityCheck {
            id: "COR-C1",
            anchor: "Σ_k t^k/((n+1) C(n,k)) = (1/(1+t)) Σ_j ((1 + t^(j+1))/(j+1)) (t/(1+t))^(n-j)",
            parameter_space: "n in 0..=depth, t in t-samples",
            needs: T,
            checker: cor_c1,
        },
        IdentityCheck {
            id: "COR-3",
            anchor: "Σ_k 1/((n+1) C(n,k)) = Σ_j 2^(j-n)/(j+1); \
                     Σ_n L_n(1) u^n = (Σ u^n/(n+1)) (Σ u^n/2^n)",
            parameter_space: "n in 0..=depth; form in {sum, series product}",
            needs: NONE,
            checker: cor_3,
        },
        IdentityCheck {
            id: "THM-IK3",
            anchor: "Σ_k 1/((n+1) C(n,k)) = Σ_j (-1)^(n-j) (n-j)!/((j+1) Ch_(n-j))",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: thm_ik3,
        },
        IdentityCheck {
            id: "COR-Y",
            anchor: "Σ_k 1/((n+1) C(n,k)) = -Σ_j (n-j)!/((j+1) Y_(n-j)(-1))",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: cor_y,
        },
        IdentityCheck {
            id: "THM-K1",
            anchor: "Σ_k l(n,k) - (1/2) Σ_k l(n-1,k) = (-1)^n D_n/n!",
            parameter_space: "n in 1..=depth",
            needs: NONE,
            checker: thm_k1,
        },
        IdentityCheck {
            id: "THM-K1D",
            anchor: "Σ_k l(n,k) - (1/2) Σ_k l(n-1,k) = 1/(n+1)",
            parameter_space: "n in 1..=depth",
            needs: NONE,
            checker: thm_k1d,
        },
        IdentityCheck {
            id: "REC",
            anchor: "l(n,0) = 1/(n+1), l(n,k) = (k/(n+1)) l(n-1,k-1) agrees with 1/((n+1) C(n,k))",
            parameter_space: "0 <= k <= n <= depth",
            needs: NONE,
            checker: rec,
        },
        IdentityCheck {
            id: "SUMFORM",
            anchor: "Σ_v (-1)^(k-v) C(k,v)/(n-v+1) = 1/((n+1) C(n,k))",
            parameter_space: "0 <= k <= n <= depth",
            needs: NONE,
            checker: sumform,
        },
        IdentityCheck {
            id: "GLN-SPEC",
            anchor: "L(n,k;0,1) = l(n,k)",
            parameter_space: "0 <= k <= n <= depth",
            needs: NONE,
            checker: gln_spec,
        },
        IdentityCheck {
            id: "GLN-ORACLE",
            anchor: "L(n,k;a,b) = ∫_a^b (x-a)^k (b-x)^(n-k) dx",
            parameter_space: "0 <= k <= n <= depth, (a,b) on a fixed 10-point grid",
            needs: NONE,
            checker: gln_oracle,
        },
        IdentityCheck {
            id: "GLN-ADJ",
            anchor: "L(n,k;a,b) against (b-a) B(k+1,n-k+1) and (b-a)^(n+1) B(k+1,n-k+1)",
            parameter_space: "0 <= k <= n <= depth",
            needs: NONE,
            checker: gln_adj,
        },
        IdentityCheck {
            id: "GF-L",
            anchor: "((1-u)(1-tu) - 1) Σ L_n(t) u^n = log(1-u) + log(1-tu)",
            parameter_space: "order max(depth, 1)",
            needs: NONE,
            checker: gf_l,
        },
        IdentityCheck {
            id: "GF-D",
            anchor: "u Σ D_n u^n/n! = log(1+u)",
            parameter_space: "order max(depth, 1)",
            needs: NONE,
            checker: gf_d,
        },
        IdentityCheck {
            id: "GF-C",
            anchor: "(2+u) Σ Ch_n u^n/n! = 2",
            parameter_space: "order max(depth, 1)",
            needs: NONE,
            checker: gf_c,
        },
        IdentityCheck {
            id: "GF-Y",
            anchor: "(λ(1+λu) - 1) Σ Y_n(λ) u^n/n! = 2",
            parameter_space: "order max(depth, 1), λ in lambda-samples",
            needs: LAMBDA,
            checker: gf_y,
        },
        IdentityCheck {
            id: "FE",
            anchor: "G_D(-u) = (1 - u/2) G_l(1,u)",
            parameter_space: "order max(depth, 1)",
            needs: NONE,
            checker: fe,
        },
        IdentityCheck {
            id: "FE-GLD",
            anchor: "(1 + t - ut) G_l(t,u) = G_D(-u) + t G_D(-ut)",
            parameter_space: "order max(depth, 1)",
            needs: NONE,
            checker: fe_gld,
        },
        IdentityCheck {
            id: "V-A11",
            anchor: "((-1)^n/n!) Σ_k C(n,k) t^(n-k) ∫ x_(k) x_(n-k) dμ_1 = L_n(t)",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: v_a11,
        },
        IdentityCheck {
            id: "V-KI1",
            anchor: "(1/n!) Σ_k Σ_j (-1)^j C(n,k) C(n-k,j) C(k,j) j!(n-j)!/(n-j+1) t^(n-k) = L_n(t)",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: v_ki1,
        },
        IdentityCheck {
            id: "V-KI2",
            anchor: "(1/n!) Σ_k Σ_j (-1)^j C(n,k) C(n-k,j) C(k,j) j!(n-j)!/(n-j+1) = L_n(1)",
            parameter_space: "n in 0..=depth",
            needs: NONE,
            checker: v_ki2,
        },
        IdentityCheck {
            id: "V-SHIFT",
            anchor: "∫ p(x+1) dμ_1 - ∫ p(x) dμ_1 = p'(0)",
            parameter_space: "p in {x^d, x_(d)} for d in 0..=depth",
            needs: NONE,
            checker: v_shift,
        },
        IdentityCheck {
            id: "V-PROD",
            anchor: "∫ x_(n) x_(m) dμ_1 = Σ_k (-1)^(m+n-k) C(n,k) C(m,k) k!(n+m-k)!/(n+m-k+1)",
            parameter_space: "0 <= n, m <= min(depth, 12)",
            needs: NONE,
            checker: v_prod,
        },
    ]
}

/// A deliberately wrong check used to exercise the failure path end to end.
pub fn corrupted_check() -> IdentityCheck {
    IdentityCheck {
        id: "SELFTEST-CORRUPT",
        anchor: "l(n,k) = l(n,k) + 1/1000 (false on purpose)",
        parameter_space: "0 <= k <= n <= min(depth, 3)",
        needs: NONE,
        checker: corrupted,
    }
}

fn p(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn n_param(n: usize) -> Vec<(String, String)> {
    p(&[("n", n.to_string())])
}

fn nt_param(n: usize, t: &Rational) -> Vec<(String, String)> {
    p(&[("n", n.to_string()), ("t", render(t))])
}

fn nk_param(n: usize, k: usize) -> Vec<(String, String)> {
    p(&[("n", n.to_string()), ("k", k.to_string())])
}

fn poly_outcome(params: Vec<(String, String)>, lhs: &UniPoly, rhs: &UniPoly) -> Outcome {
    Outcome {
        params,
        lhs: lhs.render("t"),
        rhs: rhs.render("t"),
        holds: lhs == rhs,
        note: None,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---- sums in t -----------------------------------------------------------

fn thm_ik1_rhs(n: usize, t: &Rational, extra_power: usize) -> Rational {
    let one_plus = int(1) + t;
    let ratio = t / &one_plus;
    let sum = (0..=n).fold(Rational::zero(), |acc, k| {
        acc + pow_u32(&ratio, k as u32) * (int(1) + pow_u32(t, (n - k + extra_power) as u32))
            / int((n - k + 1) as i64)
    });
    sum / one_plus
}

fn cor_2_rhs(n: usize, t: &Rational) -> Rational {
    let one_plus = int(1) + t;
    let ratio = t / &one_plus;
    let sum = (0..=n).fold(Rational::zero(), |acc, j| {
        acc + pow_u32(&ratio, (n - j) as u32) * (int(1) + pow_u32(t, (j + 1) as u32))
            / int((j + 1) as i64)
    });
    sum / one_plus
}

fn thm_ik1(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        let l = leibnitz_polynomial(n);
        for t in &c.t_samples {
            let lhs = l.eval(t);
            let rhs = thm_ik1_rhs(n, t, 0);
            let mut o = Outcome::compare(nt_param(n, t), &lhs, &rhs);
            if !o.holds {
                let shifted = thm_ik1_rhs(n, t, 1);
                o = o.with_note(format!(
                    "lhs equals the same sum with 1 + t^(n-k+1) in place of 1 + t^(n-k): {} ({})",
                    yes_no(lhs == shifted),
                    render(&shifted)
                ));
            }
            out.push(o);
        }
    }
    Ok(out)
}

fn cor_ik2(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((0..=c.depth)
        .map(|n| {
            let rhs = (0..=n).fold(Rational::zero(), |acc, k| {
                acc + (int((n - k + 1) as i64) * pow_u32(&int(2), k as u32)).recip()
            });
            Outcome::compare(n_param(n), &row_sum(n), &rhs)
        })
        .collect())
}

fn thm_1a(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        let l = leibnitz_polynomial(n);
        for t in &c.t_samples {
            let one_plus = int(1) + t;
            let ratio = t / &one_plus;
            let sum = (0..=n).fold(Rational::zero(), |acc, j| {
                acc + sign_pow::<Rational>(j) * daehee(j) / factorial_q(j)
                    * pow_u32(&ratio, (n - j) as u32)
                    * (int(1) + pow_u32(t, (j + 1) as u32))
            });
            out.push(Outcome::compare(nt_param(n, t), &l.eval(t), &(sum / one_plus)));
        }
    }
    Ok(out)
}

fn cor_2(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        let l = leibnitz_polynomial(n);
        for t in &c.t_samples {
            let rhs = cor_2_rhs(n, t);
            let mut params = nt_param(n, t);
            params.push(("form".into(), "identity".into()));
            out.push(Outcome::compare(params, &l.eval(t), &rhs));
        }
        for t in &c.t_samples {
            let mut params = nt_param(n, t);
            params.push(("form".into(), "equals THM-IK1".into()));
            out.push(Outcome::compare(params, &cor_2_rhs(n, t), &thm_ik1_rhs(n, t, 0)));
        }
    }
    Ok(out)
}

fn cor_c1(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        for t in &c.t_samples {
            let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                acc + pow_u32(t, k as u32) / (int((n + 1) as i64) * binomial_q(n, k))
            });
            out.push(Outcome::compare(nt_param(n, t), &lhs, &cor_2_rhs(n, t)));
        }
    }
    Ok(out)
}

// ---- row sums --------------------------------------------------------------

fn inverse_binomial_row_sum(n: usize) -> Rational {
    (0..=n).fold(Rational::zero(), |acc, k| acc + (int((n + 1) as i64) * binomial_q(n, k)).recip())
}

fn cor_3(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        let rhs = (0..=n).fold(Rational::zero(), |acc, j| {
            acc + pow_u32(&rat(1, 2), (n - j) as u32) / int((j + 1) as i64)
        });
        let mut params = n_param(n);
        params.push(("form".into(), "sum".into()));
        out.push(Outcome::compare(params, &inverse_binomial_row_sum(n), &rhs));
    }
    let order = c.depth;
    let harmonic = TruncSeries::from_scalars(order, (0..=order).map(|n| rat(1, (n + 1) as i64)).collect());
    let geometric =
        TruncSeries::from_scalars(order, (0..=order).map(|n| pow_u32(&rat(1, 2), n as u32)).collect());
    let product = &harmonic * &geometric;
    for n in 0..=order {
        let mut params = n_param(n);
        params.push(("form".into(), "series product".into()));
        out.push(Outcome::compare(params, &row_sum(n), &product.coeff(n).coeff(0)));
    }
    Ok(out)
}

fn thm_ik3(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((0..=c.depth)
        .map(|n| {
            let lhs = inverse_binomial_row_sum(n);
            let rhs = (0..=n).fold(Rational::zero(), |acc, j| {
                acc + sign_pow::<Rational>(n - j) * factorial_q(n - j)
                    / (int((j + 1) as i64) * changhee(n - j))
            });
            let o = Outcome::compare(n_param(n), &lhs, &rhs);
            if o.holds {
                return o;
            }
            let reciprocal = (0..=n).fold(Rational::zero(), |acc, j| {
                acc + sign_pow::<Rational>(n - j) * changhee(n - j)
                    / (int((j + 1) as i64) * factorial_q(n - j))
            });
            o.with_note(format!(
                "lhs equals Σ_j (-1)^(n-j) Ch_(n-j)/((j+1) (n-j)!), the same sum with the factor \
                 (n-j)!/Ch_(n-j) inverted: {} ({})",
                yes_no(lhs == reciprocal),
                render(&reciprocal)
            ))
        })
        .collect())
}

fn cor_y(c: &RunConfig) -> Result<Vec<Outcome>> {
    let minus_one = int(-1);
    let mut out = Vec::new();
    for n in 0..=c.depth {
        let lhs = inverse_binomial_row_sum(n);
        let mut rhs = Rational::zero();
        let mut reciprocal = Rational::zero();
        for j in 0..=n {
            let y = y_number(n - j, &minus_one)?;
            let weight = int((j + 1) as i64);
            rhs -= factorial_q(n - j) / (&weight * &y);
            reciprocal -= &y / (weight * factorial_q(n - j));
        }
        let o = Outcome::compare(n_param(n), &lhs, &rhs);
        out.push(if o.holds {
            o
        } else {
            o.with_note(format!(
                "lhs equals -Σ_j Y_(n-j)(-1)/((j+1) (n-j)!), the same sum with the factor \
                 (n-j)!/Y_(n-j)(-1) inverted: {} ({})",
                yes_no(lhs == reciprocal),
                render(&reciprocal)
            ))
        });
    }
    Ok(out)
}

fn k1_lhs(n: usize) -> Rational {
    row_sum(n) - row_sum(n - 1) / int(2)
}

fn thm_k1(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((1..=c.depth)
        .map(|n| {
            let rhs = sign_pow::<Rational>(n) * daehee(n) / factorial_q(n);
            Outcome::compare(n_param(n), &k1_lhs(n), &rhs)
        })
        .collect())
}

fn thm_k1d(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((1..=c.depth)
        .map(|n| Outcome::compare(n_param(n), &k1_lhs(n), &rat(1, (n + 1) as i64)))
        .collect())
}

// ---- definitions -----------------------------------------------------------

fn per_entry(depth: usize, f: impl Fn(usize, usize) -> Result<(Rational, Rational)>) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=depth {
        for k in 0..=n {
            let (lhs, rhs) = f(n, k)?;
            out.push(Outcome::compare(nk_param(n, k), &lhs, &rhs));
        }
    }
    Ok(out)
}

fn rec(c: &RunConfig) -> Result<Vec<Outcome>> {
    let triangle = LeibnitzTriangle::build(c.depth);
    per_entry(c.depth, |n, k| {
        Ok((triangle.get(n, k).expect("within triangle").clone(), leibnitz(n, k)?))
    })
}

fn sumform(c: &RunConfig) -> Result<Vec<Outcome>> {
    per_entry(c.depth, |n, k| Ok((leibnitz_sum_form(n, k)?, leibnitz(n, k)?)))
}

fn gln_spec(c: &RunConfig) -> Result<Vec<Outcome>> {
    per_entry(c.depth, |n, k| Ok((specialize_classical(n, k)?, leibnitz(n, k)?)))
}

pub(crate) fn gen_grid() -> Vec<(Rational, Rational)> {
    GEN_GRID
        .iter()
        .map(|&((an, ad), (bn, bd))| (rat(an, ad), rat(bn, bd)))
        .collect()
}

fn gln_oracle(c: &RunConfig) -> Result<Vec<Outcome>> {
    let grid = gen_grid();
    let mut out = Vec::new();
    for n in 0..=c.depth {
        for k in 0..=n {
            for (a, b) in &grid {
                let params = p(&[
                    ("n", n.to_string()),
                    ("k", k.to_string()),
                    ("a", render(a)),
                    ("b", render(b)),
                ]);
                out.push(Outcome::compare(
                    params,
                    &gen_leibnitz(n, k, a, b)?,
                    &integration_oracle(n, k, a, b)?,
                ));
            }
        }
    }
    Ok(out)
}

fn gln_adj(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for n in 0..=c.depth {
        for k in 0..=n {
            let adj = glnum_adjudicate(n, k)?;
            let holds = adj.definition_matches_oracle && adj.confirmed != ConfirmedForm::Neither;
            let mut note = match adj.confirmed {
                ConfirmedForm::Both => "oracle confirms both (b-a) B(k+1,n-k+1) and (b-a)^(n+1) B(k+1,n-k+1)".to_string(),
                ConfirmedForm::Implied => "oracle confirms (b-a)^(n+1) B(k+1,n-k+1); (b-a) B(k+1,n-k+1) does not match".to_string(),
                ConfirmedForm::Literal => "oracle confirms (b-a) B(k+1,n-k+1); (b-a)^(n+1) B(k+1,n-k+1) does not match".to_string(),
                ConfirmedForm::Neither => "oracle confirms neither closed form".to_string(),
            };
            if let Some(w) = &adj.literal_witness {
                note.push_str(&format!(
                    " (at a={}, b={}: (b-a) B = {}, integral = {})",
                    w.a, w.b, w.candidate, w.oracle
                ));
            }
            out.push(Outcome {
                params: nk_param(n, k),
                lhs: adj.definition.clone(),
                rhs: match adj.confirmed {
                    ConfirmedForm::Literal => adj.literal_form.clone(),
                    _ => adj.implied_form.clone(),
                },
                holds,
                note: Some(note),
            });
        }
    }
    Ok(out)
}

// ---- series ----------------------------------------------------------------

fn series_outcome(check: SeriesCheck, mut params: Vec<(String, String)>) -> Outcome {
    params.insert(0, ("order".into(), check.order.to_string()));
    match check.mismatches().into_iter().next() {
        None => Outcome { params, lhs: String::new(), rhs: String::new(), holds: true, note: None },
        Some(m) => {
            params.push(("u_power".into(), m.power.to_string()));
            Outcome { params, lhs: m.lhs, rhs: m.rhs, holds: false, note: None }
        }
    }
}

fn series_order(c: &RunConfig) -> usize {
    c.depth.max(1)
}

fn gf_l(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok(vec![series_outcome(check_gf_leibnitz(series_order(c))?, vec![])])
}

fn gf_d(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok(vec![series_outcome(check_gf_family(NumberFamily::Daehee, series_order(c), None)?, vec![])])
}

fn gf_c(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok(vec![series_outcome(check_gf_family(NumberFamily::Changhee, series_order(c), None)?, vec![])])
}

fn gf_y(c: &RunConfig) -> Result<Vec<Outcome>> {
    c.lambda_samples
        .iter()
        .map(|lambda| {
            let check = check_gf_family(NumberFamily::Y, series_order(c), Some(lambda))?;
            Ok(series_outcome(check, p(&[("lambda", render(lambda))])))
        })
        .collect()
}

fn fe(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok(vec![series_outcome(check_functional_eq_fe(series_order(c))?, vec![])])
}

fn fe_gld(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok(vec![series_outcome(check_functional_eq_gl_daehee(series_order(c))?, vec![])])
}

// ---- Volkenborn ------------------------------------------------------------

fn v_a11(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((0..=c.depth)
        .map(|n| poly_outcome(n_param(n), &theorem_a11_polynomial(n), &leibnitz_polynomial(n)))
        .collect())
}

fn v_ki1(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((0..=c.depth)
        .map(|n| poly_outcome(n_param(n), &theorem_ki1_polynomial(n), &leibnitz_polynomial(n)))
        .collect())
}

fn v_ki2(c: &RunConfig) -> Result<Vec<Outcome>> {
    Ok((0..=c.depth)
        .map(|n| Outcome::compare(n_param(n), &corollary_ki2_sum(n), &row_sum(n)))
        .collect())
}

fn v_shift(c: &RunConfig) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for d in 0..=c.depth {
        for (label, poly) in [
            (format!("x^{d}"), UniPoly::monomial(int(1), d)),
            (format!("x_({d})"), UniPoly::falling_factorial(d)),
        ] {
            let s = volkenborn_shift_check(&poly);
            out.push(Outcome::compare(p(&[("p", label)]), &s.difference, &s.derivative_at_zero));
        }
    }
    Ok(out)
}

fn v_prod(c: &RunConfig) -> Result<Vec<Outcome>> {
    let top = c.depth.min(12);
    let mut out = Vec::new();
    for n in 0..=top {
        for m in 0..=top {
            let integrand = &UniPoly::falling_factorial(n) * &UniPoly::falling_factorial(m);
            out.push(Outcome::compare(
                p(&[("n", n.to_string()), ("m", m.to_string())]),
                &volkenborn_integral_poly(&integrand),
                &volkenborn_falling_product(n, m),
            ));
        }
    }
    Ok(out)
}

fn corrupted(c: &RunConfig) -> Result<Vec<Outcome>> {
    per_entry(c.depth.min(3), |n, k| Ok((leibnitz(n, k)?, leibnitz(n, k)? + rat(1, 1000))))
}
