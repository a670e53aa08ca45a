//! Eulerian numbers and polynomials attached to an arithmetic progression.
//!
//! For the progression `a, a+d, a+2d, ...` the numbers `A(n,k; a,d)` are
//! indexed by `k = -1, 0, ..., n-1` and satisfy
//!
//! ```text
//! A(0,-1) = 1,
//! A(n,k)  = ((k+2)d - a) A(n-1,k) + (a + (n-k-1)d) A(n-1,k-1).
//! ```
//!
//! At `a = d = 1` the `k = -1` column vanishes and the rest is the classical
//! triangle. The polynomial `T_n(t; a,d) = sum_k A(n,k; a,d) t^(k+1)` plays the
//! role of `A_n(t)` in the power-sum and generating-function identities.
//!
//! All sums over `k` run from `-1` to `n-1`.

use std::fmt;

use crate::check::Check;
use crate::classical::{classical_polys, factorial_rat, ConstructionMethod};
use crate::error::{Error, Result};
use crate::exact::{choose, Poly, Rat, USeries, Var};
use crate::oracle::{direct_power_sum, direct_weighted_sum};

/// The progression `a, a+d, a+2d, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Progression {
    pub a: Rat,
    pub d: Rat,
}

impl Progression {
    pub fn new(a: Rat, d: Rat) -> Self {
        Progression { a, d }
    }

    pub fn from_ints(a: i64, d: i64) -> Self {
        Progression::new(Rat::from(a), Rat::from(d))
    }

    /// `1, 2, 3, ...`
    pub fn natural() -> Self {
        Progression::from_ints(1, 1)
    }

    /// The `i`-th term `a + (i-1) d` (1-based).
    pub fn term(&self, i: u64) -> Rat {
        &self.a + &self.d * Rat::from(i as i64 - 1)
    }

    /// `(a - d, -d)`: the progression read backwards from one step before `a`.
    pub fn reflected(&self) -> Progression {
        Progression::new(&self.a - &self.d, -&self.d)
    }

    /// Same difference `d`, first term `a` replaced.
    pub fn with_start(&self, a: Rat) -> Progression {
        Progression::new(a, self.d.clone())
    }

    /// Same first term, difference negated.
    pub fn negated_difference(&self) -> Progression {
        Progression::new(self.a.clone(), -&self.d)
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, d={}", self.a, self.d)
    }
}

/// Rows `0..=max_n` of `A(n,k; a,d)`. Row `n` stores `k = -1..=n-1` at
/// physical index `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralTriangle {
    progression: Progression,
    rows: Vec<Vec<Rat>>,
}

impl GeneralTriangle {
    pub fn progression(&self) -> &Progression {
        &self.progression
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `A(n,k; a,d)`, zero for `k <= -2` or `k >= n`.
    pub fn get(&self, n: usize, k: i64) -> Rat {
        if k < -1 {
            return Rat::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get((k + 1) as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `n`, entries for `k = -1..=n-1`.
    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// `T_n(t; a,d)`.
    pub fn poly(&self, n: usize) -> Poly {
        Poly::new(self.rows[n].clone(), Var::T)
    }
}

pub fn general_triangle(prog: &Progression, max_n: usize) -> GeneralTriangle {
    let Progression { a, d } = prog;
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let at = |k: i64| -> Rat {
            if k < -1 {
                Rat::zero()
            } else {
                prev.get((k + 1) as usize).cloned().unwrap_or_default()
            }
        };
        let row = (-1..n as i64)
            .map(|k| {
                let stay = d * Rat::from(k + 2) - a;
                let step = a + d * Rat::from(n as i64 - k - 1);
                stay * at(k) + step * at(k - 1)
            })
            .collect();
        rows.push(row);
    }
    GeneralTriangle {
        progression: prog.clone(),
        rows,
    }
}

/// `A(n,k; a,d) = sum_{i=0}^{k+1} (-1)^i ((k+2-i)d - a)^n C(n+1, i)`.
pub fn general_number_closed(n: usize, k: i64, prog: &Progression) -> Rat {
    if k < -1 || k >= n as i64 {
        return Rat::zero();
    }
    (0..=k + 1)
        .map(|i| {
            let base = &prog.d * Rat::from(k + 2 - i) - &prog.a;
            let term = base.pow(n as u32) * Rat::from(choose(n as u64 + 1, i));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `(a + (i-1)d)^n = sum_{j=-1}^{n-1} A(n,j; a,d) C(i+j, n)`.
pub fn general_worpitzky_check(n: usize, prog: &Progression, i: u64) -> Result<Check> {
    if n < 1 || i < 1 {
        return Err(Error::argument("general Worpitzky check needs n >= 1 and i >= 1"));
    }
    let tri = general_triangle(prog, n);
    let lhs = prog.term(i).pow(n as u32);
    let rhs: Rat = (-1..n as i64)
        .map(|j| tri.get(n, j) * Rat::from(choose((i as i64 + j) as u64, n as i64)))
        .sum();
    Ok(Check::scalars(&lhs, &rhs))
}

/// `sum_{i=1}^m (a + (i-1)d)^n = sum_{j=-1}^{n-1} A(n,j; a,d) C(m+j+1, n+1)`.
pub fn general_power_sum(prog: &Progression, n: usize, m: u64) -> Rat {
    let tri = general_triangle(prog, n);
    (-1..n as i64)
        .map(|j| tri.get(n, j) * Rat::from(choose((m as i64 + j + 1) as u64, n as i64 + 1)))
        .sum()
}

/// [`general_power_sum`] against direct summation.
pub fn general_power_sum_check(prog: &Progression, n: usize, m: u64) -> Result<Check> {
    if n < 1 || m < 1 {
        return Err(Error::argument("general power sum check needs n >= 1 and m >= 1"));
    }
    let direct = direct_power_sum(prog, n as u32, m);
    Ok(Check::scalars(&direct, &general_power_sum(prog, n, m)))
}

/// `T_n(t; a,d)` from the triangle.
pub fn general_poly(n: usize, prog: &Progression) -> Poly {
    general_triangle(prog, n).poly(n)
}

/// `T_n(t; a,d) = sum_j C(n,j) d^j A_j(t) (a t - a)^(n-j)`, built from the
/// classical polynomials only.
pub fn general_poly_via_classical(n: usize, prog: &Progression) -> Poly {
    let classical = classical_polys(n, ConstructionMethod::Recursion);
    let at_minus_a = Poly::linear(-&prog.a, prog.a.clone(), Var::T);
    (0..=n).fold(Poly::zero(Var::T), |acc, j| {
        let c = Rat::from(choose(n as u64, j as i64)) * prog.d.pow(j as u32);
        acc + (&classical[j] * &at_minus_a.pow((n - j) as u32)).scale(&c)
    })
}

/// Both constructions of `T_n` coincide.
pub fn general_poly_bridge_check(n: usize, prog: &Progression) -> Check {
    Check::polys(&general_poly(n, prog), &general_poly_via_classical(n, prog))
}

/// `T_n(1; a,d) = n! d^n`.
pub fn general_row_sum_check(n: usize, prog: &Progression) -> Check {
    let lhs = general_poly(n, prog).eval(&Rat::one());
    Check::scalars(&lhs, &(factorial_rat(n) * prog.d.pow(n as u32)))
}

/// `T_n(t; 1,1) = t A_n(t)` for `n >= 1`.
pub fn natural_specialization_check(n: usize) -> Result<Check> {
    if n < 1 {
        return Err(Error::argument("specialization holds for n >= 1"));
    }
    let classical = crate::classical::classical_poly(n, ConstructionMethod::Triangle);
    Ok(Check::polys(
        &general_poly(n, &Progression::natural()),
        &classical.shift(1),
    ))
}

/// `(t - exp(d u (t-1))) * sum_n T_n(t; a,d) u^n / n! = (t-1) exp(a u (t-1))`
/// up to `u^order`.
pub fn general_egf_check(prog: &Progression, order: usize) -> Result<Check> {
    if order < 1 {
        return Err(Error::argument("EGF check needs order >= 1"));
    }
    let tri = general_triangle(prog, order);
    let polys: Vec<Poly> = (0..=order).map(|n| tri.poly(n)).collect();
    let egf = USeries::exponential(&polys, order);
    let tm1 = Poly::from_ints(&[-1, 1], Var::T);
    let denom = (&USeries::constant(Poly::x(Var::T), order)
        - &USeries::exp_linear(&tm1.scale(&prog.d), order))?;
    let lhs = denom.mul(&egf)?;
    let rhs = USeries::exp_linear(&tm1.scale(&prog.a), order).scale(&tm1);
    Ok(Check::series(&lhs, &rhs))
}

/// `-T_n(t; a-d, -d) / (t-1)^(n+1) = sum_j t^j (a + j d)^n`, with the series
/// cut at `t^J`; coefficients below `t^(J-n)` are compared.
pub fn geometric_series_check_prop34(prog: &Progression, n: usize, j_max: usize) -> Result<Check> {
    if j_max < n + 2 {
        return Err(Error::argument(format!(
            "truncation J = {j_max} too small for n = {n} (need J >= n + 2)"
        )));
    }
    // a + j d is the (j+1)-th term.
    let partial = Poly::new(
        (0..=j_max as u64).map(|j| prog.term(j + 1).pow(n as u32)).collect(),
        Var::T,
    );
    let lhs = &partial * &Poly::from_ints(&[-1, 1], Var::T).pow(n as u32 + 1);
    let rhs = -general_poly(n, &prog.reflected());
    Ok(Check::poly_window(&lhs, &rhs, j_max - n))
}

/// Which closed form of the weighted progression sum to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteSumForm {
    /// Binomial expansion in `(dm - d)^l` over `T_{n-l}(t; a, -d)`.
    Eq24,
    /// Single shifted polynomial `T_n(t; a + d(m-1), -d)`.
    Eq25,
}

/// Right-hand side of the chosen form multiplied by `(t-1)^(n+1)`.
pub fn finite_sum_rhs_cleared(form: FiniteSumForm, prog: &Progression, n: usize, m: u64) -> Poly {
    let neg = prog.negated_difference();
    let t_m1 = Poly::monomial(Rat::one(), m as usize + 1, Var::T);
    let tail = Poly::monomial(Rat::one(), 2, Var::T) * general_poly(n, &neg);
    let head = match form {
        FiniteSumForm::Eq24 => {
            let tri = general_triangle(&neg, n);
            let tm1 = Poly::from_ints(&[-1, 1], Var::T);
            let shift = &prog.d * Rat::from(m as i64 - 1);
            (0..=n).fold(Poly::zero(Var::T), |acc, l| {
                let c = Rat::from(choose(n as u64, l as i64)) * shift.pow(l as u32);
                acc + (&tm1.pow(l as u32) * &tri.poly(n - l)).scale(&c)
            })
        }
        FiniteSumForm::Eq25 => {
            let start = &prog.a + &prog.d * Rat::from(m as i64 - 1);
            general_poly(n, &neg.with_start(start))
        }
    };
    &t_m1 * &head - tail
}

/// The printed closed forms equal `sum_{i=2}^{m} t^i (a + (i-1)d)^n`; both
/// sides are compared after clearing `(t-1)^(n+1)`.
pub fn finite_sum_identity_check(
    form: FiniteSumForm,
    prog: &Progression,
    n: usize,
    m: u64,
) -> Result<Check> {
    if m < 2 {
        return Err(Error::argument(format!("finite sum identity needs m >= 2, got {m}")));
    }
    let cleared = Poly::from_ints(&[-1, 1], Var::T).pow(n as u32 + 1);
    let lhs = &direct_weighted_sum(prog, n as u32, m, 2) * &cleared;
    Ok(Check::polys(&lhs, &finite_sum_rhs_cleared(form, prog, n, m)))
}

/// The same closed forms read as `sum_{i=1}^{m}`. This reading is off by the
/// `i = 1` term `a^n t` and fails whenever `a != 0`; kept so reports can show it.
pub fn printed_full_sum_reading_check(
    form: FiniteSumForm,
    prog: &Progression,
    n: usize,
    m: u64,
) -> Result<Check> {
    if m < 2 {
        return Err(Error::argument(format!("finite sum identity needs m >= 2, got {m}")));
    }
    let cleared = Poly::from_ints(&[-1, 1], Var::T).pow(n as u32 + 1);
    let lhs = &direct_weighted_sum(prog, n as u32, m, 1) * &cleared;
    Ok(Check::polys(&lhs, &finite_sum_rhs_cleared(form, prog, n, m)))
}

/// `sum_{i=1}^m t^i (a + (i-1)d)^n` times `(t-1)^(n+1)` equals
/// `t^(m+1) T_n(t; a + (m-1)d, -d) - t T_n(t; a - d, -d)`.
pub fn full_sum_rhs_cleared(prog: &Progression, n: usize, m: u64) -> Poly {
    let neg = prog.negated_difference();
    let end = neg.with_start(&prog.a + &prog.d * Rat::from(m as i64 - 1));
    let before = neg.with_start(&prog.a - &prog.d);
    Poly::monomial(Rat::one(), m as usize + 1, Var::T) * general_poly(n, &end)
        - Poly::x(Var::T) * general_poly(n, &before)
}

pub fn full_sum_identity_check(prog: &Progression, n: usize, m: u64) -> Result<Check> {
    if m < 1 {
        return Err(Error::argument("full sum identity needs m >= 1"));
    }
    let cleared = Poly::from_ints(&[-1, 1], Var::T).pow(n as u32 + 1);
    let lhs = &direct_weighted_sum(prog, n as u32, m, 1) * &cleared;
    Ok(Check::polys(&lhs, &full_sum_rhs_cleared(prog, n, m)))
}

/// Exact value of `sum_{i=1}^m t^i (a + (i-1)d)^n` at a rational `t != 1`
/// through the closed form; `t = 1` falls back to [`general_power_sum`].
pub fn weighted_power_sum(prog: &Progression, n: usize, m: u64, t: &Rat) -> Rat {
    if t.is_one() {
        return general_power_sum(prog, n, m);
    }
    let denom = (t - Rat::one()).pow(n as u32 + 1);
    full_sum_rhs_cleared(prog, n, m).eval(t) / denom
}

/// `A(n,k; a,d) = A(n, n-2-k; d-a, d)` for the whole row `n`.
pub fn reflection_symmetry_check(n: usize, prog: &Progression) -> Check {
    let dual = Progression::new(&prog.d - &prog.a, prog.d.clone());
    let row = general_triangle(prog, n).row(n).to_vec();
    let mut mirrored = general_triangle(&dual, n).row(n).to_vec();
    mirrored.reverse();
    Check::sequences(&row, &mirrored)
}

/// The progressions every general identity is exercised on.
pub fn default_grid() -> Vec<Progression> {
    vec![
        Progression::from_ints(1, 1),
        Progression::from_ints(2, 3),
        Progression::from_ints(0, 1),
        Progression::from_ints(-1, 2),
        Progression::new(Rat::new(1, 2).unwrap(), Rat::new(-1, 3).unwrap()),
        Progression::from_ints(3, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::classical_triangle;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from(x)).collect()
    }

    fn grid() -> Vec<Progression> {
        let mut g = default_grid();
        g.push(Progression::from_ints(5, 0));
        g.push(Progression::from_ints(-2, -2));
        g
    }

    #[test]
    fn small_rows() {
        let p = Progression::from_ints(2, 3);
        let tri = general_triangle(&p, 3);
        assert_eq!(tri.row(0), rats(&[1]).as_slice());
        assert_eq!(tri.row(1), rats(&[1, 2]).as_slice());
        assert_eq!(tri.row(2), rats(&[1, 13, 4]).as_slice());
        assert_eq!(tri.get(2, -1), Rat::one());
        assert_eq!(tri.get(2, -2), Rat::zero());
        assert_eq!(tri.get(2, 2), Rat::zero());

        let q = Progression::new(Rat::new(1, 2).unwrap(), Rat::new(-1, 3).unwrap());
        let row1 = general_triangle(&q, 1).row(1).to_vec();
        assert_eq!(row1, vec![&q.d - &q.a, q.a.clone()]);
    }

    #[test]
    fn natural_progression_is_classical() {
        let tri = general_triangle(&Progression::natural(), 10);
        let classical = classical_triangle(10);
        for n in 1..=10 {
            assert_eq!(tri.get(n, -1), Rat::zero());
            for k in 0..n as i64 {
                assert_eq!(tri.get(n, k), Rat::from(classical.get(n, k)));
            }
            assert!(natural_specialization_check(n).unwrap().passed());
        }
    }

    #[test]
    fn closed_form_examples() {
        let any = Progression::new(Rat::new(7, 5).unwrap(), Rat::from(-4));
        assert_eq!(general_number_closed(0, -1, &any), Rat::one());
        assert_eq!(general_number_closed(1, 0, &any), any.a);
        assert_eq!(general_number_closed(1, -1, &any), &any.d - &any.a);
        assert_eq!(
            general_number_closed(2, 0, &Progression::from_ints(2, 3)),
            Rat::from(13)
        );
        assert_eq!(general_number_closed(3, -2, &any), Rat::zero());
        assert_eq!(general_number_closed(3, 3, &any), Rat::zero());
    }

    #[test]
    fn recurrence_matches_closed_form_and_boundaries() {
        for p in grid() {
            let tri = general_triangle(&p, 12);
            for n in 0..=12 {
                if n <= 10 {
                    for k in -2..=n as i64 {
                        assert_eq!(tri.get(n, k), general_number_closed(n, k, &p), "{p} n={n} k={k}");
                    }
                }
                assert_eq!(tri.get(n, -1), (&p.d - &p.a).pow(n as u32));
                if n >= 1 {
                    assert_eq!(tri.get(n, n as i64 - 1), p.a.pow(n as u32));
                }
            }
        }
    }

    #[test]
    fn worpitzky_general() {
        let p = Progression::from_ints(2, 3);
        assert!(general_worpitzky_check(2, &p, 3).unwrap().passed());
        assert!(general_worpitzky_check(4, &Progression::from_ints(-1, 2), 5).unwrap().passed());
        for p in grid() {
            for n in 1..=8 {
                for i in 1..=n as u64 + 2 {
                    assert!(general_worpitzky_check(n, &p, i).unwrap().passed(), "{p} n={n} i={i}");
                }
            }
        }
        assert!(general_worpitzky_check(2, &p, 0).is_err());
    }

    #[test]
    fn power_sums() {
        let p = Progression::from_ints(2, 3);
        assert_eq!(general_power_sum(&p, 2, 3), Rat::from(93));
        assert_eq!(general_power_sum(&Progression::natural(), 3, 10), Rat::from(3025));
        for p in grid() {
            assert_eq!(general_power_sum(&p, 5, 1), p.a.pow(5));
            for n in 1..=8 {
                for m in 1..=30 {
                    assert!(general_power_sum_check(&p, n, m).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn polynomials() {
        let p = Progression::from_ints(2, 3);
        assert_eq!(general_poly(0, &p), Poly::one(Var::T));
        assert_eq!(general_poly(2, &p), Poly::from_ints(&[1, 13, 4], Var::T));
        assert_eq!(general_poly(2, &Progression::natural()), Poly::from_ints(&[0, 1, 1], Var::T));
        assert_eq!(general_poly(1, &p), Poly::from_ints(&[1, 2], Var::T));
        assert_eq!(general_poly_via_classical(0, &p), Poly::one(Var::T));
        for p in grid() {
            for n in 0..=10 {
                assert!(general_poly_bridge_check(n, &p).passed(), "{p} n={n}");
                assert!(general_row_sum_check(n, &p).passed(), "{p} n={n}");
                let poly = general_poly(n, &p);
                assert_eq!(poly.coeff(0), (&p.d - &p.a).pow(n as u32));
                assert_eq!(poly.coeff(n), p.a.pow(n as u32));
            }
        }
    }

    #[test]
    fn egf() {
        for p in grid() {
            let c = general_egf_check(&p, 8).unwrap();
            assert!(c.passed(), "{p}: {c}");
        }
        let odd = Progression::new(Rat::new(-1, 2).unwrap(), Rat::new(1, 3).unwrap());
        assert!(general_egf_check(&odd, 5).unwrap().passed());
    }

    #[test]
    fn geometric_series() {
        let p = Progression::from_ints(2, 3);
        assert_eq!(general_poly(1, &p.reflected()), Poly::from_ints(&[-2, -1], Var::T));
        assert!(geometric_series_check_prop34(&p, 1, 8).unwrap().passed());
        assert!(geometric_series_check_prop34(&Progression::from_ints(0, 1), 2, 10).unwrap().passed());
        for p in grid() {
            for n in 0..=6 {
                assert!(geometric_series_check_prop34(&p, n, n + 10).unwrap().passed(), "{p} n={n}");
            }
        }
        assert!(geometric_series_check_prop34(&p, 4, 5).is_err());
    }

    #[test]
    fn finite_sum_forms() {
        for p in grid() {
            for form in [FiniteSumForm::Eq24, FiniteSumForm::Eq25] {
                for n in 0..=5 {
                    for m in 2..=8 {
                        let c = finite_sum_identity_check(form, &p, n, m).unwrap();
                        assert!(c.passed(), "{form:?} {p} n={n} m={m}: {c}");
                    }
                }
            }
            for n in 0..=5 {
                for m in 1..=8 {
                    assert!(full_sum_identity_check(&p, n, m).unwrap().passed());
                }
                for m in 2..=8 {
                    assert_eq!(
                        finite_sum_rhs_cleared(FiniteSumForm::Eq24, &p, n, m),
                        finite_sum_rhs_cleared(FiniteSumForm::Eq25, &p, n, m)
                    );
                }
            }
        }
        assert!(finite_sum_identity_check(FiniteSumForm::Eq25, &Progression::natural(), 1, 1).is_err());
    }

    #[test]
    fn eq25_hand_value() {
        // n = 1, m = 2: the cleared right side is (a+d) t^2 (t-1)^2.
        let p = Progression::from_ints(2, 3);
        let expected = Poly::from_ints(&[0, 0, 5], Var::T) * Poly::from_ints(&[-1, 1], Var::T).pow(2);
        assert_eq!(finite_sum_rhs_cleared(FiniteSumForm::Eq25, &p, 1, 2), expected);
    }

    #[test]
    fn full_sum_reading_fails_at_smallest_case() {
        let p = Progression::from_ints(2, 3);
        for form in [FiniteSumForm::Eq24, FiniteSumForm::Eq25] {
            let c = printed_full_sum_reading_check(form, &p, 1, 2).unwrap();
            assert!(!c.passed());
        }
    }

    #[test]
    fn weighted_sum_values() {
        let p = Progression::from_ints(2, 3);
        let half = Rat::new(1, 2).unwrap();
        let direct = direct_weighted_sum(&p, 3, 6, 1).eval(&half);
        assert_eq!(weighted_power_sum(&p, 3, 6, &half), direct);
        assert_eq!(weighted_power_sum(&p, 2, 3, &Rat::one()), Rat::from(93));
    }

    #[test]
    fn reflection_symmetry() {
        for p in grid() {
            for n in 0..=10 {
                assert!(reflection_symmetry_check(n, &p).passed(), "{p} n={n}");
            }
        }
    }
}
