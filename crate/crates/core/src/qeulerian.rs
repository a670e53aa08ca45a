//! Carlitz q-Eulerian numbers and polynomials.
//!
//! Rows are built by
//!
//! ```text
//! A(1,0) = 1,
//! A(n,k) = q^(n-1-k) [k+1] A(n-1,k) + [n-k] A(n-1,k-1),
//! ```
//!
//! with `k` running over `0..n`. With this 0-based `k`, the defining expansion
//! of `[x]^n` uses the Gaussian binomial `[x+k choose n]`, and the
//! combinatorial form pairs the ascent count `k` with the major index (sum of
//! descent positions): `A(n,k)(q) = sum over permutations with k ascents of
//! q^maj`. Factoring out the smallest possible major index `C(n-k, 2)` leaves a
//! polynomial of degree `k(n-k-1)`; see [`q_combinatorial`].
//!
//! The alternative readings with `[x+k-1 choose n]` and with prefactor
//! `q^((n-k+1)(n-k)/2)` over `a(n, n-k, i)` do not reproduce the recurrence;
//! [`carlitz_identity_check_shifted`] and [`q_combinatorial_unshifted`] keep
//! them available so reports can show where they break.

use std::collections::HashMap;

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, Var};
use crate::oracle::{maj_ascent_table, MajAscentTable};

/// Default bound for the q-side enumeration.
pub const DEFAULT_Q_BOUND: usize = 6;
/// Bound used by the opt-in slow tier.
pub const SLOW_Q_BOUND: usize = 7;

fn q_monomial(deg: usize) -> Poly {
    Poly::monomial(Rat::one(), deg, Var::Q)
}

fn bracket(x: usize) -> Poly {
    Poly::new(vec![Rat::one(); x], Var::Q)
}

/// `[x] = 1 + q + ... + q^(x-1)`; `[0] = 0`.
pub fn q_bracket(x: i64) -> Result<Poly> {
    if x < 0 {
        return Err(Error::argument(format!("q-bracket of negative {x} is not a polynomial")));
    }
    Ok(bracket(x as usize))
}

/// Gaussian binomials by the q-Pascal rule
/// `[x choose n] = [x-1 choose n-1] + q^n [x-1 choose n]`, memoized.
#[derive(Clone, Debug, Default)]
pub struct QBinomials {
    memo: HashMap<(usize, usize), Poly>,
}

impl QBinomials {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, x: usize, n: usize) -> Poly {
        if n > x {
            return Poly::zero(Var::Q);
        }
        if n == 0 || n == x {
            return Poly::one(Var::Q);
        }
        if let Some(p) = self.memo.get(&(x, n)) {
            return p.clone();
        }
        let left = self.get(x - 1, n - 1);
        let right = self.get(x - 1, n);
        let value = left + q_monomial(n) * right;
        self.memo.insert((x, n), value.clone());
        value
    }
}

pub fn q_binomial(x: usize, n: usize) -> Poly {
    QBinomials::new().get(x, n)
}

/// Rows `1..=max_n` of `A(n,k)(q)`, `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTriangle {
    rows: Vec<Vec<Poly>>,
}

impl QTriangle {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `A(n,k)(q)`, zero out of range.
    pub fn get(&self, n: usize, k: i64) -> Poly {
        if k < 0 {
            return Poly::zero(Var::Q);
        }
        self.rows
            .get(n)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_else(|| Poly::zero(Var::Q))
    }

    pub fn row(&self, n: usize) -> &[Poly] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }
}

pub fn q_triangle(max_n: usize) -> Result<QTriangle> {
    if max_n < 1 {
        return Err(Error::argument("q triangle needs max_n >= 1"));
    }
    let mut rows: Vec<Vec<Poly>> = vec![Vec::new(), vec![Poly::one(Var::Q)]];
    for n in 2..=max_n {
        let prev = &rows[n - 1];
        let at = |k: i64| -> Option<&Poly> {
            if k < 0 {
                None
            } else {
                prev.get(k as usize)
            }
        };
        let row = (0..n)
            .map(|k| {
                let mut entry = Poly::zero(Var::Q);
                if let Some(p) = at(k as i64) {
                    entry = entry + q_monomial(n - 1 - k) * bracket(k + 1) * p;
                }
                if let Some(p) = at(k as i64 - 1) {
                    entry = entry + bracket(n - k) * p;
                }
                entry
            })
            .collect();
        rows.push(row);
    }
    Ok(QTriangle { rows })
}

fn carlitz_check(n: usize, x: usize, offset: usize) -> Result<Check> {
    if n < 1 || x < 1 {
        return Err(Error::argument("Carlitz identity needs n >= 1 and x >= 1"));
    }
    let tri = q_triangle(n)?;
    let mut binoms = QBinomials::new();
    let lhs = bracket(x).pow(n as u32);
    let rhs = (0..n).fold(Poly::zero(Var::Q), |acc, k| {
        acc + tri.get(n, k as i64) * binoms.get(x + k + offset - 1, n)
    });
    Ok(Check::polys(&lhs, &rhs))
}

/// `[x]^n = sum_{k=0}^{n-1} A(n,k)(q) [x+k choose n]`.
pub fn carlitz_identity_check(n: usize, x: usize) -> Result<Check> {
    carlitz_check(n, x, 1)
}

/// The same expansion with `[x+k-1 choose n]`, which is off by one for
/// 0-based `k`: already at `n = 1` it gives `[x-1]` instead of `[x]`.
pub fn carlitz_identity_check_shifted(n: usize, x: usize) -> Result<Check> {
    carlitz_check(n, x, 0)
}

/// `A_n(t, q) = sum_k A(n,k)(q) t^k`, stored as `t`-indexed q-polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEulerianPoly {
    coeffs: Vec<Poly>,
}

impl QEulerianPoly {
    /// Coefficient of `t^k`.
    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Substitute a value for `q`, leaving a polynomial in `t`.
    pub fn at_q(&self, q: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c.eval(q)).collect(), Var::T)
    }
}

pub fn q_poly(n: usize) -> Result<QEulerianPoly> {
    if n < 1 {
        return Err(Error::argument("q-Eulerian polynomial needs n >= 1"));
    }
    Ok(QEulerianPoly {
        coeffs: q_triangle(n)?.row(n).to_vec(),
    })
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if n < 1 || k >= n {
        return Err(Error::argument(format!("need 0 <= k < n, got n={n}, k={k}")));
    }
    Ok(())
}

fn assemble(table: &MajAscentTable, n: usize, k: usize) -> Poly {
    let shift = binom2(n - k);
    let top = k * (n - k - 1);
    let coeffs = (0..=top)
        .map(|i| Rat::from(table.get(&(k, i + shift)).copied().unwrap_or(0) as i64))
        .collect();
    Poly::new(coeffs, Var::Q).shift(shift)
}

/// `A(n,k)(q) = q^C(n-k,2) * sum_{i=0}^{k(n-k-1)} a(n,k,i+C(n-k,2)) q^i`
/// where `a(n,k,j)` counts permutations of `1..=n` with `k` ascents and major
/// index `j`, tabulated by enumeration.
pub fn q_combinatorial(n: usize, k: usize, bound: usize) -> Result<Poly> {
    check_k(n, k)?;
    let table = maj_ascent_table(n, bound)?;
    Ok(assemble(&table, n, k))
}

/// The whole row `k = 0..n` from a single enumeration.
pub fn q_combinatorial_row(n: usize, bound: usize) -> Result<Vec<Poly>> {
    if n < 1 {
        return Err(Error::argument("q combinatorial row needs n >= 1"));
    }
    let table = maj_ascent_table(n, bound)?;
    Ok((0..n).map(|k| assemble(&table, n, k)).collect())
}

/// `q^((n-k+1)(n-k)/2) * sum_i a(n, n-k, i) q^i` with `a` counting
/// (ascents, major index). Disagrees with the recurrence; see module docs.
pub fn q_combinatorial_unshifted(n: usize, k: usize, bound: usize) -> Result<Poly> {
    check_k(n, k)?;
    let table = maj_ascent_table(n, bound)?;
    let max_maj = binom2(n);
    let coeffs = (0..=max_maj)
        .map(|i| Rat::from(table.get(&(n - k, i)).copied().unwrap_or(0) as i64))
        .collect();
    Ok(Poly::new(coeffs, Var::Q).shift((n - k + 1) * (n - k) / 2))
}

/// Enumeration and recurrence agree on every entry of row `n`.
pub fn q_combinatorial_check(n: usize, bound: usize) -> Result<Check> {
    let row = q_combinatorial_row(n, bound)?;
    let tri = q_triangle(n)?;
    Ok(Check::all((0..n).map(|k| {
        Check::polys(&row[k], &tri.get(n, k as i64))
    })))
}

/// Row `n` at `q = 1` against the classical Eulerian row.
pub fn q_collapse_check(n: usize) -> Result<Check> {
    let tri = q_triangle(n)?;
    let classical = crate::classical::classical_triangle(n);
    let at_one: Vec<Rat> = tri.row(n).iter().map(|p| p.eval(&Rat::one())).collect();
    let expected: Vec<Rat> = classical.row(n).iter().map(Rat::from).collect();
    Ok(Check::sequences(&at_one, &expected))
}
