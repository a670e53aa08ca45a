//! Classical Eulerian numbers `A(n,k)` and polynomials `A_n(t)`.
//!
//! Also holds the classical identities they satisfy: Bernoulli's power-sum
//! formula, Worpitzky's identity, the binomial power-sum expansion, the two
//! finite weighted-sum expansions, the geometric series and the exponential
//! generating function. Each identity is a function returning a [`Check`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::check::Check;
use crate::error::{Error, Result};
use crate::exact::{choose, factorial, Poly, Rat, USeries, Var};

/// Rows `1..=max_n` of the Eulerian triangle. Row 0 has no entries; the
/// polynomial convention `A_0(t) = 1` lives in [`classical_poly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTriangle {
    rows: Vec<Vec<BigInt>>,
}

impl ClassicalTriangle {
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `A(n, k)`; zero outside `0 <= k < n` and for `n = 0`.
    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `A_n(t)` read off row `n`.
    pub fn poly(&self, n: usize) -> Poly {
        if n == 0 {
            return Poly::one(Var::T);
        }
        Poly::new(self.rows[n].iter().map(Rat::from).collect(), Var::T)
    }
}

/// Fills the triangle by `A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)`.
pub fn classical_triangle(max_n: usize) -> ClassicalTriangle {
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new()];
    if max_n >= 1 {
        rows.push(vec![BigInt::one()]);
    }
    for n in 2..=max_n {
        let prev = &rows[n - 1];
        let at = |k: i64| -> BigInt {
            if k < 0 {
                BigInt::zero()
            } else {
                prev.get(k as usize).cloned().unwrap_or_default()
            }
        };
        let row = (0..n as i64)
            .map(|k| BigInt::from(k + 1) * at(k) + BigInt::from(n as i64 - k) * at(k - 1))
            .collect();
        rows.push(row);
    }
    ClassicalTriangle { rows }
}

/// `A(n,k) = sum_{i=0}^{k} (-1)^i (k-i+1)^n C(n+1, i)`, zero for `k < 0` or `k >= n`.
pub fn classical_number_closed(n: usize, k: i64) -> BigInt {
    if k < 0 || k >= n as i64 {
        return BigInt::zero();
    }
    (0..=k)
        .map(|i| {
            let term = num_traits::pow(BigInt::from(k - i + 1), n) * choose(n as u64 + 1, i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// How [`classical_poly`] builds `A_n(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionMethod {
    /// Coefficients from the Eulerian triangle.
    Triangle,
    /// `A_n(t) = sum_{k<n} C(n,k) A_k(t) (t-1)^(n-1-k)`.
    Recursion,
    /// `A_n(t) = (1 + (n-1) t) A_{n-1}(t) + t (1-t) A'_{n-1}(t)`.
    Derivative,
}

impl ConstructionMethod {
    pub const ALL: [ConstructionMethod; 3] = [
        ConstructionMethod::Triangle,
        ConstructionMethod::Recursion,
        ConstructionMethod::Derivative,
    ];
}

/// `A_0(t), ..., A_max_n(t)` by the chosen construction.
pub fn classical_polys(max_n: usize, method: ConstructionMethod) -> Vec<Poly> {
    match method {
        ConstructionMethod::Triangle => {
            let tri = classical_triangle(max_n);
            (0..=max_n).map(|n| tri.poly(n)).collect()
        }
        ConstructionMethod::Recursion => {
            let t_minus_1 = Poly::from_ints(&[-1, 1], Var::T);
            let mut polys = vec![Poly::one(Var::T)];
            for n in 1..=max_n {
                let next = (0..n).fold(Poly::zero(Var::T), |acc, k| {
                    let term = (&polys[k] * &t_minus_1.pow((n - 1 - k) as u32))
                        .scale(&Rat::from(choose(n as u64, k as i64)));
                    acc + term
                });
                polys.push(next);
            }
            polys
        }
        ConstructionMethod::Derivative => {
            let t_one_minus_t = Poly::from_ints(&[0, 1, -1], Var::T);
            let mut polys = vec![Poly::one(Var::T)];
            for n in 1..=max_n {
                let prev = &polys[n - 1];
                let lead = Poly::from_ints(&[1, n as i64 - 1], Var::T);
                let next = &lead * prev + &t_one_minus_t * &prev.derivative();
                polys.push(next);
            }
            polys
        }
    }
}

pub fn classical_poly(n: usize, method: ConstructionMethod) -> Poly {
    classical_polys(n, method).pop().expect("n + 1 polynomials")
}

/// Unsigned Bernoulli numbers `|B_{2r}|`, index `r`, with slot 0 holding 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rat>,
}

impl BernoulliTable {
    pub fn get(&self, r: usize) -> &Rat {
        &self.values[r]
    }

    pub fn max_r(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Signed `B_0 .. B_m` from `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
fn signed_bernoulli(max_index: usize) -> Vec<Rat> {
    let mut b = vec![Rat::one()];
    for m in 1..=max_index {
        let s: Rat = (0..m)
            .map(|j| &b[j] * Rat::from(choose(m as u64 + 1, j as i64)))
            .sum();
        b.push(-s / Rat::from(m as i64 + 1));
    }
    b
}

/// `|B_2|, |B_4|, ..., |B_{2 max_r}|` (even-index Bernoulli numbers without
/// sign; the power-sum formula restores signs as `(-1)^(r+1)`).
pub fn bernoulli_unsigned(max_r: usize) -> Result<BernoulliTable> {
    if max_r < 1 {
        return Err(Error::argument("max_r must be >= 1"));
    }
    let signed = signed_bernoulli(2 * max_r);
    let values = (0..=max_r).map(|r| signed[2 * r].abs()).collect();
    Ok(BernoulliTable { values })
}

/// Bernoulli's formula for `sum_{i=1}^m i^n` against direct summation.
pub fn faulhaber_check(n: usize, m: u64) -> Result<Check> {
    if n < 1 || m < 1 {
        return Err(Error::argument("faulhaber_check needs n >= 1 and m >= 1"));
    }
    let direct: Rat = (1..=m).map(|i| Rat::from(i as i64).pow(n as u32)).sum();
    let b = bernoulli_unsigned((n / 2).max(1))?;
    let mm = Rat::from(m as i64);
    let n1 = Rat::from(n as i64 + 1);
    let mut rhs = mm.pow(n as u32 + 1) / &n1 + mm.pow(n as u32) / Rat::from(2);
    let tail: Rat = (1..=n / 2)
        .map(|r| {
            let term = Rat::from(choose(n as u64 + 1, 2 * r as i64))
                * mm.pow((n - 2 * r + 1) as u32)
                * b.get(r);
            if r % 2 == 1 {
                term
            } else {
                -term
            }
        })
        .sum();
    rhs += tail / n1;
    Ok(Check::scalars(&direct, &rhs))
}

/// Worpitzky: `x^n = sum_k C(x+k, n) A(n,k)`.
pub fn worpitzky_eval(n: usize, x: u64) -> Result<Check> {
    if n < 1 {
        return Err(Error::argument("worpitzky_eval needs n >= 1"));
    }
    let tri = classical_triangle(n);
    let lhs = num_traits::pow(BigInt::from(x), n);
    let rhs: BigInt = (0..n as i64)
        .map(|k| choose(x + k as u64, n as i64) * tri.get(n, k))
        .sum();
    Ok(Check::scalars(&lhs.into(), &rhs.into()))
}

/// `sum_{i=1}^m i^n = sum_k A(n,k) C(m+k+1, n+1)`.
pub fn power_sum_check_prop21(n: usize, m: u64) -> Result<Check> {
    if n < 1 || m < 1 {
        return Err(Error::argument("power sum check needs n >= 1 and m >= 1"));
    }
    let tri = classical_triangle(n);
    let lhs: BigInt = (1..=m).map(|i| num_traits::pow(BigInt::from(i), n)).sum();
    let rhs: BigInt = (0..n as i64)
        .map(|k| tri.get(n, k) * choose(m + k as u64 + 1, n as i64 + 1))
        .sum();
    Ok(Check::scalars(&lhs.into(), &rhs.into()))
}

/// Which closed form of `sum_{i=1}^m i^n t^i` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalFiniteSum {
    /// Denominators `(t-1)^(n-l+1)`, inner sum from `l = 1`.
    Eq2,
    /// Denominators `(1-t)^(k+1)`.
    Eq3,
}

/// Both sides of the chosen expansion of `sum_{i=1}^m i^n t^i`, multiplied by
/// `(t-1)^(n+1)` (Eq2) or `(1-t)^(n+1)` (Eq3), compared as polynomials.
pub fn classical_finite_sum_identity(variant: ClassicalFiniteSum, n: usize, m: u64) -> Result<Check> {
    if n < 1 || m < 1 {
        return Err(Error::argument("finite sum identity needs n >= 1 and m >= 1"));
    }
    let a = classical_polys(n, ConstructionMethod::Triangle);
    let lhs_sum = Poly::new(
        (0..=m).map(|i| Rat::from(i as i64).pow(n as u32)).collect(),
        Var::T,
    );
    let mm = Rat::from(m as i64);
    let t = Poly::x(Var::T);
    let t_m1 = Poly::from_ints(&[0, 1], Var::T).shift(m as usize);
    match variant {
        ClassicalFiniteSum::Eq2 => {
            let tm1 = Poly::from_ints(&[-1, 1], Var::T);
            let lhs = &lhs_sum * &tm1.pow(n as u32 + 1);
            let mut rhs = Poly::zero(Var::T);
            for l in 1..=n {
                let sign = if (n + l).is_multiple_of(2) { 1 } else { -1 };
                let c = Rat::from(choose(n as u64, l as i64)) * mm.pow(l as u32) * Rat::from(sign);
                rhs = rhs + (&t_m1 * &tm1.pow(l as u32) * &a[n - l]).scale(&c);
            }
            // (-1)^n t (t^m - 1) A_n(t)
            let sign = Rat::from(if n.is_multiple_of(2) { 1 } else { -1 });
            let t_pow_m_minus_1 = &Poly::monomial(Rat::one(), m as usize, Var::T) - &Poly::one(Var::T);
            rhs = rhs + (&t * &t_pow_m_minus_1 * &a[n]).scale(&sign);
            Ok(Check::polys(&lhs, &rhs))
        }
        ClassicalFiniteSum::Eq3 => {
            let one_minus_t = Poly::from_ints(&[1, -1], Var::T);
            let lhs = &lhs_sum * &one_minus_t.pow(n as u32 + 1);
            // -t^{m+1} sum_k C(n,k) m^{n-k} (1-t)^{n-k} A_k(t) + t A_n(t)
            let inner = (0..=n).fold(Poly::zero(Var::T), |acc, k| {
                let c = Rat::from(choose(n as u64, k as i64)) * mm.pow((n - k) as u32);
                acc + (&one_minus_t.pow((n - k) as u32) * &a[k]).scale(&c)
            });
            let rhs = -(&t_m1 * &inner) + &t * &a[n];
            Ok(Check::polys(&lhs, &rhs))
        }
    }
}

/// `A_n(t) / (1-t)^(n+1) = sum_j t^j (j+1)^n`, with the series cut at `t^J`.
/// Only coefficients below `t^(J-n)` are compared.
pub fn geometric_series_check_eq5(n: usize, j_max: usize) -> Result<Check> {
    if j_max < n + 2 {
        return Err(Error::argument(format!(
            "truncation J = {j_max} too small for n = {n} (need J >= n + 2)"
        )));
    }
    let partial = Poly::new(
        (0..=j_max).map(|j| Rat::from(j as i64 + 1).pow(n as u32)).collect(),
        Var::T,
    );
    let lhs = &partial * &Poly::from_ints(&[1, -1], Var::T).pow(n as u32 + 1);
    let rhs = classical_poly(n, ConstructionMethod::Triangle);
    Ok(Check::poly_window(&lhs, &rhs, j_max - n))
}

/// `(t - exp(u(t-1))) * sum_n A_n(t) u^n / n! = t - 1` up to `u^order`.
pub fn egf_check_eq7(order: usize) -> Result<Check> {
    if order < 1 {
        return Err(Error::argument("EGF check needs order >= 1"));
    }
    let polys = classical_polys(order, ConstructionMethod::Triangle);
    let egf = USeries::exponential(&polys, order);
    let tm1 = Poly::from_ints(&[-1, 1], Var::T);
    let denom = (&USeries::constant(Poly::x(Var::T), order) - &USeries::exp_linear(&tm1, order))?;
    let lhs = denom.mul(&egf)?;
    let rhs = USeries::constant(tm1, order);
    Ok(Check::series(&lhs, &rhs))
}

/// `n!` as a rational, for row-sum checks.
pub(crate) fn factorial_rat(n: usize) -> Rat {
    Rat::from(factorial(n as u64))
}
