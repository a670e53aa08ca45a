use std::ops::{Add, Sub};

use super::{factorial, Poly, Rat, Var};
use crate::error::{Error, Result};

/// Power series in `u` truncated after `u^order`, with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<Poly>,
}

impl USeries {
    pub fn zero(order: usize, var: Var) -> Self {
        USeries {
            coeffs: vec![Poly::zero(var); order + 1],
        }
    }

    pub fn one(order: usize, var: Var) -> Self {
        USeries::constant(Poly::one(var), order)
    }

    /// The series whose only nonzero coefficient is `c` at `u^0`.
    pub fn constant(c: Poly, order: usize) -> Self {
        let mut s = USeries::zero(order, c.var());
        s.coeffs[0] = c;
        s
    }

    /// Builds a series from coefficients of `u^0, u^1, ...`, padding with zeros
    /// or truncating to exactly `order + 1` slots.
    pub fn from_coeffs(mut coeffs: Vec<Poly>, order: usize) -> Self {
        let var = coeffs.first().map(Poly::var).unwrap_or_default();
        coeffs.resize(order + 1, Poly::zero(var));
        USeries { coeffs }
    }

    /// `sum_n p_n u^n / n!` over the given `p_0, p_1, ...`.
    pub fn exponential(terms: &[Poly], order: usize) -> Self {
        let coeffs = terms
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, p)| p.scale(&Rat::new(1, factorial(n as u64)).expect("n! > 0")))
            .collect();
        USeries::from_coeffs(coeffs, order)
    }

    /// `exp(c * u)` truncated at `u^order`: the `u^n` coefficient is `c^n / n!`.
    pub fn exp_linear(c: &Poly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Poly::one(c.var());
        for n in 0..=order {
            if n > 0 {
                power = &power * c;
            }
            coeffs.push(power.clone());
        }
        USeries::exponential(&coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    /// Truncated Cauchy product; both factors must share the same order.
    pub fn mul(&self, rhs: &USeries) -> Result<USeries> {
        if self.order() != rhs.order() {
            return Err(Error::argument(format!(
                "series order mismatch: {} vs {}",
                self.order(),
                rhs.order()
            )));
        }
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(Poly::zero(self.coeffs[0].var()), |acc, i| {
                    acc + &self.coeffs[i] * &rhs.coeffs[n - i]
                })
            })
            .collect();
        Ok(USeries { coeffs })
    }

    /// Multiply every coefficient by the same polynomial.
    pub fn scale(&self, p: &Poly) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Index of the first `u`-coefficient at which the series differ.
    pub fn first_difference(&self, other: &USeries) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeffs.get(i) != other.coeffs.get(i))
    }

    fn zip_with(&self, rhs: &USeries, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<USeries> {
        if self.order() != rhs.order() {
            return Err(Error::argument(format!(
                "series order mismatch: {} vs {}",
                self.order(),
                rhs.order()
            )));
        }
        Ok(USeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl Add<&USeries> for &USeries {
    type Output = Result<USeries>;
    fn add(self, rhs: &USeries) -> Result<USeries> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&USeries> for &USeries {
    type Output = Result<USeries>;
    fn sub(self, rhs: &USeries) -> Result<USeries> {
        self.zip_with(rhs, |a, b| a - b)
    }
}
