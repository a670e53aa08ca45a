use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use log::warn;

use super::Rat;

/// Name of the indeterminate. Advisory only: arithmetic never looks at it
/// beyond a warning when two differently labelled polynomials meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Var {
    #[default]
    T,
    Q,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
        }
    }
}

/// Dense univariate polynomial over [`Rat`].
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector is empty for the zero
/// polynomial and otherwise ends in a nonzero coefficient.
#[derive(Clone, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(coeffs: Vec<Rat>, var: Var) -> Self {
        let mut p = Poly { coeffs, var };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(Rat::one(), var)
    }

    pub fn constant(c: Rat, var: Var) -> Self {
        Poly::new(vec![c], var)
    }

    /// `c * x^deg`.
    pub fn monomial(c: Rat, deg: usize, var: Var) -> Self {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs, var }
    }

    /// The polynomial `x`.
    pub fn x(var: Var) -> Self {
        Poly::monomial(Rat::one(), 1, var)
    }

    /// `c0 + c1 * x`.
    pub fn linear(c0: Rat, c1: Rat, var: Var) -> Self {
        Poly::new(vec![c0, c1], var)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from(i as i64))
            .collect();
        Poly::new(coeffs, self.var)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            var: self.var,
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs, var: self.var }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.var);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Keep only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(len).cloned().collect(), self.var)
    }

    /// Smallest index at which the two coefficient sequences differ.
    pub fn first_difference(&self, other: &Poly) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }

    fn check_var(&self, other: &Poly) {
        if self.var != other.var && !self.is_zero() && !other.is_zero() {
            warn!(
                "combining polynomials in {} and {}",
                self.var.name(),
                other.var.name()
            );
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_var(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(coeffs, self.var)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_var(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs, self.var)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs, self.var)
    }
}

macro_rules! owned_ops {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})[", self.var.name())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Human-readable ascending form, `1 + 4*t + t^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let x = self.var.name();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 if unit => write!(f, "{x}")?,
                1 => write!(f, "*{x}")?,
                _ if unit => write!(f, "{x}^{i}")?,
                _ => write!(f, "*{x}^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(c: &[i64]) -> Poly {
        Poly::from_ints(c, Var::T)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(t(&[1, 1]) * t(&[1, -1]), t(&[1, 0, -1]));
        assert!((t(&[3, 2]) * Poly::zero(Var::T)).is_zero());
        assert_eq!(t(&[1, 4, 1]) * t(&[1, 1]), t(&[1, 5, 5, 1]));
        assert_eq!((t(&[1, 2]) * t(&[0, 0, 3])).degree(), Some(3));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(t(&[1, 4, 1]).eval(&Rat::one()), Rat::from(6));
        assert_eq!(
            Poly::zero(Var::T).eval(&Rat::new(5, 7).unwrap()),
            Rat::zero()
        );
        assert_eq!(t(&[1, 13, 4]).eval(&Rat::from(2)), Rat::from(43));
    }

    #[test]
    fn zero_is_canonical() {
        let z = t(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert!(z.coeffs().is_empty());
        assert!((t(&[1, 2]) - t(&[1, 2])).coeffs().is_empty());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        assert_eq!(Poly::from_ints(&[1, 1], Var::Q), t(&[1, 1]));
    }

    #[test]
    fn derivative_pow_shift() {
        assert_eq!(t(&[1, 4, 1]).derivative(), t(&[4, 2]));
        assert_eq!(t(&[-1, 1]).pow(3), t(&[-1, 3, -3, 1]));
        assert_eq!(t(&[5]).pow(0), t(&[1]));
        assert_eq!(t(&[1, 1]).shift(2), t(&[0, 0, 1, 1]));
        assert_eq!(t(&[1, 2, 3, 4]).truncate(2), t(&[1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(t(&[1, 4, 1]).to_string(), "1 + 4*t + t^2");
        assert_eq!(t(&[0, -1, 0, 2]).to_string(), "-t + 2*t^3");
        let half = Poly::new(vec![Rat::new(-1, 2).unwrap(), Rat::new(1, 3).unwrap()], Var::Q);
        assert_eq!(half.to_string(), "-1/2 + (1/3)*q");
        assert_eq!(Poly::zero(Var::T).to_string(), "0");
    }

    #[test]
    fn first_difference_finds_lowest() {
        assert_eq!(t(&[1, 2, 3]).first_difference(&t(&[1, 5, 4])), Some(1));
        assert_eq!(t(&[1, 2]).first_difference(&t(&[1, 2, 7])), Some(2));
        assert_eq!(t(&[1, 2]).first_difference(&t(&[1, 2])), None);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| t(&c))
    }

    proptest! {
        #[test]
        fn distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn eval_is_a_ring_map(a in small_poly(), b in small_poly(), x in -6i64..6) {
            let x = Rat::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
