use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in t, stored sparsely with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut p = IntPolynomial::zero();
        p.add_term(deg, c.into());
        p
    }

    /// From dense coefficients, lowest degree first.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = IntPolynomial::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d, c.clone().into());
        }
        p
    }

    /// 1 - t^d
    pub fn one_minus(d: usize) -> Self {
        let mut p = IntPolynomial::one();
        p.add_term(d, -BigInt::one());
        p
    }

    pub fn add_term(&mut self, deg: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(deg).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn coeff(&self, deg: usize) -> BigInt {
        self.coeffs.get(&deg).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiplies by t^d.
    pub fn shift(&self, d: usize) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|(&k, c)| (k + d, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }

    /// Exact quotient by 1 - t^d, if it divides.
    pub fn div_one_minus(&self, d: usize) -> Option<Self> {
        assert!(d >= 1);
        let Some(top) = self.degree() else {
            return Some(IntPolynomial::zero());
        };
        if top < d {
            return None;
        }
        // n_i = q_i - q_{i-d}
        let mut q = vec![BigInt::zero(); top - d + 1];
        for i in 0..q.len() {
            let prev = if i >= d { q[i - d].clone() } else { BigInt::zero() };
            q[i] = self.coeff(i) + prev;
        }
        let quotient = IntPolynomial::from_coeffs(&q);
        if &quotient * &IntPolynomial::one_minus(d) == *self {
            Some(quotient)
        } else {
            None
        }
    }

    /// Coefficients read the same from both ends (after dropping the t^low factor).
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.low_degree(), self.degree()) else {
            return true;
        };
        (lo..=hi).all(|d| self.coeff(d) == self.coeff(lo + hi - d))
    }

    /// Dense coefficients 0..=degree.
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.coeff(d)).collect(),
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, d: usize, first: bool) -> fmt::Result {
    let abs = c.abs();
    if c.is_negative() {
        write!(f, "-")?;
    } else if !first {
        write!(f, "+")?;
    }
    let show_coeff = d == 0 || !abs.is_one();
    if show_coeff {
        write!(f, "{abs}")?;
    }
    match d {
        0 => Ok(()),
        1 => write!(f, "t"),
        _ => write!(f, "t^{d}"),
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.coeffs.iter().enumerate() {
            write_monomial(f, c, d, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c)
    }

    #[test]
    fn arithmetic() {
        let a = poly(&[1, 1]);
        assert_eq!(&a * &a, poly(&[1, 2, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!(poly(&[0, 0, 3]).to_string(), "3t^2");
        assert_eq!(poly(&[1, 0, -1, 0, 2]).to_string(), "1-t^2+2t^4");
    }

    #[test]
    fn division_by_one_minus() {
        let p = &poly(&[1, 2, 3]) * &IntPolynomial::one_minus(2);
        assert_eq!(p.div_one_minus(2), Some(poly(&[1, 2, 3])));
        assert_eq!(poly(&[1, 1]).div_one_minus(1), None);
        assert_eq!(poly(&[1, 0, -1]).div_one_minus(1), Some(poly(&[1, 1])));
    }

    #[test]
    fn palindromes() {
        assert!(poly(&[1, 9, 9, 1]).is_palindromic());
        assert!(poly(&[0, 0, 6, 0, 6]).is_palindromic());
        assert!(!poly(&[1, 3, 6]).is_palindromic());
    }
}
