use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use stanley_core::{Error, Result};

use crate::poly::IntPolynomial;

/// N(t) / Π (1 - t^d)^e with integer numerator.
#[derive(Debug, Clone, Default)]
pub struct RationalSeries {
    numerator: IntPolynomial,
    /// d -> e, with d >= 1 and e >= 1.
    denominator: BTreeMap<usize, u32>,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, factors: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut denominator = BTreeMap::new();
        for (d, e) in factors {
            if d == 0 {
                return Err(Error::domain("denominator factor 1 - t^0 vanishes"));
            }
            if e > 0 {
                *denominator.entry(d).or_insert(0) += e;
            }
        }
        Ok(RationalSeries { numerator, denominator })
    }

    pub fn zero() -> Self {
        RationalSeries::default()
    }

    pub fn one() -> Self {
        Self::polynomial(IntPolynomial::one())
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalSeries { numerator: p, denominator: BTreeMap::new() }
    }

    /// c · t^shift / (1 - t^d)^e
    pub fn term(c: impl Into<BigInt>, shift: usize, d: usize, e: u32) -> Self {
        let mut denominator = BTreeMap::new();
        if e > 0 {
            denominator.insert(d.max(1), e);
        }
        RationalSeries { numerator: IntPolynomial::monomial(c, shift), denominator }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Factors (d, e) sorted by d.
    pub fn denominator(&self) -> Vec<(usize, u32)> {
        self.denominator.iter().map(|(&d, &e)| (d, e)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn denominator_poly(&self) -> IntPolynomial {
        self.denominator
            .iter()
            .fold(IntPolynomial::one(), |acc, (&d, &e)| &acc * &IntPolynomial::one_minus(d).pow(e))
    }

    /// Rewrites over a larger denominator; `target` must dominate factor-wise.
    fn lift(&self, target: &BTreeMap<usize, u32>) -> IntPolynomial {
        let mut num = self.numerator.clone();
        for (&d, &e) in target {
            let have = self.denominator.get(&d).copied().unwrap_or(0);
            if e > have {
                num = &num * &IntPolynomial::one_minus(d).pow(e - have);
            }
        }
        num
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut common = self.denominator.clone();
        for (&d, &e) in &other.denominator {
            let slot = common.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let numerator = &self.lift(&common) + &other.lift(&common);
        RationalSeries { numerator, denominator: common }
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let mut denominator = self.denominator.clone();
        for (&d, &e) in &other.denominator {
            *denominator.entry(d).or_insert(0) += e;
        }
        RationalSeries { numerator: &self.numerator * &other.numerator, denominator }
    }

    pub fn scale(&self, c: &BigInt) -> RationalSeries {
        RationalSeries { numerator: self.numerator.scale(c), denominator: self.denominator.clone() }
    }

    /// Multiplies by t^d.
    pub fn shift(&self, d: usize) -> RationalSeries {
        RationalSeries { numerator: self.numerator.shift(d), denominator: self.denominator.clone() }
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a RationalSeries>) -> RationalSeries {
        items.into_iter().fold(RationalSeries::zero(), |acc, s| acc.add(s))
    }

    /// Cancels common (1 - t^d) content, largest d first.
    pub fn reduce(&self) -> RationalSeries {
        if self.numerator.is_zero() {
            return RationalSeries::zero();
        }
        let mut num = self.numerator.clone();
        let mut den = self.denominator.clone();
        let ds: Vec<usize> = den.keys().rev().copied().collect();
        for d in ds {
            while den[&d] > 0 {
                match num.div_one_minus(d) {
                    Some(q) => {
                        num = q;
                        *den.get_mut(&d).expect("present") -= 1;
                    }
                    None => break,
                }
            }
        }
        den.retain(|_, e| *e > 0);
        RationalSeries { numerator: num, denominator: den }
    }

    /// Taylor coefficients of degrees 0..=up_to.
    pub fn expand(&self, up_to: usize) -> Vec<BigInt> {
        let len = up_to + 1;
        let mut c = vec![BigInt::zero(); len];
        for (d, v) in self.numerator.terms() {
            if d < len {
                c[d] += v;
            }
        }
        for (&d, &e) in &self.denominator {
            for _ in 0..e {
                // multiply by 1/(1 - t^d): running sum with stride d
                for i in d..len {
                    let prev = c[i - d].clone();
                    c[i] += prev;
                }
            }
        }
        c
    }

    /// Total pole order at t = 1 before any cancellation.
    pub fn pole_order(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn to_json(&self, reduced: bool) -> SeriesJson {
        let s = if reduced { self.reduce() } else { self.clone() };
        SeriesJson {
            numerator: s.numerator.terms().map(|(d, c)| (d.to_string(), c.to_string())).collect(),
            denominator: s.denominator().into_iter().map(|(d, e)| DenominatorFactor { d, e }).collect(),
            reduced,
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self> {
        let mut num = IntPolynomial::zero();
        for (d, c) in &json.numerator {
            let d: usize = d.parse().map_err(|_| Error::domain(format!("bad degree {d:?}")))?;
            let c: BigInt = c.parse().map_err(|_| Error::domain(format!("bad coefficient {c:?}")))?;
            num.add_term(d, c);
        }
        RationalSeries::new(num, json.denominator.iter().map(|f| (f.d, f.e)))
    }
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator_poly() == &other.numerator * &self.denominator_poly()
    }
}

impl Eq for RationalSeries {}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi_term = self.numerator.terms().count() > 1;
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        if multi_term {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, "/")?;
        for (&d, &e) in &self.denominator {
            let base = if d == 1 { "1-t".to_string() } else { format!("1-t^{d}") };
            if e == 1 {
                write!(f, "({base})")?;
            } else {
                write!(f, "({base})^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenominatorFactor {
    pub d: usize,
    pub e: u32,
}

/// Serialized form: numerator keyed by degree, coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub numerator: BTreeMap<String, String>,
    pub denominator: Vec<DenominatorFactor>,
    pub reduced: bool,
}

/// Numerator at t = 1 once every removable (1 - t^d) factor is cancelled.
pub fn bernstein_degree(s: &RationalSeries) -> Result<BigInt> {
    if s.is_zero() {
        return Err(Error::domain("the zero series has no degree"));
    }
    let r = s.reduce();
    if r.denominator.is_empty() {
        return Err(Error::domain("series is a polynomial, no pole at t=1"));
    }
    let value = r.numerator.eval_one();
    if value.is_zero() {
        return Err(Error::domain(format!("numerator of {r} still vanishes at t=1")));
    }
    Ok(value)
}

/// Palindromic numerator in reduced form.
pub fn gorenstein_check(s: &RationalSeries) -> bool {
    s.reduce().numerator.is_palindromic()
}
