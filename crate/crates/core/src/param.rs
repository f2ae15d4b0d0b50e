//! Exact scalars: arbitrary-precision rationals, possibly polynomial in the
//! symbolic parameters a, b, c1, c2, ...
//!
//! Exponent keys run over the slots (a, b, c1, c2, ...) with trailing zeros
//! trimmed, so a scalar built for two c-parameters combines freely with one
//! built for four.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgError, AlgResult};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "p", "-p", "p/q" into an exact rational.
pub fn parse_rat(s: &str) -> AlgResult<Rat> {
    let s = s.trim();
    let bad = |m: &str| AlgError::Syntax {
        offset: 0,
        message: format!("{m}: {s:?}"),
    };
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad("bad integer"))?;
        Ok(Rat::from_integer(n))
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Concrete values for the parameters: a, b, and c1..cm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamValues {
    pub a: Rat,
    pub b: Rat,
    pub c: Vec<Rat>,
}

impl ParamValues {
    pub fn new(a: Rat, b: Rat, c: Vec<Rat>) -> Self {
        ParamValues { a, b, c }
    }

    fn slot(&self, idx: usize) -> AlgResult<&Rat> {
        match idx {
            0 => Ok(&self.a),
            1 => Ok(&self.b),
            k => self
                .c
                .get(k - 2)
                .ok_or_else(|| AlgError::MissingParameter(format!("c{}", k - 1))),
        }
    }
}

fn slot_name(idx: usize) -> String {
    match idx {
        0 => "a".to_string(),
        1 => "b".to_string(),
        k => format!("c{}", k - 1),
    }
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

/// Polynomial in the parameters with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero; exponent vectors carry no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamScalar {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl ParamScalar {
    pub fn zero() -> Self {
        ParamScalar {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Vec::new(), r);
        }
        ParamScalar { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat_int(n))
    }

    /// The symbol a.
    pub fn sym_a() -> Self {
        Self::slot_sym(0)
    }

    /// The symbol b.
    pub fn sym_b() -> Self {
        Self::slot_sym(1)
    }

    /// The symbol c_i, 1-based.
    pub fn sym_c(i: usize) -> Self {
        assert!(i >= 1, "c index is 1-based");
        Self::slot_sym(i + 1)
    }

    fn slot_sym(idx: usize) -> Self {
        let mut e = vec![0u32; idx + 1];
        e[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, Rat::one());
        ParamScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |r| r.is_one())
    }

    /// Some(r) when the scalar is a plain rational (possibly zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (e, r) = self.terms.iter().next().unwrap();
                if e.is_empty() {
                    Some(r.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, Rat>, e: Vec<u32>, r: Rat) {
        if r.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(r);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + r;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, r) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), r.clone());
        }
        ParamScalar { terms }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        ParamScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, r)| (e.clone(), -r.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (e1, r1) in &self.terms {
            for (e2, r2) in &other.terms {
                let n = e1.len().max(e2.len());
                let mut e = vec![0u32; n];
                for (k, slot) in e.iter_mut().enumerate() {
                    *slot = e1.get(k).copied().unwrap_or(0) + e2.get(k).copied().unwrap_or(0);
                }
                Self::insert_term(&mut terms, trim(e), r1 * r2);
            }
        }
        ParamScalar { terms }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        ParamScalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * r))
                .collect(),
        }
    }

    /// Substitute concrete parameter values.
    pub fn specialize(&self, vals: &ParamValues) -> AlgResult<Rat> {
        let mut acc = Rat::zero();
        for (e, r) in &self.terms {
            let mut prod = r.clone();
            for (idx, &pow) in e.iter().enumerate() {
                if pow == 0 {
                    continue;
                }
                let v = vals.slot(idx)?;
                for _ in 0..pow {
                    prod *= v;
                }
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// Number of monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }
}

impl Add for &ParamScalar {
    type Output = ParamScalar;
    fn add(self, rhs: Self) -> ParamScalar {
        self.add_ref(rhs)
    }
}

impl Sub for &ParamScalar {
    type Output = ParamScalar;
    fn sub(self, rhs: Self) -> ParamScalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &ParamScalar {
    type Output = ParamScalar;
    fn mul(self, rhs: Self) -> ParamScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        self.neg_ref()
    }
}

fn fmt_mono(e: &[u32]) -> String {
    let mut parts = Vec::new();
    for (idx, &pow) in e.iter().enumerate() {
        if pow == 0 {
            continue;
        }
        let name = slot_name(idx);
        if pow == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{pow}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest monomial first reads more naturally.
        for (e, r) in self.terms.iter().rev() {
            let mono = fmt_mono(e);
            let abs = fmt_rat(&r.abs());
            let neg = r.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if r.abs().is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        assert_eq!(parse_rat("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rat("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-1/2").unwrap(), rat(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
        assert_eq!(fmt_rat(&rat(-1, 3)), "-1/3");
    }

    #[test]
    fn scalar_ring_basics() {
        let a = ParamScalar::sym_a();
        let b = ParamScalar::sym_b();
        let two = ParamScalar::from_int(2);
        // (a + b)^2 = a^2 + 2ab + b^2
        let s = a.add_ref(&b);
        let sq = s.mul_ref(&s);
        let expect = a
            .mul_ref(&a)
            .add_ref(&two.mul_ref(&a).mul_ref(&b))
            .add_ref(&b.mul_ref(&b));
        assert_eq!(sq, expect);
        // a - a = 0
        assert!(a.sub_ref(&a).is_zero());
        assert!(a.sub_ref(&a).as_constant().unwrap().is_zero());
    }

    #[test]
    fn scalar_cross_width_composition() {
        // c3 only exists for m >= 3, but it must combine with a scalar
        // created without any c at all.
        let c3 = ParamScalar::sym_c(3);
        let a = ParamScalar::sym_a();
        let p = c3.mul_ref(&a);
        let vals = ParamValues::new(rat_int(2), rat_int(0), vec![rat_int(5), rat_int(7), rat(1, 3)]);
        assert_eq!(p.specialize(&vals).unwrap(), rat(2, 3));
    }

    #[test]
    fn specialize_missing_parameter() {
        let c2 = ParamScalar::sym_c(2);
        let vals = ParamValues::new(rat_int(0), rat_int(0), vec![rat_int(1)]);
        assert!(matches!(
            c2.specialize(&vals),
            Err(AlgError::MissingParameter(_))
        ));
    }

    #[test]
    fn display_is_readable() {
        let s = ParamScalar::sym_a()
            .mul_ref(&ParamScalar::sym_a())
            .scale(&rat(3, 2))
            .sub_ref(&ParamScalar::sym_c(1))
            .add_ref(&ParamScalar::from_int(5));
        assert_eq!(s.to_string(), "3/2*a^2 - c1 + 5");
        assert_eq!(ParamScalar::zero().to_string(), "0");
    }
}
