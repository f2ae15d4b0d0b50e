//! Finite sums of monomials x^(k/2) with integer k (possibly negative),
//! stored with doubled exponents so every key is integral. Differential
//! operators with constant coefficients act exactly: d_i sends x_i^(k/2)
//! to (k/2) x_i^(k/2 - 1).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{AlgError, AlgResult};
use crate::param::Rat;
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxFn {
    m: usize,
    /// key[i] = doubled exponent of x_i
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl PuiseuxFn {
    pub fn zero(m: usize) -> Self {
        PuiseuxFn {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: Rat) -> Self {
        let mut out = Self::zero(m);
        out.add_term(vec![0; m], c);
        out
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rat::from_integer(1.into()))
    }

    /// Monomial with doubled exponents: exponent of x_i is half[i] / 2.
    pub fn monomial_half(m: usize, half: Vec<i64>, c: Rat) -> Self {
        assert_eq!(half.len(), m);
        let mut out = Self::zero(m);
        out.add_term(half, c);
        out
    }

    /// x_i
    pub fn var(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 2;
        Self::monomial_half(m, e, Rat::from_integer(1.into()))
    }

    /// x_i^(1/2)
    pub fn sqrt_var(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        Self::monomial_half(m, e, Rat::from_integer(1.into()))
    }

    fn add_term(&mut self, key: Vec<i64>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rat::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        PuiseuxFn {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let mut out = Self::zero(self.m);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let key: Vec<i64> = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
                out.add_term(key, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for PuiseuxFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &k) in key.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if k == 2 {
                    mono.push_str(&format!("x{}", i + 1));
                } else if k % 2 == 0 {
                    mono.push_str(&format!("x{}^{}", i + 1, k / 2));
                } else {
                    mono.push_str(&format!("x{}^({}/2)", i + 1, k));
                }
            }
            let (sign, mag) = if c < &Rat::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let one = Rat::from_integer(1.into());
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == one {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Apply a plain-algebra operator with constant coefficients to f.
/// Each term coeff * x^alpha d^beta acts as: differentiate by d^beta, then
/// multiply by x^alpha. Operators whose coefficients still carry symbolic
/// parameters are rejected by name.
pub fn apply_weyl(p: &WeylElement, f: &PuiseuxFn) -> AlgResult<PuiseuxFn> {
    if p.ctx().is_homogenized() {
        return Err(AlgError::ContextMismatch(
            "operators act on functions in the plain algebra".into(),
        ));
    }
    assert_eq!(p.ctx().m(), f.m);
    let mut out = PuiseuxFn::zero(f.m);
    for (mono, c) in p.terms() {
        let cr = c
            .as_constant()
            .ok_or_else(|| AlgError::MissingParameter(format!("{c}")))?;
        for (key, fc) in &f.terms {
            let mut coeff = fc * &cr;
            let mut e = key.clone();
            for i in 0..f.m {
                for _ in 0..mono.d[i] {
                    if coeff.is_zero() {
                        break;
                    }
                    coeff *= Rat::new(BigInt::from(e[i]), BigInt::from(2));
                    e[i] -= 2;
                }
                e[i] += 2 * mono.x[i] as i64;
            }
            if !coeff.is_zero() {
                out.add_term(e, coeff);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{rat, rat_int, ParamScalar};
    use crate::weyl::WeylContext;

    #[test]
    fn derivative_of_sqrt() {
        // d1 applied to x1^(1/2) = (1/2) x1^(-1/2)
        let c = WeylContext::plain(&["x1"]);
        let d = WeylElement::dvar(&c, 0);
        let f = PuiseuxFn::sqrt_var(1, 0);
        let got = apply_weyl(&d, &f).unwrap();
        assert_eq!(got, PuiseuxFn::monomial_half(1, vec![-1], rat(1, 2)));
    }

    #[test]
    fn theta_scales_half_exponent() {
        // x1 d1 on x1^(3/2): eigenvalue 3/2
        let c = WeylContext::plain(&["x1"]);
        let th = WeylElement::theta(&c, 0);
        let f = PuiseuxFn::monomial_half(1, vec![3], rat_int(1));
        let got = apply_weyl(&th, &f).unwrap();
        assert_eq!(got, f.scale(&rat(3, 2)));
    }

    #[test]
    fn derivative_kills_constants() {
        let c = WeylContext::plain(&["x1", "x2"]);
        let d = WeylElement::dvar(&c, 1);
        let f = PuiseuxFn::one(2).add(&PuiseuxFn::var(2, 0));
        assert!(apply_weyl(&d, &f).unwrap().is_zero());
    }

    #[test]
    fn linearity_and_products() {
        let c = WeylContext::plain(&["x1", "x2"]);
        let p = &WeylElement::theta(&c, 0) + &WeylElement::dvar(&c, 1);
        let f = PuiseuxFn::sqrt_var(2, 0).mul(&PuiseuxFn::sqrt_var(2, 1));
        let g = PuiseuxFn::var(2, 1);
        let lhs = apply_weyl(&p, &f.add(&g)).unwrap();
        let rhs = apply_weyl(&p, &f).unwrap().add(&apply_weyl(&p, &g).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbolic_coefficient_rejected() {
        let c = WeylContext::plain(&["x1"]);
        let p = WeylElement::theta(&c, 0).scale(&ParamScalar::sym_a());
        let f = PuiseuxFn::one(1);
        assert!(matches!(
            apply_weyl(&p, &f),
            Err(AlgError::MissingParameter(_))
        ));
    }

    #[test]
    fn display_half_exponents() {
        let f = PuiseuxFn::monomial_half(2, vec![1, 3], rat(-1, 3));
        assert_eq!(f.to_string(), "-1/3*x1^(1/2)*x2^(3/2)");
    }
}
