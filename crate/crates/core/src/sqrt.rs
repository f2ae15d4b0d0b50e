//! Polynomials in x_1..x_m together with formal square roots t_i of the x_i.
//! Multiplication reduces t_i^2 -> x_i immediately, so every stored exponent
//! of t_i is 0 or 1. Products over sign patterns of sums of the t_i collapse
//! to honest polynomials in x when every odd power cancels.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cpoly::{CPoly, VarSet};
use crate::param::{ParamScalar, Rat};

/// Key: x exponents then t exponents (each 0/1 after reduction).
type Key = (Vec<u32>, Vec<u8>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtPoly {
    m: usize,
    terms: BTreeMap<Key, Rat>,
}

impl SqrtPoly {
    pub fn zero(m: usize) -> Self {
        SqrtPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: Rat) -> Self {
        let mut out = Self::zero(m);
        out.add_term((vec![0; m], vec![0; m]), c);
        out
    }

    pub fn one(m: usize) -> Self {
        Self::constant(m, Rat::from_integer(1.into()))
    }

    /// The root symbol t_i (0-based).
    pub fn root(m: usize, i: usize) -> Self {
        assert!(i < m);
        let mut t = vec![0u8; m];
        t[i] = 1;
        let mut out = Self::zero(m);
        out.add_term((vec![0; m], t), Rat::from_integer(1.into()));
        out
    }

    pub fn var(m: usize, i: usize) -> Self {
        assert!(i < m);
        let mut x = vec![0u32; m];
        x[i] = 1;
        let mut out = Self::zero(m);
        out.add_term((x, vec![0; m]), Rat::from_integer(1.into()));
        out
    }

    fn add_term(&mut self, key: Key, c: Rat) {
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

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        SqrtPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let mut out = Self::zero(self.m);
        for ((x1, t1), c1) in &self.terms {
            for ((x2, t2), c2) in &other.terms {
                let mut x: Vec<u32> = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                let mut t = vec![0u8; self.m];
                for i in 0..self.m {
                    let s = t1[i] + t2[i];
                    // t_i^2 = x_i
                    x[i] += (s / 2) as u32;
                    t[i] = s % 2;
                }
                out.add_term((x, t), c1 * c2);
            }
        }
        out
    }

    /// True when no term carries an unreduced root symbol.
    pub fn is_root_free(&self) -> bool {
        self.terms.keys().all(|(_, t)| t.iter().all(|&b| b == 0))
    }

    /// Extract an ordinary polynomial; None if a root symbol survives.
    pub fn to_cpoly(&self, vars: &VarSet) -> Option<CPoly> {
        assert_eq!(vars.len(), self.m);
        if !self.is_root_free() {
            return None;
        }
        let mut out = CPoly::zero(vars);
        for ((x, _), c) in &self.terms {
            out = out
                .try_add(&CPoly::monomial(
                    vars,
                    x.clone(),
                    ParamScalar::constant(c.clone()),
                ))
                .expect("same context");
        }
        Some(out)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }
}
