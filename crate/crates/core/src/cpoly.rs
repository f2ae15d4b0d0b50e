//! Sparse commutative multivariate polynomials over ParamScalar, weight-plus-lex
//! monomial orders, division with quotient certificates, and Buchberger.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{AlgError, AlgResult};
use crate::param::{fmt_rat, ParamScalar, ParamValues, Rat};

/// Shared, immutable list of variable names defining a polynomial context.
#[derive(Debug, Clone, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Self {
        VarSet {
            names: Arc::new(names),
        }
    }

    pub fn of(names: &[&str]) -> Self {
        Self::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

pub fn mono_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// b - a, assuming a divides b.
pub fn mono_sub(b: &[u32], a: &[u32]) -> Vec<u32> {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

/// Term order given by weight rows compared first, then a lexicographic
/// sweep over `priority` (higher exponent at the first differing slot wins).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    rows: Vec<Vec<i64>>,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            rows: Vec::new(),
            priority: (0..n).collect(),
        }
    }

    pub fn grlex(n: usize) -> Self {
        MonomialOrder {
            rows: vec![vec![1; n]],
            priority: (0..n).collect(),
        }
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::degrevlex_with_priority((0..n).collect())
    }

    /// Graded reverse lexicographic where `cheapest` is scanned last in the
    /// revlex direction (used for single-variable saturation).
    pub fn degrevlex_cheapest_last(n: usize, cheapest: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).filter(|&i| i != cheapest).collect();
        perm.push(cheapest);
        Self::degrevlex_with_priority(perm)
    }

    /// perm lists the variables from most to least significant; the revlex
    /// scan drops them from the cheap end, encoded as nested weight rows.
    pub fn degrevlex_with_priority(perm: Vec<usize>) -> Self {
        let n = perm.len();
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            let mut row = vec![0i64; n];
            for &v in &perm[..n - k] {
                row[v] = 1;
            }
            rows.push(row);
        }
        MonomialOrder {
            rows,
            priority: perm,
        }
    }

    /// Prepend one weight row to an existing order (the row decides first).
    pub fn with_weight_row(w: Vec<i64>, base: &MonomialOrder) -> Self {
        let mut rows = vec![w];
        rows.extend(base.rows.iter().cloned());
        MonomialOrder {
            rows,
            priority: base.priority.clone(),
        }
    }

    fn weight(row: &[i64], e: &[u32]) -> i128 {
        row.iter()
            .zip(e)
            .map(|(w, x)| (*w as i128) * (*x as i128))
            .sum()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for row in &self.rows {
            match Self::weight(row, a).cmp(&Self::weight(row, b)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for &i in &self.priority {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// A term order must put every variable above 1: the first nonzero
    /// weight each variable sees has to be positive (the lex sweep handles
    /// variables with all-zero weights).
    pub fn check_admissible(&self, n: usize) -> AlgResult<()> {
        for i in 0..n {
            let sig = self.rows.iter().map(|r| r[i]).find(|&w| w != 0);
            match sig {
                Some(w) if w > 0 => {}
                Some(_) => {
                    return Err(AlgError::InadmissibleOrder(format!(
                        "variable {i} has negative first weight"
                    )))
                }
                None => {
                    if !self.priority.contains(&i) {
                        return Err(AlgError::InadmissibleOrder(format!(
                            "variable {i} is unordered"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sparse polynomial; every stored coefficient is a nonzero ParamScalar and
/// every key has exactly `vars.len()` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoly {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, ParamScalar>,
}

impl CPoly {
    pub fn zero(vars: &VarSet) -> Self {
        CPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, ParamScalar::one())
    }

    pub fn constant(vars: &VarSet, c: ParamScalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, ParamScalar::one())
    }

    pub fn monomial(vars: &VarSet, e: Vec<u32>, c: ParamScalar) -> Self {
        assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
        let mut p = Self::zero(vars);
        p.add_term(e, c);
        p
    }

    pub fn from_terms(vars: &VarSet, terms: Vec<(Vec<u32>, ParamScalar)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> ParamScalar {
        self.terms.get(e).cloned().unwrap_or_else(ParamScalar::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_ctx(&self, other: &Self) -> AlgResult<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgError::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.vars.names(),
                other.vars.names()
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> AlgResult<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> AlgResult<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        CPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> AlgResult<Self> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(mono_add(e1, e2), c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), k.mul_ref(c));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&ParamScalar::constant(r.clone()))
    }

    pub fn mul_monomial(&self, e: &[u32], c: &ParamScalar) -> Self {
        let mut out = Self::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e1, c1) in &self.terms {
            out.add_term(mono_add(e1, e), c1.mul_ref(c));
        }
        out
    }

    pub fn leading(&self, ord: &MonomialOrder) -> Option<(&Vec<u32>, &ParamScalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Largest k with var^k dividing every term (0 for the zero polynomial).
    pub fn min_var_power(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    /// Exact division by var^k; panics if some term lacks the factor.
    pub fn divide_by_var_power(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            assert!(e[var] >= k, "term not divisible by variable power");
            let mut e2 = e.clone();
            e2[var] -= k;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact division by a monomial; error if some term is not divisible.
    pub fn divide_by_monomial(&self, e: &[u32]) -> AlgResult<Self> {
        let mut out = Self::zero(&self.vars);
        for (t, c) in &self.terms {
            if !mono_divides(e, t) {
                return Err(AlgError::ZeroElement);
            }
            out.add_term(mono_sub(t, e), c.clone());
        }
        Ok(out)
    }

    pub fn specialize(&self, vals: &ParamValues) -> AlgResult<Self> {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let r = c.specialize(vals)?;
            out.add_term(e.clone(), ParamScalar::constant(r));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rat], vals: &ParamValues) -> AlgResult<Rat> {
        if point.len() != self.vars.len() {
            return Err(AlgError::IndexOutOfRange(format!(
                "point has {} coordinates, context has {}",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut v = c.specialize(vals)?;
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }
}

impl Add for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: Self) -> CPoly {
        self.try_add(rhs).expect("context mismatch")
    }
}

impl Sub for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: Self) -> CPoly {
        self.try_sub(rhs).expect("context mismatch")
    }
}

impl Mul for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: Self) -> CPoly {
        self.try_mul(rhs).expect("context mismatch")
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        self.neg_ref()
    }
}

pub fn fmt_monomial(vars: &VarSet, e: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        if p == 1 {
            parts.push(vars.name(i).to_string());
        } else {
            parts.push(format!("{}^{}", vars.name(i), p));
        }
    }
    parts.join("*")
}

/// Append one formatted term, reusing the same sign conventions for CPoly and
/// Weyl element display so the CLI grammar round-trips both.
pub(crate) fn push_term(out: &mut String, coeff: &ParamScalar, mono: &str, first: bool) {
    if let Some(r) = coeff.as_constant() {
        let neg = r.is_negative();
        if first {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = r.abs();
        if mono.is_empty() {
            out.push_str(&fmt_rat(&a));
        } else if a.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&fmt_rat(&a));
            out.push('*');
            out.push_str(mono);
        }
    } else {
        if !first {
            out.push_str(" + ");
        }
        out.push('(');
        out.push_str(&coeff.to_string());
        out.push(')');
        if !mono.is_empty() {
            out.push('*');
            out.push_str(mono);
        }
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            push_term(&mut s, c, &fmt_monomial(&self.vars, e), first);
            first = false;
        }
        write!(f, "{s}")
    }
}

/// Multivariate division: f = sum(q_i g_i) + r with no monomial of r
/// divisible by any leading monomial of G, and in(q_i g_i) <= in(f).
/// Divisor choice is the first divisible g in slice order.
pub fn cpoly_normal_form(
    f: &CPoly,
    gens: &[CPoly],
    ord: &MonomialOrder,
) -> AlgResult<(CPoly, Vec<CPoly>)> {
    ord.check_admissible(f.vars.len())?;
    let mut leads = Vec::with_capacity(gens.len());
    for g in gens {
        f.check_ctx(g)?;
        let (e, c) = g.leading(ord).ok_or(AlgError::ZeroElement)?;
        let c = c.as_constant().ok_or_else(|| {
            AlgError::ParameterLeadingCoefficient(format!("leading coefficient {c}"))
        })?;
        leads.push((e.clone(), c));
    }
    let mut p = f.clone();
    let mut r = CPoly::zero(&f.vars);
    let mut q = vec![CPoly::zero(&f.vars); gens.len()];
    while let Some((e, c)) = p.leading(ord).map(|(e, c)| (e.clone(), c.clone())) {
        let hit = leads.iter().position(|(le, _)| mono_divides(le, &e));
        match hit {
            Some(i) => {
                let factor = c.scale(&(Rat::one() / &leads[i].1));
                let shift = mono_sub(&e, &leads[i].0);
                q[i].add_term(shift.clone(), factor.clone());
                let sub = gens[i].mul_monomial(&shift, &factor);
                p = &p - &sub;
            }
            None => {
                r.add_term(e.clone(), c.clone());
                p.terms.remove(&e);
            }
        }
    }
    Ok((r, q))
}

/// Monic S-polynomial; both leading coefficients must be parameter-free.
pub fn cpoly_spoly(f: &CPoly, g: &CPoly, ord: &MonomialOrder) -> AlgResult<CPoly> {
    f.check_ctx(g)?;
    let (ef, cf) = f.leading(ord).ok_or(AlgError::ZeroElement)?;
    let (eg, cg) = g.leading(ord).ok_or(AlgError::ZeroElement)?;
    let cf = cf.as_constant().ok_or_else(|| {
        AlgError::ParameterLeadingCoefficient("s-polynomial leading coefficient".into())
    })?;
    let cg = cg.as_constant().ok_or_else(|| {
        AlgError::ParameterLeadingCoefficient("s-polynomial leading coefficient".into())
    })?;
    let lcm = mono_lcm(ef, eg);
    let a = f.mul_monomial(
        &mono_sub(&lcm, ef),
        &ParamScalar::constant(Rat::one() / cf),
    );
    let b = g.mul_monomial(
        &mono_sub(&lcm, eg),
        &ParamScalar::constant(Rat::one() / cg),
    );
    Ok(&a - &b)
}

/// Buchberger with the coprime-leading-monomial skip (valid in a commutative
/// ring), followed by interreduction to the reduced basis, monic, sorted with
/// the largest leading monomial first.
pub fn cpoly_buchberger(gens: &[CPoly], ord: &MonomialOrder) -> AlgResult<Vec<CPoly>> {
    let nonzero: Vec<CPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    ord.check_admissible(nonzero[0].vars.len())?;
    let mut basis = nonzero;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    let mut head = 0;
    while head < pairs.len() {
        let (i, j) = pairs[head];
        head += 1;
        let (ei, _) = basis[i].leading(ord).unwrap();
        let (ej, _) = basis[j].leading(ord).unwrap();
        if mono_lcm(ei, ej) == mono_add(ei, ej) {
            continue;
        }
        let s = cpoly_spoly(&basis[i], &basis[j], ord)?;
        let (r, _) = cpoly_normal_form(&s, &basis, ord)?;
        if !r.is_zero() {
            let (_, lc) = r.leading(ord).unwrap();
            if lc.as_constant().is_none() {
                return Err(AlgError::ParameterLeadingCoefficient(format!(
                    "basis extension has leading coefficient {lc}"
                )));
            }
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                pairs.push((t, k));
            }
        }
    }
    // Minimal generators: drop any element whose leading monomial is
    // divisible by another surviving one.
    let lead: Vec<Vec<u32>> = basis
        .iter()
        .map(|g| g.leading(ord).unwrap().0.clone())
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] && mono_divides(&lead[j], &lead[i]) {
                // Prefer the later-discovered smaller monomial; on exact tie
                // drop the later duplicate.
                if lead[i] == lead[j] && i < j {
                    keep[j] = false;
                } else {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<CPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // Tail-reduce each against the others and normalize to leading
    // coefficient 1.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<CPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        let (r, _) = cpoly_normal_form(&minimal[i], &others, ord)?;
        let lc = r
            .leading(ord)
            .ok_or(AlgError::ZeroElement)?
            .1
            .as_constant()
            .ok_or_else(|| {
                AlgError::ParameterLeadingCoefficient("reduced basis element".into())
            })?;
        reduced.push(r.scale_rat(&(Rat::one() / lc)));
    }
    reduced.sort_by(|a, b| {
        let ea = a.leading(ord).unwrap().0;
        let eb = b.leading(ord).unwrap().0;
        ord.cmp(eb, ea)
    });
    Ok(reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::rat_int;

    fn xy() -> VarSet {
        VarSet::of(&["x", "y"])
    }

    fn p(vars: &VarSet, terms: &[(&[u32], i64)]) -> CPoly {
        CPoly::from_terms(
            vars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), ParamScalar::from_int(*c)))
                .collect(),
        )
    }

    #[test]
    fn order_comparisons() {
        let lex = MonomialOrder::lex(2);
        assert_eq!(lex.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        let drl = MonomialOrder::degrevlex(3);
        // equal degree: x2^2 beats x1*x3 in degrevlex
        assert_eq!(drl.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(drl.cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        // with x1 cheapest, x2 and x3 outrank it
        let cheap = MonomialOrder::degrevlex_cheapest_last(3, 0);
        assert_eq!(cheap.cmp(&[2, 0, 0], &[0, 1, 1]), Ordering::Less);
        assert!(drl.check_admissible(3).is_ok());
        let bad = MonomialOrder::with_weight_row(vec![-1, 0], &MonomialOrder::lex(2));
        assert!(bad.check_admissible(2).is_err());
    }

    #[test]
    fn normal_form_linear_factor() {
        let v = VarSet::of(&["x"]);
        let f = p(&v, &[(&[2], 1), (&[0], -1)]);
        let g = p(&v, &[(&[1], 1), (&[0], -1)]);
        let ord = MonomialOrder::lex(1);
        let (r, q) = cpoly_normal_form(&f, &[g.clone()], &ord).unwrap();
        assert!(r.is_zero());
        // quotient x + 1 certifies f = (x+1) g
        assert_eq!(q[0], p(&v, &[(&[1], 1), (&[0], 1)]));
        let recomposed = &(&q[0] * &g) + &r;
        assert_eq!(recomposed, f);
    }

    #[test]
    fn normal_form_no_divisible_monomial() {
        let v = xy();
        let f = p(&v, &[(&[1, 0], 1)]);
        let g = p(&v, &[(&[0, 1], 1)]);
        let ord = MonomialOrder::lex(2);
        let (r, _) = cpoly_normal_form(&f, &[g], &ord).unwrap();
        assert_eq!(r, f);
    }

    #[test]
    fn normal_form_rejects_parameter_leading_coefficient() {
        let v = VarSet::of(&["x"]);
        let g = CPoly::monomial(&v, vec![1], ParamScalar::sym_a());
        let f = p(&v, &[(&[2], 1)]);
        let ord = MonomialOrder::lex(1);
        assert!(matches!(
            cpoly_normal_form(&f, &[g], &ord),
            Err(AlgError::ParameterLeadingCoefficient(_))
        ));
    }

    #[test]
    fn buchberger_two_generators_already_reduced() {
        let v = xy();
        let g1 = p(&v, &[(&[2, 0], 1), (&[0, 1], -1)]);
        let g2 = p(&v, &[(&[0, 2], 1), (&[0, 0], -1)]);
        let ord = MonomialOrder::lex(2);
        let gb = cpoly_buchberger(&[g1.clone(), g2.clone()], &ord).unwrap();
        assert_eq!(gb, vec![g1.clone(), g2.clone()]);
        // every S-polynomial of the output reduces to zero
        let s = cpoly_spoly(&g1, &g2, &ord).unwrap();
        let (r, _) = cpoly_normal_form(&s, &gb, &ord).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn buchberger_single_generator() {
        let v = VarSet::of(&["x"]);
        let g = p(&v, &[(&[1], 1)]);
        let ord = MonomialOrder::lex(1);
        assert_eq!(cpoly_buchberger(&[g.clone()], &ord).unwrap(), vec![g]);
    }

    #[test]
    fn buchberger_finds_new_element() {
        // <x y - 1, y^2 - 1> under lex x>y needs x - y.
        let v = xy();
        let g1 = p(&v, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let g2 = p(&v, &[(&[0, 2], 1), (&[0, 0], -1)]);
        let ord = MonomialOrder::lex(2);
        let gb = cpoly_buchberger(&[g1, g2], &ord).unwrap();
        let lead: Vec<Vec<u32>> = gb
            .iter()
            .map(|g| g.leading(&ord).unwrap().0.clone())
            .collect();
        assert!(lead.contains(&vec![1, 0]));
        assert!(lead.contains(&vec![0, 2]));
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn eval_and_specialize() {
        let v = xy();
        let f = CPoly::from_terms(
            &v,
            vec![
                (vec![1, 0], ParamScalar::sym_a()),
                (vec![0, 1], ParamScalar::from_int(2)),
            ],
        );
        let vals = ParamValues::new(rat_int(3), rat_int(0), vec![]);
        let s = f.specialize(&vals).unwrap();
        assert_eq!(
            s,
            p(&v, &[(&[1, 0], 3), (&[0, 1], 2)])
        );
        let value = f.eval(&[rat_int(1), rat_int(5)], &vals).unwrap();
        assert_eq!(value, rat_int(13));
    }

    #[test]
    fn display_round_readable() {
        let v = xy();
        let f = CPoly::from_terms(
            &v,
            vec![
                (vec![2, 0], ParamScalar::from_int(1)),
                (vec![1, 1], ParamScalar::sym_a().sub_ref(&ParamScalar::sym_b())),
                (vec![0, 0], ParamScalar::from_int(-5)),
            ],
        );
        assert_eq!(f.to_string(), "x^2 + (a - b)*x*y - 5");
    }
}
