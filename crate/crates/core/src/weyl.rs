//! The Weyl algebra in m variables and its homogenized version: normally
//! ordered arithmetic, weight orders, initial forms, S-pairs, left division,
//! Buchberger, and standard-representation certificates.
//!
//! Plain mode has the relation d_i x_i = x_i d_i + 1; homogenized mode has
//! d_i x_i = x_i d_i + h^2 with h central. Elements are stored normally
//! ordered: every term is coeff * x^alpha d^beta h^k.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cpoly::{push_term, CPoly, VarSet};
use crate::error::{AlgError, AlgResult};
use crate::param::{ParamScalar, Rat};

#[derive(Debug, Clone, Eq)]
pub struct WeylContext {
    vars: Arc<Vec<String>>,
    homogenized: bool,
}

impl WeylContext {
    pub fn new(vars: Vec<String>, homogenized: bool) -> Self {
        WeylContext {
            vars: Arc::new(vars),
            homogenized,
        }
    }

    pub fn plain(vars: &[&str]) -> Self {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), false)
    }

    pub fn homogenized(vars: &[&str]) -> Self {
        Self::new(vars.iter().map(|s| s.to_string()).collect(), true)
    }

    pub fn m(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn is_homogenized(&self) -> bool {
        self.homogenized
    }

    pub fn to_plain(&self) -> Self {
        WeylContext {
            vars: self.vars.clone(),
            homogenized: false,
        }
    }

    pub fn to_homogenized(&self) -> Self {
        WeylContext {
            vars: self.vars.clone(),
            homogenized: true,
        }
    }
}

impl PartialEq for WeylContext {
    fn eq(&self, other: &Self) -> bool {
        self.homogenized == other.homogenized
            && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

/// Normally ordered monomial x^x d^d h^h.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylMono {
    pub x: Vec<u32>,
    pub d: Vec<u32>,
    pub h: u32,
}

impl WeylMono {
    pub fn identity(m: usize) -> Self {
        WeylMono {
            x: vec![0; m],
            d: vec![0; m],
            h: 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.d.iter().sum::<u32>() + self.h
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.h <= other.h
            && self.x.iter().zip(&other.x).all(|(a, b)| a <= b)
            && self.d.iter().zip(&other.d).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        WeylMono {
            x: self.x.iter().zip(&other.x).map(|(a, b)| *a.max(b)).collect(),
            d: self.d.iter().zip(&other.d).map(|(a, b)| *a.max(b)).collect(),
            h: self.h.max(other.h),
        }
    }

    /// self - other componentwise; caller guarantees divisibility.
    pub fn quotient_from(&self, other: &Self) -> Self {
        WeylMono {
            x: self.x.iter().zip(&other.x).map(|(a, b)| a - b).collect(),
            d: self.d.iter().zip(&other.d).map(|(a, b)| a - b).collect(),
            h: self.h - other.h,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    D(usize),
    X(usize),
    H,
}

/// One weight row: a weight for every x variable, every d variable, and h.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub x: Vec<i64>,
    pub d: Vec<i64>,
    pub h: i64,
}

impl WeightRow {
    pub fn uniform(m: usize, x: i64, d: i64) -> Self {
        WeightRow {
            x: vec![x; m],
            d: vec![d; m],
            h: 0,
        }
    }

    fn weight(&self, mono: &WeylMono) -> i128 {
        let mut acc: i128 = (self.h as i128) * (mono.h as i128);
        for (w, e) in self.x.iter().zip(&mono.x) {
            acc += (*w as i128) * (*e as i128);
        }
        for (w, e) in self.d.iter().zip(&mono.d) {
            acc += (*w as i128) * (*e as i128);
        }
        acc
    }
}

/// Weight rows refined by a lexicographic priority sweep. The sweep must list
/// every x and d symbol; h is compared last. On homogeneous elements of equal
/// total degree the h slot can never decide (if all x and d exponents tie the
/// monomials are equal), which the comparator asserts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylOrder {
    pub rows: Vec<WeightRow>,
    pub priority: Vec<Sym>,
}

impl WeylOrder {
    /// The torus-side order: weight (0,1) then (1,0), ties by the
    /// concatenated (x-exponents, d-exponents) lexicographically.
    pub fn w_order(m: usize) -> Self {
        let mut priority: Vec<Sym> = (0..m).map(Sym::X).collect();
        priority.extend((0..m).map(Sym::D));
        priority.push(Sym::H);
        WeylOrder {
            rows: vec![WeightRow::uniform(m, 0, 1), WeightRow::uniform(m, 1, 0)],
            priority,
        }
    }

    /// The homogenized-side order: weight -1 on x, +1 on d, ties
    /// lexicographically with d_1 > ... > d_m > x_1 > ... > x_m.
    pub fn km_order(m: usize) -> Self {
        let mut priority: Vec<Sym> = (0..m).map(Sym::D).collect();
        priority.extend((0..m).map(Sym::X));
        priority.push(Sym::H);
        WeylOrder {
            rows: vec![WeightRow::uniform(m, -1, 1)],
            priority,
        }
    }

    /// Pure lexicographic with d_1 > ... > d_m > x_1 > ... > x_m > h.
    /// Admissible for division: commutator corrections strictly lower the
    /// d exponents, and lex on the exponent tuples is a well-order.
    pub fn lex_order(m: usize) -> Self {
        let mut priority: Vec<Sym> = (0..m).map(Sym::D).collect();
        priority.extend((0..m).map(Sym::X));
        priority.push(Sym::H);
        WeylOrder {
            rows: Vec::new(),
            priority,
        }
    }

    pub fn cmp(&self, a: &WeylMono, b: &WeylMono) -> Ordering {
        for row in &self.rows {
            match row.weight(a).cmp(&row.weight(b)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        for sym in &self.priority {
            let (ea, eb) = match *sym {
                Sym::D(i) => (a.d[i], b.d[i]),
                Sym::X(i) => (a.x[i], b.x[i]),
                Sym::H => (a.h, b.h),
            };
            match ea.cmp(&eb) {
                Ordering::Equal => {}
                o => {
                    if matches!(sym, Sym::H) {
                        // Reaching h means every x and d exponent tied, so the
                        // two monomials must differ in total degree; equal
                        // degrees would have made them identical.
                        debug_assert_ne!(a.total_degree(), b.total_degree());
                    }
                    return o;
                }
            }
        }
        Ordering::Equal
    }

    /// Buchberger in the plain algebra needs the first weight row
    /// nonnegative on both x and d (the order is then a well-order).
    pub fn first_row_nonnegative(&self) -> bool {
        match self.rows.first() {
            None => true,
            Some(r) => r.x.iter().all(|&w| w >= 0) && r.d.iter().all(|&w| w >= 0),
        }
    }
}

/// Element of the (possibly homogenized) Weyl algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    ctx: WeylContext,
    terms: BTreeMap<WeylMono, ParamScalar>,
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - i;
    }
    num / factorial(k)
}

impl WeylElement {
    pub fn zero(ctx: &WeylContext) -> Self {
        WeylElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &WeylContext) -> Self {
        Self::constant(ctx, ParamScalar::one())
    }

    pub fn constant(ctx: &WeylContext, c: ParamScalar) -> Self {
        let mut out = Self::zero(ctx);
        out.add_term(WeylMono::identity(ctx.m()), c);
        out
    }

    pub fn from_int(ctx: &WeylContext, n: i64) -> Self {
        Self::constant(ctx, ParamScalar::from_int(n))
    }

    pub fn var(ctx: &WeylContext, i: usize) -> Self {
        assert!(i < ctx.m(), "variable index out of range");
        let mut mono = WeylMono::identity(ctx.m());
        mono.x[i] = 1;
        Self::monomial(ctx, mono, ParamScalar::one())
    }

    pub fn dvar(ctx: &WeylContext, i: usize) -> Self {
        assert!(i < ctx.m(), "derivation index out of range");
        let mut mono = WeylMono::identity(ctx.m());
        mono.d[i] = 1;
        Self::monomial(ctx, mono, ParamScalar::one())
    }

    pub fn hvar(ctx: &WeylContext) -> Self {
        assert!(ctx.is_homogenized(), "h lives in the homogenized algebra");
        let mut mono = WeylMono::identity(ctx.m());
        mono.h = 1;
        Self::monomial(ctx, mono, ParamScalar::one())
    }

    /// x_i d_i.
    pub fn theta(ctx: &WeylContext, i: usize) -> Self {
        let mut mono = WeylMono::identity(ctx.m());
        mono.x[i] = 1;
        mono.d[i] = 1;
        Self::monomial(ctx, mono, ParamScalar::one())
    }

    /// Sum of all x_i d_i.
    pub fn theta_sum(ctx: &WeylContext) -> Self {
        let mut out = Self::zero(ctx);
        for i in 0..ctx.m() {
            out = &out + &Self::theta(ctx, i);
        }
        out
    }

    pub fn monomial(ctx: &WeylContext, mono: WeylMono, c: ParamScalar) -> Self {
        assert_eq!(mono.x.len(), ctx.m());
        assert!(ctx.is_homogenized() || mono.h == 0, "h in a plain context");
        let mut out = Self::zero(ctx);
        out.add_term(mono, c);
        out
    }

    pub fn from_terms(ctx: &WeylContext, terms: Vec<(WeylMono, ParamScalar)>) -> Self {
        let mut out = Self::zero(ctx);
        for (mono, c) in terms {
            assert_eq!(mono.x.len(), ctx.m());
            assert!(ctx.is_homogenized() || mono.h == 0, "h in a plain context");
            out.add_term(mono, c);
        }
        out
    }

    pub fn ctx(&self) -> &WeylContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMono, &ParamScalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, mono: WeylMono, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
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
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgError::ContextMismatch(format!(
                "{:?} (homog {}) vs {:?} (homog {})",
                self.ctx.var_names(),
                self.ctx.is_homogenized(),
                other.ctx.var_names(),
                other.ctx.is_homogenized()
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> AlgResult<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.add_term(mono.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> AlgResult<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        WeylElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = Self::zero(&self.ctx);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k.mul_ref(c));
        }
        out
    }

    /// Normally ordered product. Per variable the reordering rule is
    /// d^n x^k = sum_j j! C(n,j) C(k,j) x^(k-j) d^(n-j) h^(2j)
    /// with h = 1 in the plain algebra.
    pub fn try_mul(&self, other: &Self) -> AlgResult<Self> {
        self.check_ctx(other)?;
        let m = self.ctx.m();
        let homog = self.ctx.is_homogenized();
        let mut out = Self::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                // expand d^(m1.d) x^(m2.x) over choices j_i per variable
                let caps: Vec<u32> = (0..m).map(|i| m1.d[i].min(m2.x[i])).collect();
                let mut j = vec![0u32; m];
                loop {
                    let mut factor = BigInt::one();
                    for i in 0..m {
                        if j[i] > 0 {
                            factor *= factorial(j[i])
                                * binomial(m1.d[i], j[i])
                                * binomial(m2.x[i], j[i]);
                        }
                    }
                    let jtot: u32 = j.iter().sum();
                    let mono = WeylMono {
                        x: (0..m).map(|i| m1.x[i] + m2.x[i] - j[i]).collect(),
                        d: (0..m).map(|i| m1.d[i] + m2.d[i] - j[i]).collect(),
                        h: m1.h + m2.h + if homog { 2 * jtot } else { 0 },
                    };
                    let coeff = c1
                        .mul_ref(c2)
                        .scale(&Rat::from_integer(factor));
                    out.add_term(mono, coeff);
                    // advance the multi-index
                    let mut i = 0;
                    loop {
                        if i == m {
                            break;
                        }
                        if j[i] < caps[i] {
                            j[i] += 1;
                            break;
                        }
                        j[i] = 0;
                        i += 1;
                    }
                    if i == m {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn leading_monomial(&self, ord: &WeylOrder) -> AlgResult<(WeylMono, ParamScalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(AlgError::ZeroElement)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Pad every term with the h power that lifts it to the maximal total
    /// degree. Input must be plain; output lives in the homogenized context.
    pub fn homogenize(&self) -> AlgResult<Self> {
        if self.ctx.is_homogenized() {
            return Err(AlgError::ContextMismatch(
                "homogenize expects a plain element".into(),
            ));
        }
        let target = self.total_degree().unwrap_or(0);
        let ctx = self.ctx.to_homogenized();
        let mut out = Self::zero(&ctx);
        for (mono, c) in &self.terms {
            let mut m2 = mono.clone();
            m2.h = target - mono.total_degree();
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// Substitute h = 1; output lives in the plain context.
    pub fn dehomogenize(&self) -> AlgResult<Self> {
        if !self.ctx.is_homogenized() {
            return Err(AlgError::ContextMismatch(
                "dehomogenize expects a homogenized element".into(),
            ));
        }
        let ctx = self.ctx.to_plain();
        let mut out = Self::zero(&ctx);
        for (mono, c) in &self.terms {
            let mut m2 = mono.clone();
            m2.h = 0;
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// True iff every normally ordered term carries x_i, i.e. the element
    /// lies in x_i * D.
    pub fn left_divisible_by_var(&self, i: usize) -> bool {
        self.terms.keys().all(|m| m.x[i] >= 1)
    }
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: Self) -> WeylElement {
        self.try_add(rhs).expect("context mismatch")
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: Self) -> WeylElement {
        self.try_sub(rhs).expect("context mismatch")
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: Self) -> WeylElement {
        self.try_mul(rhs).expect("context mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.neg_ref()
    }
}

fn fmt_weyl_mono(ctx: &WeylContext, m: &WeylMono) -> String {
    let mut parts = Vec::new();
    for (i, &p) in m.x.iter().enumerate() {
        if p == 0 {
            continue;
        }
        if p == 1 {
            parts.push(ctx.var_name(i).to_string());
        } else {
            parts.push(format!("{}^{}", ctx.var_name(i), p));
        }
    }
    for (i, &p) in m.d.iter().enumerate() {
        if p == 0 {
            continue;
        }
        let name = derivation_name(ctx.var_name(i), i);
        if p == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{p}"));
        }
    }
    if m.h == 1 {
        parts.push("h".to_string());
    } else if m.h > 1 {
        parts.push(format!("h^{}", m.h));
    }
    parts.join("*")
}

/// Derivations print as d<i> keyed by position, matching the expression
/// grammar, independent of how the base variable is spelled.
fn derivation_name(_base: &str, i: usize) -> String {
    format!("d{}", i + 1)
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        let mut first = true;
        for (mono, c) in self.terms.iter().rev() {
            push_term(&mut s, c, &fmt_weyl_mono(&self.ctx, mono), first);
            first = false;
        }
        write!(f, "{s}")
    }
}

/// The (u,v)-initial form: commutative when every u_i + v_i > 0, an operator
/// when some u_i + v_i = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitialForm {
    Symbol(CPoly),
    Operator(WeylElement),
}

/// Variable context for symbols: the x names followed by xi1..xim.
pub fn symbol_vars(ctx: &WeylContext) -> VarSet {
    let mut names: Vec<String> = ctx.var_names().to_vec();
    for i in 0..ctx.m() {
        names.push(format!("xi{}", i + 1));
    }
    VarSet::new(names)
}

/// The sum of the terms of maximal (u,v)-weight, together with that weight.
pub fn initial_form(p: &WeylElement, u: &[i64], v: &[i64]) -> AlgResult<(InitialForm, i64)> {
    let m = p.ctx().m();
    assert_eq!(u.len(), m);
    assert_eq!(v.len(), m);
    if p.ctx().is_homogenized() {
        return Err(AlgError::ContextMismatch(
            "initial forms are defined on the plain algebra".into(),
        ));
    }
    for i in 0..m {
        if u[i] + v[i] < 0 {
            return Err(AlgError::NegativeWeightSum(i));
        }
    }
    if p.is_zero() {
        return Err(AlgError::ZeroElement);
    }
    let wt = |mono: &WeylMono| -> i64 {
        let mut acc = 0i64;
        for i in 0..m {
            acc += u[i] * mono.x[i] as i64 + v[i] * mono.d[i] as i64;
        }
        acc
    };
    let ord_uv = p.terms().map(|(mono, _)| wt(mono)).max().unwrap();
    let top: Vec<(&WeylMono, &ParamScalar)> =
        p.terms().filter(|(mono, _)| wt(mono) == ord_uv).collect();
    let all_positive = (0..m).all(|i| u[i] + v[i] > 0);
    if all_positive {
        let vars = symbol_vars(p.ctx());
        let mut out = CPoly::zero(&vars);
        for (mono, c) in top {
            let mut e = vec![0u32; 2 * m];
            e[..m].copy_from_slice(&mono.x);
            e[m..].copy_from_slice(&mono.d);
            out = out
                .try_add(&CPoly::monomial(&vars, e, c.clone()))
                .expect("same context");
        }
        Ok((InitialForm::Symbol(out), ord_uv))
    } else {
        let mut out = WeylElement::zero(p.ctx());
        for (mono, c) in top {
            out.add_term(mono.clone(), c.clone());
        }
        Ok((InitialForm::Operator(out), ord_uv))
    }
}

/// Principal symbol: the (0,1)-initial form, always commutative.
pub fn principal_symbol(p: &WeylElement) -> AlgResult<CPoly> {
    let m = p.ctx().m();
    match initial_form(p, &vec![0; m], &vec![1; m])? {
        (InitialForm::Symbol(s), _) => Ok(s),
        _ => unreachable!("weights (0,1) always commute the symbol"),
    }
}

/// S-pair exactly as displayed: with in(f) = f_c * M_f and in(g) = g_c * M_g,
/// sp(f,g) = g_c * Q_f * f - f_c * Q_g * g where Q_f = lcm(M_f,M_g)/M_f.
pub fn weyl_spair(f: &WeylElement, g: &WeylElement, ord: &WeylOrder) -> AlgResult<WeylElement> {
    f.check_ctx(g)?;
    let (mf, cf) = f.leading_monomial(ord)?;
    let (mg, cg) = g.leading_monomial(ord)?;
    let lcm = mf.lcm(&mg);
    let qf = WeylElement::monomial(f.ctx(), lcm.quotient_from(&mf), cg);
    let qg = WeylElement::monomial(g.ctx(), lcm.quotient_from(&mg), cf);
    Ok(&(&qf * f) - &(&qg * g))
}

/// Left division: f = sum(q_i g_i) + r, no monomial of r divisible by any
/// leading monomial of G, in(q_i g_i) <= in(f). Reduction picks the first
/// divisor in slice order. In the homogenized algebra with a signed weight
/// row, f and G must be homogeneous (termination is then degreewise).
pub fn weyl_normal_form(
    f: &WeylElement,
    gens: &[WeylElement],
    ord: &WeylOrder,
) -> AlgResult<(WeylElement, Vec<WeylElement>)> {
    let mut leads = Vec::with_capacity(gens.len());
    for g in gens {
        f.check_ctx(g)?;
        let (mono, c) = g.leading_monomial(ord)?;
        let c = c.as_constant().ok_or_else(|| {
            AlgError::ParameterLeadingCoefficient(format!("leading coefficient {c}"))
        })?;
        if c.is_zero() {
            return Err(AlgError::ZeroElement);
        }
        leads.push((mono, c));
    }
    if f.ctx().is_homogenized() && !ord.first_row_nonnegative() {
        if !f.is_homogeneous() || gens.iter().any(|g| !g.is_homogeneous()) {
            return Err(AlgError::NonHomogeneousInput);
        }
    } else if !ord.first_row_nonnegative() {
        return Err(AlgError::InadmissibleOrder(
            "plain-algebra division needs a nonnegative first weight row".into(),
        ));
    }
    let mut p = f.clone();
    let mut r = WeylElement::zero(f.ctx());
    let mut q = vec![WeylElement::zero(f.ctx()); gens.len()];
    while !p.is_zero() {
        let (mono, coeff) = p.leading_monomial(ord)?;
        let hit = leads.iter().position(|(lm, _)| lm.divides(&mono));
        match hit {
            Some(i) => {
                let cof = WeylElement::monomial(
                    f.ctx(),
                    mono.quotient_from(&leads[i].0),
                    coeff.scale(&(Rat::one() / &leads[i].1)),
                );
                let sub = &cof * &gens[i];
                // The cancellation must hit exactly the term we picked;
                // otherwise the order is unusable for reduction here.
                let (sm, sc) = sub.leading_monomial(ord)?;
                if sm != mono || !sc.sub_ref(&coeff).is_zero() {
                    return Err(AlgError::InadmissibleOrder(
                        "cofactor product does not cancel the leading term".into(),
                    ));
                }
                q[i] = &q[i] + &cof;
                p = &p - &sub;
            }
            None => {
                r.add_term(mono.clone(), coeff);
                p.terms.remove(&mono);
            }
        }
    }
    Ok((r, q))
}

/// Buchberger for left ideals. No pair-skipping criteria: the commutative
/// coprimality shortcut is unsound here (sp(x,d) = -1 with coprime leading
/// monomials). Output extends the input, so a second run is the identity.
pub fn weyl_buchberger(gens: &[WeylElement], ord: &WeylOrder) -> AlgResult<Vec<WeylElement>> {
    let mut basis: Vec<WeylElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(basis);
    }
    let homog = basis[0].ctx().is_homogenized();
    if homog {
        if basis.iter().any(|g| !g.is_homogeneous()) {
            return Err(AlgError::NonHomogeneousInput);
        }
    } else if !ord.first_row_nonnegative() {
        return Err(AlgError::InadmissibleOrder(
            "plain-algebra Buchberger needs a nonnegative first weight row".into(),
        ));
    }
    for g in &basis {
        let (_, c) = g.leading_monomial(ord)?;
        if c.as_constant().is_none() {
            return Err(AlgError::ParameterLeadingCoefficient(format!(
                "input leading coefficient {c}"
            )));
        }
    }
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
        let s = weyl_spair(&basis[i], &basis[j], ord)?;
        if s.is_zero() {
            continue;
        }
        let (r, _) = weyl_normal_form(&s, &basis, ord)?;
        if !r.is_zero() {
            let (_, c) = r.leading_monomial(ord)?;
            if c.as_constant().is_none() {
                return Err(AlgError::ParameterLeadingCoefficient(format!(
                    "basis extension leading coefficient {c}"
                )));
            }
            let k = basis.len();
            basis.push(r);
            for t in 0..k {
                pairs.push((t, k));
            }
        }
    }
    Ok(basis)
}

/// Outcome of a standard-representation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepCertificate {
    pub holds: bool,
    /// Index of the first failing term, when the failure is the order
    /// condition; None for an equality failure or success.
    pub failing_index: Option<usize>,
    pub reason: String,
}

/// Check f = sum(cofactor_i * generator_i) exactly, and that each nonzero
/// product satisfies in(c_i g_i) <= in(f). A zero f only demands equality.
pub fn check_standard_rep(
    f: &WeylElement,
    terms: &[(WeylElement, WeylElement)],
    ord: &WeylOrder,
) -> RepCertificate {
    let mut sum = WeylElement::zero(f.ctx());
    let mut products = Vec::with_capacity(terms.len());
    for (c, g) in terms {
        let prod = c * g;
        sum = &sum + &prod;
        products.push(prod);
    }
    if &sum != f {
        let diff = f - &sum;
        return RepCertificate {
            holds: false,
            failing_index: None,
            reason: format!(
                "not an identity; difference has {} terms, e.g. {}",
                diff.term_count(),
                first_term_str(&diff)
            ),
        };
    }
    if f.is_zero() {
        return RepCertificate {
            holds: true,
            failing_index: None,
            reason: "identity holds (zero element: order condition vacuous)".into(),
        };
    }
    let (mf, _) = f.leading_monomial(ord).expect("nonzero");
    for (i, prod) in products.iter().enumerate() {
        if prod.is_zero() {
            continue;
        }
        let (mp, _) = prod.leading_monomial(ord).expect("nonzero");
        if ord.cmp(&mp, &mf) == Ordering::Greater {
            return RepCertificate {
                holds: false,
                failing_index: Some(i),
                reason: format!("term {i} leads above the target"),
            };
        }
    }
    RepCertificate {
        holds: true,
        failing_index: None,
        reason: "identity and order condition hold".into(),
    }
}

pub(crate) fn first_term_str(p: &WeylElement) -> String {
    match p.terms().next_back() {
        None => "0".into(),
        Some((mono, c)) => {
            let mono = fmt_weyl_mono(p.ctx(), mono);
            if mono.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{mono}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::rat;

    fn ctx2() -> WeylContext {
        WeylContext::plain(&["x1", "x2"])
    }

    fn hctx2() -> WeylContext {
        WeylContext::homogenized(&["x1", "x2"])
    }

    #[test]
    fn defining_relation_plain_and_homogenized() {
        let c = ctx2();
        let d1 = WeylElement::dvar(&c, 0);
        let x1 = WeylElement::var(&c, 0);
        let got = &d1 * &x1;
        let expect = &WeylElement::theta(&c, 0) + &WeylElement::one(&c);
        assert_eq!(got, expect);

        let hc = hctx2();
        let d1 = WeylElement::dvar(&hc, 0);
        let x1 = WeylElement::var(&hc, 0);
        let h = WeylElement::hvar(&hc);
        let got = &d1 * &x1;
        let expect = &WeylElement::theta(&hc, 0) + &(&h * &h);
        assert_eq!(got, expect);
    }

    #[test]
    fn theta_squared_normal_orders() {
        let c = ctx2();
        let th = WeylElement::theta(&c, 0);
        let got = &th * &th;
        // x^2 d^2 + x d
        let mut m1 = WeylMono::identity(2);
        m1.x[0] = 2;
        m1.d[0] = 2;
        let expect = &WeylElement::monomial(&c, m1, ParamScalar::one())
            + &WeylElement::theta(&c, 0);
        assert_eq!(got, expect);
    }

    #[test]
    fn product_rule_d2x2_homogenized() {
        // d^2 x^2 = x^2 d^2 + 4 h^2 x d + 2 h^4
        let hc = WeylContext::homogenized(&["x1"]);
        let d = WeylElement::dvar(&hc, 0);
        let x = WeylElement::var(&hc, 0);
        let d2 = &d * &d;
        let x2 = &x * &x;
        let got = &d2 * &x2;
        let mk = |xe: u32, de: u32, he: u32, c: i64| {
            WeylElement::monomial(
                &hc,
                WeylMono {
                    x: vec![xe],
                    d: vec![de],
                    h: he,
                },
                ParamScalar::from_int(c),
            )
        };
        let expect = &(&mk(2, 2, 0, 1) + &mk(1, 1, 2, 4)) + &mk(0, 0, 4, 2);
        assert_eq!(got, expect);
        assert!(got.is_homogeneous());
    }

    #[test]
    fn associativity_spot_check() {
        let c = ctx2();
        let p = &WeylElement::dvar(&c, 0) + &WeylElement::var(&c, 1);
        let q = &WeylElement::theta(&c, 0) + &WeylElement::dvar(&c, 1);
        let r = &WeylElement::var(&c, 0) + &WeylElement::from_int(&c, 3);
        let left = &(&p * &q) * &r;
        let right = &p * &(&q * &r);
        assert_eq!(left, right);
    }

    #[test]
    fn initial_form_simple() {
        let c = ctx2();
        // x1 d1 + 1 with weights (0,1): top part x1 xi1
        let p = &WeylElement::theta(&c, 0) + &WeylElement::one(&c);
        let (form, ord_val) = initial_form(&p, &[0, 0], &[1, 1]).unwrap();
        assert_eq!(ord_val, 1);
        match form {
            InitialForm::Symbol(s) => {
                let vars = symbol_vars(&c);
                let expect = CPoly::monomial(&vars, vec![1, 0, 1, 0], ParamScalar::one());
                assert_eq!(s, expect);
            }
            InitialForm::Operator(_) => panic!("expected a commutative symbol"),
        }
        assert!(matches!(
            initial_form(&p, &[-1, 0], &[0, 0]),
            Err(AlgError::NegativeWeightSum(0))
        ));
        // weight zero on every variable keeps the operator structure
        let (form, _) = initial_form(&p, &[0, 0], &[0, 0]).unwrap();
        assert!(matches!(form, InitialForm::Operator(_)));
    }

    #[test]
    fn leading_monomial_w_order() {
        let c = ctx2();
        // x1 + d1 under w: the d weight dominates
        let p = &WeylElement::var(&c, 0) + &WeylElement::dvar(&c, 0);
        let ord = WeylOrder::w_order(2);
        let (mono, _) = p.leading_monomial(&ord).unwrap();
        assert_eq!(mono.d[0], 1);
        assert_eq!(mono.x[0], 0);
    }

    #[test]
    fn spair_cancels_leading_terms() {
        let c = ctx2();
        let ord = WeylOrder::w_order(2);
        let f = &WeylElement::dvar(&c, 0) + &WeylElement::var(&c, 0);
        let g = &WeylElement::dvar(&c, 1) + &WeylElement::var(&c, 1);
        let s = weyl_spair(&f, &g, &ord).unwrap();
        let lcm = {
            let (mf, _) = f.leading_monomial(&ord).unwrap();
            let (mg, _) = g.leading_monomial(&ord).unwrap();
            mf.lcm(&mg)
        };
        if !s.is_zero() {
            let (ms, _) = s.leading_monomial(&ord).unwrap();
            assert_eq!(ord.cmp(&ms, &lcm), Ordering::Less);
        }
        let same = weyl_spair(&f, &f, &ord).unwrap();
        assert!(same.is_zero());
    }

    #[test]
    fn coprime_leading_monomials_do_not_commute_away() {
        // sp(x, d) = -1: the commutative product criterion would skip this
        // pair and miss that the ideal is everything.
        let c = WeylContext::plain(&["x1"]);
        let ord = WeylOrder::w_order(1);
        let x = WeylElement::var(&c, 0);
        let d = WeylElement::dvar(&c, 0);
        let s = weyl_spair(&d, &x, &ord).unwrap();
        assert_eq!(s, WeylElement::from_int(&c, -1).neg_ref().neg_ref());
        let basis = weyl_buchberger(&[x, d], &ord).unwrap();
        // the basis must contain a constant
        assert!(basis
            .iter()
            .any(|g| g.term_count() == 1 && g.terms().next().unwrap().0.total_degree() == 0));
    }

    #[test]
    fn normal_form_contract() {
        let c = ctx2();
        let ord = WeylOrder::w_order(2);
        let g1 = &WeylElement::theta(&c, 0) + &WeylElement::from_int(&c, 1);
        let g2 = WeylElement::dvar(&c, 1);
        let f = {
            let a = &WeylElement::var(&c, 0) * &g1;
            let b = &WeylElement::theta(&c, 1) * &g2;
            &(&a + &b) + &WeylElement::var(&c, 1)
        };
        let (r, q) = weyl_normal_form(&f, &[g1.clone(), g2.clone()], &ord).unwrap();
        let recomposed = &(&(&q[0] * &g1) + &(&q[1] * &g2)) + &r;
        assert_eq!(recomposed, f);
        // remainder monomials avoid both leading monomials
        let l1 = g1.leading_monomial(&ord).unwrap().0;
        let l2 = g2.leading_monomial(&ord).unwrap().0;
        for (mono, _) in r.terms() {
            assert!(!l1.divides(mono));
            assert!(!l2.divides(mono));
        }
    }

    #[test]
    fn division_by_self_and_membership() {
        let c = ctx2();
        let ord = WeylOrder::w_order(2);
        let g = &WeylElement::theta(&c, 0) + &WeylElement::var(&c, 1);
        let (r, q) = weyl_normal_form(&g, &[g.clone()], &ord).unwrap();
        assert!(r.is_zero());
        assert_eq!(q[0], WeylElement::one(&c));
    }

    #[test]
    fn parameter_leading_coefficient_rejected() {
        let c = ctx2();
        let ord = WeylOrder::w_order(2);
        let g = WeylElement::theta(&c, 0).scale(&ParamScalar::sym_a());
        let f = WeylElement::theta(&c, 0);
        assert!(matches!(
            weyl_normal_form(&f, &[g], &ord),
            Err(AlgError::ParameterLeadingCoefficient(_))
        ));
    }

    #[test]
    fn homogenize_dehomogenize_roundtrip() {
        let c = ctx2();
        // theta_1^2 - x_1: mixed degrees
        let p = &(&WeylElement::theta(&c, 0) * &WeylElement::theta(&c, 0))
            - &WeylElement::var(&c, 0);
        let ph = p.homogenize().unwrap();
        assert!(ph.is_homogeneous());
        assert_eq!(ph.dehomogenize().unwrap(), p);
        // products stay homogeneous
        let q = WeylElement::dvar(&c, 1).homogenize().unwrap();
        assert!((&ph * &q).is_homogeneous());
    }

    #[test]
    fn left_divisibility() {
        let c = ctx2();
        let x1 = WeylElement::var(&c, 0);
        let p = &(&x1 * &WeylElement::dvar(&c, 1)) + &(&x1 * &x1);
        assert!(p.left_divisible_by_var(0));
        assert!(!WeylElement::dvar(&c, 0).left_divisible_by_var(0));
    }

    #[test]
    fn display_format() {
        let c = ctx2();
        let p = &(&WeylElement::theta(&c, 0).scale(&ParamScalar::constant(rat(3, 2)))
            - &WeylElement::theta(&c, 1))
            + &WeylElement::from_int(&c, 5);
        assert_eq!(p.to_string(), "3/2*x1*d1 - x2*d2 + 5");
        let hc = hctx2();
        let q = &WeylElement::hvar(&hc) * &WeylElement::hvar(&hc);
        assert_eq!(
            q.scale(&ParamScalar::sym_a().sub_ref(&ParamScalar::sym_b()))
                .to_string(),
            "(a - b)*h^2"
        );
    }

    #[test]
    fn standard_rep_negative_case() {
        let c = ctx2();
        let ord = WeylOrder::w_order(2);
        let f = WeylElement::theta(&c, 0);
        let g = WeylElement::theta(&c, 1);
        let cert = check_standard_rep(&f, &[(WeylElement::one(&c), g)], &ord);
        assert!(!cert.holds);
    }
}
