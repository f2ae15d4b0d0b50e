//! Surface grammar for operator expressions and the matching printer.
//!
//! Atoms: `x<i>`, `y<i>`, `d<i>` (the i-th partial derivative), `h`,
//! the parameter symbols `a`, `b`, `c<i>`, and rational literals `p/q`.
//! Operators `+ - * ^` with parentheses; multiplication is the
//! noncommutative product, applied left to right; exponents are
//! nonnegative integers. Juxtaposition is not multiplication: `x1 x2`
//! is a syntax error. A leading `-` (also directly after `(`) negates.
//!
//! The variable chart is inferred: `y<i>` atoms select the y chart,
//! `x<i>` the x chart, and the two may not mix; an `h` atom selects the
//! homogenized algebra. The variable count is the largest index seen.
//! Both can instead be pinned through `ParseOptions`.

use lauricella_core::param::{parse_rat, ParamScalar, Rat};
use lauricella_core::weyl::{WeylContext, WeylElement};
use lauricella_core::{AlgError, AlgResult};
use num_traits::{One, Signed, ToPrimitive};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    X,
    Y,
}

#[derive(Debug, Clone)]
pub struct ParseOptions {
    /// Fix the number of variables; indices beyond it become errors.
    pub m: Option<usize>,
    /// Fix the chart instead of inferring it from the atoms.
    pub chart: Option<Chart>,
    /// Guard against accidentally huge powers.
    pub exponent_limit: u32,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            m: None,
            chart: None,
            exponent_limit: 512,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    X(usize),
    Y(usize),
    D(usize),
    H,
    A,
    B,
    C(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Atom(Atom),
    Num(Rat),
}

#[derive(Debug, Clone)]
struct Lexed {
    tok: Tok,
    off: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> AlgError {
    AlgError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(src: &str) -> AlgResult<Vec<Lexed>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Lexed { tok: Tok::Plus, off: i });
                i += 1;
            }
            '-' => {
                out.push(Lexed { tok: Tok::Minus, off: i });
                i += 1;
            }
            '*' => {
                out.push(Lexed { tok: Tok::Star, off: i });
                i += 1;
            }
            '^' => {
                out.push(Lexed { tok: Tok::Caret, off: i });
                i += 1;
            }
            '(' => {
                out.push(Lexed { tok: Tok::LParen, off: i });
                i += 1;
            }
            ')' => {
                out.push(Lexed { tok: Tok::RParen, off: i });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut text = &src[start..i];
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == den_start {
                        return Err(syntax(slash + 1, "expected a denominator"));
                    }
                    text = &src[start..i];
                }
                let q = parse_rat(text)
                    .map_err(|_| syntax(start, format!("bad rational literal '{text}'")))?;
                out.push(Lexed {
                    tok: Tok::Num(q),
                    off: start,
                });
            }
            'x' | 'y' | 'd' | 'c' => {
                let start = i;
                i += 1;
                let idx_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == idx_start {
                    return Err(syntax(idx_start, format!("expected an index after '{c}'")));
                }
                let idx: usize = src[idx_start..i]
                    .parse()
                    .map_err(|_| syntax(idx_start, "index too large"))?;
                if idx == 0 {
                    return Err(syntax(idx_start, "indices start at 1"));
                }
                let atom = match c {
                    'x' => Atom::X(idx),
                    'y' => Atom::Y(idx),
                    'd' => Atom::D(idx),
                    _ => Atom::C(idx),
                };
                out.push(Lexed {
                    tok: Tok::Atom(atom),
                    off: start,
                });
            }
            'h' => {
                out.push(Lexed {
                    tok: Tok::Atom(Atom::H),
                    off: i,
                });
                i += 1;
            }
            'a' => {
                out.push(Lexed {
                    tok: Tok::Atom(Atom::A),
                    off: i,
                });
                i += 1;
            }
            'b' => {
                out.push(Lexed {
                    tok: Tok::Atom(Atom::B),
                    off: i,
                });
                i += 1;
            }
            _ => return Err(syntax(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

/// Scan the token stream for the chart, variable count, and h usage.
fn infer_context(toks: &[Lexed], opts: &ParseOptions) -> AlgResult<WeylContext> {
    let mut chart = opts.chart;
    let mut max_idx = 0usize;
    let mut homogenized = false;
    for t in toks {
        if let Tok::Atom(a) = &t.tok {
            match a {
                Atom::X(i) => {
                    match chart {
                        None => chart = Some(Chart::X),
                        Some(Chart::X) => {}
                        Some(Chart::Y) => {
                            return Err(syntax(t.off, "cannot mix x and y variables"))
                        }
                    }
                    max_idx = max_idx.max(*i);
                }
                Atom::Y(i) => {
                    match chart {
                        None => chart = Some(Chart::Y),
                        Some(Chart::Y) => {}
                        Some(Chart::X) => {
                            return Err(syntax(t.off, "cannot mix x and y variables"))
                        }
                    }
                    max_idx = max_idx.max(*i);
                }
                Atom::D(i) | Atom::C(i) => max_idx = max_idx.max(*i),
                Atom::H => homogenized = true,
                Atom::A | Atom::B => {}
            }
        }
    }
    let m = match opts.m {
        Some(m) => {
            if m == 0 {
                return Err(syntax(0, "the variable count must be at least 1"));
            }
            if max_idx > m {
                let off = toks
                    .iter()
                    .find_map(|t| match &t.tok {
                        Tok::Atom(Atom::X(i))
                        | Tok::Atom(Atom::Y(i))
                        | Tok::Atom(Atom::D(i))
                        | Tok::Atom(Atom::C(i))
                            if *i > m =>
                        {
                            Some(t.off)
                        }
                        _ => None,
                    })
                    .unwrap_or(0);
                return Err(syntax(off, format!("index {max_idx} out of range for m={m}")));
            }
            m
        }
        None => max_idx.max(1),
    };
    let prefix = match chart.unwrap_or(Chart::X) {
        Chart::X => "x",
        Chart::Y => "y",
    };
    let names: Vec<String> = (1..=m).map(|i| format!("{prefix}{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    Ok(if homogenized {
        WeylContext::homogenized(&refs)
    } else {
        WeylContext::plain(&refs)
    })
}

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    end: usize,
    ctx: &'a WeylContext,
    exponent_limit: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|l| l.off).unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<&Lexed> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> AlgResult<WeylElement> {
        let negate = matches!(self.peek(), Some(Tok::Minus));
        if negate {
            self.advance();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg_ref();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.advance();
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> AlgResult<WeylElement> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.advance();
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> AlgResult<WeylElement> {
        let base = self.primary()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.advance();
        let off = self.offset();
        let e = match self.advance() {
            Some(Lexed {
                tok: Tok::Num(q), ..
            }) => {
                if !q.denom().is_one() || q.is_negative() {
                    return Err(syntax(off, "exponent must be a nonnegative integer"));
                }
                q.numer().to_u32().ok_or_else(|| syntax(off, "exponent too large"))?
            }
            _ => return Err(syntax(off, "expected an integer exponent")),
        };
        if e > self.exponent_limit {
            return Err(syntax(
                off,
                format!("exponent {e} exceeds the limit {}", self.exponent_limit),
            ));
        }
        let mut acc = WeylElement::one(self.ctx);
        for _ in 0..e {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    fn primary(&mut self) -> AlgResult<WeylElement> {
        let off = self.offset();
        match self.advance().map(|l| l.tok.clone()) {
            Some(Tok::Atom(a)) => Ok(match a {
                Atom::X(i) | Atom::Y(i) => WeylElement::var(self.ctx, i - 1),
                Atom::D(i) => WeylElement::dvar(self.ctx, i - 1),
                Atom::H => WeylElement::hvar(self.ctx),
                Atom::A => WeylElement::constant(self.ctx, ParamScalar::sym_a()),
                Atom::B => WeylElement::constant(self.ctx, ParamScalar::sym_b()),
                Atom::C(i) => WeylElement::constant(self.ctx, ParamScalar::sym_c(i)),
            }),
            Some(Tok::Num(q)) => Ok(WeylElement::constant(self.ctx, ParamScalar::constant(q))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close_off = self.offset();
                match self.advance().map(|l| l.tok.clone()) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(close_off, "expected ')'")),
                }
            }
            Some(_) => Err(syntax(off, "expected an atom, a literal, or '('")),
            None => Err(syntax(off, "expected an atom, a literal, or '('")),
        }
    }
}

pub fn parse_operator(text: &str) -> AlgResult<WeylElement> {
    parse_operator_with(text, &ParseOptions::default())
}

pub fn parse_operator_with(text: &str, opts: &ParseOptions) -> AlgResult<WeylElement> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(syntax(text.len(), "empty expression"));
    }
    let ctx = infer_context(&toks, opts)?;
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        ctx: &ctx,
        exponent_limit: opts.exponent_limit,
    };
    let value = parser.expr()?;
    if parser.pos < toks.len() {
        return Err(syntax(parser.offset(), "expected an operator"));
    }
    Ok(value)
}

fn push_power(parts: &mut Vec<String>, name: &str, e: u32) {
    if e == 1 {
        parts.push(name.to_string());
    } else if e > 1 {
        parts.push(format!("{name}^{e}"));
    }
}

fn fmt_abs_rat(r: &Rat) -> String {
    let r = r.abs();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn param_slot_name(slot: usize) -> String {
    match slot {
        0 => "a".to_string(),
        1 => "b".to_string(),
        k => format!("c{}", k - 1),
    }
}

/// One parameter-polynomial term as (is_negative, "2*a*c1"-style body).
fn param_term(slots: &[u32], r: &Rat) -> (bool, String) {
    let mut parts = Vec::new();
    if !r.abs().is_one() {
        parts.push(fmt_abs_rat(r));
    }
    for (slot, &e) in slots.iter().enumerate() {
        push_power(&mut parts, &param_slot_name(slot), e);
    }
    if parts.is_empty() {
        parts.push("1".to_string());
    }
    (r.is_negative(), parts.join("*"))
}

fn join_signed(terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// A coefficient-times-monomial term as (is_negative, body). Multi-term
/// coefficients are wrapped in parentheses so the text reparses exactly.
fn coeff_mono_term(coeff: &ParamScalar, mono: &str) -> (bool, String) {
    let terms: Vec<(&Vec<u32>, &Rat)> = coeff.terms().collect();
    if terms.len() == 1 {
        let (neg, body) = param_term(terms[0].0, terms[0].1);
        if mono.is_empty() {
            (neg, body)
        } else if body == "1" {
            (neg, mono.to_string())
        } else {
            (neg, format!("{body}*{mono}"))
        }
    } else {
        let inner = join_signed(
            terms
                .into_iter()
                .map(|(slots, r)| param_term(slots, r))
                .collect(),
        );
        if mono.is_empty() {
            (false, format!("({inner})"))
        } else {
            (false, format!("({inner})*{mono}"))
        }
    }
}

/// Print a normally ordered element in the surface grammar.
pub fn format_operator(p: &WeylElement) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ctx = p.ctx();
    let mut rendered = Vec::new();
    for (mono, coeff) in p.terms() {
        let mut parts = Vec::new();
        for i in 0..ctx.m() {
            push_power(&mut parts, ctx.var_name(i), mono.x[i]);
        }
        for i in 0..ctx.m() {
            push_power(&mut parts, &format!("d{}", i + 1), mono.d[i]);
        }
        push_power(&mut parts, "h", mono.h);
        rendered.push(coeff_mono_term(coeff, &parts.join("*")));
    }
    join_signed(rendered)
}

/// Print a commutative polynomial in the surface grammar, using its own
/// variable names.
pub fn format_cpoly(f: &lauricella_core::cpoly::CPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.vars();
    let mut rendered = Vec::new();
    for (exps, coeff) in f.terms() {
        let mut parts = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            push_power(&mut parts, vars.name(i), e);
        }
        rendered.push(coeff_mono_term(coeff, &parts.join("*")));
    }
    join_signed(rendered)
}
