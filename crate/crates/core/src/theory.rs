//! Monomials, binomial equations and Horn clauses.
//!
//! Both presentations describe the same kind of constraint: every set of
//! binomial equations translates to a set of Horn clauses with the same
//! models and back. Equivalence of theories is decided on model sets,
//! which are also what [`canonical_form`] returns.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::families::{BitVector, VectorFamily};
use crate::{Error, Result};

/// Default cap on `n` for [`models`] and [`canonical_form`].
pub const MODELS_CAP: usize = 16;

pub type VarSet = BTreeSet<usize>;

/// A product of variables, or the constant 0. The empty product is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Zero,
    Product(VarSet),
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::Product(VarSet::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial::Product(VarSet::from([i]))
    }

    pub fn product<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Monomial::Product(vars.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Monomial::Product(s) if s.is_empty())
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Monomial::Zero => None,
            Monomial::Product(s) => s.last().copied(),
        }
    }
}

// Zero first, then products by size, then lexicographically by index.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Monomial::Zero, Monomial::Zero) => Ordering::Equal,
            (Monomial::Zero, _) => Ordering::Less,
            (_, Monomial::Zero) => Ordering::Greater,
            (Monomial::Product(a), Monomial::Product(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_vars(f: &mut fmt::Formatter<'_>, vars: &VarSet, sep: &str) -> fmt::Result {
    for (k, v) in vars.iter().enumerate() {
        if k > 0 {
            f.write_str(sep)?;
        }
        write!(f, "x{}", v + 1)?;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Zero => f.write_str("0"),
            Monomial::Product(s) if s.is_empty() => f.write_str("1"),
            Monomial::Product(s) => write_vars(f, s, " "),
        }
    }
}

fn check_width(max_var: Option<usize>, v: &BitVector) -> Result<()> {
    match max_var {
        Some(i) if i >= v.width() => Err(Error::Input(format!(
            "variable x{} is outside a vector of width {}",
            i + 1,
            v.width()
        ))),
        _ => Ok(()),
    }
}

pub fn eval_monomial(m: &Monomial, v: &BitVector) -> Result<bool> {
    check_width(m.max_var(), v)?;
    Ok(match m {
        Monomial::Zero => false,
        Monomial::Product(s) => s.iter().all(|&i| v.get(i)),
    })
}

/// An equation `lhs = rhs`, stored with `lhs < rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialEquation {
    lhs: Monomial,
    rhs: Monomial,
}

impl BinomialEquation {
    /// Normalizes orientation; returns `None` for a reflexive equation.
    pub fn new(a: Monomial, b: Monomial) -> Option<Self> {
        match a.cmp(&b) {
            Ordering::Less => Some(BinomialEquation { lhs: a, rhs: b }),
            Ordering::Greater => Some(BinomialEquation { lhs: b, rhs: a }),
            Ordering::Equal => None,
        }
    }

    pub fn lhs(&self) -> &Monomial {
        &self.lhs
    }

    pub fn rhs(&self) -> &Monomial {
        &self.rhs
    }
}

impl fmt::Display for BinomialEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Head {
    Var(usize),
    False,
}

/// `body => head`, where an empty body is `true`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HornClause {
    body: VarSet,
    head: Head,
}

impl HornClause {
    /// Returns `None` when the head occurs in the body.
    pub fn new(body: VarSet, head: Head) -> Option<Self> {
        match head {
            Head::Var(h) if body.contains(&h) => None,
            _ => Some(HornClause { body, head }),
        }
    }

    pub fn body(&self) -> &VarSet {
        &self.body
    }

    pub fn head(&self) -> Head {
        self.head
    }
}

impl Ord for HornClause {
    fn cmp(&self, other: &Self) -> Ordering {
        self.body
            .len()
            .cmp(&other.body.len())
            .then_with(|| self.body.cmp(&other.body))
            .then_with(|| self.head.cmp(&other.head))
    }
}

impl PartialOrd for HornClause {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HornClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_vars(f, &self.body, " & ")?;
        if !self.body.is_empty() {
            f.write_str(" ")?;
        }
        match self.head {
            Head::Var(h) => write!(f, "-> x{}", h + 1),
            Head::False => f.write_str("-> false"),
        }
    }
}

/// Something with a truth value at each point of `{0,1}^n`.
pub trait Constraint {
    fn holds(&self, v: &BitVector) -> Result<bool>;
    fn max_var(&self) -> Option<usize>;
}

impl Constraint for BinomialEquation {
    fn holds(&self, v: &BitVector) -> Result<bool> {
        Ok(eval_monomial(&self.lhs, v)? == eval_monomial(&self.rhs, v)?)
    }

    fn max_var(&self) -> Option<usize> {
        self.lhs.max_var().max(self.rhs.max_var())
    }
}

impl Constraint for HornClause {
    fn holds(&self, v: &BitVector) -> Result<bool> {
        check_width(Constraint::max_var(self), v)?;
        if !self.body.iter().all(|&i| v.get(i)) {
            return Ok(true);
        }
        Ok(match self.head {
            Head::Var(h) => v.get(h),
            Head::False => false,
        })
    }

    fn max_var(&self) -> Option<usize> {
        let h = match self.head {
            Head::Var(h) => Some(h),
            Head::False => None,
        };
        self.body.last().copied().max(h)
    }
}

/// Smallest `n` covering every variable used.
pub fn num_vars<'a, C: Constraint + 'a>(cs: impl IntoIterator<Item = &'a C>) -> usize {
    cs.into_iter()
        .filter_map(|c| c.max_var())
        .max()
        .map_or(0, |m| m + 1)
}

/// For each `m1 = m2`: `c(m1) => x` for `x` in `m2` and `c(m2) => y` for `y`
/// in `m1`. A side equal to 1 contributes no heads; a side equal to 0
/// contributes the head `false` and, as a body, is unsatisfiable so its
/// clauses are vacuous and dropped.
pub fn equations_to_horn<'a>(
    eqs: impl IntoIterator<Item = &'a BinomialEquation>,
) -> BTreeSet<HornClause> {
    fn emit(body: &Monomial, heads: &Monomial, out: &mut BTreeSet<HornClause>) {
        let Monomial::Product(body) = body else {
            return;
        };
        match heads {
            Monomial::Zero => {
                out.extend(HornClause::new(body.clone(), Head::False));
            }
            Monomial::Product(hs) => {
                for &h in hs {
                    out.extend(HornClause::new(body.clone(), Head::Var(h)));
                }
            }
        }
    }

    let mut out = BTreeSet::new();
    for eq in eqs {
        emit(&eq.lhs, &eq.rhs, &mut out);
        emit(&eq.rhs, &eq.lhs, &mut out);
    }
    out
}

/// `x1 & .. & xj -> y` becomes `x1..xj = y x1..xj`; `B -> false` becomes
/// `B = 0`.
pub fn horn_to_equations<'a>(
    clauses: impl IntoIterator<Item = &'a HornClause>,
) -> BTreeSet<BinomialEquation> {
    clauses
        .into_iter()
        .filter_map(|c| {
            let lhs = Monomial::Product(c.body.clone());
            let rhs = match c.head {
                Head::Var(y) => {
                    let mut s = c.body.clone();
                    s.insert(y);
                    Monomial::Product(s)
                }
                Head::False => Monomial::Zero,
            };
            BinomialEquation::new(lhs, rhs)
        })
        .collect()
}

/// All vectors of width `n` satisfying every constraint.
pub fn models<'a, C: Constraint + 'a>(
    cs: impl IntoIterator<Item = &'a C>,
    n: usize,
) -> Result<VectorFamily> {
    models_with_cap(cs, n, MODELS_CAP)
}

pub fn models_with_cap<'a, C: Constraint + 'a>(
    cs: impl IntoIterator<Item = &'a C>,
    n: usize,
    cap: usize,
) -> Result<VectorFamily> {
    if n > cap {
        return Err(Error::cap(format!(
            "model enumeration over {n} variables exceeds the cap of {cap}"
        )));
    }
    let cs: Vec<&C> = cs.into_iter().collect();
    if let Some(m) = cs.iter().filter_map(|c| c.max_var()).max() {
        if m >= n {
            return Err(Error::Input(format!(
                "variable x{} is outside n = {n}",
                m + 1
            )));
        }
    }
    let mut members = Vec::new();
    for value in 0..1u64 << n {
        let v = BitVector::from_raw(n, value);
        let mut ok = true;
        for c in &cs {
            if !c.holds(&v)? {
                ok = false;
                break;
            }
        }
        if ok {
            members.push(value);
        }
    }
    Ok(VectorFamily::from_values_unchecked(n, members))
}

/// The model set in ascending order. Two presentations are equivalent
/// exactly when their canonical forms are equal.
pub fn canonical_form<'a, C: Constraint + 'a>(
    cs: impl IntoIterator<Item = &'a C>,
    n: usize,
) -> Result<VectorFamily> {
    models(cs, n)
}

// ---------------------------------------------------------------------------
// Text formats

struct Cursor<'s> {
    line: usize,
    text: &'s str,
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn new(line: usize, text: &'s str) -> Self {
        Cursor { line, text, pos: 0 }
    }

    fn err(&self, at: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, at + 1, msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> (usize, &'s str) {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        (start, &self.text[start..self.pos])
    }

    fn variable(&mut self) -> Result<usize> {
        let (start, w) = self.word();
        if w.is_empty() {
            let found = self.peek().map_or("end of line".to_string(), |c| format!("`{c}`"));
            return Err(self.err(start, format!("expected a variable, found {found}")));
        }
        let digits = w
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| self.err(start, format!("`{w}` is not a variable of the form x<digits>")))?;
        match digits.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(self.err(start, format!("variable `{w}` must be numbered from 1"))),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim_start();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

fn parse_side(cur: &mut Cursor<'_>, terminator: Option<char>) -> Result<Monomial> {
    cur.skip_ws();
    let start = cur.pos;
    let stop = |c: Option<char>| c.is_none() || c == terminator;
    match cur.peek() {
        Some('0') | Some('1') => {
            let (_, w) = cur.word();
            let m = match w {
                "0" => Monomial::Zero,
                "1" => Monomial::one(),
                _ => return Err(cur.err(start, format!("unexpected `{w}`"))),
            };
            cur.skip_ws();
            if !stop(cur.peek()) {
                return Err(cur.err(cur.pos, "a constant side cannot be combined with variables"));
            }
            Ok(m)
        }
        _ => {
            let mut vars = VarSet::new();
            loop {
                vars.insert(cur.variable()?);
                cur.skip_ws();
                if cur.eat("*") {
                    cur.skip_ws();
                    continue;
                }
                if stop(cur.peek()) {
                    break;
                }
            }
            Ok(Monomial::Product(vars))
        }
    }
}

pub fn parse_equations(text: &str) -> Result<BTreeSet<BinomialEquation>> {
    let mut out = BTreeSet::new();
    for (lineno, line) in content_lines(text) {
        let mut cur = Cursor::new(lineno, line);
        let lhs = parse_side(&mut cur, Some('='))?;
        if !cur.eat("=") {
            return Err(cur.err(cur.pos, "expected `=`"));
        }
        let rhs = parse_side(&mut cur, None)?;
        if !cur.at_end() {
            return Err(cur.err(cur.pos, "trailing input"));
        }
        out.extend(BinomialEquation::new(lhs, rhs));
    }
    Ok(out)
}

pub fn format_equations<'a>(eqs: impl IntoIterator<Item = &'a BinomialEquation>) -> String {
    eqs.into_iter().map(|e| format!("{e}\n")).collect()
}

pub fn parse_clauses(text: &str) -> Result<BTreeSet<HornClause>> {
    let mut out = BTreeSet::new();
    for (lineno, line) in content_lines(text) {
        let mut cur = Cursor::new(lineno, line);
        let mut body = VarSet::new();
        cur.skip_ws();
        if !cur.eat("->") {
            loop {
                cur.skip_ws();
                body.insert(cur.variable()?);
                cur.skip_ws();
                if cur.eat("&") {
                    continue;
                }
                if cur.eat("->") {
                    break;
                }
                return Err(cur.err(cur.pos, "expected `&` or `->`"));
            }
        }
        cur.skip_ws();
        let head = if cur.text[cur.pos..].starts_with("false") {
            cur.pos += "false".len();
            Head::False
        } else {
            Head::Var(cur.variable()?)
        };
        if !cur.at_end() {
            return Err(cur.err(cur.pos, "trailing input"));
        }
        out.extend(HornClause::new(body, head));
    }
    Ok(out)
}

pub fn format_clauses<'a>(clauses: impl IntoIterator<Item = &'a HornClause>) -> String {
    clauses.into_iter().map(|c| format!("{c}\n")).collect()
}
