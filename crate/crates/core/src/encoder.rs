//! The meet-closure CNF.
//!
//! Every vector `mu` of `{0,1}^n` gets a predicate `P_mu`, true when `mu` is in
//! the family. Each incomparable pair `r, s` yields the Horn clause
//! `P_r & P_s -> P_(r&s)`; comparable pairs would give tautologies and are
//! skipped. The variant adds unit clauses for the all-ones and all-zeros
//! predicates.

use std::fmt::{self, Write as _};

use crate::families::{BitVector, MAX_WIDTH};
use crate::{Error, Result, Variant};

/// Default cap on `n` for [`encode`] (64 predicates).
pub const ENCODE_CAP: usize = 6;

/// A DIMACS literal: nonzero, negative when negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(i32);

impl Lit {
    pub fn new(dimacs: i32) -> Option<Self> {
        (dimacs != 0 && dimacs != i32::MIN).then_some(Lit(dimacs))
    }

    pub fn pos(var: u32) -> Self {
        Lit(var as i32)
    }

    pub fn neg(var: u32) -> Self {
        Lit(-(var as i32))
    }

    /// 1-based variable id.
    pub fn var(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_pos(self) -> bool {
        self.0 > 0
    }

    pub fn dimacs(self) -> i32 {
        self.0
    }
}

impl std::ops::Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(-self.0)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A CNF over variables `1..=num_vars`, with unit clauses kept apart.
///
/// Instances built by [`encode`] remember their `(n, variant)`; generic
/// instances from [`CnfInstance::new`] or [`parse_dimacs`] do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: u32,
    units: Vec<Lit>,
    clauses: Vec<Vec<Lit>>,
    source: Option<(usize, Variant)>,
}

impl CnfInstance {
    /// Splits `clauses` into units and the rest. Literals must mention
    /// variables in `1..=num_vars`; empty clauses are kept (the instance is
    /// then unsatisfiable).
    pub fn new(num_vars: u32, clauses: Vec<Vec<Lit>>) -> Result<Self> {
        let mut units = Vec::new();
        let mut rest = Vec::new();
        for c in clauses {
            if let Some(l) = c.iter().find(|l| l.var() > num_vars) {
                return Err(Error::Input(format!(
                    "literal {l} mentions a variable above {num_vars}"
                )));
            }
            if c.len() == 1 {
                units.push(c[0]);
            } else {
                rest.push(c);
            }
        }
        Ok(CnfInstance {
            num_vars,
            units,
            clauses: rest,
            source: None,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn units(&self) -> &[Lit] {
        &self.units
    }

    /// Non-unit clauses; ternary for encoded instances.
    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.units.len() + self.clauses.len()
    }

    pub fn source(&self) -> Option<(usize, Variant)> {
        self.source
    }

    /// All clauses, units first.
    pub fn all_clauses(&self) -> impl Iterator<Item = &[Lit]> {
        self.units
            .iter()
            .map(std::slice::from_ref)
            .chain(self.clauses.iter().map(Vec::as_slice))
    }

    /// The same clauses over `extra` additional variables that occur nowhere.
    pub fn with_extra_vars(&self, extra: u32) -> Self {
        CnfInstance {
            num_vars: self.num_vars + extra,
            ..self.clone()
        }
    }

    /// Adds a unit clause.
    pub fn with_unit(&self, lit: Lit) -> Self {
        let mut c = self.clone();
        c.units.push(lit);
        c.source = None;
        c
    }
}

pub fn predicate_id(mu: &BitVector) -> u32 {
    mu.value() as u32 + 1
}

pub fn vector_of(id: u32, n: usize) -> Result<BitVector> {
    if n > MAX_WIDTH.min(31) {
        return Err(Error::cap(format!("no predicate ids for n = {n}")));
    }
    if id == 0 || id as u64 > 1u64 << n {
        return Err(Error::Input(format!(
            "predicate id {id} outside [1, {}]",
            1u64 << n
        )));
    }
    BitVector::new(n, id as u64 - 1)
}

/// Unordered incomparable pairs `(r, s)` with `r < s`, in `(r, s)` order.
pub fn incomparable_pairs(n: usize) -> impl Iterator<Item = (u64, u64)> {
    let size = 1u64 << n;
    (0..size).flat_map(move |r| {
        (r + 1..size).filter_map(move |s| {
            let u = r & s;
            (u != r && u != s).then_some((r, s))
        })
    })
}

pub fn encode(n: usize, variant: Variant) -> Result<CnfInstance> {
    encode_with_cap(n, variant, ENCODE_CAP)
}

pub fn encode_with_cap(n: usize, variant: Variant, cap: usize) -> Result<CnfInstance> {
    if n > cap || n > 20 {
        return Err(Error::cap(format!(
            "encoding n = {n} exceeds the cap of {}",
            cap.min(20)
        )));
    }
    let bottom = predicate_id(&BitVector::zeros(n));
    let top = predicate_id(&BitVector::ones(n));
    let mut units = Vec::new();
    // Over n = 0 the bottom requirement is vacuous (see `variant_member`).
    if variant.requires_bottom() && n > 0 {
        units.push(Lit::pos(bottom));
    }
    if variant.requires_top() && !units.contains(&Lit::pos(top)) {
        units.push(Lit::pos(top));
    }
    let id = |v: u64| v as u32 + 1;
    let clauses = incomparable_pairs(n)
        .map(|(r, s)| vec![Lit::neg(id(r)), Lit::neg(id(s)), Lit::pos(id(r & s))])
        .collect();
    Ok(CnfInstance {
        num_vars: 1 << n,
        units,
        clauses,
        source: Some((n, variant)),
    })
}

/// DIMACS text: provenance comment, header, units, then the other clauses.
pub fn emit_dimacs(c: &CnfInstance) -> String {
    let mut out = String::new();
    if let Some((n, variant)) = c.source {
        let _ = writeln!(out, "c variant={variant} n={n}");
    }
    let _ = writeln!(out, "p cnf {} {}", c.num_vars, c.clause_count());
    for clause in c.all_clauses() {
        for l in clause {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Reads a DIMACS CNF file. Comment lines (`c`) and `%` trailers are
/// ignored; clauses may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            let parts: Vec<&str> = t.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| {
                Error::parse(lineno, 1, "malformed header, expected `p cnf <vars> <clauses>`")
            })?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(Error::parse(lineno, 1, "clause before `p cnf` header"));
        };
        let mut col = 0;
        for tok in line.split_whitespace() {
            col = line[col..].find(tok).map_or(col, |p| p + col);
            let v: i32 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, col + 1, format!("bad literal `{tok}`")))?;
            if v == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                let lit = Lit::new(v)
                    .filter(|l| l.var() <= num_vars)
                    .ok_or_else(|| {
                        Error::parse(lineno, col + 1, format!("literal {v} out of range"))
                    })?;
                current.push(lit);
            }
            col += tok.len();
        }
    }
    let (num_vars, declared) =
        header.ok_or_else(|| Error::Input("missing `p cnf` header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared {
        return Err(Error::Input(format!(
            "header declares {declared} clauses, found {}",
            clauses.len()
        )));
    }
    CnfInstance::new(num_vars, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicate_ids() {
        let ids: Vec<u32> = ["00", "01", "10", "11"]
            .iter()
            .map(|s| predicate_id(&s.parse().unwrap()))
            .collect();
        assert_eq!(ids, [1, 2, 3, 4]);
        for n in 0..=4 {
            for value in 0..1u64 << n {
                let mu = BitVector::new(n, value).unwrap();
                assert_eq!(vector_of(predicate_id(&mu), n).unwrap(), mu);
            }
        }
        assert_eq!(predicate_id(&BitVector::zeros(0)), 1);
        assert!(vector_of(0, 2).is_err());
        assert!(vector_of(5, 2).is_err());
    }

    #[test]
    fn n2_instance() {
        let c = encode(2, Variant::H01).unwrap();
        assert_eq!(c.clauses(), &[vec![Lit::neg(2), Lit::neg(3), Lit::pos(1)]]);
        assert!(c.units().is_empty());
        let c = encode(2, Variant::H1).unwrap();
        assert_eq!(c.units(), &[Lit::pos(4)]);
        assert_eq!(c.clauses().len(), 1);
        let c = encode(2, Variant::H).unwrap();
        assert_eq!(c.units(), &[Lit::pos(1), Lit::pos(4)]);
    }

    #[test]
    fn n0_instance() {
        let c = encode(0, Variant::H01).unwrap();
        assert_eq!((c.num_vars(), c.clause_count()), (1, 0));
        // top and bottom coincide
        let c = encode(0, Variant::H).unwrap();
        assert_eq!(c.units(), &[Lit::pos(1)]);
        assert!(encode(0, Variant::H0).unwrap().units().is_empty());
    }

    #[test]
    fn n3_clause_count() {
        assert_eq!(encode(3, Variant::H01).unwrap().clauses().len(), 9);
    }

    #[test]
    fn cap() {
        assert!(matches!(encode(7, Variant::H), Err(Error::Resource { .. })));
        assert!(encode_with_cap(7, Variant::H, 7).is_ok());
    }

    #[test]
    fn dimacs_examples() {
        let text = emit_dimacs(&encode(2, Variant::H01).unwrap());
        assert_eq!(text, "c variant=h01 n=2\np cnf 4 1\n-2 -3 1 0\n");
        let text = emit_dimacs(&encode(2, Variant::H1).unwrap());
        assert_eq!(text, "c variant=h1 n=2\np cnf 4 2\n4 0\n-2 -3 1 0\n");
        let text = emit_dimacs(&encode(0, Variant::H01).unwrap());
        assert_eq!(text, "c variant=h01 n=0\np cnf 1 0\n");
    }

    #[test]
    fn dimacs_parse() {
        let c = encode(3, Variant::H).unwrap();
        let back = parse_dimacs(&emit_dimacs(&c)).unwrap();
        assert_eq!(back.units(), c.units());
        assert_eq!(back.clauses(), c.clauses());
        assert_eq!(back.num_vars(), c.num_vars());

        let c = parse_dimacs("c hi\np cnf 3 2\n1 -2\n 3 0 -1 0\n").unwrap();
        assert_eq!(c.clauses(), &[vec![Lit::pos(1), Lit::neg(2), Lit::pos(3)]]);
        assert_eq!(c.units(), &[Lit::neg(1)]);
        assert!(matches!(
            parse_dimacs("p cnf 2 1\n1 3 0\n"),
            Err(Error::Parse { line: 2, column: 3, .. })
        ));
        assert!(parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert!(parse_dimacs("1 0\n").is_err());
    }
}
