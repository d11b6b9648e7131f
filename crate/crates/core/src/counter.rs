//! Exact model counting.
//!
//! The counter is DPLL without the pure-literal rule: unit propagation, then
//! a branch on one variable whose two sub-counts are added. Variables that
//! drop out of every clause without being assigned contribute a factor of
//! two each. Optionally the residual formula is split into connected
//! components whose counts multiply, and component counts are cached.
//!
//! Every search node owns its residual formula, so the two sides of a
//! decision can run on different threads.

use std::fmt;
use std::path::Path;
use std::process::Command;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::encoder::{emit_dimacs, encode, CnfInstance};
use crate::{identities, oracle, parallel, Error, Result, Variant};

/// Default wall-clock budget per count.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(600);

/// Environment variable holding the default external counter command.
pub const EXTERNAL_CMD_ENV: &str = "HORN_ENUM_EXTERNAL_CMD";

/// Matches `s mc <count>`, `c s exact arb int <count>`, `s <count>` or a
/// bare integer.
pub const DEFAULT_EXTERNAL_PATTERN: &str =
    r"^\s*(?:s\s+mc\s+|c\s+s\s+exact\s+\S+\s+int\s+|s\s+)?(\d+)\s*$";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Heuristic {
    /// Most occurrences in open clauses, ties to the lowest id.
    #[default]
    MostFrequent,
    /// Lowest variable id still open.
    Lowest,
}

#[derive(Clone, Debug)]
pub struct ExternalCounter {
    /// Shell command; `{}` is replaced by the DIMACS path, which is appended
    /// when there is no placeholder.
    pub template: String,
    /// Regex with one capture group for the decimal count.
    pub pattern: String,
}

impl ExternalCounter {
    pub fn new(template: impl Into<String>) -> Self {
        ExternalCounter {
            template: template.into(),
            pattern: DEFAULT_EXTERNAL_PATTERN.to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CounterConfig {
    /// Worker threads; 0 lets rayon decide, 1 runs on the calling thread.
    pub threads: usize,
    /// Branches are forked onto the pool only above this depth.
    pub split_depth: usize,
    pub components: bool,
    /// Cache component counts (only consulted with `components`).
    pub cache: bool,
    /// Stop inserting into the cache past this many entries.
    pub cache_limit: usize,
    pub heuristic: Heuristic,
    pub budget: Option<Duration>,
    pub external: Option<ExternalCounter>,
}

impl Default for CounterConfig {
    fn default() -> Self {
        CounterConfig {
            threads: 0,
            split_depth: 14,
            components: false,
            cache: false,
            cache_limit: 20_000_000,
            heuristic: Heuristic::MostFrequent,
            budget: Some(DEFAULT_BUDGET),
            external: None,
        }
    }
}

impl CounterConfig {
    pub fn sequential() -> Self {
        CounterConfig {
            threads: 1,
            ..Self::default()
        }
    }

    /// Component decomposition with caching.
    pub fn with_components(mut self) -> Self {
        self.components = true;
        self.cache = true;
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountStats {
    pub decisions: u64,
    pub propagations: u64,
    pub components: u64,
    pub cache_hits: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Dpll,
    #[serde(rename = "bruteforce")]
    BruteForce,
    #[serde(rename = "identity")]
    Identity,
    External,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Dpll => "dpll",
            Method::BruteForce => "bruteforce",
            Method::Identity => "identity",
            Method::External => "external",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dpll" => Ok(Method::Dpll),
            "bruteforce" => Ok(Method::BruteForce),
            "identity" | "identity-derived" => Ok(Method::Identity),
            "external" => Ok(Method::External),
            other => Err(format!(
                "unknown method `{other}` (expected dpll, bruteforce, identity or external)"
            )),
        }
    }
}

/// Serializes big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| serde::de::Error::custom(format!("`{s}` is not a decimal integer")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub variant: Variant,
    pub n: usize,
    pub method: Method,
    #[serde(with = "decimal")]
    pub count: BigUint,
    pub elapsed_secs: f64,
    pub stats: CountStats,
}

// ---------------------------------------------------------------------------
// Residual formulas

/// Clauses stored back to back; `ends[k]` is one past the last literal of
/// clause `k`.
#[derive(Clone, Debug, Default)]
struct Formula {
    lits: Vec<i32>,
    ends: Vec<u32>,
}

impl Formula {
    fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    fn clauses(&self) -> impl Iterator<Item = &[i32]> {
        let mut start = 0usize;
        self.ends.iter().map(move |&e| {
            let c = &self.lits[start..e as usize];
            start = e as usize;
            c
        })
    }

    fn push(&mut self, clause: &[i32]) {
        self.lits.extend_from_slice(clause);
        self.ends.push(self.lits.len() as u32);
    }

    /// Sorted, deduplicated clause list. Used as the cache key.
    fn canonical(&self) -> Formula {
        let mut cs: Vec<&[i32]> = self.clauses().collect();
        cs.sort_unstable();
        cs.dedup();
        let mut out = Formula::default();
        for c in cs {
            out.push(c);
        }
        out
    }

    fn key(&self) -> Box<[i32]> {
        let mut k = Vec::with_capacity(self.lits.len() + self.ends.len());
        for c in self.clauses() {
            k.extend_from_slice(c);
            k.push(0);
        }
        k.into_boxed_slice()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Value {
    Unset,
    True,
    False,
}

fn value_of(assign: &[Value], lit: i32) -> Value {
    match (assign[lit.unsigned_abs() as usize], lit > 0) {
        (Value::Unset, _) => Value::Unset,
        (v, true) => v,
        (Value::True, false) => Value::False,
        (Value::False, false) => Value::True,
    }
}

fn set(assign: &mut [Value], lit: i32) {
    assign[lit.unsigned_abs() as usize] = if lit > 0 { Value::True } else { Value::False };
}

struct Conflict;

/// Marker that the search stopped on the budget.
struct Aborted;

#[derive(Default)]
struct AtomicStats {
    decisions: AtomicU64,
    propagations: AtomicU64,
    components: AtomicU64,
    cache_hits: AtomicU64,
}

impl AtomicStats {
    fn snapshot(&self) -> CountStats {
        CountStats {
            decisions: self.decisions.load(Ordering::Relaxed),
            propagations: self.propagations.load(Ordering::Relaxed),
            components: self.components.load(Ordering::Relaxed),
            cache_hits: self.cache_hits.load(Ordering::Relaxed),
        }
    }
}

struct Search<'c> {
    cfg: &'c CounterConfig,
    num_vars: usize,
    parallel: bool,
    deadline: Option<Instant>,
    aborted: AtomicBool,
    stats: AtomicStats,
    cache: DashMap<Box<[i32]>, BigUint>,
}

impl Search<'_> {
    /// Applies `assumption` (if any) and unit propagation to `f`. Returns the
    /// residual formula and the number of variables assigned.
    fn propagate(&self, f: &Formula, assumption: Option<i32>) -> Result<(Formula, u32), Conflict> {
        let mut assign = vec![Value::Unset; self.num_vars + 1];
        let mut assigned = 0u32;
        if let Some(l) = assumption {
            set(&mut assign, l);
            assigned += 1;
        }
        let mut current = f.clone();
        let mut scratch: Vec<i32> = Vec::new();
        loop {
            let mut next = Formula {
                lits: Vec::with_capacity(current.lits.len()),
                ends: Vec::with_capacity(current.ends.len()),
            };
            let mut changed = false;
            for clause in current.clauses() {
                scratch.clear();
                let mut satisfied = false;
                for &l in clause {
                    match value_of(&assign, l) {
                        Value::True => {
                            satisfied = true;
                            break;
                        }
                        Value::False => {}
                        Value::Unset => scratch.push(l),
                    }
                }
                if satisfied {
                    continue;
                }
                match scratch.len() {
                    0 => return Err(Conflict),
                    1 => {
                        set(&mut assign, scratch[0]);
                        assigned += 1;
                        changed = true;
                        self.stats.propagations.fetch_add(1, Ordering::Relaxed);
                    }
                    _ => next.push(&scratch),
                }
            }
            current = next;
            if !changed {
                return Ok((current, assigned));
            }
        }
    }

    fn occurrences(&self, f: &Formula) -> Vec<u32> {
        let mut occ = vec![0u32; self.num_vars + 1];
        for &l in &f.lits {
            occ[l.unsigned_abs() as usize] += 1;
        }
        occ
    }

    fn var_count(&self, f: &Formula) -> u32 {
        self.occurrences(f).iter().filter(|&&c| c > 0).count() as u32
    }

    fn pick(&self, f: &Formula) -> i32 {
        match self.cfg.heuristic {
            Heuristic::Lowest => f.lits.iter().map(|l| l.abs()).min().unwrap_or(1),
            Heuristic::MostFrequent => {
                let occ = self.occurrences(f);
                let mut best = 0usize;
                for v in 1..occ.len() {
                    if occ[v] > occ[best] {
                        best = v;
                    }
                }
                best as i32
            }
        }
    }

    fn check_budget(&self) -> Result<(), Aborted> {
        if self.aborted.load(Ordering::Relaxed) {
            return Err(Aborted);
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.aborted.store(true, Ordering::Relaxed);
                return Err(Aborted);
            }
        }
        Ok(())
    }

    /// Number of models of `f` over exactly the variables occurring in it.
    fn count(&self, f: Formula, depth: usize) -> Result<BigUint, Aborted> {
        self.check_budget()?;
        if f.is_empty() {
            return Ok(BigUint::one());
        }
        if !self.cfg.components {
            return self.branch(&f, depth);
        }
        let parts = self.split(&f);
        if parts.len() == 1 {
            return self.count_component(f.canonical(), depth);
        }
        self.stats
            .components
            .fetch_add(parts.len() as u64, Ordering::Relaxed);
        let mut product = BigUint::one();
        for p in parts {
            product *= self.count_component(p.canonical(), depth)?;
            if product.is_zero() {
                break;
            }
        }
        Ok(product)
    }

    fn count_component(&self, f: Formula, depth: usize) -> Result<BigUint, Aborted> {
        if !self.cfg.cache {
            return self.branch(&f, depth);
        }
        let key = f.key();
        if let Some(hit) = self.cache.get(&key) {
            self.stats.cache_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(hit.clone());
        }
        let n = self.branch(&f, depth)?;
        if self.cache.len() < self.cfg.cache_limit {
            self.cache.insert(key, n.clone());
        }
        Ok(n)
    }

    fn branch(&self, f: &Formula, depth: usize) -> Result<BigUint, Aborted> {
        let var = self.pick(f);
        let vars = self.var_count(f);
        self.stats.decisions.fetch_add(1, Ordering::Relaxed);
        let fork = self.parallel && depth < self.cfg.split_depth;
        let (a, b) = parallel::join(
            fork,
            || self.assume(f, var, vars, depth + 1),
            || self.assume(f, -var, vars, depth + 1),
        );
        Ok(a? + b?)
    }

    fn assume(&self, f: &Formula, lit: i32, vars: u32, depth: usize) -> Result<BigUint, Aborted> {
        match self.propagate(f, Some(lit)) {
            Err(Conflict) => Ok(BigUint::zero()),
            Ok((g, assigned)) => {
                let free = vars - assigned - self.var_count(&g);
                Ok(self.count(g, depth)? << free as usize)
            }
        }
    }

    /// Connected components of the clause/variable graph.
    fn split(&self, f: &Formula) -> Vec<Formula> {
        let mut parent: Vec<u32> = (0..=self.num_vars as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for c in f.clauses() {
            let a = find(&mut parent, c[0].unsigned_abs());
            for l in &c[1..] {
                let b = find(&mut parent, l.unsigned_abs());
                if a != b {
                    parent[b as usize] = a;
                }
            }
        }
        let mut slot = vec![u32::MAX; self.num_vars + 1];
        let mut parts: Vec<Formula> = Vec::new();
        for c in f.clauses() {
            let root = find(&mut parent, c[0].unsigned_abs()) as usize;
            if slot[root] == u32::MAX {
                slot[root] = parts.len() as u32;
                parts.push(Formula::default());
            }
            parts[slot[root] as usize].push(c);
        }
        parts
    }
}

/// Result of [`Counter::count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counted {
    pub count: BigUint,
    pub stats: CountStats,
}

/// An exact model counter with a fixed configuration.
#[derive(Clone, Debug, Default)]
pub struct Counter {
    cfg: CounterConfig,
}

impl Counter {
    pub fn new(cfg: CounterConfig) -> Self {
        Counter { cfg }
    }

    pub fn config(&self) -> &CounterConfig {
        &self.cfg
    }

    /// Counts satisfying assignments over all `num_vars` variables.
    pub fn count(&self, instance: &CnfInstance) -> Result<Counted> {
        let num_vars = instance.num_vars() as usize;
        let mut f = Formula::default();
        let mut buf = Vec::new();
        for clause in instance.all_clauses() {
            buf.clear();
            buf.extend(clause.iter().map(|l| l.dimacs()));
            buf.sort_unstable_by_key(|l| (l.unsigned_abs(), *l));
            buf.dedup();
            if buf.windows(2).any(|w| w[0] == -w[1]) {
                continue;
            }
            if buf.is_empty() {
                return Ok(Counted {
                    count: BigUint::zero(),
                    stats: CountStats::default(),
                });
            }
            f.push(&buf);
        }

        let parallel = parallel::available() && self.cfg.threads != 1;
        let search = Search {
            cfg: &self.cfg,
            num_vars,
            parallel,
            deadline: self.cfg.budget.map(|b| Instant::now() + b),
            aborted: AtomicBool::new(false),
            stats: AtomicStats::default(),
            cache: DashMap::new(),
        };
        let result = parallel::with_threads(self.cfg.threads, || {
            match search.propagate(&f, None) {
                Err(Conflict) => Ok(BigUint::zero()),
                Ok((g, assigned)) => {
                    let free = num_vars as u32 - assigned - search.var_count(&g);
                    Ok(search.count(g, 0)? << free as usize)
                }
            }
        });
        let stats = search.stats.snapshot();
        match result {
            Ok(count) => Ok(Counted { count, stats }),
            Err(Aborted) => Err(Error::Resource {
                what: format!(
                    "model counting exceeded its budget of {:.1}s",
                    self.cfg.budget.unwrap_or_default().as_secs_f64()
                ),
                stats: Some(stats),
            }),
        }
    }
}

/// Exact model count with the default configuration.
pub fn count_models(instance: &CnfInstance) -> Result<BigUint> {
    Counter::default().count(instance).map(|c| c.count)
}

/// Counts the families of `variant` over `n` variables by `method`.
pub fn count_variant(
    n: usize,
    variant: Variant,
    method: Method,
    cfg: &CounterConfig,
) -> Result<CountReport> {
    let start = Instant::now();
    let (count, stats) = match method {
        Method::Dpll => dpll(n, variant, cfg)?,
        Method::BruteForce => (
            BigUint::from(oracle::brute_count_with(n, variant, cfg.threads)?),
            CountStats::default(),
        ),
        Method::Identity => identity_derived(n, variant, cfg)?,
        Method::External => {
            let ext = cfg.external.as_ref().ok_or_else(|| {
                Error::Input(format!(
                    "no external counter configured (use --external-cmd or {EXTERNAL_CMD_ENV})"
                ))
            })?;
            (run_external(ext, &encode(n, variant)?)?, CountStats::default())
        }
    };
    Ok(CountReport {
        variant,
        n,
        method,
        count,
        elapsed_secs: start.elapsed().as_secs_f64(),
        stats,
    })
}

fn dpll(n: usize, variant: Variant, cfg: &CounterConfig) -> Result<(BigUint, CountStats)> {
    let c = Counter::new(cfg.clone()).count(&encode(n, variant)?)?;
    Ok((c.count, c.stats))
}

fn add_stats(a: CountStats, b: CountStats) -> CountStats {
    CountStats {
        decisions: a.decisions + b.decisions,
        propagations: a.propagations + b.propagations,
        components: a.components + b.components,
        cache_hits: a.cache_hits + b.cache_hits,
    }
}

/// Derives a variant from DPLL counts of a different variant:
/// `H0 = 2 H`, `H01 = 2 H1`, `H1(n) = sum_k C(n,k) H(k)`, `H = H0 / 2`.
fn identity_derived(
    n: usize,
    variant: Variant,
    cfg: &CounterConfig,
) -> Result<(BigUint, CountStats)> {
    match variant {
        Variant::H0 => {
            let (h, s) = dpll(n, Variant::H, cfg)?;
            Ok((identities::doubling(&h), s))
        }
        Variant::H01 => {
            let (h1, s) = dpll(n, Variant::H1, cfg)?;
            Ok((identities::doubling(&h1), s))
        }
        Variant::H1 => {
            let mut base = Vec::with_capacity(n + 1);
            let mut stats = CountStats::default();
            for k in 0..=n {
                let (h, s) = dpll(k, Variant::H, cfg)?;
                base.push(h);
                stats = add_stats(stats, s);
            }
            Ok((identities::binomial_sum(&base), stats))
        }
        Variant::H => {
            let (h0, s) = dpll(n, Variant::H0, cfg)?;
            Ok((identities::halving(&h0)?, s))
        }
    }
}

/// Writes `instance` to a temporary DIMACS file, runs the configured
/// command on it and parses the count from its output.
pub fn run_external(ext: &ExternalCounter, instance: &CnfInstance) -> Result<BigUint> {
    let pattern = Regex::new(&ext.pattern)
        .map_err(|e| Error::Input(format!("bad external output pattern: {e}")))?;
    let mut file = tempfile::Builder::new().suffix(".cnf").tempfile()?;
    std::io::Write::write_all(&mut file, emit_dimacs(instance).as_bytes())?;
    let output = run_command(&ext.template, file.path())?;
    let text = format!(
        "{}{}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
    if !output.status.success() {
        return Err(Error::External {
            message: format!("command exited with {}", output.status),
            output: text,
        });
    }
    let stdout = String::from_utf8_lossy(&output.stdout);
    let found = stdout
        .lines()
        .filter_map(|line| pattern.captures(line))
        .filter_map(|caps| caps.get(1).map(|m| m.as_str().to_string()))
        .next_back();
    found
        .and_then(|s| BigUint::parse_bytes(s.as_bytes(), 10))
        .ok_or_else(|| Error::External {
            message: "no model count found in the command output".into(),
            output: text,
        })
}

fn run_command(template: &str, path: &Path) -> Result<std::process::Output> {
    let quoted = format!("'{}'", path.display().to_string().replace('\'', r"'\''"));
    let cmd = if template.contains("{}") {
        template.replace("{}", &quoted)
    } else {
        format!("{template} {quoted}")
    };
    Command::new("sh")
        .arg("-c")
        .arg(&cmd)
        .output()
        .map_err(|e| Error::External {
            message: format!("failed to run `{cmd}`: {e}"),
            output: String::new(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoder::Lit;

    fn cnf(num_vars: u32, clauses: &[&[i32]]) -> CnfInstance {
        CnfInstance::new(
            num_vars,
            clauses
                .iter()
                .map(|c| c.iter().map(|&l| Lit::new(l).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(count_models(&encode(2, Variant::H01).unwrap()).unwrap(), 14u32.into());
        assert_eq!(count_models(&encode(2, Variant::H1).unwrap()).unwrap(), 7u32.into());
        assert_eq!(count_models(&cnf(5, &[])).unwrap(), 32u32.into());
        assert_eq!(count_models(&cnf(1, &[&[1], &[-1]])).unwrap(), BigUint::zero());
        assert_eq!(count_models(&cnf(0, &[])).unwrap(), BigUint::one());
    }

    #[test]
    fn degenerate_clauses() {
        // tautology, duplicate literal, empty clause
        assert_eq!(count_models(&cnf(2, &[&[1, -1]])).unwrap(), 4u32.into());
        assert_eq!(count_models(&cnf(2, &[&[1, 1, 2]])).unwrap(), 3u32.into());
        assert_eq!(count_models(&cnf(2, &[&[]])).unwrap(), BigUint::zero());
    }

    #[test]
    fn budget_exceeded_is_an_error() {
        let cfg = CounterConfig {
            budget: Some(Duration::ZERO),
            threads: 1,
            ..CounterConfig::default()
        };
        let err = Counter::new(cfg).count(&encode(4, Variant::H).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Resource { stats: Some(_), .. }), "{err}");
    }

    #[test]
    fn method_names() {
        for m in [Method::Dpll, Method::BruteForce, Method::Identity, Method::External] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("magic".parse::<Method>().is_err());
    }

    #[test]
    fn identity_method() {
        let cfg = CounterConfig::sequential();
        let r = count_variant(3, Variant::H0, Method::Identity, &cfg).unwrap();
        assert_eq!(r.count, 90u32.into());
        let r = count_variant(2, Variant::H01, Method::Identity, &cfg).unwrap();
        assert_eq!(r.count, 14u32.into());
        let r = count_variant(3, Variant::H, Method::Identity, &cfg).unwrap();
        assert_eq!(r.count, 45u32.into());
        let r = count_variant(3, Variant::H1, Method::Identity, &cfg).unwrap();
        assert_eq!(r.count, 61u32.into());
    }

    #[test]
    fn external_requires_configuration() {
        let err = count_variant(2, Variant::H, Method::External, &CounterConfig::default())
            .unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn external_output_parsing() {
        let ext = ExternalCounter::new("echo 'c noise'; echo 's mc 14'; true");
        let c = encode(2, Variant::H01).unwrap();
        assert_eq!(run_external(&ext, &c).unwrap(), 14u32.into());

        let ext = ExternalCounter::new("grep -c '^-' {} >/dev/null; echo 123 #");
        assert_eq!(run_external(&ext, &c).unwrap(), 123u32.into());

        let ext = ExternalCounter::new("echo 7; exit 3; true");
        assert!(matches!(run_external(&ext, &c), Err(Error::External { .. })));

        let ext = ExternalCounter::new("echo unsure; true");
        match run_external(&ext, &c) {
            Err(Error::External { output, .. }) => assert!(output.contains("unsure")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn report_json_round_trip() {
        let r = count_variant(3, Variant::H1, Method::Dpll, &CounterConfig::sequential()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""count":"61""#), "{text}");
        let back: CountReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
