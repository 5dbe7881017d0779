//! The formation calculus: symmetric coverings, local definitions,
//! membership in the locally defined class via chief factors, the
//! perfect-core shortcut, Sylow-normalizer closure testing, and
//! lattice-formation (direct product) membership.
//!
//! Prime sets are always explicit finite sets: classes that conceptually
//! range over all primes (like "solvable with order avoiding 2") are
//! represented inside a caller-chosen finite prime window covering every
//! group under test.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::is_prime;
use crate::group::{Caps, PermGroup};
use crate::perm::prime_divisors;
use crate::subgroup::{
    action_kernel_on_factor, chief_series, is_solvable, normalizer, perfect_core, quotient, sylow,
};

fn fmt_set(set: &[u64]) -> String {
    let body: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", body.join(","))
}

/// A family of prime blocks `π(p)` indexed by the primes `p` of a base set
/// `π`. Symmetry (the three covering conditions) is checked separately by
/// [`validate_symmetric`], so a malformed covering can be constructed and
/// then reported on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    pi: Vec<u64>,
    blocks: BTreeMap<u64, Vec<u64>>,
}

impl Covering {
    /// Build a covering from the base set and one block per base prime.
    /// Sorts and dedups; requires every listed number to be prime and the
    /// block keys to be exactly the base set.
    pub fn new(pi: Vec<u64>, blocks: Vec<(u64, Vec<u64>)>) -> Result<Covering> {
        let mut base = pi;
        base.sort_unstable();
        base.dedup();
        for &p in &base {
            if !is_prime(p) {
                return Err(Error::Precondition(format!(
                    "covering: base set entry {p} is not prime"
                )));
            }
        }
        let mut map = BTreeMap::new();
        for (p, block) in blocks {
            let mut block = block;
            block.sort_unstable();
            block.dedup();
            for &q in &block {
                if !is_prime(q) {
                    return Err(Error::Precondition(format!(
                        "covering: block entry {q} is not prime"
                    )));
                }
            }
            if map.insert(p, block).is_some() {
                return Err(Error::Precondition(format!(
                    "covering: duplicate block for {p}"
                )));
            }
        }
        let keys: Vec<u64> = map.keys().copied().collect();
        if keys != base {
            return Err(Error::Precondition(format!(
                "covering: blocks are keyed by {} but the base set is {}",
                fmt_set(&keys),
                fmt_set(&base)
            )));
        }
        Ok(Covering {
            pi: base,
            blocks: map,
        })
    }

    /// The base prime set, ascending.
    pub fn pi(&self) -> &[u64] {
        &self.pi
    }

    /// The block `π(p)`, if `p` is in the base set.
    pub fn block(&self, p: u64) -> Option<&[u64]> {
        self.blocks.get(&p).map(Vec::as_slice)
    }

    /// `(p, π(p))` pairs, ascending in `p`.
    pub fn blocks(&self) -> impl Iterator<Item = (u64, &[u64])> {
        self.blocks.iter().map(|(&p, b)| (p, b.as_slice()))
    }
}

/// Result of checking the three symmetry conditions on a covering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub ok: bool,
    /// One line per violation, naming the condition and offending primes.
    pub violations: Vec<String>,
}

/// Check the covering conditions: (i) the blocks union to the base set,
/// (ii) each `p` lies in its own block, (iii) `q ∈ π(p)` implies
/// `p ∈ π(q)`. Violations are reported per condition.
pub fn validate_symmetric(c: &Covering) -> SymmetryReport {
    let mut violations = Vec::new();

    let mut union: Vec<u64> = c.blocks().flat_map(|(_, b)| b.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    if union != c.pi {
        violations.push(format!(
            "condition (i): blocks union to {}, expected {}",
            fmt_set(&union),
            fmt_set(&c.pi)
        ));
    }
    for (p, block) in c.blocks() {
        if !block.contains(&p) {
            violations.push(format!("condition (ii): {p} is missing from its own block"));
        }
    }
    for (p, block) in c.blocks() {
        for &q in block {
            if q == p {
                continue;
            }
            if let Some(qblock) = c.block(q) {
                if !qblock.contains(&p) {
                    violations.push(format!("condition (iii): {q} ∈ π({p}) but {p} ∉ π({q})"));
                }
            }
        }
    }
    SymmetryReport {
        ok: violations.is_empty(),
        violations,
    }
}

fn require_symmetric(c: &Covering) -> Result<()> {
    let report = validate_symmetric(c);
    if report.ok {
        Ok(())
    } else {
        Err(Error::NotSymmetric(report.violations.join("; ")))
    }
}

/// True iff the distinct blocks of a symmetric covering are pairwise
/// equal-or-disjoint, i.e. they partition the base set.
pub fn is_partition(c: &Covering) -> Result<bool> {
    require_symmetric(c)?;
    let blocks: Vec<&[u64]> = c.blocks().map(|(_, b)| b).collect();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if a == b {
                continue;
            }
            if a.iter().any(|x| b.contains(x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A group class usable as the value of a local definition at one prime:
/// the empty class, all groups with primes inside a set, or the solvable
/// ones among those. The prime sets of the non-empty variants must be
/// nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Empty,
    AllPi(Vec<u64>),
    SolvablePi(Vec<u64>),
}

impl ClassSpec {
    fn checked(self) -> Result<ClassSpec> {
        let set = match &self {
            ClassSpec::Empty => return Ok(self),
            ClassSpec::AllPi(s) | ClassSpec::SolvablePi(s) => s,
        };
        if set.is_empty() {
            return Err(Error::Precondition(
                "class spec: prime set must be nonempty".to_string(),
            ));
        }
        for &q in set {
            if !is_prime(q) {
                return Err(Error::Precondition(format!("class spec: {q} is not prime")));
            }
        }
        Ok(self)
    }
}

/// Is `G` a member of the class? The empty class contains only the trivial
/// group (formations always contain it); the π-classes test `π(G)` against
/// the set, the solvable variant additionally runs the derived series.
pub fn class_membership(spec: &ClassSpec, g: &PermGroup, cap: u128) -> Result<bool> {
    let within = |set: &[u64]| g.pi().iter().all(|p| set.contains(p));
    Ok(match spec {
        ClassSpec::Empty => g.is_trivial(),
        ClassSpec::AllPi(set) => within(set),
        ClassSpec::SolvablePi(set) => within(set) && is_solvable(g, cap)?,
    })
}

/// A prime-indexed family of class specs with a default for unlisted
/// primes (normally [`ClassSpec::Empty`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDefinition {
    default: ClassSpec,
    map: BTreeMap<u64, ClassSpec>,
}

impl LocalDefinition {
    pub fn new(default: ClassSpec, map: Vec<(u64, ClassSpec)>) -> Result<LocalDefinition> {
        let default = default.checked()?;
        let mut out = BTreeMap::new();
        for (p, spec) in map {
            if !is_prime(p) {
                return Err(Error::Precondition(format!(
                    "local definition: key {p} is not prime"
                )));
            }
            if out.insert(p, spec.checked()?).is_some() {
                return Err(Error::Precondition(format!(
                    "local definition: duplicate key {p}"
                )));
            }
        }
        Ok(LocalDefinition { default, map: out })
    }

    /// The class spec at `q` (the default when `q` is unlisted).
    pub fn spec_for(&self, q: u64) -> &ClassSpec {
        self.map.get(&q).unwrap_or(&self.default)
    }

    pub fn default_spec(&self) -> &ClassSpec {
        &self.default
    }

    pub fn entries(&self) -> impl Iterator<Item = (u64, &ClassSpec)> {
        self.map.iter().map(|(&p, s)| (p, s))
    }
}

/// The local definition a symmetric covering induces: `p ↦ AllPi(π(p))`
/// for base primes, everything else empty.
pub fn local_definition_from_covering(c: &Covering) -> Result<LocalDefinition> {
    require_symmetric(c)?;
    LocalDefinition::new(
        ClassSpec::Empty,
        c.blocks()
            .map(|(p, b)| (p, ClassSpec::AllPi(b.to_vec())))
            .collect(),
    )
}

/// Intersect a local definition with solvability: every `AllPi` value
/// becomes `SolvablePi` over the same set.
pub fn with_solvable_intersection(f: &LocalDefinition) -> LocalDefinition {
    let solvable = |spec: &ClassSpec| match spec {
        ClassSpec::AllPi(s) => ClassSpec::SolvablePi(s.clone()),
        other => other.clone(),
    };
    LocalDefinition {
        default: solvable(&f.default),
        map: f.map.iter().map(|(&p, s)| (p, solvable(s))).collect(),
    }
}

/// The local definition of the one-formation family used by the
/// perfect-core shortcut: over a window `pi` with a distinguished `p ∈ pi`,
/// `f(p)` is the solvable `pi`-groups, `f(q)` for the other `q ∈ pi` is all
/// `pi`-groups, and everything else is empty.
pub fn fundamental_local_definition(pi: &[u64], p: u64) -> Result<LocalDefinition> {
    if !pi.contains(&p) {
        return Err(Error::Precondition(format!(
            "fundamental local definition: {p} is not in the window {}",
            fmt_set(pi)
        )));
    }
    let window = pi.to_vec();
    LocalDefinition::new(
        ClassSpec::Empty,
        pi.iter()
            .map(|&q| {
                let spec = if q == p {
                    ClassSpec::SolvablePi(window.clone())
                } else {
                    ClassSpec::AllPi(window.clone())
                };
                (q, spec)
            })
            .collect(),
    )
}

/// One chief-factor test inside an [`LfReport`]: the prime `q` dividing the
/// factor, the order of `G` modulo the factor's action kernel, and whether
/// that quotient lies in `f(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfTraceRow {
    pub factor_index: usize,
    pub factor_order: u128,
    pub q: u64,
    pub quotient_order: u128,
    pub passed: bool,
}

/// Verdict and per-(factor, prime) trace of a local-formation membership
/// test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfReport {
    pub member: bool,
    pub trace: Vec<LfTraceRow>,
}

/// Membership of `G` in the class the local definition `f` cuts out: for
/// every chief factor `H/K` of `G` and every prime `q` dividing `|H/K|`,
/// the quotient of `G` by the factor's action kernel must lie in `f(q)`.
/// An empty `f(q)` forbids the factor outright — no group, trivial or not,
/// is accepted there; the trivial group itself passes vacuously, having no
/// chief factors.
pub fn lf_membership(f: &LocalDefinition, g: &PermGroup, caps: &Caps) -> Result<LfReport> {
    let series = chief_series(g, caps)?;
    let mut trace = Vec::new();
    let mut member = true;
    for (i, factor) in series.factors().iter().enumerate() {
        let below = &series.terms()[i];
        let above = &series.terms()[i + 1];
        let kernel = action_kernel_on_factor(g, above, below, caps.exhaustive)?;
        let qm = quotient(g, &kernel, caps.quotient)?;
        let acting = qm.quotient();
        for &q in &factor.primes {
            let passed = match f.spec_for(q) {
                ClassSpec::Empty => false,
                spec => class_membership(spec, acting, caps.exhaustive)?,
            };
            member &= passed;
            trace.push(LfTraceRow {
                factor_index: i,
                factor_order: factor.order,
                q,
                quotient_order: acting.order(),
                passed,
            });
        }
    }
    Ok(LfReport { member, trace })
}

/// The perfect-core shortcut for the fundamental family: `G` belongs iff
/// `G` is a `pi`-group and `p` does not divide `|G^∞|`.
pub fn lemma1_membership(pi: &[u64], p: u64, g: &PermGroup, cap: u128) -> Result<bool> {
    if !pi.contains(&p) {
        return Err(Error::Precondition(format!(
            "lemma1: {p} is not in the window {}",
            fmt_set(pi)
        )));
    }
    if !g.pi().iter().all(|q| pi.contains(q)) {
        return Ok(false);
    }
    Ok(perfect_core(g, cap)?.order() % p as u128 != 0)
}

/// One Sylow-normalizer test inside an N-closure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NClosureRow {
    pub p: u64,
    pub normalizer_order: u128,
    pub passed: bool,
}

/// Verdict and per-prime trace of an N-closure test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NClosureReport {
    pub all_pass: bool,
    pub rows: Vec<NClosureRow>,
}

/// Evaluate a membership predicate on every Sylow-normalizer `N_G(G_p)`,
/// `p ∈ π(G)`: true iff all of them satisfy it (vacuously true for the
/// trivial group).
pub fn n_closure_test<F>(g: &PermGroup, cap: u128, mut predicate: F) -> Result<NClosureReport>
where
    F: FnMut(&PermGroup) -> Result<bool>,
{
    let mut rows = Vec::new();
    for p in g.pi() {
        let syl = sylow(g, p, cap)?;
        let n = normalizer(g, &syl, cap)?;
        let passed = predicate(n.group())?;
        rows.push(NClosureRow {
            p,
            normalizer_order: n.order(),
            passed,
        });
    }
    Ok(NClosureReport {
        all_pass: rows.iter().all(|r| r.passed),
        rows,
    })
}

/// Membership in the lattice formation of a partition covering: `G` must be
/// a `π`-group whose elements split by block — for each block meeting
/// `π(G)`, the elements with orders supported on that block must already
/// form a subgroup, the block subgroups must commute elementwise, and their
/// orders must multiply up to `|G|` (making `G` their direct product).
pub fn lattice_formation_membership(c: &Covering, g: &PermGroup, cap: u128) -> Result<bool> {
    if !is_partition(c)? {
        return Err(Error::NotPartition);
    }
    let gpi = g.pi();
    if !gpi.iter().all(|p| c.pi.contains(p)) {
        return Ok(false);
    }
    let mut seen_blocks: Vec<&[u64]> = Vec::new();
    for (_, block) in c.blocks() {
        if !seen_blocks.contains(&block) && block.iter().any(|q| gpi.contains(q)) {
            seen_blocks.push(block);
        }
    }
    let elems = g.elements(cap)?;
    let mut product: u128 = 1;
    let mut block_groups: Vec<PermGroup> = Vec::new();
    for block in &seen_blocks {
        let members: Vec<&crate::perm::Permutation> = elems
            .iter()
            .filter(|x| prime_divisors(x.order()).iter().all(|q| block.contains(q)))
            .collect();
        let sub = crate::group::group_from_stream(g.degree(), members.iter().copied())?;
        if sub.order() != members.len() as u128 {
            return Ok(false); // block elements do not close under products
        }
        product = product.checked_mul(sub.order()).ok_or(Error::Overflow)?;
        block_groups.push(sub);
    }
    for (i, a) in block_groups.iter().enumerate() {
        for b in &block_groups[i + 1..] {
            for x in a.generators() {
                for y in b.generators() {
                    if x.compose_fast(y) != y.compose_fast(x) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(product == g.order())
}

/// A parsed formation spec file: either a covering or a local definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormationSpec {
    Covering(Covering),
    Local(LocalDefinition),
}

fn json_prime_list(value: &serde_json::Value, what: &str) -> Result<Vec<u64>> {
    let arr = value
        .as_array()
        .ok_or_else(|| Error::SpecFile(format!("{what} must be an array of primes")))?;
    arr.iter()
        .map(|v| {
            v.as_u64()
                .ok_or_else(|| Error::SpecFile(format!("{what} holds a non-integer")))
        })
        .collect()
}

fn json_class_spec(value: &serde_json::Value) -> Result<ClassSpec> {
    if let Some(s) = value.as_str() {
        return match s {
            "empty" => Ok(ClassSpec::Empty),
            other => Err(Error::SpecFile(format!(
                "unknown class spec string {other:?} (expected \"empty\")"
            ))),
        };
    }
    let obj = value
        .as_object()
        .ok_or_else(|| Error::SpecFile("class spec must be a string or object".to_string()))?;
    let kind = obj
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::SpecFile("class spec object needs a \"kind\" string".to_string()))?;
    match kind {
        "empty" => Ok(ClassSpec::Empty),
        "all_pi" | "solvable_pi" => {
            let set = json_prime_list(
                obj.get("pi")
                    .ok_or_else(|| Error::SpecFile(format!("class spec {kind:?} needs \"pi\"")))?,
                "class spec \"pi\"",
            )?;
            let spec = if kind == "all_pi" {
                ClassSpec::AllPi(set)
            } else {
                ClassSpec::SolvablePi(set)
            };
            spec.checked().map_err(|e| Error::SpecFile(e.to_string()))
        }
        other => Err(Error::SpecFile(format!(
            "unknown class spec kind {other:?}"
        ))),
    }
}

/// Parse a formation spec file: `{"pi":[…],"blocks":{…}}` is a covering,
/// `{"default":…,"map":{…}}` is a local definition.
pub fn parse_formation_spec(text: &str) -> Result<FormationSpec> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::SpecFile(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::SpecFile("spec must be a JSON object".to_string()))?;

    if obj.contains_key("blocks") {
        let pi = json_prime_list(
            obj.get("pi")
                .ok_or_else(|| Error::SpecFile("covering needs \"pi\"".to_string()))?,
            "\"pi\"",
        )?;
        let blocks_obj = obj["blocks"]
            .as_object()
            .ok_or_else(|| Error::SpecFile("\"blocks\" must be an object".to_string()))?;
        let mut blocks = Vec::new();
        for (key, val) in blocks_obj {
            let p: u64 = key
                .parse()
                .map_err(|_| Error::SpecFile(format!("block key {key:?} is not a prime")))?;
            blocks.push((p, json_prime_list(val, &format!("block of {p}"))?));
        }
        let covering = Covering::new(pi, blocks).map_err(|e| Error::SpecFile(e.to_string()))?;
        return Ok(FormationSpec::Covering(covering));
    }
    if obj.contains_key("map") {
        let default = match obj.get("default") {
            Some(v) => json_class_spec(v)?,
            None => ClassSpec::Empty,
        };
        let map_obj = obj["map"]
            .as_object()
            .ok_or_else(|| Error::SpecFile("\"map\" must be an object".to_string()))?;
        let mut map = Vec::new();
        for (key, val) in map_obj {
            let p: u64 = key
                .parse()
                .map_err(|_| Error::SpecFile(format!("map key {key:?} is not a prime")))?;
            map.push((p, json_class_spec(val)?));
        }
        let local =
            LocalDefinition::new(default, map).map_err(|e| Error::SpecFile(e.to_string()))?;
        return Ok(FormationSpec::Local(local));
    }
    Err(Error::SpecFile(
        "spec must contain \"blocks\" (covering) or \"map\" (local definition)".to_string(),
    ))
}
