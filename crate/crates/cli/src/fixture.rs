//! Fixture documents: one JSON file per ring/twist configuration, validated
//! on load.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use mn_core::ideal::{IdealKind, IdealSet};
use mn_core::ring::{check_ring_axioms, ring_make_with_cap, AxiomReport, DEFAULT_RING_CAP};
use mn_core::series::{
    check_associativity, check_twist_conditions, monomial_triples, random_triples, series_make, TwistCondition,
    TwistReport,
};
use mn_core::{Elem, ElemSet, FiniteRing, GroupElement, GroupSpec, OrderedGroup, RingSpec, Series, TwistSpec, TwistSystem};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::suite::Suite;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

/// A named ideal: members by element name (or id) and the closure kind.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub members: Vec<Value>,
    #[serde(default = "twosided")]
    pub kind: String,
}

fn twosided() -> String {
    "twosided".into()
}

/// `(U:X)` must equal `expect` exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientDoc {
    pub ideal: String,
    #[serde(rename = "X")]
    pub x: Vec<Value>,
    pub expect: Vec<Value>,
}

/// Generator series names for one SA transfer run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SaConfigDoc {
    #[serde(rename = "I")]
    pub i: Vec<String>,
    #[serde(rename = "J")]
    pub j: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    #[serde(default = "ring_cap")]
    pub ring: usize,
}

fn ring_cap() -> usize {
    DEFAULT_RING_CAP
}

impl Default for Caps {
    fn default() -> Self {
        Caps { ring: DEFAULT_RING_CAP }
    }
}

/// On-disk form of a fixture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixtureDoc {
    pub label: String,
    pub ring: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<TwistSpec>,
    #[serde(default)]
    pub ideals: BTreeMap<String, IdealDoc>,
    /// Name of the ideal `U` used by the zip suites.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zip_ideal: Option<String>,
    /// Series as `[[exponent, coefficient], ...]`.
    #[serde(default)]
    pub series: BTreeMap<String, Vec<(GroupElement, Value)>>,
    #[serde(default)]
    pub suites: Vec<Suite>,
    /// Suites whose preconditions the fixture asserts; a refusal fails them.
    #[serde(default)]
    pub claims: Vec<Suite>,
    /// Expected verdicts by property name.
    #[serde(default)]
    pub expect: BTreeMap<String, bool>,
    #[serde(default)]
    pub quotients: Vec<QuotientDoc>,
    /// Named series sets for the series-level zip check.
    #[serde(default)]
    pub zip_sets: Vec<Vec<String>>,
    #[serde(default)]
    pub sa_configs: Vec<SaConfigDoc>,
    #[serde(default)]
    pub caps: Caps,
}

/// Load-time checks, kept for `mn validate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Validation {
    pub axioms: AxiomReport,
    pub twist: TwistReport,
    pub associativity_triples: usize,
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub doc: FixtureDoc,
    pub ring: Arc<FiniteRing>,
    pub twist: Arc<TwistSystem>,
    pub ideals: BTreeMap<String, IdealSet>,
    pub series: BTreeMap<String, Series>,
    pub validation: Option<Validation>,
}

/// Seed and count for the load-time associativity sample.
pub const VALIDATION_SEED: u64 = 0;
pub const VALIDATION_TRIPLES: usize = 1000;

/// Twist-condition window radius per group rank.
pub fn validation_window(group: OrderedGroup) -> Vec<GroupElement> {
    if group.rank() == 1 {
        group.window(-3, 3)
    } else {
        group.window(-2, 2)
    }
}

/// Replaces `{"kind": "table", "file": path}` with the parsed table,
/// resolving the path against the fixture's directory.
fn resolve_tables(v: &mut Value, base: &Path) -> Result<(), FixtureError> {
    if let Value::Object(map) = v {
        if map.get("kind").and_then(Value::as_str) == Some("table") {
            if let Some(file) = map.remove("file") {
                let rel = file.as_str().ok_or_else(|| FixtureError::Parse("table file must be a string".into()))?;
                let path = base.join(rel);
                let text = std::fs::read_to_string(&path).map_err(|source| FixtureError::Io { path, source })?;
                let table: Value = serde_json::from_str(&text).map_err(|e| FixtureError::Parse(e.to_string()))?;
                map.insert("table".into(), table);
            }
        }
        for child in map.values_mut() {
            resolve_tables(child, base)?;
        }
    }
    Ok(())
}

fn elem_of(ring: &FiniteRing, v: &Value) -> Result<Elem, FixtureError> {
    let bad = || FixtureError::Validation(format!("unknown element {v} in {}", ring.label()));
    match v {
        Value::String(s) => ring.element_named(s).ok_or_else(bad),
        Value::Number(n) => n.as_u64().map(|n| n as Elem).filter(|&n| n < ring.size()).ok_or_else(bad),
        _ => Err(bad()),
    }
}

/// Resolves a list of element names or ids.
pub fn set_of(ring: &FiniteRing, vs: &[Value]) -> Result<ElemSet, FixtureError> {
    let mut s = ring.empty_set();
    for v in vs {
        s.insert(elem_of(ring, v)?);
    }
    Ok(s)
}

fn kind_of(s: &str) -> Result<IdealKind, FixtureError> {
    match s {
        "left" => Ok(IdealKind::Left),
        "right" => Ok(IdealKind::Right),
        "twosided" => Ok(IdealKind::Twosided),
        "subset" => Ok(IdealKind::Subset),
        other => Err(FixtureError::Parse(format!("unknown ideal kind {other:?}"))),
    }
}

/// Reads and fully validates a fixture.
pub fn load_fixture(path: &Path) -> Result<Fixture, FixtureError> {
    let fixture = load_fixture_unchecked(path)?;
    let validation = validate(&fixture)?;
    Ok(Fixture { validation: Some(validation), ..fixture })
}

/// Reads a fixture, resolving references but skipping the ring and twist
/// law checks.
pub fn load_fixture_unchecked(path: &Path) -> Result<Fixture, FixtureError> {
    let text = std::fs::read_to_string(path).map_err(|source| FixtureError::Io { path: path.to_path_buf(), source })?;
    let mut doc: FixtureDoc = serde_json::from_str(&text).map_err(|e| FixtureError::Parse(e.to_string()))?;
    resolve_tables(&mut doc.ring, path.parent().unwrap_or(Path::new(".")))?;
    from_doc(doc)
}

/// Builds a fixture from an in-memory document without law checks.
pub fn from_doc(doc: FixtureDoc) -> Result<Fixture, FixtureError> {
    let spec: RingSpec = serde_json::from_value(doc.ring.clone()).map_err(|e| FixtureError::Parse(e.to_string()))?;
    let ring = Arc::new(ring_make_with_cap(&spec, doc.caps.ring).map_err(|e| FixtureError::Validation(e.to_string()))?);
    build(doc, ring)
}

fn build(doc: FixtureDoc, ring: Arc<FiniteRing>) -> Result<Fixture, FixtureError> {
    let invalid = |e: mn_core::Error| FixtureError::Validation(e.to_string());
    let group = match &doc.group {
        Some(g) => OrderedGroup::from_spec(g).map_err(invalid)?,
        None => OrderedGroup::Integers,
    };
    let twist = Arc::new(TwistSystem::new(&ring, group, doc.twist.clone().unwrap_or_else(TwistSpec::trivial)).map_err(invalid)?);
    let mut ideals = BTreeMap::new();
    for (name, d) in &doc.ideals {
        let members = set_of(&ring, &d.members)?;
        let ideal = IdealSet::checked(&ring, members, kind_of(&d.kind)?).map_err(invalid)?;
        ideals.insert(name.clone(), ideal);
    }
    let mut series = BTreeMap::new();
    for (name, terms) in &doc.series {
        let pairs = terms.iter().map(|(x, c)| Ok((x.clone(), elem_of(&ring, c)?))).collect::<Result<Vec<_>, FixtureError>>()?;
        series.insert(name.clone(), series_make(&twist, pairs).map_err(invalid)?);
    }
    let known = |n: &String| series.contains_key(n);
    let refs_ok = doc.zip_sets.iter().flatten().all(known)
        && doc.sa_configs.iter().all(|c| c.i.iter().chain(&c.j).all(known))
        && doc.zip_ideal.as_ref().map_or(true, |u| ideals.contains_key(u))
        && doc.quotients.iter().all(|q| ideals.contains_key(&q.ideal));
    if !refs_ok {
        return Err(FixtureError::Validation("fixture references an undefined ideal or series".into()));
    }
    Ok(Fixture { doc, ring, twist, ideals, series, validation: None })
}

/// Ring axioms, twist conditions on the validation window, and seeded
/// associativity on monomial and random triples.
pub fn validate(f: &Fixture) -> Result<Validation, FixtureError> {
    let axioms = check_ring_axioms(&f.ring);
    if let Some(o) = axioms.failures().next() {
        let w: Vec<&str> = o.witness.iter().flatten().map(|&e| f.ring.name(e)).collect();
        return Err(FixtureError::Validation(format!("ring violates {} at ({})", o.axiom, w.join(", "))));
    }
    let group = f.twist.group();
    let window = validation_window(group);
    let twist = check_twist_conditions(&f.twist, &window).map_err(|e| FixtureError::Validation(e.to_string()))?;
    let small = group.window(0, 2);
    let mono = check_associativity(monomial_triples(&f.twist, &small)).map_err(|e| FixtureError::Validation(e.to_string()))?;
    let rand = check_associativity(random_triples(&f.twist, &window, 3, VALIDATION_TRIPLES, VALIDATION_SEED))
        .map_err(|e| FixtureError::Validation(e.to_string()))?;
    let mut problems = Vec::new();
    if let Some((a, b, c)) = mono.failure.or(rand.failure) {
        problems.push(format!("associativity fails at ({a}) ({b}) ({c})"));
    }
    for c in [TwistCondition::StandardCocycle, TwistCondition::StandardAction] {
        if let Some(w) = &twist.outcome(c).witness {
            let exps: Vec<String> = w.exponents.iter().map(|x| x.to_string()).collect();
            let elem = w.element.map(|e| format!(" with r = {}", f.ring.name(e))).unwrap_or_default();
            let name = serde_json::to_value(c).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            problems.push(format!("{name} fails at ({}){elem}", exps.join(", ")));
        }
    }
    if !problems.is_empty() {
        return Err(FixtureError::Validation(problems.join("; ")));
    }
    Ok(Validation { axioms, twist, associativity_triples: mono.checked + rand.checked })
}

impl Fixture {
    pub fn label(&self) -> &str {
        &self.doc.label
    }

    /// The same fixture over a replacement ring, unvalidated. The twist is
    /// rebuilt when its spec still applies and is trivial otherwise.
    pub fn with_ring(&self, ring: FiniteRing) -> Result<Fixture, FixtureError> {
        let ring = Arc::new(ring);
        let mut doc = self.doc.clone();
        let group = self.twist.group();
        if TwistSystem::new(&ring, group, doc.twist.clone().unwrap_or_else(TwistSpec::trivial)).is_err() {
            doc.twist = None;
        }
        doc.ideals.retain(|_, d| {
            set_of(&ring, &d.members).is_ok_and(|m| IdealSet::checked(&ring, m, kind_of(&d.kind).unwrap_or(IdealKind::Subset)).is_ok())
        });
        doc.zip_ideal = doc.zip_ideal.filter(|u| doc.ideals.contains_key(u));
        doc.quotients.retain(|q| doc.ideals.contains_key(&q.ideal));
        build(doc, ring)
    }

    /// Suites claimed applicable.
    pub fn claims(&self) -> BTreeSet<Suite> {
        self.doc.claims.iter().copied().collect()
    }

    /// The zip ideal `U`, if named.
    pub fn zip_ideal(&self) -> Option<&IdealSet> {
        self.doc.zip_ideal.as_ref().and_then(|u| self.ideals.get(u))
    }

    pub fn series_named(&self, names: &[String]) -> Vec<Series> {
        names.iter().map(|n| self.series[n].clone()).collect()
    }
}

/// Directory of the fixtures shipped with this crate.
pub fn shipped_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Paths of every shipped (valid) fixture, sorted.
pub fn shipped_fixtures() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(shipped_dir())
        .map(|rd| {
            rd.filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect()
        })
        .unwrap_or_default();
    out.sort();
    out
}
