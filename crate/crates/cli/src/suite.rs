//! Suite orchestration: each suite runs a group of checkers against one
//! fixture and aggregates their reports.

use std::fmt;

use itertools::Itertools;
use mn_core::harness::{
    coefficient_extraction, lift_fusible_decomposition, lifted_annihilator_report, sa_transfer_report,
    series_zip_witness, TruncatedUniverse,
};
use mn_core::ideal::{
    classify, enumerate_ideals, is_semiprime_ideal, is_sigma_compatible_ideal, nil_radical, power_sequence,
    quotient_set, IdealKind, IdealSet,
};
use mn_core::props::{
    is_g_armendariz, is_in, is_left_fusible, is_right_nonsingular, is_sa, is_sigma_compatible_ring,
    is_sigma_u_zip, left_fusible_failure, quotient_claim_failure, sigma_u_zip_witness, zip_specializations,
};
use mn_core::report::{series_json, set_json};
use mn_core::ring::{check_automorphism, check_ring_axioms, Axiom};
use mn_core::series::{
    check_associativity, check_twist_conditions, embed_scalar, monomial_triples, random_series, random_triples,
    series_add, series_mul, twist_condition_holds, TwistCondition,
};
use mn_core::{Error, GroupElement, PropertyReport, Series};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::fixture::{set_of, validation_window, Fixture};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RingAxioms,
    Ideals,
    Properties,
    FusibleLift,
    AnnihilatorLift,
    SaTransfer,
    ZipTransfer,
    Examples,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::RingAxioms,
        Suite::Ideals,
        Suite::Properties,
        Suite::FusibleLift,
        Suite::AnnihilatorLift,
        Suite::SaTransfer,
        Suite::ZipTransfer,
        Suite::Examples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RingAxioms => "ring-axioms",
            Suite::Ideals => "ideals",
            Suite::Properties => "properties",
            Suite::FusibleLift => "fusible-lift",
            Suite::AnnihilatorLift => "annihilator-lift",
            Suite::SaTransfer => "sa-transfer",
            Suite::ZipTransfer => "zip-transfer",
            Suite::Examples => "examples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters shared by the sampling and universe-based suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    /// Exponent window `lo..=hi` overriding each suite's default.
    pub window: Option<(i32, i32)>,
    pub max_support: Option<usize>,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { window: None, max_support: None, seed: 0, samples: 100 }
    }
}

impl RunOptions {
    fn window(&self, f: &Fixture, lo: i32, hi: i32) -> Vec<GroupElement> {
        let (lo, hi) = self.window.unwrap_or((lo, hi));
        f.twist.group().window(lo, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One report inside a suite, with the verdict it was held to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    #[serde(flatten)]
    pub report: PropertyReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub fixture: String,
    pub suite: Suite,
    pub status: SuiteStatus,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.status == SuiteStatus::Fail
    }
}

struct Run<'a> {
    f: &'a Fixture,
    suite: Suite,
    checks: Vec<Check>,
    warnings: Vec<String>,
    refused: bool,
}

impl Run<'_> {
    fn push(&mut self, report: PropertyReport, expected: Option<bool>) {
        let ok = report.reverified && (!report.applicable || expected.map_or(true, |e| e == report.verdict));
        self.checks.push(Check { report, expected, ok });
    }

    /// A report whose verdict must be true unless the fixture says otherwise.
    fn check(&mut self, report: PropertyReport) {
        let expected = self.f.doc.expect.get(&report.property).copied().or(Some(true));
        self.push(report, expected);
    }

    /// A report compared only against the fixture's expectation, if any.
    fn observe(&mut self, report: PropertyReport) {
        let expected = self.f.doc.expect.get(&report.property).copied();
        self.push(report, expected);
    }

    /// A failed suite precondition: a warning, or a failure when claimed.
    fn refuse(&mut self, why: impl Into<String>) {
        let why = why.into();
        if self.f.claims().contains(&self.suite) {
            self.push(PropertyReport::new(format!("{}-preconditions", self.suite), false).note(why), Some(true));
        } else {
            self.warnings.push(format!("{} not applicable: {why}", self.suite));
            self.refused = true;
        }
    }

    /// Routes a checker error: size limits make the check inapplicable,
    /// anything else fails it.
    fn error(&mut self, property: &str, e: Error) {
        match e {
            Error::SizeCapExceeded { .. } | Error::BoundsTooLarge(_) => {
                self.observe(PropertyReport::not_applicable(property, e.to_string()));
            }
            Error::PreconditionFail(m) | Error::NotFusibleRing(m) | Error::NotSigmaCompatible(m) => self.refuse(m),
            Error::NotNormalized => self.refuse("twist is not normalized"),
            other => self.push(PropertyReport::new(property, false).note(other.to_string()), Some(true)),
        }
    }

    fn finish(self) -> SuiteReport {
        let status = if self.checks.iter().any(|c| !c.ok) {
            SuiteStatus::Fail
        } else if self.refused {
            SuiteStatus::NotApplicable
        } else {
            SuiteStatus::Pass
        };
        SuiteReport {
            fixture: self.f.label().to_string(),
            suite: self.suite,
            status,
            checks: self.checks,
            warnings: self.warnings,
        }
    }
}

/// Runs one suite. Deterministic in the fixture and options.
pub fn run_suite(f: &Fixture, suite: Suite, opts: &RunOptions) -> SuiteReport {
    let mut run = Run { f, suite, checks: Vec::new(), warnings: Vec::new(), refused: false };
    match suite {
        Suite::RingAxioms => ring_axioms(&mut run, opts),
        Suite::Ideals => ideals(&mut run),
        Suite::Properties => properties(&mut run, opts),
        Suite::FusibleLift => fusible_lift(&mut run, opts),
        Suite::AnnihilatorLift => annihilator_lift(&mut run, opts),
        Suite::SaTransfer => sa_transfer(&mut run, opts),
        Suite::ZipTransfer => zip_transfer(&mut run, opts),
        Suite::Examples => examples(&mut run),
    }
    run.finish()
}

/// Runs the fixture's suites (all suites when it lists none).
pub fn run_fixture(f: &Fixture, opts: &RunOptions) -> Vec<SuiteReport> {
    let suites: Vec<Suite> = if f.doc.suites.is_empty() { Suite::ALL.to_vec() } else { f.doc.suites.clone() };
    suites.into_iter().map(|s| run_suite(f, s, opts)).collect()
}

fn ring_axioms(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let ring = &f.ring;
    let axioms = check_ring_axioms(ring);
    let mut r = PropertyReport::new("ring-axioms", axioms.passed()).stat("axioms", Axiom::ALL.len());
    if let Some(o) = axioms.failures().next() {
        let tuple = o.witness.clone().unwrap_or_default();
        let names: Vec<&str> = tuple.iter().map(|&e| ring.name(e)).collect();
        r = r.witness(json!({"axiom": o.axiom, "tuple": names})).reverified(!o.axiom.holds_at(ring, &tuple));
    }
    run.check(r);

    let gens = f.twist.sigma_generators();
    let bad = gens.iter().position(|s| check_automorphism(ring, s.map().to_vec()).is_err());
    let mut r = PropertyReport::new("automorphisms", bad.is_none()).stat("generators", gens.len());
    if let Some(i) = bad {
        let e = check_automorphism(ring, gens[i].map().to_vec()).err().map(|e| e.to_string());
        r = r.witness(json!({"generator": i, "reason": e}));
    }
    run.check(r);

    let window = validation_window(f.twist.group());
    match check_twist_conditions(&f.twist, &window) {
        Ok(t) => {
            let mut r = PropertyReport::new("twist-conditions", t.standard_passed())
                .certificate(json!(t
                    .outcomes
                    .iter()
                    .map(|o| (serde_json::to_value(o.condition).unwrap_or_default().as_str().unwrap_or("").to_string(), o.witness.is_none()))
                    .collect::<std::collections::BTreeMap<_, _>>()))
                .bounds(json!({"window": window}));
            let failing = [TwistCondition::StandardCocycle, TwistCondition::StandardAction]
                .into_iter()
                .find_map(|c| t.outcome(c).witness.clone().map(|w| (c, w)));
            if let Some((c, w)) = failing {
                let again = twist_condition_holds(&f.twist, c, &w).unwrap_or(true);
                r = r
                    .witness(json!({
                        "condition": c,
                        "exponents": w.exponents,
                        "element": w.element.map(|e| ring.name(e).to_string()),
                    }))
                    .reverified(!again);
            }
            run.check(r);
        }
        Err(e) => run.error("twist-conditions", e),
    }

    let small = f.twist.group().window(0, 2);
    let triples = monomial_triples(&f.twist, &small)
        .chain(random_triples(&f.twist, &window, opts.max_support.unwrap_or(3), crate::fixture::VALIDATION_TRIPLES, opts.seed));
    match check_associativity(triples) {
        Ok(a) => {
            let mut r = PropertyReport::new("associativity", a.passed()).stat("triples", a.checked);
            if let Some((x, y, z)) = &a.failure {
                let differs = || -> mn_core::Result<bool> {
                    Ok(series_mul(&series_mul(x, y)?, z)? != series_mul(x, &series_mul(y, z)?)?)
                };
                r = r
                    .witness(json!({"f": series_json(x), "g": series_json(y), "h": series_json(z)}))
                    .reverified(differs().unwrap_or(false));
            }
            run.check(r);
        }
        Err(e) => run.error("associativity", e),
    }
}

fn kind_name(k: IdealKind) -> &'static str {
    match k {
        IdealKind::Left => "left",
        IdealKind::Right => "right",
        IdealKind::Twosided => "twosided",
        IdealKind::Subset => "subset",
    }
}

fn ideals(run: &mut Run) {
    let f = run.f;
    let ring = &f.ring;
    let mut cert = serde_json::Map::new();
    let mut ok = true;
    let mut counts = Vec::new();
    for kind in [IdealKind::Left, IdealKind::Right, IdealKind::Twosided] {
        match enumerate_ideals(ring, kind) {
            Ok(list) => {
                // each listed set must be closed for its side, checked directly
                ok &= list.iter().all(|i| {
                    let m = i.members();
                    let side_ok = |a, x| {
                        (!kind.is_left() || m.contains(ring.mul(a, x))) && (!kind.is_right() || m.contains(ring.mul(x, a)))
                    };
                    m.contains(0)
                        && m.iter().all(|x| m.iter().all(|y| m.contains(ring.sub(x, y))))
                        && ring.elements().all(|a| m.iter().all(|x| side_ok(a, x)))
                });
                counts.push((kind, list.len()));
                cert.insert(kind_name(kind).into(), list.iter().map(|i| set_json(ring, i.members())).collect());
            }
            Err(e) => return run.error("ideal-lattice", e),
        }
    }
    let mut r = PropertyReport::new("ideal-lattice", true).certificate(cert.into()).reverified(ok);
    for (k, n) in counts {
        r = r.stat(kind_name(k), n);
    }
    run.check(r);

    let nil = nil_radical(ring);
    let naive = ring.set_of(ring.elements().filter(|&a| {
        let mut p = a;
        (0..ring.size()).any(|_| {
            let z = p == 0;
            p = ring.mul(p, a);
            z
        })
    }));
    run.observe(
        PropertyReport::new("NI", nil.is_ni)
            .certificate(json!({"nil": set_json(ring, &nil.members)}))
            .reverified(naive == nil.members),
    );

    for (name, u) in &f.ideals {
        let mut r = PropertyReport::new(format!("semiprime:{name}"), true)
            .certificate(json!({"U": set_json(ring, u.members()), "kind": kind_name(classify(ring, u.members()))}));
        if let Err(w) = is_semiprime_ideal(u) {
            let p = power_sequence(ring, w.element)[w.exponent - 1];
            r.verdict = false;
            r = r
                .witness(json!({"element": ring.name(w.element), "exponent": w.exponent}))
                .reverified(!u.contains(w.element) && u.contains(p) && p == ring.pow(w.element, w.exponent as u64));
        }
        run.observe(r);

        let gens = f.twist.sigma_generators();
        let compat = is_sigma_compatible_ideal(u, gens);
        let mut r = PropertyReport::new(format!("sigma-compatible:{name}"), compat.holds());
        if let Some(w) = compat.violation {
            let s = if w.inverse { gens[w.automorphism].inverse() } else { gens[w.automorphism].clone() };
            r = r
                .witness(json!({"a": ring.name(w.a), "b": ring.name(w.b), "automorphism": w.automorphism}))
                .reverified(u.contains(ring.mul(w.a, w.b)) != u.contains(ring.mul(w.a, s.apply(w.b))));
        }
        run.observe(r);
    }
}

fn properties(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let ring = &f.ring;
    run.observe(is_left_fusible(ring));
    run.observe(is_sigma_compatible_ring(ring, f.twist.sigma_generators()));
    let results = [
        ("right-nonsingular", is_right_nonsingular(ring)),
        ("IN", is_in(ring)),
        ("SA", is_sa(ring)),
    ];
    for (name, res) in results {
        match res {
            Ok(r) => run.observe(r),
            Err(e) => run.error(name, e),
        }
    }
    let window = opts.window(f, 0, 1);
    match is_g_armendariz(&f.twist, opts.max_support.unwrap_or(2), &window) {
        Ok(r) => run.observe(r),
        Err(e) => run.error("G-armendariz", e),
    }
    if let Some(u) = f.zip_ideal() {
        match is_sigma_u_zip(ring, u) {
            Ok(r) => run.observe(r),
            Err(e) => run.error("sigma-u-zip", e),
        }
    }
    match zip_specializations(ring) {
        Ok(r) => run.check(r),
        Err(e) => run.error("zip-specializations", e),
    }
}

fn fusible_lift(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let ring = &f.ring;
    if let Some(a) = left_fusible_failure(ring) {
        return run.refuse(format!("ring is not left fusible (witness {})", ring.name(a)));
    }
    let compat = is_sigma_compatible_ring(ring, f.twist.sigma_generators());
    if !compat.verdict {
        return run.refuse(format!("twist is not sigma-compatible (witness {})", compat.witness.unwrap_or_default()));
    }
    let window = opts.window(f, 0, 2);
    let universe = match TruncatedUniverse::new(&f.twist, window.clone()) {
        Ok(u) => u,
        Err(e) => return run.error("fusible-lift", e),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let support = opts.max_support.unwrap_or(3);
    let mut certified = 0usize;
    let mut first = None;
    let mut failure = None;
    let mut reverified = true;
    for _ in 0..opts.samples {
        let s = random_series(&f.twist, &window, support, &mut rng);
        match lift_fusible_decomposition(&s, &universe) {
            Ok(lift) => {
                reverified &= recheck_lift(&lift.f, &lift.g, &lift.h, lift.d, &universe) == lift.certified();
                if lift.certified() {
                    certified += 1;
                } else if failure.is_none() {
                    failure = Some(series_json(&s));
                }
                if first.is_none() {
                    first = Some(lift.report(&universe).certificate);
                }
            }
            Err(e) => return run.error("fusible-lift", e),
        }
    }
    let mut r = PropertyReport::new("fusible-lift", failure.is_none())
        .bounds(universe.bounds_json())
        .stat("samples", opts.samples)
        .stat("certified", certified)
        .stat("seed", opts.seed)
        .reverified(reverified)
        .note("regularity certified on the truncated universe only");
    if let Some(Some(c)) = first {
        r = r.certificate(json!({"first": c}));
    }
    if let Some(w) = failure {
        r = r.witness(json!({"f": w}));
    }
    run.check(r);
}

// Direct re-evaluation of a decomposition, independent of the lift code.
fn recheck_lift(f: &Series, g: &Series, h: &Series, d: usize, universe: &TruncatedUniverse) -> bool {
    let ring = f.ring();
    let Ok(sum) = series_add(g, h) else { return false };
    let Ok(ed) = embed_scalar(f.twist(), d) else { return false };
    let g_killed = d != 0 && series_mul(g, &ed).is_ok_and(|p| p.is_zero());
    let lead = h.min_exponent().map(|x| h.coeff(x)).unwrap_or(0);
    let lead_regular = ring.elements().all(|r| r == 0 || ring.mul(lead, r) != 0);
    let h_regular = (1..universe.len()).all(|i| series_mul(h, &universe.series(i)).is_ok_and(|p| !p.is_zero()));
    sum == *f && g_killed && lead_regular && h_regular
}

fn annihilator_lift(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let universe = match TruncatedUniverse::new(&f.twist, opts.window(f, 0, 1)) {
        Ok(u) => u,
        Err(e) => return run.error("annihilator-lift", e),
    };
    match lifted_annihilator_report(&universe) {
        Ok(r) => run.check(r),
        Err(e) => run.error("annihilator-lift", e),
    }
}

/// Generator configurations: the fixture's, or for each pair of nonzero
/// two-sided ideals, monomials at the first and last window exponents.
fn sa_configs(f: &Fixture, window: &[GroupElement]) -> Result<Vec<(Vec<Series>, Vec<Series>)>, Error> {
    if !f.doc.sa_configs.is_empty() {
        return Ok(f.doc.sa_configs.iter().map(|c| (f.series_named(&c.i), f.series_named(&c.j))).collect());
    }
    let ring = &f.ring;
    let ideals: Vec<IdealSet> = enumerate_ideals(ring, IdealKind::Twosided)?.into_iter().filter(|i| i.len() > 1).collect();
    let (lo, hi) = (window[0].clone(), window[window.len() - 1].clone());
    let gens = |i: &IdealSet, x: &GroupElement| -> Vec<Series> {
        i.members().iter().filter(|&a| a != 0).map(|a| Series::monomial(&f.twist, x.clone(), a)).collect()
    };
    Ok(ideals.iter().cartesian_product(&ideals).map(|(i, j)| (gens(i, &lo), gens(j, &hi))).collect())
}

fn sa_transfer(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let universe = match TruncatedUniverse::new(&f.twist, opts.window(f, 0, 1)) {
        Ok(u) => u,
        Err(e) => return run.error("sa-transfer", e),
    };
    let configs = match sa_configs(f, universe.window()) {
        Ok(c) => c,
        Err(e) => return run.error("sa-transfer", e),
    };
    for (i, j) in configs {
        match sa_transfer_report(&i, &j, &universe) {
            Ok(r) => run.check(r),
            Err(e) => return run.error("sa-transfer", e),
        }
    }
}

fn zip_transfer(run: &mut Run, opts: &RunOptions) {
    let f = run.f;
    let ring = &f.ring;
    let Some(u) = f.zip_ideal() else {
        return run.refuse("fixture names no zip ideal");
    };
    if let Err(e) = mn_core::harness::extraction::check_extraction_ideal(&f.twist, u) {
        return run.error("zip-transfer", e);
    }
    match is_sigma_u_zip(ring, u) {
        Ok(r) => run.check(r),
        Err(e) => run.error("sigma-u-zip", e),
    }

    // exhaustive extraction against the direct oracle
    let window = opts.window(f, 0, 2);
    let universe = match TruncatedUniverse::new(&f.twist, window) {
        Ok(uni) => uni,
        Err(e) => return run.error("extraction-oracle", e),
    };
    let all: Vec<Series> = universe.all_series().collect();
    let mut eligible = 0usize;
    let mut mismatch = None;
    for (a, fs) in all.iter().enumerate() {
        for (b, gs) in all.iter().enumerate() {
            // fg ∈ U((G)) straight from the product kernel
            if !universe.product(a, b).iter().all(|&c| u.contains(c)) {
                continue;
            }
            eligible += 1;
            match coefficient_extraction(fs, gs, u) {
                Ok(t) if t.agrees() => {}
                Ok(_) => mismatch = mismatch.or(Some((a, b, "conclusion differs".to_string()))),
                Err(e) => mismatch = mismatch.or(Some((a, b, e.to_string()))),
            }
        }
    }
    let mut r = PropertyReport::new("extraction-oracle", mismatch.is_none())
        .bounds(universe.bounds_json())
        .stat("pairs", all.len() * all.len())
        .stat("eligible", eligible);
    if let Some((a, b, why)) = mismatch {
        r = r.witness(json!({"f": series_json(&all[a]), "g": series_json(&all[b]), "error": why}));
    }
    run.check(r);

    // series-level zip on the fixture's sets, or on each monomial c·x^e
    // with c ∉ U
    let universe = match TruncatedUniverse::new(&f.twist, opts.window(f, 0, 1)) {
        Ok(uni) => uni,
        Err(e) => return run.error("series-zip", e),
    };
    let sets: Vec<Vec<Series>> = if f.doc.zip_sets.is_empty() {
        let e = f.twist.group().identity();
        ring.elements().filter(|&c| !u.contains(c)).map(|c| vec![Series::monomial(&f.twist, e.clone(), c)]).collect()
    } else {
        f.doc.zip_sets.iter().map(|names| f.series_named(names)).collect()
    };
    for xs in sets {
        match series_zip_witness(&xs, u, &universe) {
            Ok(z) => run.check(z.report(&universe)),
            Err(Error::HypothesisFails(m)) => run.observe(
                PropertyReport::new("series-zip", false)
                    .witness(json!({"X": xs.iter().map(series_json).collect::<Vec<_>>()}))
                    .note(format!("hypothesis fails: {m}")),
            ),
            Err(e) => run.error("series-zip", e),
        }
    }
}

fn examples(run: &mut Run) {
    let f = run.f;
    let ring = &f.ring;
    for q in &f.doc.quotients {
        let u = &f.ideals[&q.ideal];
        let name = format!("quotient:{}", q.ideal);
        let (x, want) = match (set_of(ring, &q.x), set_of(ring, &q.expect)) {
            (Ok(x), Ok(w)) => (x, w),
            _ => {
                run.push(PropertyReport::new(name, false).note("unresolvable element"), Some(true));
                continue;
            }
        };
        let got = quotient_set(ring, u.members(), &x);
        let naive = ring.set_of(ring.elements().filter(|&a| x.iter().all(|y| u.contains(ring.mul(y, a)))));
        let mut r = PropertyReport::new(name, got == want)
            .certificate(json!({
                "U": set_json(ring, u.members()),
                "X": set_json(ring, &x),
                "quotient": set_json(ring, &got),
                "equals-U": &got == u.members(),
            }))
            .reverified(naive == got);
        if got != want {
            r = r.witness(json!({"expected": set_json(ring, &want)}));
        }
        run.push(r, Some(true));
    }

    let Some(u) = f.zip_ideal() else { return };
    match quotient_claim_failure(ring, u.members()) {
        Ok(found) => {
            let mut r = PropertyReport::new("quotient-claim", found.is_none());
            if let Some((x, q)) = found {
                let naive = ring.set_of(ring.elements().filter(|&a| x.iter().all(|y| u.contains(ring.mul(y, a)))));
                r = r
                    .witness(json!({"X": set_json(ring, &x), "quotient": set_json(ring, &q)}))
                    .reverified(naive == q && &q != u.members() && !x.is_subset(u.members()));
            }
            run.observe(r);
        }
        Err(e) => run.error("quotient-claim", e),
    }

    // minimal witness for every X ⊆ R
    let n = ring.size();
    if n > mn_core::props::SUBSET_SCAN_CAP {
        return run.observe(PropertyReport::not_applicable("zip-witnesses", "ring too large for a subset scan"));
    }
    let (mut applicable, mut found, mut ok) = (0usize, 0usize, true);
    for mask in 0u32..1 << n {
        let x = ring.set_of((0..n).filter(|i| mask >> i & 1 == 1));
        match sigma_u_zip_witness(ring, u, &x) {
            Ok(r) => {
                ok &= r.reverified;
                if r.applicable {
                    applicable += 1;
                    found += usize::from(r.verdict);
                }
            }
            Err(e) => return run.error("zip-witnesses", e),
        }
    }
    run.check(
        PropertyReport::new("zip-witnesses", true)
            .certificate(json!({"U": set_json(ring, u.members())}))
            .stat("subsets", 1usize << n)
            .stat("applicable", applicable)
            .stat("witnessed", found)
            .reverified(ok),
    );
}
