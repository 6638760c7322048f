//! Finitely supported Mal'cev–Neumann series `R((G; σ; τ))`.
//!
//! A series is a finite map from exponents in `G` to nonzero coefficients.
//! Multiplication follows
//!
//! ```text
//! (Σ a_x x̄)(Σ b_y ȳ) = Σ_z ( Σ_{xy = z} a_x σ_x(b_y) τ(x, y) ) z̄
//! ```
//!
//! where `σ: G → Aut(R)` and `τ: G × G → U(R)` form a [`TwistSystem`].
//! Whether a twist yields an associative product is decided here two ways:
//! by scanning the cocycle-style conditions on a window
//! ([`check_twist_conditions`]) and by brute-force associativity on series
//! triples ([`check_associativity`]), the latter being ground truth.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{GroupElement, OrderedGroup};
use crate::ideal::power_sequence;
use crate::ring::{check_automorphism, same_ring, units, Elem, FiniteRing, RingAutomorphism};

/// Coordinates in `-N..=N` on which normalization is validated.
pub const NORMALIZATION_RADIUS: i32 = 3;

/// Fixture form of one automorphism: a permutation, `"identity"`, or
/// `"frobenius"` (`x ↦ x^p` for the characteristic `p`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AutomorphismSpec {
    Named(String),
    Permutation(Vec<Elem>),
}

impl AutomorphismSpec {
    pub fn resolve(&self, ring: &Arc<FiniteRing>) -> Result<RingAutomorphism> {
        match self {
            AutomorphismSpec::Named(n) if n == "identity" => Ok(RingAutomorphism::identity(ring)),
            AutomorphismSpec::Named(n) if n == "frobenius" => {
                let p = characteristic(ring);
                check_automorphism(ring, ring.elements().map(|x| ring.pow(x, p as u64)).collect())
            }
            AutomorphismSpec::Named(n) => Err(Error::MalformedSpec(format!("unknown automorphism {n:?}"))),
            AutomorphismSpec::Permutation(p) => check_automorphism(ring, p.clone()),
        }
    }
}

/// Additive order of `one`. Tables that are not rings may never return
/// to zero; the search stops after `|R|` steps and reports `|R|`.
pub fn characteristic(ring: &FiniteRing) -> usize {
    let mut acc = ring.one();
    for n in 1..=ring.size() {
        if acc == 0 {
            return n;
        }
        acc = ring.add(acc, ring.one());
    }
    ring.size()
}

/// `{"generator": ...}` for `Z`, `{"generators": [...]}` for `Z^k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<AutomorphismSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<AutomorphismSpec>>,
}

impl SigmaSpec {
    pub fn identity() -> Self {
        SigmaSpec { generator: Some(AutomorphismSpec::Named("identity".into())), generators: None }
    }
}

/// Integer exponent rule `e(x, y)` for `τ(x, y) = u^{e(x, y)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExponentRule {
    /// `"product"`: the dot product of coordinates.
    Named(String),
    /// `e(x, y) = xᵀ M y`.
    Bilinear(Vec<Vec<i64>>),
}

/// A point patch `τ(x, y) := value` applied on top of the rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauOverride(pub GroupElement, pub GroupElement, pub Elem);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TauSpec {
    One {
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        overrides: Vec<TauOverride>,
    },
    UnitPower {
        unit: Elem,
        exponent_rule: ExponentRule,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        overrides: Vec<TauOverride>,
    },
}

impl TauSpec {
    pub fn one() -> Self {
        TauSpec::One { overrides: Vec::new() }
    }

    pub fn unit_power(unit: Elem) -> Self {
        TauSpec::UnitPower { unit, exponent_rule: ExponentRule::Named("product".into()), overrides: Vec::new() }
    }

    pub fn overrides(&self) -> &[TauOverride] {
        match self {
            TauSpec::One { overrides } | TauSpec::UnitPower { overrides, .. } => overrides,
        }
    }

    /// Same rule with one more point patch.
    pub fn with_override(mut self, x: GroupElement, y: GroupElement, value: Elem) -> Self {
        match &mut self {
            TauSpec::One { overrides } | TauSpec::UnitPower { overrides, .. } => {
                overrides.push(TauOverride(x, y, value))
            }
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub sigma: SigmaSpec,
    pub tau: TauSpec,
}

impl TwistSpec {
    pub fn trivial() -> Self {
        TwistSpec { sigma: SigmaSpec::identity(), tau: TauSpec::one() }
    }
}

#[derive(Clone)]
enum TauRule {
    One,
    UnitPower { matrix: Vec<Vec<i64>>, powers: Vec<Elem> },
}

/// The pair `(σ, τ)` over a ring and an ordered group.
///
/// `σ_x = g_1^{x_1} ∘ ... ∘ g_k^{x_k}` for pairwise commuting generator
/// automorphisms `g_i`, so `σ` is a homomorphism `G → Aut(R)`.
#[derive(Clone)]
pub struct TwistSystem {
    ring: Arc<FiniteRing>,
    group: OrderedGroup,
    generators: Vec<RingAutomorphism>,
    cycles: Vec<Vec<RingAutomorphism>>,
    tau: TauRule,
    overrides: HashMap<(GroupElement, GroupElement), Elem>,
    normalized: bool,
    spec: TwistSpec,
}

impl fmt::Debug for TwistSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistSystem")
            .field("ring", &self.ring.label())
            .field("group", &self.group)
            .field("spec", &self.spec)
            .finish()
    }
}

impl TwistSystem {
    /// Resolves and validates a twist spec: generator count matches the
    /// group rank, generators commute, every `τ` value is a unit.
    pub fn new(ring: &Arc<FiniteRing>, group: OrderedGroup, spec: TwistSpec) -> Result<Self> {
        let gen_specs: Vec<AutomorphismSpec> = match (&spec.sigma.generator, &spec.sigma.generators) {
            // a lone "identity" generator also covers every coordinate of Z^k
            (Some(AutomorphismSpec::Named(n)), None) if n == "identity" => {
                vec![AutomorphismSpec::Named(n.clone()); group.rank()]
            }
            (Some(g), None) => vec![g.clone()],
            (None, Some(gs)) => gs.clone(),
            _ => return Err(Error::MalformedSpec("sigma needs exactly one of generator / generators".into())),
        };
        if gen_specs.len() != group.rank() {
            return Err(Error::MalformedSpec(format!(
                "{} sigma generators for a group of rank {}",
                gen_specs.len(),
                group.rank()
            )));
        }
        let generators = gen_specs.iter().map(|g| g.resolve(ring)).collect::<Result<Vec<_>>>()?;
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if a.compose(b)? != b.compose(a)? {
                    return Err(Error::MalformedSpec("sigma generators do not commute".into()));
                }
            }
        }
        let cycles = generators
            .iter()
            .map(|g| (0..g.order() as i64).map(|n| g.pow(n)).collect())
            .collect();

        let unit_set = units(ring);
        let tau = match &spec.tau {
            TauSpec::One { .. } => TauRule::One,
            TauSpec::UnitPower { unit, exponent_rule, .. } => {
                if !unit_set.contains(*unit) {
                    return Err(Error::MalformedSpec(format!("tau unit {unit} is not a unit")));
                }
                let k = group.rank();
                let matrix = match exponent_rule {
                    ExponentRule::Named(n) if n == "product" => {
                        (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect()
                    }
                    ExponentRule::Named(n) => {
                        return Err(Error::MalformedSpec(format!("unknown exponent rule {n:?}")))
                    }
                    ExponentRule::Bilinear(m) => {
                        if m.len() != k || m.iter().any(|row| row.len() != k) {
                            return Err(Error::MalformedSpec(format!("bilinear rule must be {k}x{k}")));
                        }
                        m.clone()
                    }
                };
                // u^0, u^1, ..., u^{ord-1}
                let mut powers = vec![ring.one()];
                powers.extend(power_sequence(ring, *unit).into_iter().take_while(|&p| p != ring.one()));
                TauRule::UnitPower { matrix, powers }
            }
        };
        let mut overrides = HashMap::new();
        for TauOverride(x, y, v) in spec.tau.overrides() {
            if !group.contains(x) || !group.contains(y) {
                return Err(Error::MalformedSpec(format!("tau override ({x}, {y}) has the wrong rank")));
            }
            if !unit_set.contains(*v) {
                return Err(Error::MalformedSpec(format!("tau override value {v} is not a unit")));
            }
            overrides.insert((x.clone(), y.clone()), *v);
        }
        let mut twist = TwistSystem {
            ring: ring.clone(),
            group,
            generators,
            cycles,
            tau,
            overrides,
            normalized: false,
            spec,
        };
        twist.normalized = twist.check_normalized(NORMALIZATION_RADIUS);
        Ok(twist)
    }

    /// Identity `σ`, `τ ≡ 1`: the untwisted group ring.
    pub fn trivial(ring: &Arc<FiniteRing>, group: OrderedGroup) -> Self {
        TwistSystem::new(ring, group, TwistSpec::trivial()).expect("trivial twist is valid")
    }

    fn check_normalized(&self, radius: i32) -> bool {
        let id = self.group.identity();
        let one = self.ring.one();
        self.sigma(&id).is_identity()
            && self
                .group
                .window(-radius, radius)
                .iter()
                .all(|x| self.tau(&id, x) == one && self.tau(x, &id) == one)
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn group(&self) -> OrderedGroup {
        self.group
    }

    pub fn spec(&self) -> &TwistSpec {
        &self.spec
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// The generating automorphisms of `σ`.
    pub fn sigma_generators(&self) -> &[RingAutomorphism] {
        &self.generators
    }

    /// `σ_x(r)`.
    #[inline]
    pub fn apply_sigma(&self, x: &GroupElement, r: Elem) -> Elem {
        x.coords().iter().zip(&self.cycles).fold(r, |acc, (&c, cyc)| {
            cyc[c.rem_euclid(cyc.len() as i32) as usize].apply(acc)
        })
    }

    /// `σ_x` as an automorphism.
    pub fn sigma(&self, x: &GroupElement) -> RingAutomorphism {
        x.coords()
            .iter()
            .zip(&self.cycles)
            .fold(RingAutomorphism::identity(&self.ring), |acc, (&c, cyc)| {
                cyc[c.rem_euclid(cyc.len() as i32) as usize].compose(&acc).expect("same ring")
            })
    }

    /// `τ(x, y)`.
    pub fn tau(&self, x: &GroupElement, y: &GroupElement) -> Elem {
        if let Some(&v) = self.overrides.get(&(x.clone(), y.clone())) {
            return v;
        }
        match &self.tau {
            TauRule::One => self.ring.one(),
            TauRule::UnitPower { matrix, powers } => {
                let mut e: i64 = 0;
                for (i, &xi) in x.coords().iter().enumerate() {
                    for (j, &yj) in y.coords().iter().enumerate() {
                        e += i64::from(xi) * matrix[i][j] * i64::from(yj);
                    }
                }
                powers[e.rem_euclid(powers.len() as i64) as usize]
            }
        }
    }
}

/// A finitely supported series over a shared twist system.
#[derive(Clone)]
pub struct Series {
    twist: Arc<TwistSystem>,
    terms: BTreeMap<GroupElement, Elem>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.twist, &other.twist) && self.terms == other.terms
    }
}

impl Eq for Series {}

impl std::hash::Hash for Series {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, &r)| format!("{}·x^{}", self.twist.ring.name(r), x))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Series {
    pub fn zero(twist: &Arc<TwistSystem>) -> Self {
        Series { twist: twist.clone(), terms: BTreeMap::new() }
    }

    /// `r·x̄`, or zero when `r = 0`.
    pub fn monomial(twist: &Arc<TwistSystem>, x: GroupElement, r: Elem) -> Self {
        let mut terms = BTreeMap::new();
        if r != 0 {
            terms.insert(x, r);
        }
        Series { twist: twist.clone(), terms }
    }

    pub fn twist(&self) -> &Arc<TwistSystem> {
        &self.twist
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.twist.ring
    }

    /// Terms ascending by `⪯`.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, Elem)> {
        self.terms.iter().map(|(x, &r)| (x, r))
    }

    pub fn coeff(&self, x: &GroupElement) -> Elem {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.terms.keys().cloned().collect()
    }

    /// `C(f)`: the set of nonzero coefficients.
    pub fn content(&self) -> ElemSet {
        self.twist.ring.set_of(self.terms.values().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `π(f)`, the `⪯`-least exponent.
    pub fn min_exponent(&self) -> Option<&GroupElement> {
        self.terms.keys().next()
    }

    /// Whether every coefficient lies in `set`, i.e. `f ∈ U((G; σ; τ))`.
    pub fn coefficients_in(&self, set: &ElemSet) -> bool {
        self.terms.values().all(|&r| set.contains(r))
    }

    pub fn neg(&self) -> Series {
        let ring = &self.twist.ring;
        Series {
            twist: self.twist.clone(),
            terms: self.terms.iter().map(|(x, &r)| (x.clone(), ring.neg(r))).collect(),
        }
    }

    /// Serializable `[[exponent, coefficient], ...]`, ascending.
    pub fn to_pairs(&self) -> Vec<(GroupElement, Elem)> {
        self.terms.iter().map(|(x, &r)| (x.clone(), r)).collect()
    }
}

/// Builds a series from `(exponent, coefficient)` pairs, dropping zero
/// coefficients.
pub fn series_make(
    twist: &Arc<TwistSystem>,
    pairs: impl IntoIterator<Item = (GroupElement, Elem)>,
) -> Result<Series> {
    let mut terms = BTreeMap::new();
    let mut seen = std::collections::HashSet::new();
    for (x, r) in pairs {
        if !twist.group.contains(&x) {
            return Err(Error::MalformedSpec(format!("exponent {x} has the wrong rank")));
        }
        if r >= twist.ring.size() {
            return Err(Error::MalformedSpec(format!("coefficient {r} out of range")));
        }
        if !seen.insert(x.clone()) {
            return Err(Error::DuplicateKey(x.to_string()));
        }
        if r != 0 {
            terms.insert(x, r);
        }
    }
    Ok(Series { twist: twist.clone(), terms })
}

/// `r·1̄`, the image of `r` under `R → Λ`.
pub fn embed_scalar(twist: &Arc<TwistSystem>, r: Elem) -> Result<Series> {
    if !twist.normalized {
        return Err(Error::NotNormalized);
    }
    Ok(Series::monomial(twist, twist.group.identity(), r))
}

fn check_same(f: &Series, g: &Series) -> Result<()> {
    if Arc::ptr_eq(&f.twist, &g.twist) {
        Ok(())
    } else {
        Err(Error::TwistMismatch)
    }
}

/// Coefficientwise sum.
pub fn series_add(f: &Series, g: &Series) -> Result<Series> {
    check_same(f, g)?;
    let ring = &f.twist.ring;
    let mut terms = f.terms.clone();
    for (x, &b) in &g.terms {
        let s = ring.add(terms.get(x).copied().unwrap_or(0), b);
        if s == 0 {
            terms.remove(x);
        } else {
            terms.insert(x.clone(), s);
        }
    }
    Ok(Series { twist: f.twist.clone(), terms })
}

pub fn series_sub(f: &Series, g: &Series) -> Result<Series> {
    series_add(f, &g.neg())
}

/// The twisted product: coefficient of `z` is
/// `Σ_{xy = z} f(x) σ_x(g(y)) τ(x, y)`.
pub fn series_mul(f: &Series, g: &Series) -> Result<Series> {
    check_same(f, g)?;
    let twist = &f.twist;
    let ring = &twist.ring;
    let mut terms: BTreeMap<GroupElement, Elem> = BTreeMap::new();
    for (x, &a) in &f.terms {
        for (y, &b) in &g.terms {
            let z = twist.group.op(x, y)?;
            let c = term_product(twist, x, a, y, b);
            let slot = terms.entry(z).or_insert(0);
            *slot = ring.add(*slot, c);
        }
    }
    terms.retain(|_, c| *c != 0);
    Ok(Series { twist: twist.clone(), terms })
}

/// `a σ_x(b) τ(x, y)`.
#[inline]
pub fn term_product(twist: &TwistSystem, x: &GroupElement, a: Elem, y: &GroupElement, b: Elem) -> Elem {
    let ring = &twist.ring;
    ring.mul(ring.mul(a, twist.apply_sigma(x, b)), twist.tau(x, y))
}

/// `X_w(f, g)`: pairs `(x, y)` with `x ∈ supp f`, `y ∈ supp g`, `xy = w`,
/// ascending by `x`.
pub fn x_w_pairs(f: &Series, g: &Series, w: &GroupElement) -> Result<Vec<(GroupElement, GroupElement)>> {
    check_same(f, g)?;
    let group = f.twist.group;
    let mut out = Vec::new();
    for x in f.terms.keys() {
        let y = group.op(&group.inverse(x)?, w)?;
        if g.terms.contains_key(&y) {
            out.push((x.clone(), y));
        }
    }
    Ok(out)
}

/// Support, `π(f)`, leading coefficient and content of a nonzero series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportStats {
    pub support: Vec<GroupElement>,
    pub min: GroupElement,
    pub leading: Elem,
    pub content: ElemSet,
}

pub fn support_stats(f: &Series) -> Result<SupportStats> {
    let (min, &leading) = f.terms.iter().next().ok_or(Error::ZeroSeries)?;
    Ok(SupportStats { support: f.support(), min: min.clone(), leading, content: f.content() })
}

/// The conditions on `(σ, τ)` evaluated by [`check_twist_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistCondition {
    /// `τ(xy, z) σ_x(τ(x, y)) = τ(x, yz) τ(y, z)`.
    LiteralCocycle,
    /// `τ(x, y) τ(xy, z) = σ_x(τ(y, z)) τ(x, yz)`.
    StandardCocycle,
    /// `σ_y σ_z = σ_{yz} ∘ η` with `η(r) = u r u⁻¹`, `u = τ(y, z)`.
    ActionConjugateLeft,
    /// `σ_y σ_z = σ_{yz} ∘ η` with `η(r) = u⁻¹ r u`.
    ActionConjugateRight,
    /// `σ_y σ_z (r) = u σ_{yz}(r) u⁻¹`: the action law the product needs.
    StandardAction,
}

impl TwistCondition {
    pub const ALL: [TwistCondition; 5] = [
        TwistCondition::LiteralCocycle,
        TwistCondition::StandardCocycle,
        TwistCondition::ActionConjugateLeft,
        TwistCondition::ActionConjugateRight,
        TwistCondition::StandardAction,
    ];
}

/// First failing instance: `(x, y, z)` for cocycles, `(y, z)` with ring
/// element `r` for action laws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistWitness {
    pub exponents: Vec<GroupElement>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistOutcome {
    pub condition: TwistCondition,
    pub witness: Option<TwistWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistReport {
    pub window: Vec<GroupElement>,
    pub outcomes: Vec<TwistOutcome>,
}

impl TwistReport {
    pub fn passed(&self, c: TwistCondition) -> bool {
        self.outcome(c).witness.is_none()
    }

    pub fn outcome(&self, c: TwistCondition) -> &TwistOutcome {
        self.outcomes.iter().find(|o| o.condition == c).expect("every condition is scanned")
    }

    /// Standard cocycle and standard action law both hold on the window.
    pub fn standard_passed(&self) -> bool {
        self.passed(TwistCondition::StandardCocycle) && self.passed(TwistCondition::StandardAction)
    }
}

/// Evaluates one condition at one instance.
pub fn twist_condition_holds(
    twist: &TwistSystem,
    condition: TwistCondition,
    w: &TwistWitness,
) -> Result<bool> {
    let ring = &twist.ring;
    let g = twist.group;
    Ok(match condition {
        TwistCondition::LiteralCocycle | TwistCondition::StandardCocycle => {
            let [x, y, z] = &w.exponents[..] else {
                return Err(Error::MalformedSpec("cocycle instance needs three exponents".into()));
            };
            let (xy, yz) = (g.op(x, y)?, g.op(y, z)?);
            if condition == TwistCondition::LiteralCocycle {
                ring.mul(twist.tau(&xy, z), twist.apply_sigma(x, twist.tau(x, y)))
                    == ring.mul(twist.tau(x, &yz), twist.tau(y, z))
            } else {
                ring.mul(twist.tau(x, y), twist.tau(&xy, z))
                    == ring.mul(twist.apply_sigma(x, twist.tau(y, z)), twist.tau(x, &yz))
            }
        }
        _ => {
            let ([y, z], Some(r)) = (&w.exponents[..], w.element) else {
                return Err(Error::MalformedSpec("action instance needs two exponents and an element".into()));
            };
            let yz = g.op(y, z)?;
            let u = twist.tau(y, z);
            let u_inv = ring.inverse(u).ok_or_else(|| Error::MalformedSpec("tau value is not a unit".into()))?;
            let lhs = twist.apply_sigma(y, twist.apply_sigma(z, r));
            let rhs = match condition {
                TwistCondition::ActionConjugateLeft => {
                    twist.apply_sigma(&yz, ring.mul(ring.mul(u, r), u_inv))
                }
                TwistCondition::ActionConjugateRight => {
                    twist.apply_sigma(&yz, ring.mul(ring.mul(u_inv, r), u))
                }
                _ => ring.mul(ring.mul(u, twist.apply_sigma(&yz, r)), u_inv),
            };
            lhs == rhs
        }
    })
}

/// Scans every condition over all exponent triples (or pairs and ring
/// elements) drawn from `window`, in `⪯` order.
pub fn check_twist_conditions(twist: &TwistSystem, window: &[GroupElement]) -> Result<TwistReport> {
    let mut outcomes = Vec::new();
    for condition in TwistCondition::ALL {
        let mut witness = None;
        'scan: for x in window {
            for y in window {
                match condition {
                    TwistCondition::LiteralCocycle | TwistCondition::StandardCocycle => {
                        for z in window {
                            let w = TwistWitness { exponents: vec![x.clone(), y.clone(), z.clone()], element: None };
                            if !twist_condition_holds(twist, condition, &w)? {
                                witness = Some(w);
                                break 'scan;
                            }
                        }
                    }
                    _ => {
                        for r in twist.ring.elements() {
                            let w = TwistWitness { exponents: vec![x.clone(), y.clone()], element: Some(r) };
                            if !twist_condition_holds(twist, condition, &w)? {
                                witness = Some(w);
                                break 'scan;
                            }
                        }
                    }
                }
            }
        }
        outcomes.push(TwistOutcome { condition, witness });
    }
    Ok(TwistReport { window: window.to_vec(), outcomes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityReport {
    pub checked: usize,
    pub failure: Option<(Series, Series, Series)>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `(fg)h = f(gh)` on every triple, stopping at the first failure.
pub fn check_associativity(
    triples: impl IntoIterator<Item = (Series, Series, Series)>,
) -> Result<AssociativityReport> {
    let mut checked = 0;
    for (f, g, h) in triples {
        checked += 1;
        let left = series_mul(&series_mul(&f, &g)?, &h)?;
        let right = series_mul(&f, &series_mul(&g, &h)?)?;
        if left != right {
            return Ok(AssociativityReport { checked, failure: Some((f, g, h)) });
        }
    }
    Ok(AssociativityReport { checked, failure: None })
}

/// Every triple of single-term series with exponents in `window` and
/// nonzero coefficients.
pub fn monomial_triples(
    twist: &Arc<TwistSystem>,
    window: &[GroupElement],
) -> impl Iterator<Item = (Series, Series, Series)> {
    let monos: Vec<Series> = window
        .iter()
        .flat_map(|x| (1..twist.ring.size()).map(move |r| (x.clone(), r)))
        .map(|(x, r)| Series::monomial(twist, x, r))
        .collect();
    let n = monos.len();
    (0..n * n * n).map(move |i| (monos[i / (n * n)].clone(), monos[(i / n) % n].clone(), monos[i % n].clone()))
}

/// A random series with `1..=max_support` terms on distinct exponents from
/// `window` and nonzero coefficients.
pub fn random_series(
    twist: &Arc<TwistSystem>,
    window: &[GroupElement],
    max_support: usize,
    rng: &mut impl Rng,
) -> Series {
    let k = rng.gen_range(1..=max_support.min(window.len()).max(1));
    let exps: Vec<&GroupElement> = window.choose_multiple(rng, k).collect();
    let mut terms = BTreeMap::new();
    for x in exps {
        terms.insert(x.clone(), rng.gen_range(1..twist.ring.size()));
    }
    Series { twist: twist.clone(), terms }
}

/// `count` seeded random triples for [`check_associativity`].
pub fn random_triples(
    twist: &Arc<TwistSystem>,
    window: &[GroupElement],
    max_support: usize,
    count: usize,
    seed: u64,
) -> Vec<(Series, Series, Series)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (
                random_series(twist, window, max_support, &mut rng),
                random_series(twist, window, max_support, &mut rng),
                random_series(twist, window, max_support, &mut rng),
            )
        })
        .collect()
}

/// Checks that `twist` lives over `ring`.
pub fn twist_over(twist: &TwistSystem, ring: &Arc<FiniteRing>) -> Result<()> {
    if same_ring(&twist.ring, ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_make, RingSpec};

    fn ring(spec: RingSpec) -> Arc<FiniteRing> {
        Arc::new(ring_make(&spec).unwrap())
    }

    fn z4_trivial() -> Arc<TwistSystem> {
        Arc::new(TwistSystem::trivial(&ring(RingSpec::zn(4)), OrderedGroup::Integers))
    }

    fn z4_tau_power() -> Arc<TwistSystem> {
        let spec = TwistSpec { sigma: SigmaSpec::identity(), tau: TauSpec::unit_power(3) };
        Arc::new(TwistSystem::new(&ring(RingSpec::zn(4)), OrderedGroup::Integers, spec).unwrap())
    }

    fn s(t: &Arc<TwistSystem>, pairs: &[(i32, Elem)]) -> Series {
        series_make(t, pairs.iter().map(|&(x, r)| (GroupElement::int(x), r))).unwrap()
    }

    #[test]
    fn construction_examples() {
        let t = z4_trivial();
        let one = s(&t, &[(0, 1)]);
        assert_eq!(one, embed_scalar(&t, 1).unwrap());
        assert!(s(&t, &[(1, 0)]).is_zero());
        let f = s(&t, &[(0, 2), (1, 3)]);
        assert_eq!(f.support(), vec![GroupElement::int(0), GroupElement::int(1)]);
        assert_eq!(f.content().to_vec(), vec![2, 3]);
        assert_eq!(
            series_make(&t, [(GroupElement::int(1), 1), (GroupElement::int(1), 2)]),
            Err(Error::DuplicateKey("1".into()))
        );
    }

    #[test]
    fn addition_examples() {
        let t = z4_trivial();
        let f = s(&t, &[(0, 2), (3, 1)]);
        assert_eq!(series_add(&f, &Series::zero(&t)).unwrap(), f);
        assert!(series_add(&f, &f.neg()).unwrap().is_zero());
        let two = embed_scalar(&t, 2).unwrap();
        assert!(series_add(&two, &two).unwrap().is_zero());
        let g = s(&t, &[(0, 2), (1, 1)]);
        assert_eq!(series_add(&two, &g).unwrap(), s(&t, &[(1, 1)]));
        assert_eq!(embed_scalar(&t, 0).unwrap(), Series::zero(&t));
    }

    #[test]
    fn x_w_examples() {
        let t = z4_trivial();
        let f = s(&t, &[(0, 1), (1, 1)]);
        let pairs = x_w_pairs(&f, &f, &GroupElement::int(1)).unwrap();
        assert_eq!(pairs, vec![(0.into(), 1.into()), (1.into(), 0.into())]);
        assert!(x_w_pairs(&f, &f, &GroupElement::int(-1)).unwrap().is_empty());
        let h = s(&t, &[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(x_w_pairs(&h, &h, &GroupElement::int(2)).unwrap().len(), 3);
    }

    #[test]
    fn multiplication_examples() {
        let t = z4_tau_power();
        assert_eq!(t.tau(&1.into(), &1.into()), 3);
        let x = s(&t, &[(1, 1)]);
        assert_eq!(series_mul(&x, &x).unwrap(), s(&t, &[(2, 3)]));

        let k = ring(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)));
        let spec = TwistSpec {
            sigma: SigmaSpec { generator: Some(AutomorphismSpec::Permutation(vec![0, 2, 1, 3])), generators: None },
            tau: TauSpec::one(),
        };
        let tk = Arc::new(TwistSystem::new(&k, OrderedGroup::Integers, spec).unwrap());
        let e10 = k.element_named("(1,0)").unwrap();
        let f = Series::monomial(&tk, 1.into(), e10);
        assert!(series_mul(&f, &f).unwrap().is_zero());

        let one = embed_scalar(&t, 1).unwrap();
        let g = s(&t, &[(-1, 2), (0, 3), (2, 1)]);
        assert_eq!(series_mul(&g, &one).unwrap(), g);
        assert_eq!(series_mul(&one, &g).unwrap(), g);
    }

    #[test]
    fn mismatched_twists() {
        let a = z4_trivial();
        let b = z4_trivial();
        assert_eq!(series_add(&Series::zero(&a), &Series::zero(&b)), Err(Error::TwistMismatch));
        assert_eq!(series_mul(&Series::zero(&a), &Series::zero(&b)), Err(Error::TwistMismatch));
    }

    #[test]
    fn support_stats_examples() {
        let t = z4_trivial();
        let f = s(&t, &[(0, 2), (2, 3)]);
        let st = support_stats(&f).unwrap();
        assert_eq!((st.min, st.leading, st.content.to_vec()), (GroupElement::int(0), 2, vec![2, 3]));
        let c = support_stats(&embed_scalar(&t, 3).unwrap()).unwrap();
        assert_eq!((c.min, c.content.to_vec()), (GroupElement::int(0), vec![3]));
        assert_eq!(support_stats(&Series::zero(&t)), Err(Error::ZeroSeries));
    }

    #[test]
    fn twist_condition_examples() {
        let window = OrderedGroup::Integers.window(-3, 3);
        let t = z4_trivial();
        let rep = check_twist_conditions(&t, &window).unwrap();
        assert!(rep.outcomes.iter().all(|o| o.witness.is_none()));

        let t = z4_tau_power();
        let rep = check_twist_conditions(&t, &window).unwrap();
        assert!(rep.passed(TwistCondition::LiteralCocycle));
        assert!(rep.standard_passed());

        let ring = t.ring().clone();
        let bad = TwistSpec {
            sigma: SigmaSpec::identity(),
            tau: TauSpec::unit_power(3).with_override(1.into(), 1.into(), 1),
        };
        let bad = TwistSystem::new(&ring, OrderedGroup::Integers, bad).unwrap();
        let rep = check_twist_conditions(&bad, &window).unwrap();
        for c in [TwistCondition::LiteralCocycle, TwistCondition::StandardCocycle] {
            let w = rep.outcome(c).witness.clone().expect("patched tau breaks the cocycle");
            assert!(!twist_condition_holds(&bad, c, &w).unwrap());
        }
        // the patch is invisible at (1, 1, 1) itself
        let diag = TwistWitness { exponents: vec![1.into(), 1.into(), 1.into()], element: None };
        assert!(twist_condition_holds(&bad, TwistCondition::StandardCocycle, &diag).unwrap());
    }

    #[test]
    fn associativity_examples() {
        let window = OrderedGroup::Integers.window(0, 2);
        let t = z4_trivial();
        assert!(check_associativity(monomial_triples(&t, &window)).unwrap().passed());

        let t = z4_tau_power();
        let triples = random_triples(&t, &window, 3, 1000, 0);
        let rep = check_associativity(triples).unwrap();
        assert_eq!((rep.checked, rep.passed()), (1000, true));

        let bad = TwistSpec {
            sigma: SigmaSpec::identity(),
            tau: TauSpec::unit_power(3).with_override(1.into(), 1.into(), 1),
        };
        let bad = Arc::new(TwistSystem::new(t.ring(), OrderedGroup::Integers, bad).unwrap());
        let rep = check_associativity(monomial_triples(&bad, &window)).unwrap();
        let (f, g, h) = rep.failure.expect("corrupted tau is not associative");
        let left = series_mul(&series_mul(&f, &g).unwrap(), &h).unwrap();
        let right = series_mul(&f, &series_mul(&g, &h).unwrap()).unwrap();
        assert_ne!(left, right);
    }

    #[test]
    fn normalization_and_validation() {
        let r = ring(RingSpec::zn(4));
        let denorm = TwistSpec {
            sigma: SigmaSpec::identity(),
            tau: TauSpec::one().with_override(0.into(), 0.into(), 3),
        };
        let t = Arc::new(TwistSystem::new(&r, OrderedGroup::Integers, denorm).unwrap());
        assert!(!t.is_normalized());
        assert_eq!(embed_scalar(&t, 1), Err(Error::NotNormalized));

        let not_unit = TwistSpec { sigma: SigmaSpec::identity(), tau: TauSpec::unit_power(2) };
        assert!(TwistSystem::new(&r, OrderedGroup::Integers, not_unit).is_err());

        let gf4 = ring(RingSpec::gf4());
        let frob = TwistSpec {
            sigma: SigmaSpec { generator: Some(AutomorphismSpec::Named("frobenius".into())), generators: None },
            tau: TauSpec::one(),
        };
        let t = TwistSystem::new(&gf4, OrderedGroup::Integers, frob).unwrap();
        assert_eq!(t.sigma(&1.into()).map(), &[0, 1, 3, 2]);
        assert!(t.sigma(&2.into()).is_identity());
        assert_eq!(t.sigma(&(-1).into()), t.sigma(&1.into()));

        let plane = TwistSpec {
            sigma: SigmaSpec {
                generator: None,
                generators: Some(vec![AutomorphismSpec::Named("frobenius".into()), AutomorphismSpec::Named("identity".into())]),
            },
            tau: TauSpec::one(),
        };
        let t = TwistSystem::new(&gf4, OrderedGroup::Lex(2), plane).unwrap();
        assert!(t.is_normalized());
        assert!(t.sigma(&vec![0, 5].into()).is_identity());
    }
}
