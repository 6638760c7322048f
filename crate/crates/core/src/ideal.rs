//! Explicit subsets and ideals of a finite ring: closures, the ideal
//! lattice, annihilators, quotients `(U:V)`, the nil radical and
//! compatibility of an ideal with a family of automorphisms.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::{same_ring, Elem, FiniteRing, RingAutomorphism, DEFAULT_RING_CAP};

/// Closure kind of an [`IdealSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealKind {
    Subset,
    Left,
    Right,
    Twosided,
}

impl IdealKind {
    pub fn is_left(self) -> bool {
        matches!(self, IdealKind::Left | IdealKind::Twosided)
    }

    pub fn is_right(self) -> bool {
        matches!(self, IdealKind::Right | IdealKind::Twosided)
    }
}

/// Side of an annihilator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An explicit subset of a ring tagged with the strongest closure it is
/// known to satisfy.
#[derive(Clone, PartialEq, Eq)]
pub struct IdealSet {
    ring: Arc<FiniteRing>,
    members: ElemSet,
    kind: IdealKind,
}

impl std::fmt::Debug for IdealSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{}", self.kind, self.ring.show_set(&self.members))
    }
}

impl IdealSet {
    /// Wraps `members` as a plain subset.
    pub fn subset(ring: &Arc<FiniteRing>, members: ElemSet) -> Self {
        IdealSet { ring: ring.clone(), members, kind: IdealKind::Subset }
    }

    /// Wraps `members` and tags it with the strongest closure it satisfies.
    pub fn classified(ring: &Arc<FiniteRing>, members: ElemSet) -> Self {
        let kind = classify(ring, &members);
        IdealSet { ring: ring.clone(), members, kind }
    }

    /// Wraps `members` after checking it really is a `kind`-ideal.
    pub fn checked(ring: &Arc<FiniteRing>, members: ElemSet, kind: IdealKind) -> Result<Self> {
        let actual = classify(ring, &members);
        let ok = match kind {
            IdealKind::Subset => true,
            IdealKind::Left => actual.is_left(),
            IdealKind::Right => actual.is_right(),
            IdealKind::Twosided => actual == IdealKind::Twosided,
        };
        if !ok {
            return Err(Error::MalformedSpec(format!(
                "{} is not a {kind:?} ideal",
                ring.show_set(&members)
            )));
        }
        Ok(IdealSet { ring: ring.clone(), members, kind })
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        IdealSet { ring: ring.clone(), members: ring.set_of([0]), kind: IdealKind::Twosided }
    }

    pub fn whole(ring: &Arc<FiniteRing>) -> Self {
        IdealSet { ring: ring.clone(), members: ring.full_set(), kind: IdealKind::Twosided }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn intersection(&self, other: &IdealSet) -> IdealSet {
        IdealSet::classified(&self.ring, self.members.intersection(&other.members))
    }

    pub fn show(&self) -> String {
        self.ring.show_set(&self.members)
    }
}

fn is_additive_subgroup(ring: &FiniteRing, s: &ElemSet) -> bool {
    s.contains(0)
        && s.iter().all(|a| s.contains(ring.neg(a)) && s.iter().all(|b| s.contains(ring.add(a, b))))
}

/// Strongest closure kind satisfied by `s`.
pub fn classify(ring: &FiniteRing, s: &ElemSet) -> IdealKind {
    if !is_additive_subgroup(ring, s) {
        return IdealKind::Subset;
    }
    let left = s.iter().all(|a| ring.elements().all(|r| s.contains(ring.mul(r, a))));
    let right = s.iter().all(|a| ring.elements().all(|r| s.contains(ring.mul(a, r))));
    match (left, right) {
        (true, true) => IdealKind::Twosided,
        (true, false) => IdealKind::Left,
        (false, true) => IdealKind::Right,
        (false, false) => IdealKind::Subset,
    }
}

/// Least `kind`-ideal containing `gens`, by worklist closure.
pub fn ideal_closure(
    ring: &Arc<FiniteRing>,
    gens: impl IntoIterator<Item = Elem>,
    kind: IdealKind,
) -> IdealSet {
    let mut members = ring.empty_set();
    let mut queue = Vec::new();
    let push = |e: Elem, members: &mut ElemSet, queue: &mut Vec<Elem>| {
        if members.insert(e) {
            queue.push(e);
        }
    };
    push(0, &mut members, &mut queue);
    for g in gens {
        push(g, &mut members, &mut queue);
    }
    while let Some(x) = queue.pop() {
        let current: Vec<Elem> = members.to_vec();
        for y in current {
            push(ring.add(x, y), &mut members, &mut queue);
        }
        push(ring.neg(x), &mut members, &mut queue);
        if kind != IdealKind::Subset {
            for r in ring.elements() {
                if kind.is_left() {
                    push(ring.mul(r, x), &mut members, &mut queue);
                }
                if kind.is_right() {
                    push(ring.mul(x, r), &mut members, &mut queue);
                }
            }
        }
    }
    let kind = if kind == IdealKind::Subset { classify(ring, &members) } else { kind };
    IdealSet { ring: ring.clone(), members, kind }
}

/// All `kind`-ideals of the ring, each once, ascending by size and then by
/// member list.
///
/// Starts from the principal closures of every element and joins pairs until
/// no new ideal appears; every ideal of a finite ring is a finite join of
/// principal ones.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, kind: IdealKind) -> Result<Vec<IdealSet>> {
    enumerate_ideals_with_cap(ring, kind, DEFAULT_RING_CAP)
}

pub fn enumerate_ideals_with_cap(
    ring: &Arc<FiniteRing>,
    kind: IdealKind,
    cap: usize,
) -> Result<Vec<IdealSet>> {
    if ring.size() > cap {
        return Err(Error::SizeCapExceeded { size: ring.size(), cap });
    }
    if kind == IdealKind::Subset {
        return Err(Error::MalformedSpec("cannot enumerate plain subsets as ideals".into()));
    }
    let principal: Vec<ElemSet> = {
        let mut seen = HashSet::new();
        ring.elements()
            .map(|e| ideal_closure(ring, [e], kind).members)
            .filter(|s| seen.insert(s.clone()))
            .collect()
    };
    let mut all: HashSet<ElemSet> = principal.iter().cloned().collect();
    let mut frontier: Vec<ElemSet> = principal.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for p in &principal {
                if p.is_subset(a) {
                    continue;
                }
                let gens: Vec<Elem> = a.union(p).to_vec();
                let joined = ideal_closure(ring, gens, kind).members;
                if all.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<ElemSet> = all.into_iter().collect();
    out.sort();
    Ok(out
        .into_iter()
        .map(|members| IdealSet { ring: ring.clone(), members, kind })
        .collect())
}

/// `(U:V) = {x | Vx ⊆ U}` by exact membership scan.
///
/// The result is tagged with the strongest closure it satisfies; when `U`
/// and `V` are both right ideals this is always two-sided.
pub fn quotient_ideal(u: &IdealSet, v: &IdealSet) -> Result<IdealSet> {
    if !same_ring(&u.ring, &v.ring) {
        return Err(Error::RingMismatch);
    }
    let ring = &u.ring;
    let members = quotient_set(ring, &u.members, &v.members);
    Ok(IdealSet::classified(ring, members))
}

/// Raw quotient set `{x | Vx ⊆ U}`.
pub fn quotient_set(ring: &FiniteRing, u: &ElemSet, v: &ElemSet) -> ElemSet {
    ring.set_of(
        ring.elements()
            .filter(|&x| v.iter().all(|y| u.contains(ring.mul(y, x)))),
    )
}

/// Right annihilator `{a | Xa = 0}` or left annihilator `{a | aX = 0}`.
pub fn annihilator(ring: &Arc<FiniteRing>, x: &ElemSet, side: Side) -> IdealSet {
    let members = annihilator_set(ring, x, side);
    IdealSet::classified(ring, members)
}

pub fn annihilator_set(ring: &FiniteRing, x: &ElemSet, side: Side) -> ElemSet {
    ring.set_of(ring.elements().filter(|&a| {
        x.iter().all(|y| match side {
            Side::Right => ring.mul(y, a) == 0,
            Side::Left => ring.mul(a, y) == 0,
        })
    }))
}

/// The distinct powers `a^1, a^2, ...` in order, stopping at the first
/// repeat. All powers of `a` appear in this list.
pub fn power_sequence(ring: &FiniteRing, a: Elem) -> Vec<Elem> {
    let mut seen = ring.empty_set();
    let mut out = Vec::new();
    let mut p = a;
    while seen.insert(p) {
        out.push(p);
        p = ring.mul(p, a);
    }
    out
}

/// Witness that an ideal is not semiprime: `a ∉ U` but `a^n ∈ U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerWitness {
    pub element: Elem,
    pub exponent: usize,
}

/// Whether `a^n ∈ U` forces `a ∈ U`. On failure returns the first `a` in
/// id order and the least such `n`.
pub fn is_semiprime_ideal(u: &IdealSet) -> std::result::Result<(), PowerWitness> {
    let ring = &u.ring;
    for a in ring.elements().filter(|&a| !u.contains(a)) {
        if let Some(i) = power_sequence(ring, a).iter().position(|&p| u.contains(p)) {
            return Err(PowerWitness { element: a, exponent: i + 1 });
        }
    }
    Ok(())
}

/// `nil(R)` and whether it is a two-sided ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilRadical {
    pub members: ElemSet,
    pub is_ni: bool,
}

pub fn nil_radical(ring: &Arc<FiniteRing>) -> NilRadical {
    let members = ring.set_of(
        ring.elements()
            .filter(|&a| a == 0 || power_sequence(ring, a).contains(&0)),
    );
    let closed = ideal_closure(ring, members.to_vec(), IdealKind::Twosided);
    let is_ni = closed.members == members;
    NilRadical { members, is_ni }
}

/// `N_R(X) = {a | xa ∈ nil(R) for all x ∈ X}`.
pub fn weak_annihilator(ring: &Arc<FiniteRing>, x: &ElemSet) -> ElemSet {
    weak_annihilator_in(ring, &nil_radical(ring).members, x)
}

/// [`weak_annihilator`] against a precomputed `nil(R)`.
pub fn weak_annihilator_in(ring: &FiniteRing, nil: &ElemSet, x: &ElemSet) -> ElemSet {
    ring.set_of(
        ring.elements()
            .filter(|&a| x.iter().all(|y| nil.contains(ring.mul(y, a)))),
    )
}

/// A pair `(a, b)` and automorphism on which a compatibility equivalence
/// breaks. `automorphism` indexes the supplied family; `inverse` marks the
/// inverse of that member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatWitness {
    pub a: Elem,
    pub b: Elem,
    pub automorphism: usize,
    pub inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaCompatibility {
    /// First failure of `ab ∈ U ⇔ aσ(b) ∈ U`.
    pub violation: Option<CompatWitness>,
    /// First failure of the consequence `ab ∈ U ⇔ σ(a)b ∈ U`, looked for
    /// only when no violation exists.
    pub lemma_divergence: Option<CompatWitness>,
}

impl SigmaCompatibility {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `ab ∈ U ⇔ aσ_s(b) ∈ U` for every member of `family` and its
/// inverse, and the left-hand consequence `ab ∈ U ⇔ σ_s(a)b ∈ U`.
pub fn is_sigma_compatible_ideal(u: &IdealSet, family: &[RingAutomorphism]) -> SigmaCompatibility {
    is_sigma_compatible_set(&u.ring, &u.members, family)
}

pub(crate) fn is_sigma_compatible_set(
    ring: &FiniteRing,
    u: &ElemSet,
    family: &[RingAutomorphism],
) -> SigmaCompatibility {
    let variants: Vec<(usize, bool, RingAutomorphism)> = family
        .iter()
        .enumerate()
        .flat_map(|(i, s)| [(i, false, s.clone()), (i, true, s.inverse())])
        .collect();
    let scan = |lhs_side: bool| {
        for &(i, inverse, ref s) in &variants {
            for a in ring.elements() {
                for b in ring.elements() {
                    let plain = u.contains(ring.mul(a, b));
                    let twisted = if lhs_side {
                        u.contains(ring.mul(s.apply(a), b))
                    } else {
                        u.contains(ring.mul(a, s.apply(b)))
                    };
                    if plain != twisted {
                        return Some(CompatWitness { a, b, automorphism: i, inverse });
                    }
                }
            }
        }
        None
    };
    let violation = scan(false);
    let lemma_divergence = if violation.is_none() { scan(true) } else { None };
    SigmaCompatibility { violation, lemma_divergence }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{check_automorphism, ring_make, RingSpec};

    fn ring(spec: RingSpec) -> Arc<FiniteRing> {
        Arc::new(ring_make(&spec).unwrap())
    }

    fn z4() -> Arc<FiniteRing> {
        ring(RingSpec::zn(4))
    }

    fn klein() -> Arc<FiniteRing> {
        ring(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)))
    }

    fn tz4() -> Arc<FiniteRing> {
        ring(RingSpec::trivial_extension(RingSpec::zn(4)))
    }

    fn named(r: &FiniteRing, names: &[&str]) -> ElemSet {
        r.set_of(names.iter().map(|n| r.element_named(n).unwrap()))
    }

    #[test]
    fn closure_examples() {
        let r = z4();
        assert_eq!(ideal_closure(&r, [2], IdealKind::Twosided).to_vec(), vec![0, 2]);
        assert_eq!(ideal_closure(&r, [], IdealKind::Twosided).to_vec(), vec![0]);

        let t = tz4();
        let u = ideal_closure(&t, [t.element_named("(0,1)").unwrap()], IdealKind::Twosided);
        assert_eq!(u.members(), &named(&t, &["(0,0)", "(0,1)", "(0,2)", "(0,3)"]));
    }

    #[test]
    fn ideal_lists() {
        let r = z4();
        let ideals: Vec<Vec<Elem>> =
            enumerate_ideals(&r, IdealKind::Twosided).unwrap().iter().map(|i| i.to_vec()).collect();
        assert_eq!(ideals, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);

        let k = klein();
        let ideals = enumerate_ideals(&k, IdealKind::Twosided).unwrap();
        assert_eq!(ideals.len(), 4);
        assert_eq!(ideals[1].members(), &named(&k, &["(0,0)", "(0,1)"]));
        assert_eq!(ideals[2].members(), &named(&k, &["(0,0)", "(1,0)"]));

        let gf4 = ring(RingSpec::gf4());
        assert_eq!(enumerate_ideals(&gf4, IdealKind::Right).unwrap().len(), 2);
        assert!(matches!(
            enumerate_ideals_with_cap(&gf4, IdealKind::Left, 3),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let r = z4();
        let u = IdealSet::checked(&r, r.set_of([0, 2]), IdealKind::Twosided).unwrap();
        let q = quotient_ideal(&u, &IdealSet::subset(&r, r.set_of([3]))).unwrap();
        assert_eq!(q.to_vec(), vec![0, 2]);
        let whole = IdealSet::whole(&r);
        assert_eq!(quotient_ideal(&whole, &IdealSet::subset(&r, r.set_of([1, 2]))).unwrap().len(), 4);

        let t = tz4();
        let u = IdealSet::checked(&t, named(&t, &["(0,0)", "(0,1)", "(0,2)", "(0,3)"]), IdealKind::Twosided)
            .unwrap();
        let q = quotient_ideal(&u, &IdealSet::subset(&t, named(&t, &["(2,0)"]))).unwrap();
        let expected = t.set_of(t.elements().filter(|e| matches!(e / 4, 0 | 2)));
        assert_eq!(q.members(), &expected);
        assert_eq!(q.len(), 8);
        assert_eq!(q.kind(), IdealKind::Twosided);

        let other = klein();
        assert_eq!(
            quotient_ideal(&u, &IdealSet::subset(&other, other.set_of([1]))),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn annihilator_examples() {
        let r = z4();
        assert_eq!(annihilator(&r, &r.set_of([2]), Side::Right).to_vec(), vec![0, 2]);
        assert_eq!(annihilator(&r, &r.set_of([0]), Side::Left).len(), 4);
        let k = klein();
        let ann = annihilator(&k, &named(&k, &["(1,0)"]), Side::Right);
        assert_eq!(ann.members(), &named(&k, &["(0,0)", "(0,1)"]));
    }

    #[test]
    fn semiprime_examples() {
        let r = z4();
        let two = IdealSet::checked(&r, r.set_of([0, 2]), IdealKind::Twosided).unwrap();
        assert_eq!(is_semiprime_ideal(&two), Ok(()));
        assert_eq!(
            is_semiprime_ideal(&IdealSet::zero(&r)),
            Err(PowerWitness { element: 2, exponent: 2 })
        );
        let t = tz4();
        let u = IdealSet::checked(&t, named(&t, &["(0,0)", "(0,1)", "(0,2)", "(0,3)"]), IdealKind::Twosided)
            .unwrap();
        let w = is_semiprime_ideal(&u).unwrap_err();
        assert_eq!((t.name(w.element), w.exponent), ("(2,0)", 2));
    }

    #[test]
    fn nil_and_weak_annihilators() {
        let r = z4();
        let nil = nil_radical(&r);
        assert_eq!((nil.members.to_vec(), nil.is_ni), (vec![0, 2], true));
        let k = klein();
        assert_eq!(nil_radical(&k).members.to_vec(), vec![0]);
        let gf4 = ring(RingSpec::gf4());
        assert_eq!(nil_radical(&gf4).members.to_vec(), vec![0]);

        assert_eq!(weak_annihilator(&r, &r.set_of([2])).len(), 4);
        assert_eq!(weak_annihilator(&r, &r.set_of([1])).to_vec(), vec![0, 2]);
        assert_eq!(weak_annihilator(&r, &r.set_of([0])).len(), 4);
    }

    #[test]
    fn sigma_compatibility_examples() {
        let k = klein();
        let swap = check_automorphism(&k, vec![0, 2, 1, 3]).unwrap();
        let ident = RingAutomorphism::identity(&k);
        let zero = IdealSet::zero(&k);
        assert!(is_sigma_compatible_ideal(&zero, &[ident]).holds());
        let c = is_sigma_compatible_ideal(&zero, &[swap.clone()]);
        let w = c.violation.unwrap();
        // first pair in id order; (1,0),(1,0) breaks the same way
        assert_eq!((k.name(w.a), k.name(w.b)), ("(0,1)", "(0,1)"));
        let e = k.element_named("(1,0)").unwrap();
        assert_ne!(k.mul(e, e), 0);
        assert_eq!(k.mul(e, swap.apply(e)), 0);

        let gf4sq = ring(RingSpec::product(RingSpec::gf4(), RingSpec::gf4()));
        let frob: Vec<Elem> = gf4sq.elements().map(|x| gf4sq.mul(x, x)).collect();
        let frob = check_automorphism(&gf4sq, frob).unwrap();
        let c = is_sigma_compatible_ideal(&IdealSet::zero(&gf4sq), &[frob]);
        assert!(c.holds());
        assert_eq!(c.lemma_divergence, None);
    }
}
