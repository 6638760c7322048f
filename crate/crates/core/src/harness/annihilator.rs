//! Annihilators of coefficient-restricted series sets, compared with the
//! base-ring annihilators they are built from.

use serde_json::json;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{annihilator_set, enumerate_ideals, ideal_closure, IdealKind, IdealSet, Side};
use crate::props::{find_annihilator_k, is_g_armendariz, is_sa, is_sigma_compatible_ring};
use crate::report::{series_json, set_json, PropertyReport};
use crate::ring::same_ring;
use crate::series::{series_mul, Series};

use super::universe::TruncatedUniverse;

/// `{u | u·s = 0 for all s ∈ S}` (left) or `{u | s·u = 0}` (right) over
/// universe indices.
pub fn universe_annihilator(universe: &TruncatedUniverse, s: &ElemSet, side: Side) -> ElemSet {
    ElemSet::from_iter_in(
        universe.len(),
        (0..universe.len()).filter(|&u| {
            s.iter().all(|t| match side {
                Side::Left => universe.product_is_zero(u, t),
                Side::Right => universe.product_is_zero(t, u),
            })
        }),
    )
}

/// Outcome of the three annihilator identities for one pair `(I, J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorLift {
    /// Series with coefficients in `I` and in `J` are exactly those with
    /// coefficients in `I ∩ J`.
    pub intersection: bool,
    /// `ℓ(I-series) = ℓ_R(I)-series` and the same for `J`.
    pub left_lift: bool,
    /// `r(I-series) = r_R(I)-series` and the same for `J`.
    pub right_lift: bool,
    /// `ℓ_R(I ∩ J) = ℓ_R(I) + ℓ_R(J)`.
    pub base_sum: bool,
    /// The same identity among universe series sets.
    pub universe_sum: bool,
}

impl AnnihilatorLift {
    pub fn holds(&self) -> bool {
        self.intersection && self.left_lift && self.right_lift && self.base_sum == self.universe_sum
    }
}

/// Checks the intersection identity, the annihilator lift on both sides,
/// and that the left-annihilator sum identity has the same truth value at
/// base level and universe level.
pub fn lifted_annihilator_check(i: &IdealSet, j: &IdealSet, universe: &TruncatedUniverse) -> Result<AnnihilatorLift> {
    let ring = universe.ring();
    if !same_ring(i.ring(), ring) || !same_ring(j.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if !is_sigma_compatible_ring(ring, universe.twist().sigma_generators()).verdict {
        return Err(Error::PreconditionFail("twist is not sigma-compatible".into()));
    }
    let both = i.members().intersection(j.members());
    let si = universe.with_coefficients_in(i.members());
    let sj = universe.with_coefficients_in(j.members());
    let sij = universe.with_coefficients_in(&both);
    let intersection = si.intersection(&sj) == sij;

    let lift = |side: Side| {
        [i.members(), j.members()].iter().all(|m| {
            let s = universe.with_coefficients_in(m);
            universe_annihilator(universe, &s, side) == universe.with_coefficients_in(&annihilator_set(ring, m, side))
        })
    };
    let left_lift = lift(Side::Left);
    let right_lift = lift(Side::Right);

    let left = |m: &ElemSet| annihilator_set(ring, m, Side::Left);
    let base_sum = left(&both) == ring.set_sum(&left(i.members()), &left(j.members()));
    let ul = |s: &ElemSet| universe_annihilator(universe, s, Side::Left);
    let universe_sum = ul(&sij) == universe.set_sum(&ul(&si), &ul(&sj));
    Ok(AnnihilatorLift { intersection, left_lift, right_lift, base_sum, universe_sum })
}

/// [`lifted_annihilator_check`] over every pair of right ideals.
pub fn lifted_annihilator_report(universe: &TruncatedUniverse) -> Result<PropertyReport> {
    let ring = universe.ring();
    let ideals = enumerate_ideals(ring, IdealKind::Right)?;
    let mut pairs = 0usize;
    for i in &ideals {
        for j in &ideals {
            pairs += 1;
            let lift = lifted_annihilator_check(i, j, universe)?;
            if !lift.holds() {
                return Ok(PropertyReport::new("annihilator-lift", false)
                    .witness(json!({
                        "I": set_json(ring, i.members()),
                        "J": set_json(ring, j.members()),
                        "intersection": lift.intersection,
                        "left-lift": lift.left_lift,
                        "right-lift": lift.right_lift,
                        "base-sum": lift.base_sum,
                        "universe-sum": lift.universe_sum,
                    }))
                    .bounds(universe.bounds_json()));
            }
        }
    }
    Ok(PropertyReport::new("annihilator-lift", true)
        .bounds(universe.bounds_json())
        .stat("ideal-pairs", pairs)
        .note("identities certified on the truncated universe only"))
}

/// The content ideals, the chosen `K`, and the checks at both levels.
#[derive(Debug, Clone)]
pub struct SaTransfer {
    pub i0: IdealSet,
    pub j0: IdealSet,
    pub k: IdealSet,
    /// `r_R(I0) + r_R(J0) = r_R(K)` by direct evaluation.
    pub base: bool,
    /// `r(I-side) + r(J-side) = r(K-series)` among universe series.
    pub universe: bool,
    /// Contents of the universe `K`-series regenerate `K` and satisfy the
    /// base identity.
    pub descent: bool,
}

impl SaTransfer {
    pub fn holds(&self) -> bool {
        self.base && self.universe && self.descent
    }

    pub fn report(&self, universe: &TruncatedUniverse) -> PropertyReport {
        let ring = universe.ring();
        PropertyReport::new("sa-transfer", self.holds())
            .certificate(json!({
                "I0": set_json(ring, self.i0.members()),
                "J0": set_json(ring, self.j0.members()),
                "K": set_json(ring, self.k.members()),
                "base": self.base,
                "universe": self.universe,
                "descent": self.descent,
            }))
            .bounds(universe.bounds_json())
    }
}

/// Builds `I0`, `J0` from coefficient contents, picks the first two-sided
/// `K` with `r_R(K) = r_R(I0) + r_R(J0)`, and checks the series-level
/// identity inside the universe.
pub fn sa_transfer_witness(i_gens: &[Series], j_gens: &[Series], universe: &TruncatedUniverse) -> Result<SaTransfer> {
    let twist = universe.twist();
    if i_gens.iter().chain(j_gens).any(|f| !std::sync::Arc::ptr_eq(f.twist(), twist)) {
        return Err(Error::TwistMismatch);
    }
    if !twist.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let ring = universe.ring();
    if !is_sa(ring)?.verdict {
        return Err(Error::PreconditionFail("base ring is not SA".into()));
    }
    let support = universe.window().len().min(2);
    if !is_g_armendariz(twist, support, universe.window())?.verdict {
        return Err(Error::PreconditionFail("base ring is not G-Armendariz on the universe bounds".into()));
    }
    let content = |gens: &[Series]| ideal_closure(ring, gens.iter().flat_map(|f| f.content().to_vec()), IdealKind::Twosided);
    let (i0, j0) = (content(i_gens), content(j_gens));
    let r = |m: &ElemSet| annihilator_set(ring, m, Side::Right);
    let target = ring.set_sum(&r(i0.members()), &r(j0.members()));
    let ideals = enumerate_ideals(ring, IdealKind::Twosided)?;
    let k = find_annihilator_k(ring, &ideals, &target)
        .ok_or_else(|| Error::NoK(format!("I0 = {}, J0 = {}", i0.show(), j0.show())))?
        .clone();
    let base = naive_right_ann(ring, k.members()) == target;

    let r_gens = |gens: &[Series]| -> Result<ElemSet> {
        let mut out = ElemSet::empty(universe.len());
        for u in 0..universe.len() {
            let us = universe.series(u);
            let mut killed = true;
            for f in gens {
                if !series_mul(f, &us)?.is_zero() {
                    killed = false;
                    break;
                }
            }
            if killed {
                out.insert(u);
            }
        }
        Ok(out)
    };
    let lhs = universe.set_sum(&r_gens(i_gens)?, &r_gens(j_gens)?);
    let k_series = universe.with_coefficients_in(k.members());
    let rhs = universe_annihilator(universe, &k_series, Side::Right);
    let universe_ok = lhs == rhs;

    let k0 = ideal_closure(ring, k_series.iter().flat_map(|s| universe.row(s).to_vec()), IdealKind::Twosided);
    let descent = k0.members() == k.members() && naive_right_ann(ring, k0.members()) == target;
    Ok(SaTransfer { i0, j0, k, base, universe: universe_ok, descent })
}

fn naive_right_ann(ring: &crate::ring::FiniteRing, s: &ElemSet) -> ElemSet {
    ring.set_of(ring.elements().filter(|&a| s.iter().all(|y| ring.mul(y, a) == 0)))
}

/// Runs [`sa_transfer_witness`] and reports the generator sets alongside.
pub fn sa_transfer_report(i_gens: &[Series], j_gens: &[Series], universe: &TruncatedUniverse) -> Result<PropertyReport> {
    let t = sa_transfer_witness(i_gens, j_gens, universe)?;
    let mut r = t.report(universe);
    if let Some(c) = r.certificate.as_mut() {
        c["I-gens"] = i_gens.iter().map(series_json).collect();
        c["J-gens"] = j_gens.iter().map(series_json).collect();
    }
    Ok(r)
}
