//! Lifting a fusible decomposition from the coefficient ring to a series.

use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::props::{fusible_decompositions, is_sigma_compatible_ring, left_fusible_failure, zero_divisor_sets};
use crate::report::{series_json, PropertyReport};
use crate::ring::Elem;
use crate::series::{embed_scalar, series_add, series_mul, Series};

use super::universe::TruncatedUniverse;

/// `f = g + h` with `g` a left zero-divisor and `h` left regular on the
/// universe, plus the evidence for both.
#[derive(Debug, Clone)]
pub struct FusibleLift {
    pub f: Series,
    pub g: Series,
    pub h: Series,
    /// `π(f)`.
    pub s0: GroupElement,
    /// `f(s0) = a + b` with `a ∈ Z_ℓ(R)`, `b ∈ Z_ℓ*(R)`.
    pub a: Elem,
    pub b: Elem,
    /// Nonzero `d` with `a d = 0`.
    pub d: Elem,
    pub sum_exact: bool,
    pub g_annihilated: bool,
    pub leading_regular: bool,
    /// `h k ≠ 0` for every nonzero `k` in the universe.
    pub h_regular_on_universe: bool,
    pub universe_checked: usize,
}

impl FusibleLift {
    pub fn certified(&self) -> bool {
        self.sum_exact && self.g_annihilated && self.leading_regular && self.h_regular_on_universe
    }

    pub fn report(&self, universe: &TruncatedUniverse) -> PropertyReport {
        let ring = self.f.ring();
        PropertyReport::new("fusible-lift", self.certified())
            .certificate(json!({
                "f": series_json(&self.f),
                "g": series_json(&self.g),
                "h": series_json(&self.h),
                "s0": self.s0,
                "a": ring.name(self.a),
                "b": ring.name(self.b),
                "d": ring.name(self.d),
            }))
            .bounds(universe.bounds_json())
            .stat("universe-products", self.universe_checked)
            .note("regularity of h certified on the truncated universe only")
    }
}

/// Splits the leading coefficient of `f` as `a + b` (first decomposition
/// by `a`) and returns `g = a·x^{s0}`, `h = f - g`, verified directly.
pub fn lift_fusible_decomposition(f: &Series, universe: &TruncatedUniverse) -> Result<FusibleLift> {
    let twist = f.twist();
    if !Arc::ptr_eq(twist, universe.twist()) {
        return Err(Error::TwistMismatch);
    }
    let ring = twist.ring();
    if f.is_zero() {
        return Err(Error::ZeroSeries);
    }
    if let Some(a) = left_fusible_failure(ring) {
        return Err(Error::NotFusibleRing(ring.name(a).to_string()));
    }
    let compat = is_sigma_compatible_ring(ring, twist.sigma_generators());
    if !compat.verdict {
        return Err(Error::NotSigmaCompatible(compat.witness.map(|w| w.to_string()).unwrap_or_default()));
    }
    let s0 = f.min_exponent().expect("nonzero").clone();
    let lead = f.coeff(&s0);
    let (a, b) = fusible_decompositions(ring, lead)?[0];
    let d = (1..ring.size()).find(|&d| ring.mul(a, d) == 0).expect("a is a left zero-divisor");
    let g = Series::monomial(twist, s0.clone(), a);
    let h = series_add(f, &g.neg())?;

    let sum_exact = series_add(&g, &h)? == *f;
    let g_annihilated = series_mul(&g, &embed_scalar(twist, d)?)?.is_zero();
    let zd = zero_divisor_sets(ring);
    let leading_regular = h.coeff(&s0) == b && zd.left_regular.contains(b) && h.min_exponent() == Some(&s0);
    let mut h_regular_on_universe = true;
    for i in 1..universe.len() {
        if series_mul(&h, &universe.series(i))?.is_zero() {
            h_regular_on_universe = false;
            break;
        }
    }
    Ok(FusibleLift {
        f: f.clone(),
        g,
        h,
        s0,
        a,
        b,
        d,
        sum_exact,
        g_annihilated,
        leading_regular,
        h_regular_on_universe,
        universe_checked: universe.len() - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::OrderedGroup;
    use crate::ring::{ring_make, FiniteRing, RingSpec};
    use crate::series::{series_make, AutomorphismSpec, SigmaSpec, TauSpec, TwistSpec, TwistSystem};

    fn universe_over(ring: RingSpec, sigma: SigmaSpec) -> TruncatedUniverse {
        let ring: Arc<FiniteRing> = Arc::new(ring_make(&ring).unwrap());
        let twist = Arc::new(TwistSystem::new(&ring, OrderedGroup::Integers, TwistSpec { sigma, tau: TauSpec::one() }).unwrap());
        TruncatedUniverse::new(&twist, OrderedGroup::Integers.window(0, 2)).unwrap()
    }

    #[test]
    fn klein_example() {
        let u = universe_over(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)), SigmaSpec::identity());
        let r = u.ring().clone();
        let e = |n| r.element_named(n).unwrap();
        let f = series_make(u.twist(), [(0.into(), e("(1,0)")), (1.into(), e("(1,1)"))]).unwrap();
        let lift = lift_fusible_decomposition(&f, &u).unwrap();
        assert!(lift.certified());
        assert_eq!(lift.g, Series::monomial(u.twist(), 0.into(), e("(0,1)")));
        assert_eq!(lift.h, series_make(u.twist(), [(0.into(), e("(1,1)")), (1.into(), e("(1,1)"))]).unwrap());
        assert_eq!(lift.d, e("(1,0)"));
    }

    #[test]
    fn domain_case_and_refusals() {
        let frob = SigmaSpec { generator: Some(AutomorphismSpec::Named("frobenius".into())), generators: None };
        let u = universe_over(RingSpec::gf4(), frob);
        let f = series_make(u.twist(), [(1.into(), 2), (2.into(), 3)]).unwrap();
        let lift = lift_fusible_decomposition(&f, &u).unwrap();
        assert!(lift.certified() && lift.g.is_zero() && lift.h == f);
        assert_eq!(lift_fusible_decomposition(&Series::zero(u.twist()), &u).unwrap_err(), Error::ZeroSeries);

        let u = universe_over(RingSpec::zn(4), SigmaSpec::identity());
        let f = Series::monomial(u.twist(), 0.into(), 1);
        assert_eq!(lift_fusible_decomposition(&f, &u).unwrap_err(), Error::NotFusibleRing("2".into()));

        let swap = SigmaSpec { generator: Some(AutomorphismSpec::Permutation(vec![0, 2, 1, 3])), generators: None };
        let u = universe_over(RingSpec::product(RingSpec::zn(2), RingSpec::zn(2)), swap);
        let f = Series::monomial(u.twist(), 0.into(), 1);
        assert!(matches!(lift_fusible_decomposition(&f, &u), Err(Error::NotSigmaCompatible(_))));
    }
}
