//! Σ_U-zip at series level: reduce a set of series to its coefficient
//! content, find a minimal content witness, and lift it back.

use std::sync::Arc;

use serde_json::json;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::IdealSet;
use crate::props::{sigma_u_zip_search, ZipOutcome};
use crate::report::{series_json, set_json, PropertyReport};
use crate::ring::Elem;
use crate::series::{series_mul, Series};

use super::extraction::{check_extraction_ideal, coefficient_extraction};
use super::universe::TruncatedUniverse;

#[derive(Debug, Clone)]
pub struct SeriesZip {
    /// `C_X`, the union of contents.
    pub content: ElemSet,
    /// Minimal `C_{X0} ⊆ C_X` with `(U:C_{X0}) = U`.
    pub minimal_content: ElemSet,
    /// Series of `X` with some coefficient in `C_{X0}`.
    pub x0: Vec<Series>,
    /// `(U((G)):X0) = U((G))` on the universe.
    pub verified: bool,
    /// Universe series in `(U((G)):X0)` justified through extraction.
    pub extraction_runs: usize,
}

impl SeriesZip {
    pub fn report(&self, universe: &TruncatedUniverse) -> PropertyReport {
        let ring = universe.ring();
        PropertyReport::new("series-zip", self.verified)
            .certificate(json!({
                "C_X": set_json(ring, &self.content),
                "C_X0": set_json(ring, &self.minimal_content),
                "X0": self.x0.iter().map(series_json).collect::<Vec<_>>(),
            }))
            .bounds(universe.bounds_json())
            .stat("extraction-runs", self.extraction_runs)
            .note("quotients evaluated on the truncated universe only")
    }
}

/// `{k | f·k ∈ U((G)) for all f ∈ X}` over universe indices.
pub fn universe_quotient(xs: &[Series], u: &ElemSet, universe: &TruncatedUniverse) -> Result<ElemSet> {
    let mut out = ElemSet::empty(universe.len());
    for k in 0..universe.len() {
        let ks = universe.series(k);
        let mut inside = true;
        for f in xs {
            if !series_mul(f, &ks)?.coefficients_in(u) {
                inside = false;
                break;
            }
        }
        if inside {
            out.insert(k);
        }
    }
    Ok(out)
}

/// Runs the content reduction on `X` and verifies the lifted witness `X0`.
pub fn series_zip_witness(xs: &[Series], u: &IdealSet, universe: &TruncatedUniverse) -> Result<SeriesZip> {
    let twist = universe.twist();
    if xs.iter().any(|f| !Arc::ptr_eq(f.twist(), twist)) {
        return Err(Error::TwistMismatch);
    }
    check_extraction_ideal(twist, u)?;
    let ring = universe.ring();
    let identity = twist.group().identity();
    if !universe.window().contains(&identity) {
        return Err(Error::PreconditionFail("universe window must contain the identity".into()));
    }
    if xs.iter().all(|f| f.coefficients_in(u.members())) {
        return Err(Error::PreconditionFail("X lies inside U((G))".into()));
    }
    let u_series = universe.with_coefficients_in(u.members());
    let q = universe_quotient(xs, u.members(), universe)?;
    if q != u_series {
        let k = q.difference(&u_series).iter().next().expect("quotient contains U((G))");
        return Err(Error::HypothesisFails(format!("{} lies in (U((G)):X) but not in U((G))", universe.series(k))));
    }
    let content = xs.iter().fold(ring.empty_set(), |acc, f| acc.union(&f.content()));
    let minimal_content = match sigma_u_zip_search(ring, u.members(), &content) {
        ZipOutcome::Witness { minimal, .. } => minimal,
        // a content element r ∉ U with C_X·r ⊆ U would make r·1 a series in
        // (U((G)):X) outside U((G)), which the universe check excluded
        other => return Err(Error::TraceMismatch(format!("content reduction failed: {other:?}"))),
    };
    let x0: Vec<Series> = xs
        .iter()
        .filter(|f| f.terms().any(|(_, c)| minimal_content.contains(c)))
        .cloned()
        .collect();
    let q0 = universe_quotient(&x0, u.members(), universe)?;
    let mut runs = 0;
    let mut justified = true;
    for k in q0.iter() {
        let ks = universe.series(k);
        for f in &x0 {
            coefficient_extraction(f, &ks, u)?;
            runs += 1;
        }
        // every term lies in U, so c·k(v) ∈ U for c ∈ C_{X0}; hence k(v) ∈ (U:C_{X0}) = U
        justified &= ks.terms().all(|(_, kv): (_, Elem)| {
            minimal_content.iter().all(|c| u.contains(ring.mul(c, kv))) && u.contains(kv)
        });
    }
    Ok(SeriesZip { content, minimal_content, x0, verified: justified && q0 == u_series, extraction_runs: runs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::OrderedGroup;
    use crate::ring::{ring_make, RingSpec};
    use crate::series::TwistSystem;

    fn setup() -> (TruncatedUniverse, IdealSet) {
        let ring = Arc::new(ring_make(&RingSpec::zn(4)).unwrap());
        let twist = Arc::new(TwistSystem::trivial(&ring, OrderedGroup::Integers));
        let u = IdealSet::classified(&ring, ring.set_of([0, 2]));
        (TruncatedUniverse::new(&twist, OrderedGroup::Integers.window(0, 1)).unwrap(), u)
    }

    #[test]
    fn examples() {
        let (uni, u) = setup();
        let t = uni.twist().clone();
        let x = [Series::monomial(&t, 0.into(), 3)];
        let z = series_zip_witness(&x, &u, &uni).unwrap();
        assert!(z.verified);
        assert_eq!((z.content.to_vec(), z.x0.len()), (vec![3], 1));

        let x = [Series::monomial(&t, 0.into(), 1)];
        assert!(series_zip_witness(&x, &u, &uni).unwrap().verified);

        let x = [Series::monomial(&t, 0.into(), 2), Series::monomial(&t, 1.into(), 3)];
        let z = series_zip_witness(&x, &u, &uni).unwrap();
        assert!(z.verified);
        assert_eq!(z.content.to_vec(), vec![2, 3]);
        assert_eq!(z.minimal_content.to_vec(), vec![3]);
        assert_eq!(z.x0, vec![x[1].clone()]);
    }

    #[test]
    fn refusals() {
        let (uni, u) = setup();
        let t = uni.twist().clone();
        let inside = [Series::monomial(&t, 0.into(), 2)];
        assert!(matches!(series_zip_witness(&inside, &u, &uni), Err(Error::PreconditionFail(_))));
    }
}
