//! Coefficient extraction: from `fg ∈ U((G; σ; τ))` to every single term
//! `f(u)σ_u(g(v))τ(u, v) ∈ U`, one derivation step at a time.
//!
//! Products `w` are visited in ascending order. At `w` the pairs
//! `(u_1, v_1), ..., (u_n, v_n)` with `u_1 ≺ ... ≺ u_n` are handled in turn.
//! With `e_k` the term of pair `k` and `a_i = e_i + ... + e_n ∈ U`, the step
//! for `i` multiplies `a_i` on the right by `f(u_i)`. Each `e_k f(u_i)` with
//! `k > i` lies in `U` because `u_i v_k ≺ w` was settled earlier, so
//! `e_i f(u_i) ∈ U`, hence `e_i^2 ∈ U` and `e_i ∈ U` by semiprimeness.
//! Every membership claimed along the way is evaluated directly.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::ideal::{classify, is_semiprime_ideal, is_sigma_compatible_set, IdealKind, IdealSet};
use crate::ring::{same_ring, Elem};
use crate::series::{series_mul, term_product, Series, TwistSystem};

/// One settled pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub w: GroupElement,
    /// All of `X_w(f, g)`, ascending by `u`.
    pub pairs: Vec<(GroupElement, GroupElement)>,
    pub established: Vec<(GroupElement, GroupElement)>,
    /// `f(u_i)`.
    pub multiplier: Elem,
    /// `f(u_i)σ_{u_i}(g(v_i))τ(u_i, v_i)`.
    pub term: Elem,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTrace {
    pub steps: Vec<TraceStep>,
    /// Pairs whose term was derived to lie in `U`, ascending.
    pub conclusion: Vec<(GroupElement, GroupElement)>,
    /// Pairs whose term lies in `U` by direct evaluation, ascending.
    pub oracle: Vec<(GroupElement, GroupElement)>,
}

impl DerivationTrace {
    pub fn agrees(&self) -> bool {
        self.conclusion == self.oracle
    }
}

/// Checks that `U` is a semiprime two-sided ideal compatible with every
/// generator of `σ`.
pub fn check_extraction_ideal(twist: &TwistSystem, u: &IdealSet) -> Result<()> {
    if !same_ring(twist.ring(), u.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = twist.ring();
    if classify(ring, u.members()) != IdealKind::Twosided {
        return Err(Error::PreconditionFail(format!("U = {} is not a two-sided ideal", u.show())));
    }
    if let Err(w) = is_semiprime_ideal(u) {
        return Err(Error::PreconditionFail(format!(
            "U is not semiprime: {}^{} ∈ U",
            ring.name(w.element),
            w.exponent
        )));
    }
    if let Some(w) = is_sigma_compatible_set(ring, u.members(), twist.sigma_generators()).violation {
        return Err(Error::PreconditionFail(format!(
            "U is not sigma-compatible at ({}, {})",
            ring.name(w.a),
            ring.name(w.b)
        )));
    }
    Ok(())
}

/// Derives `f(u)σ_u(g(v))τ(u, v) ∈ U` for every `u ∈ supp f`, `v ∈ supp g`
/// and confirms the conclusion against direct evaluation.
pub fn coefficient_extraction(f: &Series, g: &Series, u: &IdealSet) -> Result<DerivationTrace> {
    if !Arc::ptr_eq(f.twist(), g.twist()) {
        return Err(Error::TwistMismatch);
    }
    let twist = f.twist();
    check_extraction_ideal(twist, u)?;
    let ring = twist.ring();
    let fg = series_mul(f, g)?;
    if let Some((w, c)) = fg.terms().find(|&(_, c)| !u.contains(c)) {
        return Err(Error::PreconditionFail(format!("(fg)({w}) = {} ∉ U", ring.name(c))));
    }
    let group = twist.group();
    let mut by_w: BTreeMap<GroupElement, Vec<(GroupElement, GroupElement)>> = BTreeMap::new();
    for (x, _) in f.terms() {
        for (y, _) in g.terms() {
            by_w.entry(group.op(x, y)?).or_default().push((x.clone(), y.clone()));
        }
    }
    let e = |x: &GroupElement, y: &GroupElement| term_product(twist, x, f.coeff(x), y, g.coeff(y));
    let inv = |r: Elem| ring.inverse(r).expect("tau values are units");
    let mismatch = |w: &GroupElement, what: String| Error::TraceMismatch(format!("at w = {w}: {what}"));

    let mut established: BTreeSet<(GroupElement, GroupElement)> = BTreeSet::new();
    let mut steps = Vec::new();
    for (w, pairs) in &by_w {
        let terms: Vec<Elem> = pairs.iter().map(|(x, y)| e(x, y)).collect();
        let mut running = terms.iter().fold(0, |acc, &t| ring.add(acc, t));
        if running != fg.coeff(w) {
            return Err(mismatch(w, "term sum differs from (fg)(w)".into()));
        }
        for (i, (ui, vi)) in pairs.iter().enumerate() {
            if !u.contains(running) {
                return Err(mismatch(w, format!("a_{} = {} ∉ U", i + 1, ring.name(running))));
            }
            let m = f.coeff(ui);
            let mut cross = 0;
            for (k, (uk, vk)) in pairs.iter().enumerate().skip(i + 1) {
                // (u_i, v_k) sits at a strictly smaller product
                let earlier = (ui.clone(), vk.clone());
                if !established.contains(&earlier) {
                    return Err(mismatch(w, format!("pair ({ui}, {vk}) not yet established")));
                }
                let tau_ik = twist.tau(ui, vk);
                let tau_k = twist.tau(uk, vk);
                let gk = g.coeff(vk);
                // f(u_i)σ_{u_i}(g(v_k)) ∈ U, moved to σ_{u_k} by compatibility
                let base = ring.mul(e(ui, vk), inv(tau_ik));
                let moved = ring.mul(ring.mul(m, twist.apply_sigma(uk, gk)), tau_k);
                let reversed = ring.mul(ring.mul(twist.apply_sigma(uk, gk), tau_k), m);
                let t = ring.mul(terms[k], m);
                for (label, val) in [("base", base), ("moved", moved), ("reversed", reversed), ("cross", t)] {
                    if !u.contains(val) {
                        return Err(mismatch(w, format!("{label} term {} ∉ U for k = {}", ring.name(val), k + 1)));
                    }
                }
                cross = ring.add(cross, t);
            }
            let lead = ring.sub(ring.mul(running, m), cross);
            let ei = terms[i];
            if lead != ring.mul(ei, m) || !u.contains(lead) {
                return Err(mismatch(w, format!("e_{} f(u_{}) ∉ U", i + 1, i + 1)));
            }
            if !u.contains(ring.mul(ei, ei)) {
                return Err(mismatch(w, format!("e_{}^2 ∉ U", i + 1)));
            }
            if !u.contains(ei) {
                return Err(mismatch(w, format!("e_{} = {} ∉ U", i + 1, ring.name(ei))));
            }
            established.insert((ui.clone(), vi.clone()));
            running = ring.sub(running, ei);
            steps.push(TraceStep {
                w: w.clone(),
                pairs: pairs.clone(),
                established: vec![(ui.clone(), vi.clone())],
                multiplier: m,
                term: ei,
                check: "direct-eval-ok".into(),
            });
        }
    }
    let conclusion: Vec<_> = established.into_iter().collect();
    let mut oracle = Vec::new();
    for (x, _) in f.terms() {
        for (y, _) in g.terms() {
            if u.contains(e(x, y)) {
                oracle.push((x.clone(), y.clone()));
            }
        }
    }
    oracle.sort();
    let trace = DerivationTrace { steps, conclusion, oracle };
    if !trace.agrees() {
        return Err(Error::TraceMismatch("conclusion differs from direct evaluation".into()));
    }
    Ok(trace)
}
