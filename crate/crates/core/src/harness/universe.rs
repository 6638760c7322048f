//! A finite stand-in for the series ring: every series supported on a fixed
//! window of exponents.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::ring::{Elem, FiniteRing};
use crate::series::{series_make, Series, TwistSystem};

/// Largest number of series a universe may hold.
pub const UNIVERSE_CAP: usize = 65536;

/// All `|R|^|W|` series with support inside the window `W`, held as dense
/// coefficient rows. Series are numbered in mixed radix with the first
/// window exponent most significant, so index 0 is the zero series.
#[derive(Debug, Clone)]
pub struct TruncatedUniverse {
    twist: Arc<TwistSystem>,
    window: Vec<GroupElement>,
    rows: Vec<Elem>,
    count: usize,
    // for each window pair (p, q): index of p·q in `sums` and τ(p, q)
    pair_target: Vec<usize>,
    pair_tau: Vec<Elem>,
    sums: Vec<GroupElement>,
}

impl TruncatedUniverse {
    pub fn new(twist: &Arc<TwistSystem>, window: Vec<GroupElement>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::MalformedSpec("universe window is empty".into()));
        }
        if window.iter().any(|x| !twist.group().contains(x)) {
            return Err(Error::MalformedSpec("window exponent has the wrong rank".into()));
        }
        if window.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::MalformedSpec("window must be strictly ascending".into()));
        }
        let n = twist.ring().size();
        let count = (0..window.len())
            .try_fold(1usize, |acc, _| acc.checked_mul(n).filter(|&c| c <= UNIVERSE_CAP))
            .ok_or(Error::SizeCapExceeded { size: usize::MAX, cap: UNIVERSE_CAP })?;
        let w = window.len();
        let mut rows = vec![0; count * w];
        for i in 0..count {
            let mut rest = i;
            for p in (0..w).rev() {
                rows[i * w + p] = rest % n;
                rest /= n;
            }
        }
        let group = twist.group();
        let mut sums = Vec::new();
        for x in &window {
            for y in &window {
                sums.push(group.op(x, y)?);
            }
        }
        let products = sums.clone();
        sums.sort();
        sums.dedup();
        let pair_target = products.iter().map(|z| sums.binary_search(z).expect("present")).collect();
        let mut pair_tau = Vec::with_capacity(w * w);
        for x in &window {
            for y in &window {
                pair_tau.push(twist.tau(x, y));
            }
        }
        Ok(TruncatedUniverse { twist: twist.clone(), window, rows, count, pair_target, pair_tau, sums })
    }

    pub fn twist(&self) -> &Arc<TwistSystem> {
        &self.twist
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.twist.ring()
    }

    pub fn window(&self) -> &[GroupElement] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Coefficients of series `i` on the window.
    pub fn row(&self, i: usize) -> &[Elem] {
        let w = self.window.len();
        &self.rows[i * w..(i + 1) * w]
    }

    pub fn series(&self, i: usize) -> Series {
        series_make(&self.twist, self.window.iter().cloned().zip(self.row(i).iter().copied()))
            .expect("window exponents are distinct")
    }

    pub fn all_series(&self) -> impl Iterator<Item = Series> + '_ {
        (0..self.count).map(|i| self.series(i))
    }

    /// Index of `f`, if its support lies in the window.
    pub fn index_of(&self, f: &Series) -> Option<usize> {
        if !Arc::ptr_eq(f.twist(), &self.twist) {
            return None;
        }
        let n = self.ring().size();
        let mut idx = 0;
        let mut matched = 0;
        for x in &self.window {
            let c = f.coeff(x);
            matched += usize::from(c != 0);
            idx = idx * n + c;
        }
        (matched == f.len()).then_some(idx)
    }

    /// Index of the coefficientwise sum of series `i` and `j`.
    pub fn add(&self, i: usize, j: usize) -> usize {
        let n = self.ring().size();
        let ring = self.ring();
        self.row(i).iter().zip(self.row(j)).fold(0, |acc, (&a, &b)| acc * n + ring.add(a, b))
    }

    /// Coefficients of the product of series `i` and `j` on the sum window.
    pub fn product(&self, i: usize, j: usize) -> Vec<Elem> {
        let ring = self.ring();
        let w = self.window.len();
        let mut acc = vec![0; self.sums.len()];
        let (f, g) = (self.row(i), self.row(j));
        for p in 0..w {
            if f[p] == 0 {
                continue;
            }
            for q in 0..w {
                if g[q] == 0 {
                    continue;
                }
                let t = ring.mul(ring.mul(f[p], self.twist.apply_sigma(&self.window[p], g[q])), self.pair_tau[p * w + q]);
                let slot = &mut acc[self.pair_target[p * w + q]];
                *slot = ring.add(*slot, t);
            }
        }
        acc
    }

    pub fn product_is_zero(&self, i: usize, j: usize) -> bool {
        self.product(i, j).iter().all(|&c| c == 0)
    }

    /// Series whose coefficients all lie in `set`, as an index set.
    pub fn with_coefficients_in(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_iter_in(self.count, (0..self.count).filter(|&i| self.row(i).iter().all(|&c| set.contains(c))))
    }

    /// `{a + b | a ∈ A, b ∈ B}` on index sets.
    pub fn set_sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.count);
        for i in a.iter() {
            for j in b.iter() {
                out.insert(self.add(i, j));
            }
        }
        out
    }

    pub fn bounds_json(&self) -> Value {
        json!({"window": self.window, "series": self.count})
    }
}
