//! Totally ordered abelian groups used as series exponents: `Z` with its
//! natural order and `Z^k` ordered lexicographically.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `Z^k`, stored as its coordinates.
///
/// The derived `Ord` is lexicographic on coordinates, which coincides with
/// the group order of every shipped [`OrderedGroup`]; sorted containers of
/// exponents are therefore sorted by `⪯`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i32>);

impl GroupElement {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Shorthand for an element of `Z`.
    pub fn int(n: i32) -> Self {
        GroupElement(vec![n])
    }
}

impl From<i32> for GroupElement {
    fn from(n: i32) -> Self {
        GroupElement(vec![n])
    }
}

impl From<Vec<i32>> for GroupElement {
    fn from(v: Vec<i32>) -> Self {
        GroupElement(v)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [n] => write!(f, "{n}"),
            cs => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

// Rank-one elements serialize as a bare integer, others as an array.
impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.as_slice() {
            [n] => s.serialize_i32(*n),
            cs => cs.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i32),
            Coords(Vec<i32>),
        }
        Ok(match Repr::deserialize(d)? {
            Repr::Int(n) => GroupElement(vec![n]),
            Repr::Coords(v) => GroupElement(v),
        })
    }
}

/// Fixture form: `{"group": "Z"}` or `{"group": "Z^k_lex", "k": 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// A bi-invariantly totally ordered abelian group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderedGroup {
    /// `(Z, +)` with the natural order.
    Integers,
    /// `(Z^k, +)` with the lexicographic order.
    Lex(usize),
}

impl OrderedGroup {
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        group_make(&spec.group, spec.k)
    }

    pub fn to_spec(&self) -> GroupSpec {
        match self {
            OrderedGroup::Integers => GroupSpec { group: "Z".into(), k: None },
            OrderedGroup::Lex(k) => GroupSpec { group: "Z^k_lex".into(), k: Some(*k) },
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            OrderedGroup::Integers => 1,
            OrderedGroup::Lex(k) => *k,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// Builds an element, checking its rank.
    pub fn element(&self, coords: impl Into<Vec<i32>>) -> Result<GroupElement> {
        let coords = coords.into();
        if coords.len() != self.rank() {
            return Err(Error::MalformedSpec(format!(
                "element {coords:?} has rank {}, group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(GroupElement(coords))
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.rank() == self.rank()
    }

    /// The group law (componentwise addition), failing on overflow.
    pub fn op(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        x.0.iter()
            .zip(&y.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        x.0.iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }

    /// `x^n` in multiplicative notation, i.e. `n·x`.
    pub fn pow(&self, x: &GroupElement, n: i32) -> Result<GroupElement> {
        x.0.iter()
            .map(|a| a.checked_mul(n).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }

    /// The total order `⪯`.
    pub fn compare(&self, x: &GroupElement, y: &GroupElement) -> Ordering {
        // natural order for Z, lexicographic for Z^k
        x.0.cmp(&y.0)
    }

    /// All elements with every coordinate in `lo..=hi`, ascending by `⪯`.
    pub fn window(&self, lo: i32, hi: i32) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for _ in 0..self.rank() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<GroupElement> = out.into_iter().map(GroupElement).collect();
        out.sort_by(|a, b| self.compare(a, b));
        out
    }
}

/// Builds a group from its fixture name: `"Z"` or `"Z^k_lex"` with `k >= 1`.
pub fn group_make(kind: &str, k: Option<usize>) -> Result<OrderedGroup> {
    match (kind, k) {
        ("Z", None) => Ok(OrderedGroup::Integers),
        ("Z^k_lex", Some(k)) if k >= 1 => Ok(OrderedGroup::Lex(k)),
        ("Z^k_lex", k) => Err(Error::MalformedSpec(format!("Z^k_lex needs k >= 1, got {k:?}"))),
        (other, _) => Err(Error::MalformedSpec(format!("unknown group kind {other:?}"))),
    }
}
