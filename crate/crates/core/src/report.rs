//! Self-checking property reports.
//!
//! Every checker returns a [`PropertyReport`]. Witnesses and certificates
//! are stored as JSON values with ring elements rendered by name, so reports
//! read the same in text and in JSON. `reverified` records whether the
//! witness (on failure) or certificate (on success) passed an independent
//! re-evaluation of the definition.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::elemset::ElemSet;
use crate::ring::{Elem, FiniteRing};
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: bool,
    /// False when the property's hypothesis does not apply to the input.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub applicable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
    pub reverified: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl PropertyReport {
    pub fn new(property: impl Into<String>, verdict: bool) -> Self {
        PropertyReport {
            property: property.into(),
            verdict,
            applicable: true,
            witness: None,
            certificate: None,
            bounds: None,
            stats: BTreeMap::new(),
            reverified: true,
            note: None,
        }
    }

    pub fn not_applicable(property: impl Into<String>, note: impl Into<String>) -> Self {
        let mut r = PropertyReport::new(property, true);
        r.applicable = false;
        r.note = Some(note.into());
        r
    }

    pub fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn certificate(mut self, c: Value) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn bounds(mut self, b: Value) -> Self {
        self.bounds = Some(b);
        self
    }

    pub fn stat(mut self, key: &str, value: impl TryInto<u64>) -> Self {
        self.stats.insert(key.to_string(), value.try_into().unwrap_or(u64::MAX));
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn reverified(mut self, ok: bool) -> Self {
        self.reverified = ok;
        self
    }

    /// Verdict holds and every recorded witness re-verified. Inapplicable
    /// reports count as passing.
    pub fn passed(&self) -> bool {
        !self.applicable || (self.verdict && self.reverified)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.applicable, self.verdict) {
            (false, _) => "n/a",
            (true, true) => "true",
            (true, false) => "false",
        };
        write!(f, "{}: {status}", self.property)?;
        if !self.reverified {
            write!(f, " [REVERIFICATION FAILED]")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        if let Some(c) = &self.certificate {
            write!(f, "\n  certificate: {c}")?;
        }
        if let Some(b) = &self.bounds {
            write!(f, "\n  bounds: {b}")?;
        }
        if !self.stats.is_empty() {
            let parts: Vec<String> = self.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "\n  stats: {}", parts.join(" "))?;
        }
        if let Some(n) = &self.note {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Element name as a JSON string.
pub fn elem_json(ring: &FiniteRing, e: Elem) -> Value {
    Value::String(ring.name(e).to_string())
}

/// Set as a JSON array of element names, ascending by id.
pub fn set_json(ring: &FiniteRing, s: &ElemSet) -> Value {
    Value::Array(s.iter().map(|e| elem_json(ring, e)).collect())
}

/// Series as `[[exponent, "coefficient"], ...]`.
pub fn series_json(f: &Series) -> Value {
    let ring = f.ring();
    Value::Array(
        f.terms()
            .map(|(x, r)| serde_json::json!([x, ring.name(r)]))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_round_trip() {
        let r = PropertyReport::new("left-fusible", false)
            .witness(json!("2"))
            .stat("elements", 4)
            .note("bounded");
        let text = serde_json::to_string(&r).unwrap();
        let back: PropertyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(!text.contains("applicable"));
        let na = PropertyReport::not_applicable("x", "hypothesis fails");
        let back: PropertyReport = serde_json::from_str(&serde_json::to_string(&na).unwrap()).unwrap();
        assert_eq!(back, na);
        assert!(na.passed());
    }

    #[test]
    fn text_inlines_witness() {
        let r = PropertyReport::new("left-fusible", false).witness(json!("2"));
        let text = r.to_string();
        assert!(text.contains("false") && text.contains("witness: \"2\""));
    }
}
