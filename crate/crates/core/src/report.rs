//! Structured outcome of one identity check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Scalar(#[serde(with = "decimal")] BigInt),
    Coefficients(#[serde(with = "decimal_list")] Vec<BigInt>),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Scalar(v) => write!(f, "{v}"),
            Quantity::Coefficients(cs) => {
                write!(f, "[")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub parameters: BTreeMap<String, u64>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    /// Further independent computations that must agree with `rhs`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub routes: BTreeMap<String, Quantity>,
    pub passed: bool,
    /// First mismatch, empty when passed.
    pub detail: String,
}

impl VerificationReport {
    /// Compare `lhs` against `rhs`; `passed` is exactly their equality.
    pub fn compare(check: &str, parameters: &[(&str, u64)], lhs: Quantity, rhs: Quantity) -> Self {
        let detail = mismatch(&lhs, &rhs).unwrap_or_default();
        VerificationReport {
            check: check.to_string(),
            parameters: parameters
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            passed: detail.is_empty(),
            lhs,
            rhs,
            routes: BTreeMap::new(),
            detail,
        }
    }

    /// Add an extra route; the report keeps passing only if it equals `rhs`.
    pub fn with_route(mut self, name: &str, value: Quantity) -> Self {
        if let Some(why) = mismatch(&value, &self.rhs) {
            self.passed = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&format!("{name}: {why}"));
        }
        self.routes.insert(name.to_string(), value);
        self
    }

    /// `n=5 m=3` style rendering of the parameters.
    pub fn parameter_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.check, self.parameter_string())?;
        if self.passed {
            write!(f, " value={}", self.rhs)
        } else {
            write!(f, " {}", self.detail)
        }
    }
}

fn mismatch(lhs: &Quantity, rhs: &Quantity) -> Option<String> {
    match (lhs, rhs) {
        (Quantity::Scalar(a), Quantity::Scalar(b)) => {
            (a != b).then(|| format!("lhs {a} != rhs {b}"))
        }
        (Quantity::Coefficients(a), Quantity::Coefficients(b)) => {
            if let Some(k) = a.iter().zip(b).position(|(x, y)| x != y) {
                Some(format!(
                    "first difference at q^{k}: lhs {} != rhs {}",
                    a[k], b[k]
                ))
            } else if a.len() != b.len() {
                Some(format!("length {} != {}", a.len(), b.len()))
            } else {
                None
            }
        }
        _ => Some("scalar compared with coefficient list".to_string()),
    }
}

/// Serde adapter writing a `BigInt` as a decimal string.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Serde adapter writing a list of `BigInt`s as decimal strings.
pub mod decimal_list {
    use num_bigint::BigInt;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for c in v {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}
