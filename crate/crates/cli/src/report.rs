//! Serializable report shapes. Field order is the JSON key order.

use std::fmt;

use num_bigint::BigUint;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// An exact count; a JSON number when it fits in 64 bits, a decimal string
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(pub BigUint);

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match u64::try_from(&self.0) {
            Ok(v) => serializer.serialize_u64(v),
            Err(_) => serializer.collect_str(&self.0),
        }
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CountVisitor;

        impl Visitor<'_> for CountVisitor {
            type Value = Count;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a nonnegative integer or its decimal string")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Count, E> {
                Ok(Count(BigUint::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Count, E> {
                v.parse().map(Count).map_err(E::custom)
            }
        }

        deserializer.deserialize_any(CountVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub max_power: u32,
    pub checks: Vec<String>,
    pub ideals: Vec<IdealAnalysis>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealAnalysis {
    pub ring: Option<String>,
    pub prime: Option<String>,
    pub members: Option<Vec<String>>,
    pub quotient_order: Option<u64>,
    pub a: usize,
    pub b: usize,
    pub clique_number: usize,
    pub ring_structure: Option<RingStructure>,
    pub covers: Option<CoverReport>,
    pub decomposition: Option<DecompositionReport>,
    pub powers: Vec<PowerReport>,
    pub errors: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingStructure {
    pub ring_order: u64,
    pub prime_size: u64,
    pub order_factors: bool,
    pub b_formula: bool,
    pub b_at_least_two: Option<bool>,
    pub non_adjacent_pair: Option<(String, String)>,
    pub split_verified: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub closed_form: Vec<Vec<String>>,
    pub bruteforce_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub components: Vec<Vec<String>>,
    pub verified: bool,
    pub height: usize,
    pub dim: usize,
    pub unmixed: bool,
    pub height_law: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerReport {
    pub a: usize,
    pub b: usize,
    pub n: u32,
    pub mu_closed_form: Count,
    pub mu_oracle: Option<Count>,
    pub generators: Vec<String>,
    pub checks: PowerChecks,
    pub certificate: Option<CertificateReport>,
}

/// `None` means the check was not enabled or does not apply (zero ideal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerChecks {
    pub oracle_equal: Option<bool>,
    pub count_equal: bool,
    pub degree_law: bool,
    pub primary_decomp: Option<bool>,
    pub polymatroidal: Option<bool>,
    pub linear_quotients: Option<bool>,
}

impl PowerChecks {
    pub fn passed(&self) -> bool {
        self.count_equal
            && self.degree_law
            && [
                self.oracle_equal,
                self.primary_decomp,
                self.polymatroidal,
                self.linear_quotients,
            ]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub order: Vec<String>,
    pub r: Vec<usize>,
    pub betti: Vec<BettiRow>,
    pub reg: u32,
    pub polymatroidal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiRow {
    pub i: usize,
    pub shift: u32,
    pub beta: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub mismatches: Vec<Table1Mismatch>,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub ring: String,
    pub prime: String,
    pub a: usize,
    pub b: usize,
    pub published: Vec<u64>,
    pub closed_form: Vec<Count>,
    pub oracle: Vec<Count>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Mismatch {
    pub ring: String,
    pub n: u32,
    pub source: String,
    pub expected: u64,
    pub got: Count,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub max_power: u32,
    pub rows: Vec<SweepRow>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub ring: String,
    pub prime: String,
    pub a: usize,
    pub b: usize,
    pub q: u64,
    pub mu: Vec<Count>,
    pub oracle: Option<Vec<Count>>,
    pub zpm_mu: Option<Count>,
    pub error: Option<String>,
    pub ok: bool,
}
