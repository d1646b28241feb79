//! Versioned JSON envelope shared by every command that prints a report.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::exact::CertificateReport;
use crate::numeric::SpectralData;
use crate::search::{CensusReport, EquivalenceReport, SearchReport};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Certificate(CertificateReport),
    Spectrum(SpectralData),
    Census(CensusReport),
    Search(SearchReport),
    Equivalence(EquivalenceReport),
    Matrix(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: String,
    pub command: String,
    /// SHA-256 of the input bytes, hex encoded.
    pub input_digest: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub payload: Option<Payload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

impl ReportEnvelope {
    pub fn new(command: &str, input: &[u8], status: Status, payload: Payload) -> Self {
        ReportEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input_digest: digest(input),
            status,
            payload: Some(payload),
            message: None,
        }
    }

    pub fn error(command: &str, input: &[u8], message: impl Into<String>) -> Self {
        ReportEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input_digest: digest(input),
            status: Status::Error,
            payload: None,
            message: Some(message.into()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Serializes floats with 17 significant digits, e.g. `7.0710678118654757e-1`.
pub mod f17 {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::value::RawValue;

    pub fn format(x: f64) -> String {
        if x.is_finite() {
            format!("{x:.16e}")
        } else {
            "null".to_string()
        }
    }

    pub fn serialize<S: Serializer>(x: &f64, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format(*x)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<f64, D::Error> {
        f64::deserialize(deserializer)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[f64], serializer: S) -> Result<S::Ok, S::Error> {
            let raws = xs
                .iter()
                .map(|&x| RawValue::from_string(format(x)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(serde::ser::Error::custom)?;
            raws.serialize(serializer)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            deserializer: D,
        ) -> Result<Vec<f64>, D::Error> {
            Vec::<f64>::deserialize(deserializer)
        }
    }
}
