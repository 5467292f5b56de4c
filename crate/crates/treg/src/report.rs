//! Verification reports: one record per check, carrying a provenance anchor,
//! the numeric payload, and the config hash. Timestamps honor
//! SOURCE_DATE_EPOCH (0 when unset) so identical runs serialize to identical
//! bytes.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationReport {
    pub check_id: String,
    /// Short provenance anchor, or "plumbing" for invented machinery.
    pub anchor: String,
    pub status: CheckStatus,
    pub payload: serde_json::Value,
    pub config_hash: String,
    pub timestamp: u64,
}

pub fn reproducible_timestamp() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

impl VerificationReport {
    pub fn new(
        check_id: &str,
        anchor: &str,
        passed: bool,
        payload: serde_json::Value,
        config_hash: &str,
    ) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            anchor: if anchor.is_empty() {
                "plumbing".to_string()
            } else {
                anchor.to_string()
            },
            status: if passed {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            payload,
            config_hash: config_hash.to_string(),
            timestamp: reproducible_timestamp(),
        }
    }

    pub fn skipped(check_id: &str, anchor: &str, config_hash: &str) -> Self {
        VerificationReport {
            check_id: check_id.to_string(),
            anchor: anchor.to_string(),
            status: CheckStatus::Skipped,
            payload: serde_json::Value::Null,
            config_hash: config_hash.to_string(),
            timestamp: reproducible_timestamp(),
        }
    }
}

/// Render a report set as deterministic pretty JSON.
pub fn render_reports(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}
