use std::fmt::Display;

use serde::{Deserialize, Serialize};

/// Structured output shared by every subcommand.
///
/// `canonical` is the check verdict for `check`; elsewhere it says whether
/// the result equals the input as a generator set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub input: Vec<String>,
    pub result: Vec<String>,
    pub canonical: bool,
    pub strategy: String,
    pub added: Vec<String>,
    pub removed: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Report {
    pub fn new(n: usize, strategy: impl Into<String>) -> Self {
        Report {
            n,
            input: Vec::new(),
            result: Vec::new(),
            canonical: false,
            strategy: strategy.into(),
            added: Vec::new(),
            removed: Vec::new(),
            message: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

pub fn strings<T: Display>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|t| t.to_string()).collect()
}
