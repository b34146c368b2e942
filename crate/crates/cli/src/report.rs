//! Result documents written by every command; `result.schema.json` in the
//! crate root is their published schema.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub version: u32,
    pub command: String,
    /// Name of the scene the result was computed from, if it had one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scene: Option<String>,
    #[serde(default)]
    pub guards: Vec<usize>,
    #[serde(default)]
    pub colors: BTreeMap<usize, u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub verdict: String,
    #[serde(default)]
    pub stats: BTreeMap<String, Value>,
}

impl ResultDocument {
    pub fn new(command: &str, scene: Option<&str>) -> Self {
        ResultDocument {
            version: VERSION,
            command: command.to_owned(),
            scene: scene.map(str::to_owned),
            guards: Vec::new(),
            colors: BTreeMap::new(),
            count: None,
            verdict: "ok".to_owned(),
            stats: BTreeMap::new(),
        }
    }

    pub fn stat(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.stats.insert(key.to_owned(), v.into());
        self
    }

    pub fn read(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let doc: ResultDocument = serde_json::from_str(&text).map_err(|e| CliError::input(format!("result: {e}")))?;
        if doc.version != VERSION {
            return Err(CliError::input(format!("result: unsupported version {}", doc.version)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result serialises");
        s.push('\n');
        s
    }
}
