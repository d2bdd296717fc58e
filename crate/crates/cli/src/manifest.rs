use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Everything a run produced, as emitted by `--format json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub params: Value,
    pub version: String,
    /// `null` under `--deterministic`.
    pub wall_time_ms: Option<f64>,
    pub exit_code: u8,
    pub result: Value,
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest values are plain JSON")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_json() {
        let m = RunManifest {
            command: "count".into(),
            params: serde_json::json!({"q": 3, "n": 2}),
            version: "0.1.0".into(),
            wall_time_ms: None,
            exit_code: 0,
            result: serde_json::json!({"count": "7"}),
        };
        let back: RunManifest = serde_json::from_str(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }
}
