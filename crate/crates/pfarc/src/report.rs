//! Machine-readable verification reports.
//!
//! Every verifying subcommand emits the same envelope: schema tag, tool
//! version, the claim being certified, an echo of the configuration, one
//! entry per cell, and the overall verdict. Timing lives in its own field
//! so reports are byte-identical across runs once it is stripped.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "pfarc-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub wall_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    /// Identifier of the mathematical claim this run certifies; failures
    /// name the violated claim directly.
    pub claim: String,
    pub config: Value,
    pub cells: Vec<Value>,
    pub overall_pass: bool,
    pub timing: Timing,
}

impl Report {
    pub fn new(
        command: &str,
        claim: &str,
        config: Value,
        cells: Vec<Value>,
        overall_pass: bool,
        wall_ms: u128,
    ) -> Self {
        Report {
            schema: SCHEMA,
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            claim: claim.to_string(),
            config,
            cells,
            overall_pass,
            timing: Timing { wall_ms },
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_to(&self, path: &Path) -> std::io::Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json_pretty().as_bytes())?;
        f.write_all(b"\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn envelope_shape() {
        let r = Report::new(
            "verify-basis",
            "standard-monomial-z-basis",
            json!({"p": [2], "h": [2]}),
            vec![json!({"pass": true})],
            true,
            12,
        );
        let v: Value = serde_json::from_str(&r.to_json_pretty()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["overall_pass"], true);
        assert!(v["timing"]["wall_ms"].is_number());
    }

    #[test]
    fn deterministic_modulo_timing() {
        let mk = |ms: u128| {
            Report::new(
                "verify-basis",
                "standard-monomial-z-basis",
                json!({"p": [3]}),
                vec![json!({"pass": true, "rank": 4})],
                true,
                ms,
            )
        };
        let mut a: Value = serde_json::from_str(&mk(5).to_json_pretty()).unwrap();
        let mut b: Value = serde_json::from_str(&mk(99).to_json_pretty()).unwrap();
        a.as_object_mut().unwrap().remove("timing");
        b.as_object_mut().unwrap().remove("timing");
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
