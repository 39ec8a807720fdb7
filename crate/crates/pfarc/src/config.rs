//! Run configuration: grading grids shared between command-line flags and
//! config files, so small local runs and larger scheduled runs use the same
//! binary.
//!
//! The file format is plain `key = value` lines; values are integers or
//! comma-separated integer lists, `#` starts a comment. Recognized keys:
//! `p`, `h`, `deg_max`, `wt_max`, `threads`.

use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Resolved grid configuration for the verification subcommands.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub p_list: Vec<u32>,
    pub h_list: Vec<u32>,
    pub deg_max: u32,
    pub wt_max: u32,
    pub threads: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.p_list.is_empty() || self.h_list.is_empty() {
            return Err(Error::InvalidParameter(
                "p and h ranges must be nonempty".into(),
            ));
        }
        if let Some(h) = self.h_list.iter().find(|&&h| h % 2 != 0) {
            return Err(Error::InvalidParameter(format!("h = {h} must be even")));
        }
        if self.threads == 0 {
            return Err(Error::InvalidParameter("parallelism must be >= 1".into()));
        }
        Ok(())
    }

    /// All (p, h, degree, weight) cells of the grid, in a fixed order.
    pub fn cells(&self) -> Vec<(u32, u32, u32, u32)> {
        let mut out = Vec::new();
        for &p in &self.p_list {
            for &h in &self.h_list {
                for d in 0..=self.deg_max {
                    for w in 0..=self.wt_max {
                        out.push((p, h, d, w));
                    }
                }
            }
        }
        out
    }
}

/// Values read from a config file; all optional so flags can fill the rest.
#[derive(Clone, Debug, Default)]
pub struct FileConfig {
    pub p_list: Option<Vec<u32>>,
    pub h_list: Option<Vec<u32>>,
    pub deg_max: Option<u32>,
    pub wt_max: Option<u32>,
    pub threads: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            Error::InvalidParameter(format!("cannot read config {}: {e}", path.display()))
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let list = || -> Result<Vec<u32>> {
                value
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<u32>().map_err(|_| {
                            Error::InvalidParameter(format!(
                                "config line {}: bad integer {v:?}",
                                lineno + 1
                            ))
                        })
                    })
                    .collect()
            };
            match key {
                "p" => cfg.p_list = Some(list()?),
                "h" => cfg.h_list = Some(list()?),
                "deg_max" => cfg.deg_max = Some(single(value, lineno)?),
                "wt_max" => cfg.wt_max = Some(single(value, lineno)?),
                "threads" => cfg.threads = Some(single(value, lineno)? as usize),
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "config line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }
}

fn single(value: &str, lineno: usize) -> Result<u32> {
    value.trim().parse::<u32>().map_err(|_| {
        Error::InvalidParameter(format!("config line {}: bad integer {value:?}", lineno + 1))
    })
}
