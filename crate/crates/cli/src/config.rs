//! Run configuration echoed into every artifact the CLI writes.

use std::path::PathBuf;

use serde::Serialize;

pub const TOOL_NAME: &str = "mubkit";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

pub fn tool() -> ToolInfo {
    ToolInfo { name: TOOL_NAME, version: TOOL_VERSION }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConstructionParams {
    pub kind: String,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub design: Option<PathBuf>,
    pub hadamard: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    pub outputs: Vec<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cluster_tol: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub t_values: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub frame_orders: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}
