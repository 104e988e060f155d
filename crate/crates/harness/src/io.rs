//! Graph files and family specs.

use std::fs;
use std::path::Path;

use locdirac_core::{parse_edge_list, to_edge_list, FamilySpec, Graph};

use crate::error::HarnessError;

pub fn parse_graph_file(path: &Path) -> Result<Graph, HarnessError> {
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.into(), source })?;
    parse_edge_list(&text).map_err(|source| HarnessError::Parse { path: path.into(), source })
}

pub fn write_graph_file(path: &Path, g: &Graph) -> Result<(), HarnessError> {
    fs::write(path, to_edge_list(g)).map_err(|source| HarnessError::Io { path: path.into(), source })
}

pub fn parse_family_spec(text: &str) -> Result<FamilySpec, HarnessError> {
    Ok(text.parse()?)
}
