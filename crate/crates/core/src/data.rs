//! Locating and loading the checked-in datasets.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::goldman::DiagramData;

/// Environment variable overriding the dataset directory.
pub const DATA_DIR_ENV: &str = "GOLDMAN_DATA_DIR";

/// `$GOLDMAN_DATA_DIR`, or the `data/` directory shipped with the crate.
pub fn data_dir() -> PathBuf {
    match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

pub fn golden_path(dir: &Path) -> PathBuf {
    dir.join("golden").join("sigma_5_0_brackets.json")
}

pub fn symmetric_form_path(dir: &Path) -> PathBuf {
    dir.join("golden").join("sigma_5_0_symmetric_form.json")
}

pub fn diagram_dir(dir: &Path) -> PathBuf {
    dir.join("diagrams").join("sigma_5_0")
}

pub fn map_path(dir: &Path, name: &str) -> PathBuf {
    dir.join("maps").join(format!("{name}.json"))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
}

/// One reference bracket of two coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub u: String,
    pub v: String,
    pub poly: String,
    pub figure: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenSurface {
    pub n: usize,
    pub g: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenTable {
    pub surface: GoldenSurface,
    pub entries: Vec<GoldenEntry>,
}

impl GoldenTable {
    pub fn load(path: &Path) -> Result<GoldenTable> {
        serde_json::from_str(&read(path)?).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
    }
}

/// All diagram records in `dir`, ordered by figure label.
pub fn load_diagrams(dir: &Path) -> Result<Vec<DiagramData>> {
    let listing = std::fs::read_dir(dir).map_err(|e| Error::Data(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = paths.iter().map(|p| DiagramData::load(p)).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.figure.len(), &a.figure).cmp(&(b.figure.len(), &b.figure)));
    Ok(out)
}
