//! On-disk cache of the Hom table and the tilting list, one JSON file per
//! Dynkin spec, keyed by a hash of the spec and the tool version.

use std::fs;
use std::path::{Path, PathBuf};

use clustertilt::tilting::enumerate_tilting;
use clustertilt::{ClusterCategory, DynkinSpec, Result, TiltingObject};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// The file existed but could not be used.
    Rebuilt(String),
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    key: String,
    spec: String,
    objects: usize,
    hom: Vec<u32>,
    tilting: Vec<Vec<usize>>,
}

/// Hex SHA-256 of the spec (type, rank, orientation) and tool version.
pub fn cache_key(spec: &DynkinSpec) -> String {
    let mut h = Sha256::new();
    h.update(format!("clustertilt {TOOL_VERSION}|{}|{}", spec.label(), spec.orientation_string()));
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Short hash of the spec alone, for reports.
pub fn spec_hash(spec: &DynkinSpec) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}|{}", spec.label(), spec.orientation_string()));
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(dir: &Path, spec: &DynkinSpec) -> PathBuf {
    dir.join(format!("{}-{}.json", spec.label(), &cache_key(spec)[..16]))
}

fn read(path: &Path, spec: &DynkinSpec) -> std::result::Result<Option<(ClusterCategory, Vec<TiltingObject>)>, String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.to_string()),
    };
    let file: CacheFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    if file.key != cache_key(spec) {
        return Ok(None);
    }
    let c = ClusterCategory::build_with_hom_table(spec, file.hom).map_err(|e| e.to_string())?;
    if file.objects != c.len() {
        return Err("object count does not match".into());
    }
    let rank = spec.rank();
    let mut tilting = Vec::with_capacity(file.tilting.len());
    for s in file.tilting {
        if s.len() != rank || s.iter().any(|&x| x >= c.len()) || s.windows(2).any(|w| w[0] >= w[1]) {
            return Err("malformed tilting entry".into());
        }
        tilting.push(TiltingObject { summands: s });
    }
    Ok(Some((c, tilting)))
}

/// The category and its sorted tilting list, from the cache when possible.
/// Unreadable or inconsistent cache files are rebuilt and reported through
/// the returned status.
pub fn load_or_build(
    spec: &DynkinSpec,
    dir: Option<&Path>,
) -> Result<(ClusterCategory, Vec<TiltingObject>, CacheStatus)> {
    let Some(dir) = dir else {
        let c = ClusterCategory::build(spec)?;
        let t = enumerate_tilting(&c)?;
        return Ok((c, t, CacheStatus::Disabled));
    };
    let path = cache_path(dir, spec);
    let status = match read(&path, spec) {
        Ok(Some((c, t))) => return Ok((c, t, CacheStatus::Hit)),
        Ok(None) => CacheStatus::Miss,
        Err(reason) => CacheStatus::Rebuilt(reason),
    };
    let c = ClusterCategory::build(spec)?;
    let t = enumerate_tilting(&c)?;
    let file = CacheFile {
        key: cache_key(spec),
        spec: spec.to_string(),
        objects: c.len(),
        hom: c.hom_table().to_vec(),
        tilting: t.iter().map(|x| x.summands.clone()).collect(),
    };
    // a failed write only costs a rebuild next time
    if fs::create_dir_all(dir).is_ok() {
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, serde_json::to_vec(&file).expect("cache serializes")).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
    }
    Ok((c, t, status))
}
