//! Spread cache.
//!
//! The tangent-spread search is the one stage worth caching.  A cache
//! entry is keyed by (q, ovoid kind) in the file name and revalidated in
//! full on load: field parameters, ovoid parameters, line shape,
//! partition and regularity, tangency against a freshly built ovoid, and
//! reconstruction of the lines from the stored carrier.  Anything
//! unreadable or stale is treated as a miss.

use std::path::{Path, PathBuf};

use crate::gf::FieldTower;
use crate::ovoids::{Ovoid, OvoidKind};
use crate::projgeom::{conjugate_point, AllLines, LineId, LineSet, PointTable};
use crate::spreads::{is_regular_spread, spread_from_carrier, Spread};

use super::io::{read_json, write_json, OvoidParams, SpreadFile};

pub fn cache_path(dir: &Path, q: u64, kind: OvoidKind) -> PathBuf {
    dir.join(format!("spread-q{q}-{kind}.json"))
}

/// The serializable form of a spread, as the cache and the `spread`
/// subcommand write it.
pub fn spread_file(
    q: u64,
    tower: &FieldTower,
    ovoid: &Ovoid,
    spread: &Spread,
    lines: &AllLines,
) -> SpreadFile {
    let line_sets: Vec<Vec<u64>> = spread
        .line_ids
        .iter()
        .map(|&id| lines.line(id).points().to_vec())
        .collect();
    SpreadFile {
        q,
        field: tower.params(),
        ovoid_kind: ovoid.kind,
        ovoid_params: OvoidParams::of(ovoid),
        lines: line_sets,
        regular: spread.regular,
        carrier: spread.carrier.clone().unwrap_or_default(),
    }
}

pub fn spread_cache_put(
    dir: &Path,
    q: u64,
    tower: &FieldTower,
    ovoid: &Ovoid,
    spread: &Spread,
    lines: &AllLines,
) -> Result<PathBuf, crate::Error> {
    let file = spread_file(q, tower, ovoid, spread, lines);
    let path = cache_path(dir, q, ovoid.kind);
    write_json(&path, &file)?;
    Ok(path)
}

/// Loads and revalidates a cached spread.  Returns None on any mismatch,
/// with a note on stderr saying why the entry was rejected.
pub fn spread_cache_get(
    dir: &Path,
    q: u64,
    tower: &FieldTower,
    ovoid: &Ovoid,
    t3: &PointTable,
    lines: &AllLines,
    ext_t3: &PointTable,
) -> Option<Spread> {
    let path = cache_path(dir, q, ovoid.kind);
    if !path.exists() {
        return None;
    }
    match try_load(&path, q, tower, ovoid, t3, lines, ext_t3) {
        Ok(spread) => Some(spread),
        Err(reason) => {
            eprintln!("spread cache: ignoring {}: {reason}", path.display());
            None
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn try_load(
    path: &Path,
    q: u64,
    tower: &FieldTower,
    ovoid: &Ovoid,
    t3: &PointTable,
    lines: &AllLines,
    ext_t3: &PointTable,
) -> Result<Spread, String> {
    let file: SpreadFile = read_json(path).map_err(|e| format!("unreadable ({e})"))?;
    if file.q != q {
        return Err(format!("q mismatch ({} vs {q})", file.q));
    }
    if file.field != tower.params() {
        return Err("field parameter mismatch".into());
    }
    if file.ovoid_kind != ovoid.kind {
        return Err("ovoid kind mismatch".into());
    }
    if file.ovoid_params != OvoidParams::of(ovoid) {
        return Err("ovoid parameter mismatch".into());
    }
    let expected_lines = (q * q + 1) as usize;
    if file.lines.len() != expected_lines {
        return Err(format!("{} lines, expected {expected_lines}", file.lines.len()));
    }
    let n_points = t3.len();
    let per_line = (q + 1) as usize;
    let mut ids: Vec<LineId> = Vec::with_capacity(expected_lines);
    for pts in &file.lines {
        if pts.len() != per_line {
            return Err(format!("line with {} points, expected {per_line}", pts.len()));
        }
        if pts.windows(2).any(|w| w[0] >= w[1]) || pts.iter().any(|&p| p >= n_points) {
            return Err("line point list not sorted or out of range".into());
        }
        let set = LineSet::from_sorted(pts.clone());
        match lines.id_of(&set) {
            Some(id) => ids.push(id),
            None => return Err("stored point set is not a line".into()),
        }
    }
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != expected_lines {
        return Err("duplicate lines".into());
    }
    if !is_regular_spread(&ids, lines, t3).map_err(|e| e.to_string())? {
        return Err("not a regular spread".into());
    }
    let on_ovoid = ovoid.membership(t3.len());
    for &id in &ids {
        let hits = lines
            .line(id)
            .points()
            .iter()
            .filter(|&&p| on_ovoid[p as usize])
            .count();
        if hits != 1 {
            return Err(format!("line {id} meets the ovoid {hits} times, expected 1"));
        }
    }
    if file.carrier.len() as u64 != q * q + 1 {
        return Err(format!("carrier has {} points, expected {}", file.carrier.len(), q * q + 1));
    }
    for &i in &file.carrier {
        if i >= ext_t3.len() {
            return Err("carrier point index out of range".into());
        }
        let p = ext_t3.point_at(i);
        if conjugate_point(tower, &p) == p {
            return Err("carrier touches the rational subspace".into());
        }
    }
    let rebuilt = spread_from_carrier(&file.carrier, t3, ext_t3, tower);
    let mut stored: Vec<LineSet> = ids.iter().map(|&id| lines.line(id).clone()).collect();
    stored.sort_by(|a, b| a.points().cmp(b.points()));
    if rebuilt != stored {
        return Err("carrier does not reconstruct the stored lines".into());
    }
    Ok(Spread { line_ids: ids, regular: file.regular, carrier: Some(file.carrier) })
}
