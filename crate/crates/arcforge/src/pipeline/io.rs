//! On-disk artifact formats: spread caches, arcs, and fitted curves.
//!
//! All files are JSON with a fixed field order.  Field elements appear as
//! their integer encodings, points of the plane as normalized coordinate
//! triples, and points of PG(3, q) as table indices.  Every file embeds
//! the field parameters that fix those encodings.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::gf::{FieldParams, FieldTower};
use crate::ovoids::{Ovoid, OvoidKind};
use crate::plane::ArcProvenance;
use crate::projgeom::{PointIdx, PointTable, ProjPoint};
use crate::Error;

/// Ovoid parameters pinned into cache files and provenance records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvoidParams {
    pub sigma: Option<u64>,
    pub delta: Option<u32>,
}

impl OvoidParams {
    pub fn of(o: &Ovoid) -> Self {
        OvoidParams { sigma: o.sigma, delta: o.delta.map(|d| d.0) }
    }
}

/// A spread search result: line sets as sorted point-index arrays, the
/// regularity verdict, and the carrier line's extension-field point
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadFile {
    pub q: u64,
    pub field: FieldParams,
    pub ovoid_kind: OvoidKind,
    pub ovoid_params: OvoidParams,
    pub lines: Vec<Vec<PointIdx>>,
    pub regular: bool,
    pub carrier: Vec<PointIdx>,
}

/// A maximal arc: plane points as normalized coordinate encodings
/// (z, x, y), listed in ascending point-index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcFile {
    pub q: u64,
    pub field: FieldParams,
    pub ovoid_kind: OvoidKind,
    pub epsilon: u32,
    pub points: Vec<[u32; 3]>,
    pub provenance: ArcProvenance,
}

impl ArcFile {
    /// Arc point coordinates from table indices.
    pub fn from_point_ids(
        q: u64,
        tower: &FieldTower,
        t2: &PointTable,
        ids: &[PointIdx],
        provenance: ArcProvenance,
    ) -> Self {
        let points: Vec<[u32; 3]> = ids
            .iter()
            .map(|&i| {
                let p = t2.point_at(i);
                [p.coords()[0].0, p.coords()[1].0, p.coords()[2].0]
            })
            .collect();
        ArcFile {
            q,
            field: tower.params(),
            ovoid_kind: provenance.ovoid_kind,
            epsilon: provenance.epsilon.0,
            points,
            provenance,
        }
    }

    /// Sorted plane point indices, after validating the encodings.
    pub fn point_ids(&self, tower: &FieldTower, t2: &PointTable) -> Result<Vec<PointIdx>, Error> {
        if self.field != tower.params() {
            return Err(Error::Config("arc file field parameters do not match".into()));
        }
        let qq = tower.q_sq() as u32;
        let mut ids: Vec<PointIdx> = Vec::with_capacity(self.points.len());
        for trip in &self.points {
            if trip.iter().any(|&c| c >= qq) || trip.iter().all(|&c| c == 0) {
                return Err(Error::Config(format!(
                    "invalid plane point encoding {trip:?}"
                )));
            }
            let coords: Vec<crate::gf::FieldElem> =
                trip.iter().map(|&c| crate::gf::FieldElem(c)).collect();
            ids.push(t2.index_of(&t2.normalize(&coords)));
        }
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != self.points.len() {
            return Err(Error::Config("arc file lists a point twice".into()));
        }
        Ok(ids)
    }
}

/// Replay context a curve file carries about the arc it was fitted to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProvenance {
    pub q: u64,
    pub field: FieldParams,
    /// SHA-256 of the compact JSON of the arc's points array.
    pub arc_hash: String,
    pub degree_found: u32,
    pub nullity: usize,
}

/// A fitted plane curve: terms as (x-exponent, y-exponent, coefficient
/// encoding) in ascending exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub degree: u32,
    pub terms: Vec<[u32; 3]>,
    pub provenance: CurveProvenance,
}

impl CurveFile {
    pub fn from_poly(poly: &crate::curves::BivariatePoly, provenance: CurveProvenance) -> Self {
        let terms: Vec<[u32; 3]> = poly.terms().map(|(&(a, b), c)| [a, b, c.0]).collect();
        CurveFile { degree: poly.degree(), terms, provenance }
    }

    pub fn to_poly(&self, tower: &FieldTower) -> Result<crate::curves::BivariatePoly, Error> {
        if self.field_params() != tower.params() {
            return Err(Error::Config("curve file field parameters do not match".into()));
        }
        let qq = tower.q_sq() as u32;
        if self.terms.iter().any(|t| t[2] == 0 || t[2] >= qq) {
            return Err(Error::Config("invalid curve coefficient encoding".into()));
        }
        let poly = crate::curves::BivariatePoly::from_terms(
            self.terms
                .iter()
                .map(|&[a, b, c]| ((a, b), crate::gf::FieldElem(c))),
        );
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(poly)
    }

    pub fn field_params(&self) -> FieldParams {
        self.provenance.field
    }
}

/// SHA-256 hex digest of the compact JSON of an arc's points array; the
/// link between a curve file and the arc it fits.
pub fn arc_hash(points: &[[u32; 3]]) -> String {
    let bytes = serde_json::to_vec(points).expect("point triples serialize");
    let digest = Sha256::digest(&bytes);
    hex::encode(digest)
}

/// Pretty JSON with a trailing newline; written atomically enough for
/// single-writer use.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, s)?;
    Ok(())
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let s = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&s)?)
}

/// Plane point triple for a table index, for display.
pub fn plane_point_triple(t2: &PointTable, i: PointIdx) -> [u32; 3] {
    let p: ProjPoint = t2.point_at(i);
    [p.coords()[0].0, p.coords()[1].0, p.coords()[2].0]
}
