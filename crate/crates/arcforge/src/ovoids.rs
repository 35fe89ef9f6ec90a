//! Ovoids of PG(3, q) and their tangent lines.
//!
//! An ovoid is a set of q^2 + 1 points meeting every line in at most two
//! points.  Two families are built here for q = 2^m: the Suzuki-Tits ovoid
//! (q = 2^(2t+1), t >= 1) and the elliptic quadric (any even q >= 4).
//! `verify_ovoid` certifies the defining property by exhaustive line scan,
//! so the parametrizations are never trusted blindly.

use bitvec::prelude::*;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gf::{FieldElem, FieldTower};
use crate::projgeom::{AllLines, LineId, PointIdx, PointTable, ProjPoint};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OvoidKind {
    SuzukiTits,
    EllipticQuadric,
}

impl std::fmt::Display for OvoidKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OvoidKind::SuzukiTits => write!(f, "suzuki-tits"),
            OvoidKind::EllipticQuadric => write!(f, "elliptic-quadric"),
        }
    }
}

/// An ovoid as a sorted list of point indices, with the parameter that
/// pinned it down: the exponent sigma for Suzuki-Tits, the constant delta
/// for the elliptic quadric.
#[derive(Clone, Debug)]
pub struct Ovoid {
    pub kind: OvoidKind,
    pub points: Vec<PointIdx>,
    pub sigma: Option<u64>,
    pub delta: Option<FieldElem>,
}

impl Ovoid {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn membership(&self, point_count: u64) -> BitVec<u64, Lsb0> {
        let mut bits = bitvec![u64, Lsb0; 0; point_count as usize];
        for &p in &self.points {
            bits.set(p as usize, true);
        }
        bits
    }
}

/// The Suzuki-Tits ovoid
/// {(1, s, u, su + s^(sigma+2) + u^sigma)} union {(0, 0, 0, 1)}
/// with sigma = 2^(t+1), valid for q = 2^(2t+1), t >= 1.
pub fn suzuki_tits_ovoid(tower: &FieldTower, t3: &PointTable) -> Result<Ovoid, Error> {
    let m = tower.m();
    if m < 3 || m % 2 == 0 {
        return Err(Error::Config(format!(
            "Suzuki-Tits ovoids need q = 2^(2t+1) with t >= 1; q = 2^{m} does not qualify"
        )));
    }
    let sigma = 1u64 << ((m + 1) / 2);
    let mut points = Vec::with_capacity((tower.q() * tower.q() + 1) as usize);
    points.push(t3.index_of(&ProjPoint::from_normalized(&[
        FieldElem::ZERO,
        FieldElem::ZERO,
        FieldElem::ZERO,
        FieldElem::ONE,
    ])));
    for s in tower.base_elems() {
        for u in tower.base_elems() {
            let su = tower.mul_base(s, u);
            let s_pow = tower.pow(s, sigma + 2);
            let u_pow = tower.pow(u, sigma);
            let last = FieldElem(su.0 ^ s_pow.0 ^ u_pow.0);
            let p = ProjPoint::from_normalized(&[FieldElem::ONE, s, u, last]);
            points.push(t3.index_of(&p));
        }
    }
    points.sort_unstable();
    points.dedup();
    debug_assert_eq!(points.len() as u64, tower.q() * tower.q() + 1);
    Ok(Ovoid { kind: OvoidKind::SuzukiTits, points, sigma: Some(sigma), delta: None })
}

/// The elliptic quadric: zero set of x0 x1 + x2^2 + x2 x3 + delta x3^2,
/// with delta the least-encoding trace-1 element so the binary part is
/// irreducible.  Valid for any even q >= 4.
pub fn elliptic_quadric_ovoid(tower: &FieldTower, t3: &PointTable) -> Result<Ovoid, Error> {
    if tower.m() < 2 {
        return Err(Error::Config("elliptic quadric ovoids need q >= 4".into()));
    }
    let delta = tower.nu();
    let mut points = Vec::new();
    for (i, p) in t3.iter() {
        let c = p.coords();
        let v = tower.mul_base(c[0], c[1]).0
            ^ tower.mul_base(c[2], c[2]).0
            ^ tower.mul_base(c[2], c[3]).0
            ^ tower.mul_base(delta, tower.mul_base(c[3], c[3])).0;
        if v == 0 {
            points.push(i);
        }
    }
    debug_assert_eq!(points.len() as u64, tower.q() * tower.q() + 1);
    Ok(Ovoid { kind: OvoidKind::EllipticQuadric, points, sigma: None, delta: Some(delta) })
}

/// Outcome of the exhaustive ovoid check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OvoidCheck {
    Pass,
    SizeMismatch { expected: u64, got: u64 },
    /// A line meeting the set in three or more points, with the first three.
    CollinearTriple { line: LineId, points: [PointIdx; 3] },
}

impl OvoidCheck {
    pub fn passed(&self) -> bool {
        matches!(self, OvoidCheck::Pass)
    }
}

/// Certifies |points| = q^2 + 1 and that no line carries three of the
/// points, scanning every line of PG(3, q).
pub fn verify_ovoid(points: &[PointIdx], t3: &PointTable, lines: &AllLines) -> OvoidCheck {
    let expected = t3.field_order() * t3.field_order() + 1;
    if points.len() as u64 != expected {
        return OvoidCheck::SizeMismatch { expected, got: points.len() as u64 };
    }
    let mut bits = bitvec![u64, Lsb0; 0; t3.len() as usize];
    for &p in points {
        bits.set(p as usize, true);
    }
    let offender = (0..lines.len() as LineId).into_par_iter().find_map_first(|id| {
        let common: Vec<PointIdx> = lines
            .line(id)
            .points()
            .iter()
            .copied()
            .filter(|&p| bits[p as usize])
            .collect();
        (common.len() >= 3).then(|| (id, [common[0], common[1], common[2]]))
    });
    match offender {
        Some((line, points)) => OvoidCheck::CollinearTriple { line, points },
        None => OvoidCheck::Pass,
    }
}

/// Per-line intersection counts with the ovoid: lines meeting it in 0, 1,
/// and 2 points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineSpectrum {
    pub external: u64,
    pub tangent: u64,
    pub secant: u64,
}

pub fn line_spectrum(o: &Ovoid, t3: &PointTable, lines: &AllLines) -> LineSpectrum {
    let bits = o.membership(t3.len());
    let mut spectrum = LineSpectrum { external: 0, tangent: 0, secant: 0 };
    for (_, l) in lines.iter() {
        let n = l.points().iter().filter(|&&p| bits[p as usize]).count();
        match n {
            0 => spectrum.external += 1,
            1 => spectrum.tangent += 1,
            2 => spectrum.secant += 1,
            _ => panic!("not an ovoid: a line meets it in {n} points"),
        }
    }
    spectrum
}

/// The tangent lines of an ovoid, grouped into the pencil at each point.
pub struct TangentComplex {
    /// All tangent line ids, ascending.
    pub line_ids: Vec<LineId>,
    /// (ovoid point, tangents at that point), ordered by point index;
    /// each pencil holds q + 1 lines.
    pub pencils: Vec<(PointIdx, Vec<LineId>)>,
    membership: BitVec<u64, Lsb0>,
}

impl TangentComplex {
    pub fn contains(&self, id: LineId) -> bool {
        self.membership[id as usize]
    }

    pub fn len(&self) -> usize {
        self.line_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.line_ids.is_empty()
    }
}

/// Collects every line meeting the ovoid in exactly one point.
pub fn tangent_complex(o: &Ovoid, t3: &PointTable, lines: &AllLines) -> TangentComplex {
    let bits = o.membership(t3.len());
    let tagged: Vec<(LineId, PointIdx)> = (0..lines.len() as LineId)
        .into_par_iter()
        .filter_map(|id| {
            let mut hit = None;
            let mut n = 0;
            for &p in lines.line(id).points() {
                if bits[p as usize] {
                    n += 1;
                    hit = Some(p);
                }
            }
            (n == 1).then(|| (id, hit.unwrap()))
        })
        .collect();

    let line_ids: Vec<LineId> = tagged.iter().map(|&(id, _)| id).collect();
    let mut membership = bitvec![u64, Lsb0; 0; lines.len()];
    for &id in &line_ids {
        membership.set(id as usize, true);
    }
    let mut pencils: Vec<(PointIdx, Vec<LineId>)> =
        o.points.iter().map(|&p| (p, Vec::new())).collect();
    for &(id, p) in &tagged {
        let slot = pencils
            .binary_search_by_key(&p, |&(q, _)| q)
            .expect("tangency point is on the ovoid");
        pencils[slot].1.push(id);
    }
    TangentComplex { line_ids, pencils, membership }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldTower;
    use crate::projgeom::all_lines_pg3;

    struct Fixture {
        tower: FieldTower,
    }

    impl Fixture {
        fn new(m: u32) -> Self {
            Fixture { tower: FieldTower::new(m).unwrap() }
        }
    }

    #[test]
    fn suzuki_tits_needs_odd_exponent_at_least_three() {
        let f = Fixture::new(2);
        let t3 = PointTable::new(3, f.tower.base());
        assert!(suzuki_tits_ovoid(&f.tower, &t3).is_err());
        let f4 = Fixture::new(4);
        let t3 = PointTable::new(3, f4.tower.base());
        assert!(suzuki_tits_ovoid(&f4.tower, &t3).is_err());
    }

    #[test]
    fn suzuki_tits_ovoid_at_q8_is_an_ovoid() {
        let f = Fixture::new(3);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        let o = suzuki_tits_ovoid(&f.tower, &t3).unwrap();
        assert_eq!(o.len(), 65);
        assert_eq!(o.sigma, Some(4));
        assert!(verify_ovoid(&o.points, &t3, &lines).passed());
    }

    #[test]
    fn elliptic_quadric_is_an_ovoid_at_q4_and_q8() {
        for m in [2u32, 3] {
            let f = Fixture::new(m);
            let t3 = PointTable::new(3, f.tower.base());
            let lines = all_lines_pg3(&t3);
            let o = elliptic_quadric_ovoid(&f.tower, &t3).unwrap();
            let q = f.tower.q();
            assert_eq!(o.len() as u64, q * q + 1);
            assert!(verify_ovoid(&o.points, &t3, &lines).passed());
        }
    }

    #[test]
    fn line_spectrum_counts_match_closed_forms() {
        let f = Fixture::new(3);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        let o = suzuki_tits_ovoid(&f.tower, &t3).unwrap();
        let s = line_spectrum(&o, &t3, &lines);
        let q = 8u64;
        assert_eq!(s.tangent, (q + 1) * (q * q + 1));
        assert_eq!(s.secant, (q * q + 1) * q * q / 2);
        assert_eq!(s.external + s.tangent + s.secant, 4745);
    }

    #[test]
    fn verify_rejects_a_size_mismatch() {
        let f = Fixture::new(3);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        let r = verify_ovoid(&[0, 1, 2], &t3, &lines);
        assert_eq!(r, OvoidCheck::SizeMismatch { expected: 65, got: 3 });
    }

    #[test]
    fn verify_rejects_collinear_points_with_a_witness() {
        let f = Fixture::new(3);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        // 65 points containing a full line: the witness is forced.
        let mut pts: Vec<PointIdx> = lines.line(0).points().to_vec();
        let mut next = 0u64;
        while pts.len() < 65 {
            if !lines.line(0).contains(next) {
                pts.push(next);
            }
            next += 1;
        }
        pts.sort_unstable();
        match verify_ovoid(&pts, &t3, &lines) {
            OvoidCheck::CollinearTriple { line, points } => {
                let l = lines.line(line);
                for p in points {
                    assert!(l.contains(p));
                }
            }
            other => panic!("expected a collinear witness, got {other:?}"),
        }
    }

    #[test]
    fn tangent_complex_has_a_full_pencil_at_every_point() {
        let f = Fixture::new(3);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        let o = suzuki_tits_ovoid(&f.tower, &t3).unwrap();
        let tc = tangent_complex(&o, &t3, &lines);
        assert_eq!(tc.len(), 585);
        assert_eq!(tc.pencils.len(), 65);
        for (p, pencil) in &tc.pencils {
            assert_eq!(pencil.len(), 9);
            for &id in pencil {
                assert!(tc.contains(id));
                assert!(lines.line(id).contains(*p));
            }
            // Tangents at a point pairwise meet only there.
            for (i, &a) in pencil.iter().enumerate() {
                for &b in &pencil[i + 1..] {
                    let common = lines.line(a).common_points(lines.line(b));
                    assert_eq!(common, vec![*p]);
                }
            }
        }
    }

    #[test]
    fn pencils_partition_the_tangent_lines() {
        let f = Fixture::new(2);
        let t3 = PointTable::new(3, f.tower.base());
        let lines = all_lines_pg3(&t3);
        let o = elliptic_quadric_ovoid(&f.tower, &t3).unwrap();
        let tc = tangent_complex(&o, &t3, &lines);
        let mut seen: Vec<LineId> = tc.pencils.iter().flat_map(|(_, p)| p.clone()).collect();
        seen.sort_unstable();
        assert_eq!(seen, tc.line_ids);
    }
}
