//! Maximal arcs in PG(2, q^2) built from ovoid cones over a spread.
//!
//! PG(4, q) splits into the hyperplane x0 = 0 and the affine points
//! (1, x1, x2, y1, y2).  A regular spread of the hyperplane turns this
//! affine space into the Desarguesian plane PG(2, q^2): affine points map
//! through (1, x1, x2, y1, y2) -> (1, x1 + e*x2, e*y1 + y2) for a scalar e
//! chosen so that every spread line falls to a single point at infinity.
//! When each spread line is tangent to an ovoid embedded in the hyperplane,
//! the affine part of the cone over the ovoid maps onto a set of
//! q^3 - q^2 + q plane points met by every line in 0 or exactly q points:
//! a maximal arc of degree q.

use std::collections::BTreeMap;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use crate::gf::{FieldElem, FieldTower};
use crate::ovoids::{Ovoid, OvoidKind};
use crate::projgeom::{AllLines, LineId, LineSet, PointIdx, PointTable, ProjPoint};
use crate::spreads::canonical_frame_lines;
use crate::spreads::regulus;
use crate::Error;

/// Candidate scalars for the hyperplane collapse map.
///
/// Lines of the regulus spanned by the three frame lines fall to single
/// points for every scalar, so the first spread line outside that regulus
/// pins the choice: a scalar qualifies when the images of the line's first
/// two points are proportional.  Returns qualifying scalars outside the
/// base field, sorted by encoding; empty when the spread admits none.
pub fn find_epsilon(
    spread: &[LineId],
    lines: &AllLines,
    t3: &PointTable,
    tower: &FieldTower,
) -> Vec<FieldElem> {
    let frame = canonical_frame_lines(t3, lines);
    let r = regulus(frame[0], frame[1], frame[2], lines).expect("frame lines are pairwise skew");
    let mut ids: Vec<LineId> = spread.to_vec();
    ids.sort_unstable();
    let reference = match ids.iter().find(|id| !r.line_ids.contains(id)) {
        Some(&id) => id,
        None => return Vec::new(),
    };
    let l = lines.line(reference);
    let p = t3.point_at(l.points()[0]);
    let s = t3.point_at(l.points()[1]);
    let [x1, x2, y1, y2] = [p.coords()[0], p.coords()[1], p.coords()[2], p.coords()[3]];
    let [u1, u2, v1, v2] = [s.coords()[0], s.coords()[1], s.coords()[2], s.coords()[3]];

    let mut out: Vec<FieldElem> = tower
        .ext_elems()
        .filter(|&e| !tower.in_base(e))
        .filter(|&e| {
            let a = tower.add(x1, tower.mul(e, x2));
            let b = tower.add(tower.mul(e, y1), y2);
            let c = tower.add(u1, tower.mul(e, u2));
            let d = tower.add(tower.mul(e, v1), v2);
            tower.mul(a, d) == tower.mul(c, b)
        })
        .collect();
    out.sort_unstable();
    out
}

/// Image of a PG(4, q) point under the plane map
/// (z, x1, x2, y1, y2) -> (z, x1 + e*x2, e*y1 + y2), normalized in the
/// given plane table.
pub fn theta_map(
    tower: &FieldTower,
    epsilon: FieldElem,
    p: &ProjPoint,
    t2: &PointTable,
) -> ProjPoint {
    assert_eq!(p.dim(), 4, "the plane map takes 5-coordinate points");
    let c = p.coords();
    let x = tower.add(c[1], tower.mul(epsilon, c[2]));
    let y = tower.add(tower.mul(epsilon, c[3]), c[4]);
    t2.normalize(&[c[0], x, y])
}

/// Whether all points of a hyperplane line (given by its PG(3, q) point
/// set) share one image under the plane map.
fn line_collapses(
    tower: &FieldTower,
    epsilon: FieldElem,
    l: &LineSet,
    t3: &PointTable,
    t2: &PointTable,
) -> bool {
    let image_of = |idx: PointIdx| {
        let p = t3.point_at(idx);
        let c = p.coords();
        let lifted = ProjPoint::from_normalized(&[
            FieldElem::ZERO,
            c[0],
            c[1],
            c[2],
            c[3],
        ]);
        theta_map(tower, epsilon, &lifted, t2)
    };
    let first = image_of(l.points()[0]);
    l.points()[1..].iter().all(|&i| image_of(i) == first)
}

/// Arc points in PG(2, q^2) from the cone over an ovoid.
///
/// The ovoid lives in the hyperplane x0 = 0 of PG(4, q); every spread line
/// must meet it in exactly one point, and the collapse scalar must lie
/// outside the base field.  The cone joins the affine point (1, 0, 0, 0, 0)
/// to each ovoid point; the arc is the image of its q^3 - q^2 + q affine
/// points, as sorted plane point indices.
pub fn build_arc(
    ovoid: &Ovoid,
    spread: &[LineId],
    epsilon: FieldElem,
    tower: &FieldTower,
    t3: &PointTable,
    lines: &AllLines,
    t2: &PointTable,
) -> Result<Vec<PointIdx>, Error> {
    if tower.in_base(epsilon) {
        return Err(Error::Config(
            "collapse scalar must lie outside the base subfield".into(),
        ));
    }
    for &id in spread {
        let count = lines
            .line(id)
            .points()
            .iter()
            .filter(|p| ovoid.points.binary_search(p).is_ok())
            .count() as u64;
        if count != 1 {
            return Err(Error::TangencyViolated { line: id, count });
        }
    }
    debug_assert!(spread
        .iter()
        .all(|&id| line_collapses(tower, epsilon, lines.line(id), t3, t2)));

    let q = tower.q();
    let mut arc: Vec<PointIdx> = Vec::with_capacity((q * q * q) as usize);
    for &idx in &ovoid.points {
        let p = t3.point_at(idx);
        let c = p.coords();
        // theta of (1, t*c) has plane coordinates
        // (1, t*(c0 + e*c1), t*(e*c2 + c3)).
        let x = tower.add(c[0], tower.mul(epsilon, c[1]));
        let y = tower.add(tower.mul(epsilon, c[2]), c[3]);
        for t in tower.base_elems() {
            let img = t2.normalize(&[
                FieldElem::ONE,
                tower.mul(t, x),
                tower.mul(t, y),
            ]);
            arc.push(t2.index_of(&img));
        }
    }
    arc.sort_unstable();
    arc.dedup();
    assert_eq!(arc.len() as u64, q * q * q - q * q + q);
    Ok(arc)
}

/// The distinct lines meeting a plane point set in at least two points.
///
/// Point pairs are scanned in index order; a pair already lying on a
/// recorded line is skipped through a coverage bitmap, so each secant is
/// produced once.  The flag reports whether every secant meets the set in
/// exactly q points.
pub fn check_secants(
    arc: &[PointIdx],
    t2: &PointTable,
    tower: &FieldTower,
) -> (bool, Vec<LineSet>) {
    let n = arc.len();
    let q = tower.q() as usize;
    let mut covered = bitvec![u64, Lsb0; 0; n * n];
    let mut secants: Vec<LineSet> = Vec::new();
    let mut uniform = true;
    for i in 0..n {
        for j in (i + 1)..n {
            if covered[i * n + j] {
                continue;
            }
            let line = crate::projgeom::line_through(
                t2,
                &t2.point_at(arc[i]),
                &t2.point_at(arc[j]),
            )
            .expect("arc points are distinct");
            let on_arc: Vec<usize> = line
                .points()
                .iter()
                .filter_map(|p| arc.binary_search(p).ok())
                .collect();
            if on_arc.len() != q {
                uniform = false;
            }
            for (a, &ia) in on_arc.iter().enumerate() {
                for &ib in &on_arc[a + 1..] {
                    covered.set(ia * n + ib, true);
                    covered.set(ib * n + ia, true);
                }
            }
            secants.push(line);
        }
    }
    (uniform, secants)
}

/// Whether a plane point set is a degree-q arc in the strong sense: every
/// secant carries exactly q of its points and every point lies on exactly
/// q^2 + 1 secants.
pub fn check_arc(arc: &[PointIdx], t2: &PointTable, tower: &FieldTower) -> bool {
    if arc.is_empty() {
        return false;
    }
    let (uniform, secants) = check_secants(arc, t2, tower);
    if !uniform {
        return false;
    }
    let expected = tower.q() * tower.q() + 1;
    let mut per_point: BTreeMap<PointIdx, u64> = arc.iter().map(|&p| (p, 0)).collect();
    for line in &secants {
        for p in line.points() {
            if let Some(c) = per_point.get_mut(p) {
                *c += 1;
            }
        }
    }
    per_point.values().all(|&c| c == expected)
}

/// Full line spectrum of a plane point set: how many of the q^2 + 1 + q^4
/// lines of PG(2, q^2) meet it in 0, 1, 2, ... points.
///
/// The set is a maximal arc of degree q exactly when the spectrum is
/// supported on {0, q} and the set is nonempty.
pub fn verify_maximal_arc(
    arc: &[PointIdx],
    t2: &PointTable,
    tower: &FieldTower,
) -> (bool, BTreeMap<usize, u64>) {
    let coords: Vec<[FieldElem; 3]> = arc
        .iter()
        .map(|&i| {
            let p = t2.point_at(i);
            [p.coords()[0], p.coords()[1], p.coords()[2]]
        })
        .collect();
    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    // Dual coordinates: each normalized triple (a, b, c) names the line
    // a*x0 + b*x1 + c*x2 = 0, and normalized triples list every line once.
    for (_, dual) in t2.iter() {
        let [a, b, c] = [dual.coords()[0], dual.coords()[1], dual.coords()[2]];
        let count = coords
            .iter()
            .filter(|p| {
                let mut acc = tower.mul(a, p[0]).0;
                acc ^= tower.mul(b, p[1]).0;
                acc ^= tower.mul(c, p[2]).0;
                acc == 0
            })
            .count();
        *histogram.entry(count).or_insert(0) += 1;
    }
    let q = tower.q() as usize;
    let pass = !arc.is_empty() && histogram.keys().all(|&k| k == 0 || k == q);
    (pass, histogram)
}

/// How an arc was produced, in enough detail to replay the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcProvenance {
    /// Base field order; the plane is PG(2, q^2).
    pub q: u64,
    pub ovoid_kind: OvoidKind,
    /// Collapse scalar, as its field encoding.
    pub epsilon: FieldElem,
    /// Matrix that moved the found spread onto the canonical one, row by
    /// row, entries as field encodings.
    pub collineation: [[u32; 4]; 4],
}

/// A maximal arc of PG(2, q^2) with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalArc {
    /// Every line meets the arc in 0 or this many points.
    pub degree: u64,
    /// Sorted plane point indices.
    pub point_ids: Vec<PointIdx>,
    pub provenance: ArcProvenance,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    use crate::gf::FieldTower;
    use crate::ovoids::{elliptic_quadric_ovoid, suzuki_tits_ovoid, tangent_complex};
    use crate::projgeom::{all_lines_pg3, line_through};
    use crate::spreads::{
        canonical_spread, canonicalizing_collineation, carrier_line, find_tangent_spread,
    };

    static TOWER8: OnceLock<FieldTower> = OnceLock::new();

    fn tower8() -> &'static FieldTower {
        TOWER8.get_or_init(|| FieldTower::new(3).unwrap())
    }

    struct Chain {
        t3: PointTable<'static>,
        lines: AllLines,
        t2: PointTable<'static>,
        ovoid_image: Ovoid,
        canon_ids: Vec<LineId>,
        epsilons: Vec<FieldElem>,
        arc: Vec<PointIdx>,
    }

    static CHAIN8: OnceLock<Chain> = OnceLock::new();

    fn chain8() -> &'static Chain {
        CHAIN8.get_or_init(|| {
            let tw = tower8();
            let t3 = PointTable::new(3, tw.base());
            let lines = all_lines_pg3(&t3);
            let ext_t3 = PointTable::new_unmaterialized(3, tw.ext());
            let t2 = PointTable::new_unmaterialized(2, tw.ext());
            let ovoid = suzuki_tits_ovoid(tw, &t3).unwrap();
            let tc = tangent_complex(&ovoid, &t3, &lines);
            let spread = find_tangent_spread(&tc, &ovoid, &lines, &t3).unwrap();
            let carrier = carrier_line(&spread.line_ids, &lines, &t3, &ext_t3, tw).unwrap();
            let canon = canonical_spread(tw, &t3, &lines, &ext_t3).unwrap();
            let mu = canonicalizing_collineation(
                &carrier,
                canon.carrier.as_ref().unwrap(),
                tw,
                &ext_t3,
            )
            .unwrap();
            let ovoid_image = Ovoid {
                kind: ovoid.kind,
                points: mu.apply_points(tw, &t3, &ovoid.points),
                sigma: ovoid.sigma,
                delta: ovoid.delta,
            };
            let epsilons = find_epsilon(&canon.line_ids, &lines, &t3, tw);
            let arc = build_arc(
                &ovoid_image,
                &canon.line_ids,
                epsilons[0],
                tw,
                &t3,
                &lines,
                &t2,
            )
            .unwrap();
            Chain { t3, lines, t2, ovoid_image, canon_ids: canon.line_ids, epsilons, arc }
        })
    }

    #[test]
    fn epsilon_candidates_collapse_every_spread_line() {
        let ch = chain8();
        let tw = tower8();
        assert!(!ch.epsilons.is_empty());
        for &e in &ch.epsilons {
            assert!(!tw.in_base(e));
            // The candidate set is closed under conjugation.
            assert!(ch.epsilons.contains(&tw.frobenius(e)));
            for &id in &ch.canon_ids {
                assert!(line_collapses(tw, e, ch.lines.line(id), &ch.t3, &ch.t2));
            }
        }
        // A scalar outside the candidate list leaves some spread line torn.
        let bad = tw
            .ext_elems()
            .find(|&e| !tw.in_base(e) && !ch.epsilons.contains(&e))
            .unwrap();
        assert!(!ch
            .canon_ids
            .iter()
            .all(|&id| line_collapses(tw, bad, ch.lines.line(id), &ch.t3, &ch.t2)));
    }

    #[test]
    fn arc_size_and_membership() {
        let ch = chain8();
        assert_eq!(ch.arc.len(), 456);
        // The cone vertex (1, 0, 0, 0, 0) maps to (1, 0, 0).
        let origin = ch.t2.index_of(&ProjPoint::from_normalized(&[
            FieldElem::ONE,
            FieldElem::ZERO,
            FieldElem::ZERO,
        ]));
        assert!(ch.arc.binary_search(&origin).is_ok());
        // All arc points are affine: leading coordinate 1.
        for &i in &ch.arc {
            assert_eq!(ch.t2.point_at(i).coords()[0], FieldElem::ONE);
        }
    }

    #[test]
    fn arc_is_a_maximal_arc_of_degree_q() {
        let ch = chain8();
        let tw = tower8();
        let (uniform, secants) = check_secants(&ch.arc, &ch.t2, tw);
        assert!(uniform);
        assert_eq!(secants.len(), 3705);
        assert!(check_arc(&ch.arc, &ch.t2, tw));
        let (pass, histogram) = verify_maximal_arc(&ch.arc, &ch.t2, tw);
        assert!(pass);
        let expected: BTreeMap<usize, u64> = [(0usize, 456u64), (8, 3705)].into();
        assert_eq!(histogram, expected);
    }

    #[test]
    fn perturbed_arc_fails_verification() {
        let ch = chain8();
        let tw = tower8();
        let outside = (0..ch.t2.len())
            .find(|i| ch.arc.binary_search(i).is_err())
            .unwrap();
        let mut broken = ch.arc.clone();
        broken[0] = outside;
        broken.sort_unstable();
        let (pass, _) = verify_maximal_arc(&broken, &ch.t2, tw);
        assert!(!pass);
        assert!(!check_arc(&broken, &ch.t2, tw));
        assert!(!verify_maximal_arc(&[], &ch.t2, tw).0);
    }

    #[test]
    fn tangency_violations_are_reported() {
        let ch = chain8();
        let tw = tower8();
        // Swap a secant of the ovoid into the line list.
        let secant = ch
            .lines
            .iter()
            .find(|(_, l)| {
                l.points()
                    .iter()
                    .filter(|p| ch.ovoid_image.points.binary_search(p).is_ok())
                    .count()
                    == 2
            })
            .map(|(id, _)| id)
            .unwrap();
        let mut ids = vec![secant];
        ids.extend_from_slice(&ch.canon_ids[1..]);
        let err = build_arc(
            &ch.ovoid_image,
            &ids,
            ch.epsilons[0],
            tw,
            &ch.t3,
            &ch.lines,
            &ch.t2,
        )
        .unwrap_err();
        assert!(matches!(err, Error::TangencyViolated { line, count: 2 } if line == secant));

        // A base-field scalar is rejected before any geometry runs.
        let err = build_arc(
            &ch.ovoid_image,
            &ch.canon_ids,
            FieldElem::ONE,
            tw,
            &ch.t3,
            &ch.lines,
            &ch.t2,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn plane_map_is_injective_on_affine_points() {
        let tw = tower8();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        let e = chain8().epsilons[0];
        let mut seen = std::collections::HashSet::new();
        for a in tw.base_elems() {
            for b in tw.base_elems() {
                for c in tw.base_elems() {
                    for d in tw.base_elems() {
                        let p = ProjPoint::from_normalized(&[FieldElem::ONE, a, b, c, d]);
                        let img = theta_map(tw, e, &p, &t2);
                        assert_eq!(img.coords()[0], FieldElem::ONE);
                        assert!(seen.insert(t2.index_of(&img)));
                    }
                }
            }
        }
        assert_eq!(seen.len(), 4096);
    }

    #[test]
    fn elliptic_quadric_chain_at_q4_gives_a_52_point_arc() {
        let tw = FieldTower::new(2).unwrap();
        let t3 = PointTable::new(3, tw.base());
        let lines = all_lines_pg3(&t3);
        let ext_t3 = PointTable::new_unmaterialized(3, tw.ext());
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        let ovoid = elliptic_quadric_ovoid(&tw, &t3).unwrap();
        let tc = tangent_complex(&ovoid, &t3, &lines);
        let spread = find_tangent_spread(&tc, &ovoid, &lines, &t3).unwrap();
        assert!(spread.regular);
        let carrier = carrier_line(&spread.line_ids, &lines, &t3, &ext_t3, &tw).unwrap();
        let canon = canonical_spread(&tw, &t3, &lines, &ext_t3).unwrap();
        let mu = canonicalizing_collineation(
            &carrier,
            canon.carrier.as_ref().unwrap(),
            &tw,
            &ext_t3,
        )
        .unwrap();
        let image = Ovoid {
            kind: ovoid.kind,
            points: mu.apply_points(&tw, &t3, &ovoid.points),
            sigma: None,
            delta: ovoid.delta,
        };
        let eps = find_epsilon(&canon.line_ids, &lines, &t3, &tw);
        assert!(!eps.is_empty());
        let arc = build_arc(&image, &canon.line_ids, eps[0], &tw, &t3, &lines, &t2).unwrap();
        assert_eq!(arc.len(), 52);
        let (pass, histogram) = verify_maximal_arc(&arc, &t2, &tw);
        assert!(pass);
        let expected: BTreeMap<usize, u64> = [(0usize, 52u64), (4, 221)].into();
        assert_eq!(histogram, expected);
    }

    #[test]
    fn secant_scan_flags_oversized_lines() {
        let tw = tower8();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        // Nine collinear points plus one off the line: the long secant is
        // spotted as not having exactly q points.
        let a = t2.point_at(1);
        let b = t2.point_at(2);
        let line = line_through(&t2, &a, &b).unwrap();
        let mut pts: Vec<PointIdx> = line.points()[..9].to_vec();
        let off = (0..t2.len()).find(|i| !line.contains(*i)).unwrap();
        pts.push(off);
        pts.sort_unstable();
        let (uniform, _) = check_secants(&pts, &t2, tw);
        assert!(!uniform);
    }
}
