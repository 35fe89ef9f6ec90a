//! Reguli and regular spreads of PG(3, q), and the passage to a canonical
//! coordinate frame.
//!
//! A regulus is the set of q + 1 transversals of the transversals of three
//! pairwise skew lines.  Closing a line set under reguli of member triples
//! yields, for four suitably generic lines, the unique regular spread
//! through them.  A regular spread S is recognized over GF(q^2) by a
//! carrier line: a line L of PG(3, q^2) disjoint from the rational points
//! such that each spread line is recovered as the rational part of the line
//! joining P to its conjugate P^q, as P runs over L.  Mapping the carrier
//! of S onto the carrier of a fixed canonical spread produces a collineation
//! of PG(3, q) carrying S onto that canonical spread.

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::gf::{FieldElem, FieldTower};
use crate::ovoids::{Ovoid, TangentComplex};
use crate::projgeom::{
    conjugate_point, line_through, AllLines, LineId, LineSet, PointIdx, PointTable, ProjPoint,
};
use crate::Error;

/// The q + 1 lines of a regulus, as ascending line ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regulus {
    pub line_ids: Vec<LineId>,
}

/// A spread candidate: q^2 + 1 pairwise skew lines, with certification
/// results attached as they are computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spread {
    pub line_ids: Vec<LineId>,
    pub regular: bool,
    /// Carrier line over GF(q^2), as ext-table point indices, if computed.
    pub carrier: Option<Vec<PointIdx>>,
}

fn ensure_pairwise_skew(ids: &[LineId], lines: &AllLines) -> Result<(), Error> {
    for (i, &a) in ids.iter().enumerate() {
        for &b in &ids[i + 1..] {
            if a == b || lines.line(a).meets(lines.line(b)) {
                return Err(Error::NotSkew);
            }
        }
    }
    Ok(())
}

/// The transversals of three pairwise skew lines: exactly q + 1 lines, each
/// meeting all three inputs.
pub fn opposite_regulus(
    a: LineId,
    b: LineId,
    c: LineId,
    lines: &AllLines,
) -> Result<Regulus, Error> {
    ensure_pairwise_skew(&[a, b, c], lines)?;
    let mut mask = lines.meets_mask(a);
    mask &= lines.meets_mask(b).as_bitslice();
    mask &= lines.meets_mask(c).as_bitslice();
    let line_ids: Vec<LineId> = mask.iter_ones().map(|i| i as LineId).collect();
    debug_assert_eq!(line_ids.len() as u64, lines.line(a).len() as u64);
    Ok(Regulus { line_ids })
}

/// The regulus through three pairwise skew lines: the opposite regulus of
/// any three of their transversals.
pub fn regulus(a: LineId, b: LineId, c: LineId, lines: &AllLines) -> Result<Regulus, Error> {
    let opp = opposite_regulus(a, b, c, lines)?;
    let r = opposite_regulus(opp.line_ids[0], opp.line_ids[1], opp.line_ids[2], lines)?;
    debug_assert!([a, b, c].iter().all(|x| r.line_ids.contains(x)));
    Ok(r)
}

/// The (q^2 - q + 2)-line span of four pairwise skew lines l1..l4 with l4
/// outside the regulus R(l1, l2, l3): the union of R(l1, x, l4) over the
/// lines x of R(l1, l2, l3) other than l1.
pub fn quad_span(
    l1: LineId,
    l2: LineId,
    l3: LineId,
    l4: LineId,
    lines: &AllLines,
) -> Result<Vec<LineId>, Error> {
    ensure_pairwise_skew(&[l1, l2, l3, l4], lines)?;
    let r1 = regulus(l1, l2, l3, lines)?;
    if r1.line_ids.contains(&l4) {
        return Err(Error::FourthLineInRegulus);
    }
    let mut out: Vec<LineId> = Vec::new();
    for &x in r1.line_ids.iter().filter(|&&x| x != l1) {
        let r = regulus(l1, x, l4, lines)?;
        out.extend_from_slice(&r.line_ids);
    }
    out.sort_unstable();
    out.dedup();
    let q = lines.line(l1).len() as u64 - 1;
    debug_assert_eq!(out.len() as u64, q * q - q + 2);
    Ok(out)
}

/// Closes a pairwise skew line set under reguli of member triples.
///
/// Triples are processed in rounds: each round takes, in ascending order,
/// every triple of current members not contained in the previous round's
/// set.  Regulus results merge in triple order, so the outcome does not
/// depend on how the per-round computations are scheduled.  The scan stops
/// as soon as q^2 + 1 lines are reached: at that size the set is the whole
/// closure.  A generated line meeting an existing member is reported as a
/// conflict.
pub fn regular_closure(start: &[LineId], lines: &AllLines, t3: &PointTable) -> Result<Vec<LineId>, Error> {
    ensure_pairwise_skew(start, lines)?;
    let q = t3.field_order();
    let target = (q * q + 1) as usize;

    let mut current: Vec<LineId> = start.to_vec();
    current.sort_unstable();
    current.dedup();

    let mut covered = bitvec![u64, Lsb0; 0; t3.len() as usize];
    let mut member = bitvec![u64, Lsb0; 0; lines.len()];
    for &id in &current {
        member.set(id as usize, true);
        for &p in lines.line(id).points() {
            covered.set(p as usize, true);
        }
    }

    let mut old_size = 0usize;
    while current.len() < target {
        let snapshot = current.clone();

        // Triples with at least one line added since the last round.
        let mut triples: Vec<[LineId; 3]> = Vec::new();
        let prev: std::collections::HashSet<LineId> =
            prev_members(&snapshot, old_size);
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                for k in (j + 1)..snapshot.len() {
                    let t = [snapshot[i], snapshot[j], snapshot[k]];
                    if t.iter().all(|id| prev.contains(id)) {
                        continue;
                    }
                    triples.push(t);
                }
            }
        }
        if triples.is_empty() {
            break;
        }
        old_size = snapshot.len();

        let reguli: Vec<Result<Regulus, Error>> = triples
            .par_iter()
            .map(|t| regulus(t[0], t[1], t[2], lines))
            .collect();

        let mut grew = false;
        'fold: for r in reguli {
            let r = r?;
            for &id in &r.line_ids {
                if member[id as usize] {
                    continue;
                }
                // A new line must avoid every covered point.
                for &p in lines.line(id).points() {
                    if covered[p as usize] {
                        let existing = current
                            .iter()
                            .copied()
                            .find(|&e| lines.line(e).contains(p))
                            .unwrap_or(id);
                        return Err(Error::ClosureConflict { line: id, existing });
                    }
                }
                member.set(id as usize, true);
                for &p in lines.line(id).points() {
                    covered.set(p as usize, true);
                }
                current.push(id);
                grew = true;
                if current.len() == target {
                    break 'fold;
                }
            }
        }
        if !grew {
            break;
        }
    }
    current.sort_unstable();
    Ok(current)
}

fn prev_members(
    snapshot: &[LineId],
    old_size: usize,
) -> std::collections::HashSet<LineId> {
    if old_size == 0 {
        return Default::default();
    }
    snapshot.iter().copied().take(old_size).collect()
}

/// Whether q^2 + 1 lines form a spread (partition of the points) closed
/// under reguli of member triples.  Each confirmed regulus certifies all
/// C(q+1, 3) of its triples at once.
pub fn is_regular_spread(
    s: &[LineId],
    lines: &AllLines,
    t3: &PointTable,
) -> Result<bool, Error> {
    let q = t3.field_order();
    if s.len() as u64 != q * q + 1 {
        return Err(Error::NotPartition);
    }
    let mut covered = bitvec![u64, Lsb0; 0; t3.len() as usize];
    for &id in s {
        for &p in lines.line(id).points() {
            if covered[p as usize] {
                return Err(Error::NotPartition);
            }
            covered.set(p as usize, true);
        }
    }
    if covered.count_ones() as u64 != t3.len() {
        return Err(Error::NotPartition);
    }

    let mut sorted: Vec<LineId> = s.to_vec();
    sorted.sort_unstable();
    let member: std::collections::HashSet<LineId> = sorted.iter().copied().collect();
    let mut done: std::collections::HashSet<[LineId; 3]> = Default::default();
    for i in 0..sorted.len() {
        for j in (i + 1)..sorted.len() {
            for k in (j + 1)..sorted.len() {
                let t = [sorted[i], sorted[j], sorted[k]];
                if done.contains(&t) {
                    continue;
                }
                let r = regulus(t[0], t[1], t[2], lines)?;
                if !r.line_ids.iter().all(|id| member.contains(id)) {
                    return Ok(false);
                }
                for a in 0..r.line_ids.len() {
                    for b in (a + 1)..r.line_ids.len() {
                        for c in (b + 1)..r.line_ids.len() {
                            let mut key = [r.line_ids[a], r.line_ids[b], r.line_ids[c]];
                            key.sort_unstable();
                            done.insert(key);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Searches for a regular spread inside a tangent complex.
///
/// Triples are drawn one line from each of the first three pencils, in
/// pencil order; a triple qualifies when it is pairwise skew and its regulus
/// stays tangent.  Each qualifying triple is extended by every tangent line
/// disjoint from the regulus, span and closure are computed, and the first
/// closure that is a tangent spread wins.  Returns the certified spread, or
/// `None` when the scan exhausts.
pub fn find_tangent_spread(
    tc: &TangentComplex,
    ovoid: &Ovoid,
    lines: &AllLines,
    t3: &PointTable,
) -> Option<Spread> {
    let q = t3.field_order();
    let target = q * q + 1;
    let p1 = &tc.pencils.first()?.1;
    let p2 = &tc.pencils.get(1)?.1;
    let p3 = &tc.pencils.get(2)?.1;

    for &a in p1 {
        for &b in p2 {
            for &c in p3 {
                if lines.line(a).meets(lines.line(b))
                    || lines.line(a).meets(lines.line(c))
                    || lines.line(b).meets(lines.line(c))
                {
                    continue;
                }
                let r1 = regulus(a, b, c, lines).ok()?;
                if !r1.line_ids.iter().all(|&id| tc.contains(id)) {
                    continue;
                }
                let mut r1_points = bitvec![u64, Lsb0; 0; t3.len() as usize];
                for &id in &r1.line_ids {
                    for &p in lines.line(id).points() {
                        r1_points.set(p as usize, true);
                    }
                }
                let candidates: Vec<LineId> = tc
                    .line_ids
                    .iter()
                    .copied()
                    .filter(|&y| {
                        lines.line(y).points().iter().all(|&p| !r1_points[p as usize])
                    })
                    .collect();

                let hit = candidates.par_iter().find_map_first(|&y| {
                    let span = quad_span(a, b, c, y, lines).ok()?;
                    if !span.iter().all(|&id| tc.contains(id)) {
                        return None;
                    }
                    let closure = regular_closure(&span, lines, t3).ok()?;
                    if closure.len() as u64 != target
                        || !closure.iter().all(|&id| tc.contains(id))
                    {
                        return None;
                    }
                    Some(closure)
                });

                if let Some(closure) = hit {
                    let regular = is_regular_spread(&closure, lines, t3).unwrap_or(false);
                    // Every spread line is tangent by construction; recheck
                    // rather than assume.
                    debug_assert!(closure.iter().all(|&id| {
                        let on_ovoid = lines
                            .line(id)
                            .points()
                            .iter()
                            .filter(|p| ovoid.points.binary_search(p).is_ok())
                            .count();
                        on_ovoid == 1
                    }));
                    return Some(Spread { line_ids: closure, regular, carrier: None });
                }
            }
        }
    }
    None
}

/// Extends a rational line to its GF(q^2) point set.
pub fn extend_line(
    l: &LineSet,
    t3: &PointTable,
    ext_t3: &PointTable,
) -> LineSet {
    let a = t3.point_at(l.points()[0]);
    let b = t3.point_at(l.points()[1]);
    line_through(ext_t3, &a, &b).expect("distinct points")
}

fn point_is_rational(tower: &FieldTower, p: &ProjPoint) -> bool {
    p.coords().iter().all(|&c| tower.in_base(c))
}

/// Searches PG(3, q^2) for a carrier line of a spread: a line disjoint from
/// the rational points that meets, along with its conjugate, the extension
/// of every spread line.  Candidates are the lines joining a point of the
/// first extended spread line to a point of the second, scanned in point
/// order.  Returns the sorted ext-table indices of its points.
pub fn carrier_line(
    s: &[LineId],
    lines: &AllLines,
    t3: &PointTable,
    ext_t3: &PointTable,
    tower: &FieldTower,
) -> Option<Vec<PointIdx>> {
    let mut ids: Vec<LineId> = s.to_vec();
    ids.sort_unstable();
    let extended: Vec<LineSet> = ids
        .iter()
        .map(|&id| extend_line(lines.line(id), t3, ext_t3))
        .collect();
    let first = &extended[0];
    let second = &extended[1];
    let len2 = second.len();
    let total = first.len() * len2;

    let found = (0..total).into_par_iter().find_map_first(|k| {
        let pa = ext_t3.point_at(first.points()[k / len2]);
        let pb = ext_t3.point_at(second.points()[k % len2]);
        let cand = line_through(ext_t3, &pa, &pb).ok()?;
        // Disjoint from PG(3, q).
        if cand
            .points()
            .iter()
            .any(|&i| point_is_rational(tower, &ext_t3.point_at(i)))
        {
            return None;
        }
        if !extended.iter().all(|e| e.meets(&cand)) {
            return None;
        }
        let conj_pts: Vec<PointIdx> = {
            let mut v: Vec<PointIdx> = cand
                .points()
                .iter()
                .map(|&i| ext_t3.index_of(&conjugate_point(tower, &ext_t3.point_at(i))))
                .collect();
            v.sort_unstable();
            v
        };
        let conj = LineSet::from_sorted(conj_pts);
        if !extended.iter().all(|e| e.meets(&conj)) {
            return None;
        }
        Some(cand.points().to_vec())
    });
    found
}

/// Rebuilds a spread from a carrier line: for each carrier point P, the
/// rational points of the line joining P to P^q.  Returns the lines as
/// base-table line sets, sorted.
pub fn spread_from_carrier(
    carrier: &[PointIdx],
    t3: &PointTable,
    ext_t3: &PointTable,
    tower: &FieldTower,
) -> Vec<LineSet> {
    let q = t3.field_order();
    let mut out: Vec<LineSet> = carrier
        .iter()
        .map(|&i| {
            let p = ext_t3.point_at(i);
            let pq = conjugate_point(tower, &p);
            let joined = line_through(ext_t3, &p, &pq).expect("carrier avoids PG(3, q)");
            let mut rational: Vec<PointIdx> = joined
                .points()
                .iter()
                .filter_map(|&j| {
                    let pt = ext_t3.point_at(j);
                    point_is_rational(tower, &pt).then(|| t3.index_of(&pt))
                })
                .collect();
            rational.sort_unstable();
            assert_eq!(rational.len() as u64, q + 1, "conjugate-closed line is rational");
            LineSet::from_sorted(rational)
        })
        .collect();
    out.sort_by(|a, b| a.points().cmp(b.points()));
    out.dedup();
    out
}

/// The three pairwise skew reference lines of the canonical frame:
/// span{(1,0,0,1), (0,1,1,0)}, span{(1,0,0,0), (0,1,0,0)},
/// span{(0,0,1,0), (0,0,0,1)}.
pub fn canonical_frame_lines(t3: &PointTable, lines: &AllLines) -> [LineId; 3] {
    let fe = |v: &[u32]| {
        let c: Vec<FieldElem> = v.iter().map(|&x| FieldElem(x)).collect();
        ProjPoint::from_normalized(&c)
    };
    let pairs = [
        (fe(&[1, 0, 0, 1]), fe(&[0, 1, 1, 0])),
        (fe(&[1, 0, 0, 0]), fe(&[0, 1, 0, 0])),
        (fe(&[0, 0, 1, 0]), fe(&[0, 0, 0, 1])),
    ];
    pairs.map(|(a, b)| {
        let l = line_through(t3, &a, &b).expect("distinct frame points");
        lines.id_of(&l).expect("frame line exists in the listing")
    })
}

/// The canonical regular spread: the regular closure of the three frame
/// lines plus the first line in enumeration order disjoint from their
/// regulus.  Returned with its carrier line attached.
pub fn canonical_spread(
    tower: &FieldTower,
    t3: &PointTable,
    lines: &AllLines,
    ext_t3: &PointTable,
) -> Result<Spread, Error> {
    let [l1, l2, l3] = canonical_frame_lines(t3, lines);
    let r = regulus(l1, l2, l3, lines)?;
    let mut covered = bitvec![u64, Lsb0; 0; t3.len() as usize];
    for &id in &r.line_ids {
        for &p in lines.line(id).points() {
            covered.set(p as usize, true);
        }
    }
    let l4 = lines
        .iter()
        .find(|(_, l)| l.points().iter().all(|&p| !covered[p as usize]))
        .map(|(id, _)| id)
        .ok_or_else(|| Error::Internal("no line misses the frame regulus".into()))?;
    let closure = regular_closure(&[l1, l2, l3, l4], lines, t3)?;
    if !is_regular_spread(&closure, lines, t3)? {
        return Err(Error::Internal("canonical closure failed regularity".into()));
    }
    let carrier = carrier_line(&closure, lines, t3, ext_t3, tower)
        .ok_or_else(|| Error::Internal("canonical spread has no carrier".into()))?;
    Ok(Spread { line_ids: closure, regular: true, carrier: Some(carrier) })
}

/// A collineation of PG(3, q), stored as an invertible 4x4 matrix over the
/// base field acting on column coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collineation4 {
    m: [[FieldElem; 4]; 4],
}

impl Collineation4 {
    pub fn new(m: [[FieldElem; 4]; 4], tower: &FieldTower) -> Result<Self, Error> {
        // Reject singular matrices up front so application can't degenerate.
        invert4(&m, tower, true)?;
        Ok(Collineation4 { m })
    }

    pub fn identity() -> Self {
        let mut m = [[FieldElem::ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = FieldElem::ONE;
        }
        Collineation4 { m }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn matrix(&self) -> &[[FieldElem; 4]; 4] {
        &self.m
    }

    pub fn matrix_encodings(&self) -> [[u32; 4]; 4] {
        self.m.map(|row| row.map(|c| c.0))
    }

    pub fn apply_point(&self, tower: &FieldTower, t3: &PointTable, p: &ProjPoint) -> ProjPoint {
        let c = p.coords();
        let mut out = [FieldElem::ZERO; 4];
        for i in 0..4 {
            let mut acc = 0u32;
            for j in 0..4 {
                acc ^= tower.mul_base(self.m[i][j], c[j]).0;
            }
            out[i] = FieldElem(acc);
        }
        t3.normalize(&out)
    }

    pub fn apply_index(&self, tower: &FieldTower, t3: &PointTable, p: PointIdx) -> PointIdx {
        t3.index_of(&self.apply_point(tower, t3, &t3.point_at(p)))
    }

    /// Image of a line, as a line set; the image of collinear points stays
    /// collinear, which `debug_assert` rechecks through the line listing.
    pub fn apply_line(
        &self,
        tower: &FieldTower,
        t3: &PointTable,
        lines: &AllLines,
        id: LineId,
    ) -> LineId {
        let mut pts: Vec<PointIdx> = lines
            .line(id)
            .points()
            .iter()
            .map(|&p| self.apply_index(tower, t3, p))
            .collect();
        pts.sort_unstable();
        let image = LineSet::from_sorted(pts);
        lines.id_of(&image).expect("collineations map lines to lines")
    }

    pub fn apply_points(&self, tower: &FieldTower, t3: &PointTable, pts: &[PointIdx]) -> Vec<PointIdx> {
        let mut out: Vec<PointIdx> = pts.iter().map(|&p| self.apply_index(tower, t3, p)).collect();
        out.sort_unstable();
        out
    }
}

/// Gaussian inverse of a 4x4 matrix over GF(q) or GF(q^2).
fn invert4(
    m: &[[FieldElem; 4]; 4],
    tower: &FieldTower,
    base_side: bool,
) -> Result<[[FieldElem; 4]; 4], Error> {
    let mul = |a: FieldElem, b: FieldElem| {
        if base_side {
            tower.mul_base(a, b)
        } else {
            tower.mul(a, b)
        }
    };
    let inv = |a: FieldElem| {
        if base_side {
            tower.inv_base(a)
        } else {
            tower.inv(a)
        }
    };
    let mut a = *m;
    let mut b = Collineation4::identity().m;
    for col in 0..4 {
        let pivot = (col..4)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let scale = inv(a[col][col]);
        for j in 0..4 {
            a[col][j] = mul(scale, a[col][j]);
            b[col][j] = mul(scale, b[col][j]);
        }
        for r in 0..4 {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in 0..4 {
                a[r][j] = FieldElem(a[r][j].0 ^ mul(f, a[col][j]).0);
                b[r][j] = FieldElem(b[r][j].0 ^ mul(f, b[col][j]).0);
            }
        }
    }
    Ok(b)
}

fn mat_mul4(
    x: &[[FieldElem; 4]; 4],
    y: &[[FieldElem; 4]; 4],
    tower: &FieldTower,
) -> [[FieldElem; 4]; 4] {
    let mut out = [[FieldElem::ZERO; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0u32;
            for (k, yk) in y.iter().enumerate() {
                acc ^= tower.mul(x[i][k], yk[j]).0;
            }
            out[i][j] = FieldElem(acc);
        }
    }
    out
}

/// The collineation sending one spread onto another, built from their
/// carrier lines.
///
/// With P1, P2 the first two carrier points of the source and Q1, Q2 those
/// of the target, the matrix sends the column frame (P1, P1^q, P2, P2^q)
/// exactly onto (Q1, Q1^q, Q2, Q2^q).  Such a matrix commutes with the
/// Frobenius conjugation, hence has all entries in the base field.
pub fn canonicalizing_collineation(
    source_carrier: &[PointIdx],
    target_carrier: &[PointIdx],
    tower: &FieldTower,
    ext_t3: &PointTable,
) -> Result<Collineation4, Error> {
    let frame = |carrier: &[PointIdx]| -> [[FieldElem; 4]; 4] {
        let p1 = ext_t3.point_at(carrier[0]);
        let p2 = ext_t3.point_at(carrier[1]);
        let cols = [
            p1,
            conjugate_point(tower, &p1),
            p2,
            conjugate_point(tower, &p2),
        ];
        let mut m = [[FieldElem::ZERO; 4]; 4];
        for (j, c) in cols.iter().enumerate() {
            for i in 0..4 {
                m[i][j] = c.coords()[i];
            }
        }
        m
    };
    let m0 = frame(source_carrier);
    let n0 = frame(target_carrier);
    let m0_inv = invert4(&m0, tower, false)?;
    let m = mat_mul4(&n0, &m0_inv, tower);
    for row in &m {
        for &c in row {
            if !tower.in_base(c) {
                return Err(Error::Internal(
                    "carrier frame map has entries outside the base field".into(),
                ));
            }
        }
    }
    Collineation4::new(m, tower)
}
