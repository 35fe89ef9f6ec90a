//! Points and lines of PG(n, f) for n = 2, 3, 4 over either field of a
//! tower.
//!
//! Points are left-normalized homogeneous coordinate vectors (first nonzero
//! coordinate scaled to 1) and are enumerated in ascending lexicographic
//! order of their coordinate encodings, so indices are stable across runs
//! and machines.  The index of a normalized point is computed arithmetically
//! rather than looked up, which keeps tables over GF(q^2) usable without
//! materializing them.

use std::collections::HashMap;

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::gf::{FieldElem, FieldTower, FieldView};
use crate::Error;

/// Index of a point in a table's enumeration order.
pub type PointIdx = u64;

/// Index of a line in an [`AllLines`] listing.
pub type LineId = u32;

/// A left-normalized point of PG(n, f), n <= 4.  Unused trailing
/// coordinates are kept at zero so whole-struct equality is coordinate
/// equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    coords: [FieldElem; 5],
    dim: u8,
}

impl ProjPoint {
    /// Wraps already-normalized coordinates.
    pub fn from_normalized(coords: &[FieldElem]) -> Self {
        assert!(coords.len() >= 2 && coords.len() <= 5);
        let mut c = [FieldElem::ZERO; 5];
        c[..coords.len()].copy_from_slice(coords);
        let p = ProjPoint { coords: c, dim: (coords.len() - 1) as u8 };
        debug_assert!(p.leading_index().is_some());
        p
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords[..=self.dim as usize]
    }

    fn leading_index(&self) -> Option<usize> {
        self.coords().iter().position(|c| !c.is_zero())
    }
}

/// The points of PG(n, f), in enumeration order.
///
/// `new` materializes the coordinate list; `new_unmaterialized` skips that
/// and serves `point_at` arithmetically, which is what carrier searches over
/// PG(3, q^2) use.
pub struct PointTable<'a> {
    view: FieldView<'a>,
    n: usize,
    f: u64,
    len: u64,
    points: Option<Vec<ProjPoint>>,
}

impl<'a> PointTable<'a> {
    pub fn new(n: usize, view: FieldView<'a>) -> Self {
        let mut t = Self::new_unmaterialized(n, view);
        let pts: Vec<ProjPoint> = (0..t.len).map(|i| t.compute_point(i)).collect();
        t.points = Some(pts);
        t
    }

    pub fn new_unmaterialized(n: usize, view: FieldView<'a>) -> Self {
        assert!((2..=4).contains(&n), "only PG(2..4) supported");
        let f = view.order();
        let mut len: u128 = 0;
        let mut power: u128 = 1;
        for _ in 0..=n {
            len += power;
            power *= f as u128;
        }
        assert!(len < (1u128 << 63), "point table too large to index");
        PointTable { view, n, f, len: len as u64, points: None }
    }

    pub fn view(&self) -> FieldView<'a> {
        self.view
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u64 {
        self.f
    }

    /// Number of points, (f^(n+1) - 1) / (f - 1).
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Start of the enumeration block whose points have s coordinates after
    /// the leading 1.
    fn block_start(&self, s: usize) -> u64 {
        let mut acc = 0u64;
        let mut power = 1u64;
        for _ in 0..s {
            acc += power;
            power *= self.f;
        }
        acc
    }

    fn compute_point(&self, i: PointIdx) -> ProjPoint {
        assert!(i < self.len, "point index {i} out of range");
        let mut s = self.n;
        while self.block_start(s) > i {
            s -= 1;
        }
        let mut r = i - self.block_start(s);
        let mut coords = [FieldElem::ZERO; 5];
        let k = self.n - s;
        coords[k] = FieldElem::ONE;
        for j in (0..s).rev() {
            coords[k + 1 + j] = FieldElem((r % self.f) as u32);
            r /= self.f;
        }
        ProjPoint { coords, dim: self.n as u8 }
    }

    pub fn point_at(&self, i: PointIdx) -> ProjPoint {
        match &self.points {
            Some(pts) => pts[i as usize],
            None => self.compute_point(i),
        }
    }

    /// Index of a normalized point, by closed form on its coordinates.
    pub fn index_of(&self, p: &ProjPoint) -> PointIdx {
        debug_assert_eq!(p.dim(), self.n);
        let k = p.leading_index().expect("zero vector is not a point");
        debug_assert_eq!(p.coords()[k], FieldElem::ONE, "point not normalized");
        let s = self.n - k;
        let mut digits = 0u64;
        for j in (k + 1)..=self.n {
            digits = digits * self.f + p.coords()[j].0 as u64;
        }
        let idx = self.block_start(s) + digits;
        debug_assert!(idx < self.len);
        idx
    }

    /// Scales a nonzero coordinate vector so its first nonzero entry is 1.
    pub fn normalize(&self, raw: &[FieldElem]) -> ProjPoint {
        assert_eq!(raw.len(), self.n + 1);
        let lead = raw
            .iter()
            .position(|c| !c.is_zero())
            .expect("zero vector is not a point");
        let inv = self.view.inv(raw[lead]);
        let mut coords = [FieldElem::ZERO; 5];
        for (i, &c) in raw.iter().enumerate() {
            coords[i] = self.view.mul(inv, c);
        }
        coords[lead] = FieldElem::ONE;
        ProjPoint { coords, dim: self.n as u8 }
    }

    pub fn iter(&self) -> impl Iterator<Item = (PointIdx, ProjPoint)> + '_ {
        (0..self.len).map(move |i| (i, self.point_at(i)))
    }
}

/// A line as the sorted set of indices of its points.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LineSet(Vec<PointIdx>);

impl LineSet {
    pub fn from_sorted(pts: Vec<PointIdx>) -> Self {
        debug_assert!(pts.windows(2).all(|w| w[0] < w[1]));
        LineSet(pts)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self) -> &[PointIdx] {
        &self.0
    }

    pub fn contains(&self, p: PointIdx) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// Size of the intersection with another sorted set.
    pub fn intersection_size(&self, other: &LineSet) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn meets(&self, other: &LineSet) -> bool {
        self.intersection_size(other) > 0
    }

    pub fn common_points(&self, other: &LineSet) -> Vec<PointIdx> {
        self.0
            .iter()
            .copied()
            .filter(|&p| other.contains(p))
            .collect()
    }
}

/// The line through two distinct points: a itself plus the normalizations
/// of x*a + b over all field elements x.  Exactly f + 1 points.
pub fn line_through(t: &PointTable, a: &ProjPoint, b: &ProjPoint) -> Result<LineSet, Error> {
    if a == b {
        return Err(Error::DegenerateLine);
    }
    let n = t.dim();
    let view = t.view();
    let mut pts = Vec::with_capacity(t.field_order() as usize + 1);
    pts.push(t.index_of(a));
    let mut raw = [FieldElem::ZERO; 5];
    for x in view.elems() {
        for i in 0..=n {
            raw[i] = view.add(view.mul(x, a.coords()[i]), b.coords()[i]);
        }
        let p = t.normalize(&raw[..=n]);
        pts.push(t.index_of(&p));
    }
    pts.sort_unstable();
    pts.dedup();
    debug_assert_eq!(pts.len() as u64, t.field_order() + 1);
    Ok(LineSet(pts))
}

/// Coordinate-wise Frobenius conjugate of a point of PG(n, q^2).
pub fn conjugate_point(tower: &FieldTower, p: &ProjPoint) -> ProjPoint {
    let mut coords = [FieldElem::ZERO; 5];
    for (i, &c) in p.coords().iter().enumerate() {
        coords[i] = tower.frobenius(c);
    }
    // The leading 1 is fixed, so the conjugate is already normalized.
    ProjPoint { coords, dim: p.dim }
}

/// Lifts (c0, c1, c2, c3) in PG(3, q) to (0, c0, c1, c2, c3) in PG(4, q),
/// placing the point on the hyperplane at infinity.
pub fn embed_in_pg4(p: &ProjPoint) -> ProjPoint {
    assert_eq!(p.dim(), 3);
    let mut coords = [FieldElem::ZERO; 5];
    coords[1..5].copy_from_slice(p.coords());
    ProjPoint { coords, dim: 4 }
}

/// Every line of PG(3, q), enumerated once, ordered by the indices of their
/// two least points; plus incidence structures for fast transversal scans.
pub struct AllLines {
    lines: Vec<LineSet>,
    through_point: Vec<Vec<LineId>>,
    id_by_least_pair: HashMap<(PointIdx, PointIdx), LineId>,
    /// meets[l] has bit l2 set iff lines l and l2 share a point (l included).
    meets: Option<Vec<BitVec<u64, Lsb0>>>,
    point_count: u64,
}

/// Meets-matrices above this line count would cost too much memory.
const MEETS_MATRIX_MAX_LINES: usize = 1 << 16;

pub fn all_lines_pg3(t: &PointTable) -> AllLines {
    assert_eq!(t.dim(), 3, "line listing is for PG(3, q)");
    let n = t.len();
    // A line is generated only by its two least points, so each appears once.
    let per_first: Vec<Vec<LineSet>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let a = t.point_at(i);
            let mut out = Vec::new();
            for j in (i + 1)..n {
                let b = t.point_at(j);
                let l = line_through(t, &a, &b).expect("distinct points");
                if l.points()[0] == i && l.points()[1] == j {
                    out.push(l);
                }
            }
            out
        })
        .collect();
    let lines: Vec<LineSet> = per_first.into_iter().flatten().collect();

    let mut through_point: Vec<Vec<LineId>> = vec![Vec::new(); n as usize];
    let mut id_by_least_pair = HashMap::with_capacity(lines.len());
    for (id, l) in lines.iter().enumerate() {
        let id = id as LineId;
        for &p in l.points() {
            through_point[p as usize].push(id);
        }
        id_by_least_pair.insert((l.points()[0], l.points()[1]), id);
    }

    let meets = (lines.len() <= MEETS_MATRIX_MAX_LINES).then(|| {
        (0..lines.len())
            .into_par_iter()
            .map(|id| {
                let mut row = bitvec![u64, Lsb0; 0; lines.len()];
                for &p in lines[id].points() {
                    for &other in &through_point[p as usize] {
                        row.set(other as usize, true);
                    }
                }
                row
            })
            .collect()
    });

    AllLines { lines, through_point, id_by_least_pair, meets, point_count: n }
}

impl AllLines {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn line(&self, id: LineId) -> &LineSet {
        &self.lines[id as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (LineId, &LineSet)> {
        self.lines.iter().enumerate().map(|(i, l)| (i as LineId, l))
    }

    pub fn through_point(&self, p: PointIdx) -> &[LineId] {
        &self.through_point[p as usize]
    }

    pub fn point_count(&self) -> u64 {
        self.point_count
    }

    /// Identifies a line set in this listing by its two least points.
    pub fn id_of(&self, l: &LineSet) -> Option<LineId> {
        let id = *self.id_by_least_pair.get(&(l.points()[0], l.points()[1]))?;
        (self.lines[id as usize] == *l).then_some(id)
    }

    /// Ids of every line sharing a point with line `id` (including itself).
    pub fn meets_mask(&self, id: LineId) -> BitVec<u64, Lsb0> {
        match &self.meets {
            Some(m) => m[id as usize].clone(),
            None => {
                let mut row = bitvec![u64, Lsb0; 0; self.lines.len()];
                for &p in self.lines[id as usize].points() {
                    for &other in &self.through_point[p as usize] {
                        row.set(other as usize, true);
                    }
                }
                row
            }
        }
    }
}
