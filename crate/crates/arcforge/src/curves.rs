//! Plane curves of minimum degree through a point set, and peeling of
//! their linear components.
//!
//! A degree-i curve through all points of a set K exists exactly when the
//! evaluation matrix of the (i+1)(i+2)/2 monomials of degree at most i at
//! the points of K has a nontrivial kernel.  The minimum such i is located
//! by bisection on the matrix rank; a kernel vector converts back to a
//! polynomial, whose linear factors are then divided out by synthetic
//! division, leaving the residual curve.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::gf::{FieldElem, FieldTower};
use crate::projgeom::{PointIdx, PointTable};
use crate::Error;

/// Monomial exponent pairs (a, b) with a + b <= i, ascending in a and then
/// in b.  There are (i+1)(i+2)/2 of them.
pub fn monomials_upto(i: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(((i + 1) * (i + 2) / 2) as usize);
    for a in 0..=i {
        for b in 0..=(i - a) {
            out.push((a, b));
        }
    }
    out
}

fn affine_coords(
    points: &[PointIdx],
    t2: &PointTable,
) -> Result<Vec<(FieldElem, FieldElem)>, Error> {
    points
        .iter()
        .map(|&i| {
            let p = t2.point_at(i);
            if p.coords()[0] != FieldElem::ONE {
                return Err(Error::NonAffinePoint);
            }
            Ok((p.coords()[1], p.coords()[2]))
        })
        .collect()
}

/// Evaluation matrix: one row per point, one column per monomial, entry
/// x^a * y^b at the point (x, y).  Points must be affine plane points.
pub fn eval_matrix(
    points: &[PointIdx],
    monomials: &[(u32, u32)],
    t2: &PointTable,
    tower: &FieldTower,
) -> Result<Vec<Vec<FieldElem>>, Error> {
    let coords = affine_coords(points, t2)?;
    let max_deg = monomials
        .iter()
        .map(|&(a, b)| a.max(b))
        .max()
        .unwrap_or(0) as usize;
    let rows = coords
        .par_iter()
        .map(|&(x, y)| {
            let mut px = vec![FieldElem::ONE; max_deg + 1];
            let mut py = vec![FieldElem::ONE; max_deg + 1];
            for k in 1..=max_deg {
                px[k] = tower.mul(px[k - 1], x);
                py[k] = tower.mul(py[k - 1], y);
            }
            monomials
                .iter()
                .map(|&(a, b)| tower.mul(px[a as usize], py[b as usize]))
                .collect()
        })
        .collect();
    Ok(rows)
}

/// Reduced row echelon form in place; returns the pivot column of each of
/// the leading rows, so the rank is the length of the returned list.
fn rref(m: &mut [Vec<FieldElem>], tower: &FieldTower) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = tower.inv(m[r][c]);
        for j in c..cols {
            m[r][j] = tower.mul(inv, m[r][j]);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c];
            for j in c..cols {
                m[i][j] = FieldElem(m[i][j].0 ^ tower.mul(f, m[r][j]).0);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank of a matrix over the extension field.
pub fn matrix_rank(m: &[Vec<FieldElem>], tower: &FieldTower) -> usize {
    let mut work: Vec<Vec<FieldElem>> = m.to_vec();
    rref(&mut work, tower).len()
}

/// A nonzero kernel vector of the matrix: the reduced echelon solution
/// with the first free column set to one and later free columns to zero.
/// The result is checked against the original matrix before returning.
pub fn nullspace_vector(
    m: &[Vec<FieldElem>],
    tower: &FieldTower,
) -> Result<Vec<FieldElem>, Error> {
    let cols = m.first().map_or(0, Vec::len);
    let mut work: Vec<Vec<FieldElem>> = m.to_vec();
    let pivots = rref(&mut work, tower);
    if pivots.len() == cols {
        return Err(Error::FullRank);
    }
    let free = (0..cols)
        .find(|c| !pivots.contains(c))
        .expect("rank below column count leaves a free column");
    let mut v = vec![FieldElem::ZERO; cols];
    v[free] = FieldElem::ONE;
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = work[row][free];
    }
    for row in m {
        let mut acc = 0u32;
        for (j, &c) in row.iter().enumerate() {
            acc ^= tower.mul(c, v[j]).0;
        }
        assert_eq!(acc, 0, "kernel vector annihilates every row");
    }
    Ok(v)
}

/// Smallest degree i <= max_degree such that some nonzero curve of degree
/// at most i passes through every point of the set, found by bisecting on
/// the rank of the evaluation matrix.  `None` for an empty point set or
/// when every degree up to the cap still has full column rank.
pub fn min_cover_degree(
    points: &[PointIdx],
    t2: &PointTable,
    tower: &FieldTower,
    max_degree: u32,
) -> Result<Option<u32>, Error> {
    if points.is_empty() {
        return Ok(None);
    }
    let n = points.len() as u32;
    let mut auto = 0u32;
    while (auto + 1) * (auto + 2) / 2 <= n {
        auto += 1;
    }
    // At auto there are more monomials than points, so a kernel exists
    // there; a lower cap needs an explicit full-rank probe.
    let hi0 = auto.min(max_degree);
    if hi0 < auto {
        let monos = monomials_upto(hi0);
        let m = eval_matrix(points, &monos, t2, tower)?;
        if matrix_rank(&m, tower) == monos.len() {
            return Ok(None);
        }
    }
    let mut lo = 0u32;
    let mut hi = hi0;
    while lo < hi {
        let c = (lo + hi) / 2;
        let monos = monomials_upto(c);
        let m = eval_matrix(points, &monos, t2, tower)?;
        if matrix_rank(&m, tower) == monos.len() {
            lo = c + 1;
        } else {
            hi = c;
        }
    }
    Ok(Some(lo))
}

/// Bivariate polynomial over the extension field, as a sparse exponent
/// map (x-degree, y-degree) -> coefficient with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), FieldElem>,
}

impl BivariatePoly {
    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), FieldElem)>) -> Self {
        let mut terms: BTreeMap<(u32, u32), FieldElem> = BTreeMap::new();
        for (e, c) in it {
            let entry = terms.entry(e).or_insert(FieldElem::ZERO);
            *entry = FieldElem(entry.0 ^ c.0);
        }
        terms.retain(|_, c| !c.is_zero());
        BivariatePoly { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([((0, 0), FieldElem::ONE)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &FieldElem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn coeff(&self, a: u32, b: u32) -> FieldElem {
        self.terms.get(&(a, b)).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn eval(&self, tower: &FieldTower, x: FieldElem, y: FieldElem) -> FieldElem {
        let mut acc = 0u32;
        for (&(a, b), &c) in &self.terms {
            let t = tower.mul(c, tower.mul(tower.pow(x, a as u64), tower.pow(y, b as u64)));
            acc ^= t.0;
        }
        FieldElem(acc)
    }

    pub fn mul(&self, other: &BivariatePoly, tower: &FieldTower) -> BivariatePoly {
        let mut terms: BTreeMap<(u32, u32), FieldElem> = BTreeMap::new();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &other.terms {
                let e = (a1 + a2, b1 + b2);
                let c = tower.mul(c1, c2);
                let entry = terms.entry(e).or_insert(FieldElem::ZERO);
                *entry = FieldElem(entry.0 ^ c.0);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivariatePoly { terms }
    }
}

impl fmt::Display for BivariatePoly {
    /// Terms in descending graded lexicographic order; coefficients print
    /// as field encodings.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (std::cmp::Reverse(a + b), std::cmp::Reverse(a)));
        let mut first = true;
        for (a, b) in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.terms[&(a, b)];
            let mut parts: Vec<String> = Vec::new();
            if c != FieldElem::ONE || (a == 0 && b == 0) {
                parts.push(format!("{}", c.0));
            }
            match a {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{b}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Kernel vector to polynomial, pairing coefficients with monomials.
pub fn vector_to_poly(
    v: &[FieldElem],
    monomials: &[(u32, u32)],
) -> Result<BivariatePoly, Error> {
    if v.len() != monomials.len() {
        return Err(Error::LengthMismatch { expected: monomials.len(), got: v.len() });
    }
    let poly = BivariatePoly::from_terms(
        monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(a, b), &c)| ((a, b), c)),
    );
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly)
}

/// Affine zeros of a curve: plane points (1, x, y) with f(x, y) = 0, as
/// sorted indices, along with how many fall in a sorted reference set.
pub fn curve_points(
    f: &BivariatePoly,
    t2: &PointTable,
    tower: &FieldTower,
    reference: &[PointIdx],
) -> Result<(Vec<PointIdx>, usize), Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = f.degree() as usize;
    let elems: Vec<FieldElem> = tower.ext_elems().collect();
    // Power tables: pows[e][k] = elems[e]^k.
    let pows: Vec<Vec<FieldElem>> = elems
        .iter()
        .map(|&e| {
            let mut row = vec![FieldElem::ONE; deg + 1];
            for k in 1..=deg {
                row[k] = tower.mul(row[k - 1], e);
            }
            row
        })
        .collect();
    let terms: Vec<((u32, u32), FieldElem)> =
        f.terms().map(|(&e, &c)| (e, c)).collect();
    let mut zeros: Vec<PointIdx> = Vec::new();
    for (xi, _) in elems.iter().enumerate() {
        for (yi, _) in elems.iter().enumerate() {
            let mut acc = 0u32;
            for &((a, b), c) in &terms {
                acc ^= tower
                    .mul(c, tower.mul(pows[xi][a as usize], pows[yi][b as usize]))
                    .0;
            }
            if acc == 0 {
                let p = crate::projgeom::ProjPoint::from_normalized(&[
                    FieldElem::ONE,
                    elems[xi],
                    elems[yi],
                ]);
                zeros.push(t2.index_of(&p));
            }
        }
    }
    zeros.sort_unstable();
    let hits = zeros
        .iter()
        .filter(|z| reference.binary_search(z).is_ok())
        .count();
    Ok((zeros, hits))
}

/// A monic linear polynomial over the extension field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LinearFactor {
    /// y + a*x + b
    YForm { a: FieldElem, b: FieldElem },
    /// x + c
    XForm { c: FieldElem },
}

impl LinearFactor {
    pub fn to_poly(self) -> BivariatePoly {
        match self {
            LinearFactor::YForm { a, b } => BivariatePoly::from_terms([
                ((0, 1), FieldElem::ONE),
                ((1, 0), a),
                ((0, 0), b),
            ]),
            LinearFactor::XForm { c } => {
                BivariatePoly::from_terms([((1, 0), FieldElem::ONE), ((0, 0), c)])
            }
        }
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// f as polynomials in y: slot k holds the x-coefficient vector of y^k.
fn as_y_polys(f: &BivariatePoly) -> Vec<Vec<FieldElem>> {
    let dy = f.terms().map(|(&(_, b), _)| b).max().unwrap_or(0) as usize;
    let dx = f.terms().map(|(&(a, _), _)| a).max().unwrap_or(0) as usize;
    let mut out = vec![vec![FieldElem::ZERO; dx + 1]; dy + 1];
    for (&(a, b), &c) in f.terms() {
        out[b as usize][a as usize] = c;
    }
    out
}

fn poly_mul(u: &[FieldElem], v: &[FieldElem], tower: &FieldTower) -> Vec<FieldElem> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElem::ZERO; u.len() + v.len() - 1];
    for (i, &a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in v.iter().enumerate() {
            out[i + j] = FieldElem(out[i + j].0 ^ tower.mul(a, b).0);
        }
    }
    out
}

fn poly_add(u: &[FieldElem], v: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = vec![FieldElem::ZERO; u.len().max(v.len())];
    for (i, &a) in u.iter().enumerate() {
        out[i] = a;
    }
    for (i, &b) in v.iter().enumerate() {
        out[i] = FieldElem(out[i].0 ^ b.0);
    }
    out
}

fn poly_is_zero(u: &[FieldElem]) -> bool {
    u.iter().all(|c| c.is_zero())
}

/// Exact division of f by the linear factor, by synthetic division in y
/// (for y + a*x + b, with root y = a*x + b) or in x (for x + c).
/// `None` when the factor does not divide f.
fn divide_linear(
    f: &BivariatePoly,
    factor: LinearFactor,
    tower: &FieldTower,
) -> Option<BivariatePoly> {
    let swap_xy = matches!(factor, LinearFactor::XForm { .. });
    let g = if swap_xy {
        BivariatePoly::from_terms(f.terms().map(|(&(a, b), &c)| ((b, a), c)))
    } else {
        f.clone()
    };
    let root: Vec<FieldElem> = match factor {
        LinearFactor::YForm { a, b } => vec![b, a],
        LinearFactor::XForm { c } => vec![c],
    };
    let coeffs = as_y_polys(&g);
    let n = coeffs.len() - 1;
    if n == 0 {
        return None;
    }
    // Synthetic division by (y - root): q_{k-1} = c_k + q_k * root,
    // working down from q_{n-1} = c_n; the final carry is the remainder.
    let mut quotient: Vec<Vec<FieldElem>> = vec![Vec::new(); n];
    let mut carry = coeffs[n].clone();
    quotient[n - 1] = carry.clone();
    for k in (0..n).rev() {
        carry = poly_add(&poly_mul(&carry, &root, tower), &coeffs[k]);
        if k > 0 {
            quotient[k - 1] = carry.clone();
        }
    }
    if !poly_is_zero(&carry) {
        return None;
    }
    let q = BivariatePoly::from_terms(quotient.iter().enumerate().flat_map(|(b, cs)| {
        cs.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(a, &c)| ((a as u32, b as u32), c))
    }));
    Some(if swap_xy {
        BivariatePoly::from_terms(q.terms().map(|(&(a, b), &c)| ((b, a), c)))
    } else {
        q
    })
}

/// All monic linear factors of f, with multiplicity, and the residual
/// curve left after dividing them out.
///
/// Candidates run through y + a*x + b, a then b ascending by encoding,
/// followed by x + c with c ascending; each is divided out as often as it
/// divides.  The product of the returned factors times the residual is
/// checked to rebuild f exactly.
pub fn extract_linear_factors(
    f: &BivariatePoly,
    tower: &FieldTower,
) -> Result<(Vec<LinearFactor>, BivariatePoly), Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let elems: Vec<FieldElem> = tower.ext_elems().collect();
    let mut candidates: Vec<LinearFactor> = Vec::new();
    for &a in &elems {
        for &b in &elems {
            candidates.push(LinearFactor::YForm { a, b });
        }
    }
    for &c in &elems {
        candidates.push(LinearFactor::XForm { c });
    }

    // Factors of any residual divide f as well, so one parallel pass over
    // f shortlists every candidate the peel below can ever need.
    let shortlist: Vec<LinearFactor> = candidates
        .par_iter()
        .copied()
        .filter(|&cand| divide_linear(f, cand, tower).is_some())
        .collect();

    let mut factors: Vec<LinearFactor> = Vec::new();
    let mut residual = f.clone();
    for cand in shortlist {
        while let Some(q) = divide_linear(&residual, cand, tower) {
            factors.push(cand);
            residual = q;
        }
    }
    let rebuilt = factors
        .iter()
        .fold(residual.clone(), |acc, fac| acc.mul(&fac.to_poly(), tower));
    assert_eq!(&rebuilt, f, "factorization rebuilds the input");
    Ok((factors, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::gf::FieldTower;

    fn fe(x: u32) -> FieldElem {
        FieldElem(x)
    }

    /// Independent minimum-degree search: try each degree from zero up and
    /// return the first whose evaluation matrix has dependent columns,
    /// deciding dependence by a plain elimination written separately from
    /// the production path.
    fn min_degree_oracle(
        points: &[PointIdx],
        t2: &PointTable,
        tower: &FieldTower,
    ) -> Option<u32> {
        if points.is_empty() {
            return None;
        }
        for i in 0.. {
            let monos = monomials_upto(i);
            let m = eval_matrix(points, &monos, t2, tower).unwrap();
            let mut work = m;
            let mut rank = 0;
            for col in 0..monos.len() {
                if let Some(r) = (rank..work.len()).find(|&r| !work[r][col].is_zero()) {
                    work.swap(rank, r);
                    let inv = tower.inv(work[rank][col]);
                    let top: Vec<FieldElem> =
                        work[rank].iter().map(|&c| tower.mul(inv, c)).collect();
                    for row in work.iter_mut().skip(rank + 1) {
                        let f = row[col];
                        if f.is_zero() {
                            continue;
                        }
                        for (j, t) in top.iter().enumerate() {
                            row[j] = FieldElem(row[j].0 ^ tower.mul(f, *t).0);
                        }
                    }
                    work[rank] = top;
                    rank += 1;
                }
            }
            if rank < monos.len() {
                return Some(i);
            }
        }
        unreachable!()
    }

    #[test]
    fn monomial_lists_are_lexicographic_and_counted() {
        assert_eq!(
            monomials_upto(2),
            vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
        );
        for i in 0..25 {
            assert_eq!(monomials_upto(i).len() as u32, (i + 1) * (i + 2) / 2);
        }
    }

    #[test]
    fn rank_and_nullspace_on_small_matrices() {
        let tw = FieldTower::new(2).unwrap();
        // Third column is the sum of the first two.
        let m = vec![
            vec![fe(1), fe(0), fe(1)],
            vec![fe(0), fe(1), fe(1)],
        ];
        assert_eq!(matrix_rank(&m, &tw), 2);
        let v = nullspace_vector(&m, &tw).unwrap();
        assert_eq!(v, vec![fe(1), fe(1), fe(1)]);

        let id = vec![vec![fe(1), fe(0)], vec![fe(0), fe(1)]];
        assert_eq!(matrix_rank(&id, &tw), 2);
        assert!(matches!(nullspace_vector(&id, &tw), Err(Error::FullRank)));

        // A scaled dependent pair over the extension field.
        let g = fe(5);
        let m2 = vec![vec![g, tw.mul(g, g)]];
        let v2 = nullspace_vector(&m2, &tw).unwrap();
        let lhs = FieldElem(tw.mul(m2[0][0], v2[0]).0 ^ tw.mul(m2[0][1], v2[1]).0);
        assert!(lhs.is_zero());
    }

    #[test]
    fn min_degree_matches_oracle_on_random_sets() {
        let tw = FieldTower::new(2).unwrap();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        let q2 = 16u64;
        let mut rng = ChaCha8Rng::seed_from_u64(0x41524346);
        for trial in 0..24 {
            let n = 1 + (trial % 12);
            let mut pts: Vec<PointIdx> = (0..n)
                .map(|_| {
                    let x = rng.gen_range(0..q2) as u32;
                    let y = rng.gen_range(0..q2) as u32;
                    t2.index_of(&crate::projgeom::ProjPoint::from_normalized(&[
                        FieldElem::ONE,
                        fe(x),
                        fe(y),
                    ]))
                })
                .collect();
            pts.sort_unstable();
            pts.dedup();
            let got = min_cover_degree(&pts, &t2, &tw, 16).unwrap();
            assert_eq!(got, min_degree_oracle(&pts, &t2, &tw));
        }
        assert_eq!(min_cover_degree(&[], &t2, &tw, 16).unwrap(), None);
    }

    #[test]
    fn min_degree_of_special_configurations() {
        let tw = FieldTower::new(2).unwrap();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        let affine = |x: u32, y: u32| {
            t2.index_of(&crate::projgeom::ProjPoint::from_normalized(&[
                FieldElem::ONE,
                fe(x),
                fe(y),
            ]))
        };
        // One point: a line suffices, a nonzero constant cannot vanish.
        assert_eq!(min_cover_degree(&[affine(3, 7)], &t2, &tw, 16).unwrap(), Some(1));
        // All 16 points of the affine line y = 0 still lie on one line.
        let mut row: Vec<PointIdx> = (0..16).map(|x| affine(x, 0)).collect();
        row.sort_unstable();
        assert_eq!(min_cover_degree(&row, &t2, &tw, 16).unwrap(), Some(1));
        // A 2x2 grid forces degree 2.
        let mut grid: Vec<PointIdx> =
            vec![affine(0, 0), affine(0, 1), affine(1, 0), affine(1, 1)];
        grid.sort_unstable();
        assert_eq!(min_cover_degree(&grid, &t2, &tw, 16).unwrap(), Some(2));
        // A cap below the answer reports not-found.
        assert_eq!(min_cover_degree(&grid, &t2, &tw, 1).unwrap(), None);
        // The full affine plane needs x^16 + x type vanishing: degree 16.
        let mut all: Vec<PointIdx> = (0..16u32)
            .flat_map(|x| (0..16u32).map(move |y| affine(x, y)))
            .collect();
        all.sort_unstable();
        assert_eq!(min_cover_degree(&all, &t2, &tw, 16).unwrap(), Some(16));
    }

    #[test]
    fn kernel_vector_round_trips_to_a_vanishing_curve() {
        let tw = FieldTower::new(2).unwrap();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        let mut pts: Vec<PointIdx> = [(0u32, 0u32), (1, 2), (2, 4), (3, 6), (7, 7)]
            .iter()
            .map(|&(x, y)| {
                t2.index_of(&crate::projgeom::ProjPoint::from_normalized(&[
                    FieldElem::ONE,
                    fe(x),
                    fe(y),
                ]))
            })
            .collect();
        pts.sort_unstable();
        let d = min_cover_degree(&pts, &t2, &tw, 16).unwrap().unwrap();
        let monos = monomials_upto(d);
        let m = eval_matrix(&pts, &monos, &t2, &tw).unwrap();
        let v = nullspace_vector(&m, &tw).unwrap();
        let poly = vector_to_poly(&v, &monos).unwrap();
        let (_, hits) = curve_points(&poly, &t2, &tw, &pts).unwrap();
        assert_eq!(hits, pts.len());
    }

    #[test]
    fn vector_to_poly_validates_input() {
        let monos = monomials_upto(1);
        assert!(matches!(
            vector_to_poly(&[fe(1)], &monos),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        ));
        assert!(matches!(
            vector_to_poly(&[fe(0), fe(0), fe(0)], &monos),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn curve_points_of_a_coordinate_axis() {
        let tw = FieldTower::new(2).unwrap();
        let t2 = PointTable::new_unmaterialized(2, tw.ext());
        // Zeros of y: the 16 points (1, x, 0).
        let f = LinearFactor::YForm { a: fe(0), b: fe(0) }.to_poly();
        let (zeros, hits) = curve_points(&f, &t2, &tw, &[]).unwrap();
        assert_eq!(zeros.len(), 16);
        assert_eq!(hits, 0);
        for &z in &zeros {
            let p = t2.point_at(z);
            assert_eq!(p.coords()[2], FieldElem::ZERO);
        }
        assert!(matches!(
            curve_points(&BivariatePoly::zero(), &t2, &tw, &[]),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn display_is_graded_descending() {
        let f = BivariatePoly::from_terms([
            ((0, 0), fe(1)),
            ((1, 1), fe(1)),
            ((2, 0), fe(3)),
            ((0, 1), fe(1)),
        ]);
        assert_eq!(format!("{f}"), "3*x^2 + x*y + y + 1");
    }

    #[test]
    fn linear_factors_are_peeled_with_multiplicity() {
        let tw = FieldTower::new(2).unwrap();
        // Residual with no linear factor: x*y + 1.
        let core = BivariatePoly::from_terms([((1, 1), fe(1)), ((0, 0), fe(1))]);
        let fac1 = LinearFactor::YForm { a: fe(0), b: fe(0) };
        let fac2 = LinearFactor::YForm { a: fe(1), b: fe(0) };
        let fac3 = LinearFactor::XForm { c: fe(9) };
        let f = core
            .mul(&fac1.to_poly(), &tw)
            .mul(&fac2.to_poly(), &tw)
            .mul(&fac2.to_poly(), &tw)
            .mul(&fac3.to_poly(), &tw);
        let (factors, residual) = extract_linear_factors(&f, &tw).unwrap();
        assert_eq!(factors, vec![fac1, fac2, fac2, fac3]);
        assert_eq!(residual, core);

        // A polynomial with no linear factors comes back whole.
        let (none, same) = extract_linear_factors(&core, &tw).unwrap();
        assert!(none.is_empty());
        assert_eq!(same, core);

        // Scalars have no factors either; zero is rejected.
        let (none, c) = extract_linear_factors(&BivariatePoly::one(), &tw).unwrap();
        assert!(none.is_empty());
        assert_eq!(c, BivariatePoly::one());
        assert!(extract_linear_factors(&BivariatePoly::zero(), &tw).is_err());
    }
}
