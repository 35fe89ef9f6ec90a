//! Arithmetic in GF(2^m) and its quadratic extension GF(2^(2m)).
//!
//! The base field GF(q), q = 2^m, is represented in a polynomial basis over
//! GF(2) with a fixed irreducible defining polynomial per degree.  The
//! extension GF(q^2) is built as a relative degree-2 extension
//! GF(q)[w]/(w^2 + w + nu), with nu the trace-1 element of least encoding.
//! An element a + b*w is encoded as the bit-string of a in the low m bits
//! and b in the high m bits, so every base-field element doubles as an
//! extension element with zero w-part, and Frobenius x -> x^q is the
//! coordinate swap (a, b) -> (a + b, b).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Largest supported base-field degree over GF(2).
pub const MAX_M: u32 = 16;

/// Extension log/antilog tables are built while 2m stays at or below this.
const EXT_TABLE_MAX_BITS: u32 = 20;

/// Element of GF(2^m) or GF(2^(2m)): the little-endian coefficient
/// bit-string of its polynomial-basis representation, read as an integer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which of the two fields of a tower an operation runs in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSide {
    Base,
    Ext,
}

/// Fixed defining polynomials for GF(2^m), m = 1..=16, bit-encoded with the
/// leading term included.  All entries are primitive; the constructor
/// re-verifies irreducibility by trial division before use.
const BASE_POLYS: [u32; 17] = [
    0,
    0b11,                  // x + 1
    0b111,                 // x^2 + x + 1
    0b1011,                // x^3 + x + 1
    0b1_0011,              // x^4 + x + 1
    0b10_0101,             // x^5 + x^2 + 1
    0b100_0011,            // x^6 + x + 1
    0b1000_0011,           // x^7 + x + 1
    0b1_0001_1101,         // x^8 + x^4 + x^3 + x^2 + 1
    0b10_0001_0001,        // x^9 + x^4 + 1
    0b100_0000_1001,       // x^10 + x^3 + 1
    0b1000_0000_0101,      // x^11 + x^2 + 1
    0b1_0000_0101_0011,    // x^12 + x^6 + x^4 + x + 1
    0b10_0000_0001_1011,   // x^13 + x^4 + x^3 + x + 1
    0b100_0100_0100_0011,  // x^14 + x^10 + x^6 + x + 1
    0b1000_0000_0000_0011, // x^15 + x + 1
    0b1_0001_0000_0000_1011, // x^16 + x^12 + x^3 + x + 1
];

/// GF(q) together with its quadratic extension GF(q^2), q = 2^m.
///
/// Multiplication and inversion run through precomputed log/antilog tables:
/// always for the base field, and for the extension as long as the combined
/// degree stays small enough to index densely.  Beyond that the extension
/// falls back to coordinate formulas over the base tables.
pub struct FieldTower {
    m: u32,
    q: u32,
    qq: u64,
    base_poly: u32,
    nu: FieldElem,
    base_log: Vec<u32>,
    base_exp: Vec<u32>,
    ext_log: Option<Vec<u32>>,
    ext_exp: Option<Vec<u32>>,
}

/// Serializable description of a tower: base polynomial bits plus the
/// relative extension polynomial w^2 + w + nu as its coefficient list.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FieldParams {
    pub m: u32,
    pub base_poly: u32,
    /// Coefficients of the extension polynomial in (w^0, w^1, w^2) order.
    pub ext_poly: [u32; 3],
}

pub fn build_field_tower(m: u32) -> Result<FieldTower, Error> {
    FieldTower::new(m)
}

impl FieldTower {
    pub fn new(m: u32) -> Result<Self, Error> {
        if m < 1 || m > MAX_M {
            return Err(Error::FieldRange { m });
        }
        let base_poly = BASE_POLYS[m as usize];
        if !gf2_poly_irreducible(base_poly as u64, m) {
            return Err(Error::Internal(format!(
                "defining polynomial {base_poly:#b} for m={m} is not irreducible"
            )));
        }
        let q = 1u32 << m;
        let (base_exp, base_log) = build_base_tables(base_poly, m)?;

        let mut tower = FieldTower {
            m,
            q,
            qq: (q as u64) * (q as u64),
            base_poly,
            nu: FieldElem::ZERO,
            base_log,
            base_exp,
            ext_log: None,
            ext_exp: None,
        };

        // nu: the least-encoding element of GF(q) with absolute trace 1.
        // w^2 + w + nu is then irreducible over GF(q).
        let nu = (0..q)
            .map(FieldElem)
            .find(|&x| tower.trace_base(x) == FieldElem::ONE)
            .ok_or_else(|| Error::Internal("no trace-1 element found".into()))?;
        tower.nu = nu;

        if 2 * m <= EXT_TABLE_MAX_BITS {
            let (exp, log) = tower.build_ext_tables()?;
            tower.ext_exp = Some(exp);
            tower.ext_log = Some(log);
        }
        Ok(tower)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Base field order q = 2^m.
    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Extension field order q^2.
    pub fn q_sq(&self) -> u64 {
        self.qq
    }

    pub fn base_poly(&self) -> u32 {
        self.base_poly
    }

    pub fn nu(&self) -> FieldElem {
        self.nu
    }

    pub fn params(&self) -> FieldParams {
        FieldParams {
            m: self.m,
            base_poly: self.base_poly,
            ext_poly: [self.nu.0, 1, 1],
        }
    }

    /// Addition; the same XOR in both fields.
    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul_base(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let idx = self.base_log[a.0 as usize] + self.base_log[b.0 as usize];
        FieldElem(self.base_exp[idx as usize])
    }

    /// Multiplicative inverse in GF(q).  Panics on zero.
    #[inline]
    pub fn inv_base(&self, a: FieldElem) -> FieldElem {
        assert!(a.0 != 0, "inverse of zero");
        debug_assert!(a.0 < self.q);
        let e = (self.q - 1) - self.base_log[a.0 as usize];
        FieldElem(self.base_exp[e as usize])
    }

    /// Multiplication in GF(q^2) (valid on base elements too).
    #[inline]
    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        if let Some(log) = &self.ext_log {
            if x.0 == 0 || y.0 == 0 {
                return FieldElem::ZERO;
            }
            let exp = self.ext_exp.as_ref().unwrap();
            let idx = log[x.0 as usize] as u64 + log[y.0 as usize] as u64;
            return FieldElem(exp[idx as usize]);
        }
        self.mul_ext_formula(x, y)
    }

    /// (a + bw)(c + dw) = (ac + nu*bd) + (ad + bc + bd) w, using w^2 = w + nu.
    fn mul_ext_formula(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        let bd = self.mul_base(b, d);
        let lo = self.mul_base(a, c).0 ^ self.mul_base(self.nu, bd).0;
        let hi = self.mul_base(a, d).0 ^ self.mul_base(b, c).0 ^ bd.0;
        self.lift(FieldElem(lo), FieldElem(hi))
    }

    /// Multiplicative inverse in GF(q^2).  Panics on zero.
    #[inline]
    pub fn inv(&self, x: FieldElem) -> FieldElem {
        assert!(x.0 != 0, "inverse of zero");
        if let Some(log) = &self.ext_log {
            let order = (self.qq - 1) as u32;
            let e = order - log[x.0 as usize];
            return FieldElem(self.ext_exp.as_ref().unwrap()[e as usize]);
        }
        // x^q / N(x): the conjugate divided by the (base-field) norm.
        let xq = self.frobenius(x);
        let n_inv = self.inv_base(self.norm(x));
        let (u, v) = self.split(xq);
        self.lift(self.mul_base(n_inv, u), self.mul_base(n_inv, v))
    }

    /// x^e by binary exponentiation, in GF(q^2).
    pub fn pow(&self, x: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        let mut acc = FieldElem::ONE;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The field automorphism x -> x^q of GF(q^2): a + bw -> (a + b) + bw.
    #[inline]
    pub fn frobenius(&self, x: FieldElem) -> FieldElem {
        let (a, b) = self.split(x);
        self.lift(FieldElem(a.0 ^ b.0), b)
    }

    /// The norm x -> x^(q+1) into GF(q): a^2 + ab + nu b^2.
    #[inline]
    pub fn norm(&self, x: FieldElem) -> FieldElem {
        let (a, b) = self.split(x);
        let aa = self.mul_base(a, a);
        let ab = self.mul_base(a, b);
        let bb = self.mul_base(b, b);
        FieldElem(aa.0 ^ ab.0 ^ self.mul_base(self.nu, bb).0)
    }

    /// Coordinates (a, b) of x = a + bw over the base field.
    #[inline]
    pub fn split(&self, x: FieldElem) -> (FieldElem, FieldElem) {
        (FieldElem(x.0 & (self.q - 1)), FieldElem(x.0 >> self.m))
    }

    /// Inverse of `split`.
    #[inline]
    pub fn lift(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        FieldElem(a.0 | (b.0 << self.m))
    }

    /// Whether x lies in the base subfield (zero w-part).
    #[inline]
    pub fn in_base(&self, x: FieldElem) -> bool {
        x.0 >> self.m == 0
    }

    /// Absolute trace GF(q) -> GF(2), returned as 0 or 1.
    pub fn trace_base(&self, x: FieldElem) -> FieldElem {
        let mut acc = x;
        let mut t = x;
        for _ in 1..self.m {
            t = self.mul_base(t, t);
            acc = FieldElem(acc.0 ^ t.0);
        }
        debug_assert!(acc.0 <= 1);
        acc
    }

    pub fn base_elems(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(FieldElem)
    }

    pub fn ext_elems(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.qq).map(|x| FieldElem(x as u32))
    }

    pub fn base(&self) -> FieldView<'_> {
        FieldView { tower: self, side: FieldSide::Base }
    }

    pub fn ext(&self) -> FieldView<'_> {
        FieldView { tower: self, side: FieldSide::Ext }
    }

    fn build_ext_tables(&self) -> Result<(Vec<u32>, Vec<u32>), Error> {
        let order = self.qq - 1;
        let primes = distinct_prime_factors(order);
        let g = (2..self.qq)
            .map(|x| FieldElem(x as u32))
            .find(|&g| {
                primes
                    .iter()
                    .all(|&p| self.pow_formula(g, order / p) != FieldElem::ONE)
            })
            .ok_or_else(|| Error::Internal("no generator of the extension field".into()))?;

        let n = order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.qq as usize];
        let mut x = FieldElem::ONE;
        for i in 0..n {
            exp[i] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_ext_formula(x, g);
        }
        if x != FieldElem::ONE {
            return Err(Error::Internal("extension generator has wrong order".into()));
        }
        for i in 0..n {
            exp[n + i] = exp[i];
        }
        Ok((exp, log))
    }

    /// pow that never consults the extension tables (used while building them).
    fn pow_formula(&self, x: FieldElem, e: u64) -> FieldElem {
        let mut acc = FieldElem::ONE;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_ext_formula(acc, base);
            }
            base = self.mul_ext_formula(base, base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldTower {{ m: {}, q: {}, base_poly: {:#b}, nu: {} }}",
            self.m, self.q, self.base_poly, self.nu
        )
    }
}

/// A view of one side of a tower, so geometry code can run over either
/// field through a single interface.
#[derive(Clone, Copy)]
pub struct FieldView<'a> {
    tower: &'a FieldTower,
    side: FieldSide,
}

impl<'a> FieldView<'a> {
    pub fn tower(&self) -> &'a FieldTower {
        self.tower
    }

    pub fn side(&self) -> FieldSide {
        self.side
    }

    pub fn order(&self) -> u64 {
        match self.side {
            FieldSide::Base => self.tower.q(),
            FieldSide::Ext => self.tower.q_sq(),
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match self.side {
            FieldSide::Base => self.tower.mul_base(a, b),
            FieldSide::Ext => self.tower.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        match self.side {
            FieldSide::Base => self.tower.inv_base(a),
            FieldSide::Ext => self.tower.inv(a),
        }
    }

    pub fn contains(&self, x: FieldElem) -> bool {
        (x.0 as u64) < self.order()
    }

    pub fn elems(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order()).map(|x| FieldElem(x as u32))
    }
}

fn build_base_tables(poly: u32, m: u32) -> Result<(Vec<u32>, Vec<u32>), Error> {
    let q = 1u32 << m;
    if m == 1 {
        // GF(2): the unit group is trivial.
        return Ok((vec![1, 1], vec![0, 0]));
    }
    let n = (q - 1) as usize;
    'candidates: for g in 2..q {
        let mut exp = vec![0u32; 2 * n];
        let mut x = 1u32;
        for i in 0..n {
            if x == 1 && i > 0 {
                // g returned to 1 after i < q-1 steps: a proper divisor order.
                continue 'candidates;
            }
            exp[i] = x;
            x = gf2_mul_mod(x, g, poly, m);
        }
        // g has order q-1 iff the cycle closes exactly now.
        if x != 1 {
            continue 'candidates;
        }
        let mut log = vec![0u32; q as usize];
        for i in 0..n {
            log[exp[i] as usize] = i as u32;
        }
        for i in 0..n {
            exp[n + i] = exp[i];
        }
        return Ok((exp, log));
    }
    Err(Error::Internal(format!("no generator found for m={m}")))
}

/// Carry-less multiply modulo an irreducible polynomial of degree m.
fn gf2_mul_mod(a: u32, b: u32, poly: u32, m: u32) -> u32 {
    let mut acc: u64 = 0;
    let a = a as u64;
    let mut b = b as u64;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    let poly = poly as u64;
    let mut bit = 2 * m as i32 - 2;
    while bit >= m as i32 {
        if acc >> bit & 1 == 1 {
            acc ^= poly << (bit - m as i32);
        }
        bit -= 1;
    }
    acc as u32
}

fn gf2_poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn gf2_poly_rem(mut a: u64, b: u64) -> u64 {
    let db = gf2_poly_degree(b);
    while a != 0 && gf2_poly_degree(a) >= db {
        a ^= b << (gf2_poly_degree(a) - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree up to m/2.
fn gf2_poly_irreducible(p: u64, m: u32) -> bool {
    if m == 1 {
        return true;
    }
    let half = m / 2;
    for d in 2u64..(1u64 << (half + 1)) {
        if gf2_poly_rem(p, d) == 0 {
            return false;
        }
    }
    true
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(m: u32) -> FieldTower {
        FieldTower::new(m).unwrap()
    }

    #[test]
    fn rejects_out_of_range_degrees() {
        assert!(matches!(FieldTower::new(0), Err(Error::FieldRange { m: 0 })));
        assert!(matches!(FieldTower::new(17), Err(Error::FieldRange { m: 17 })));
    }

    #[test]
    fn all_supported_towers_build() {
        for m in 1..=MAX_M {
            let tw = t(m);
            assert_eq!(tw.q(), 1u64 << m);
            assert_eq!(tw.q_sq(), 1u64 << (2 * m));
            assert_eq!(tw.trace_base(tw.nu()), FieldElem::ONE);
            // nu is the least trace-1 encoding.
            for x in 0..tw.nu().0 {
                assert_eq!(tw.trace_base(FieldElem(x)), FieldElem::ZERO);
            }
        }
    }

    #[test]
    fn m3_gives_gf8_and_gf64() {
        let tw = t(3);
        assert_eq!(tw.q(), 8);
        assert_eq!(tw.q_sq(), 64);
        assert_eq!(tw.base_poly(), 0b1011);
    }

    #[test]
    fn m2_gives_gf4_and_gf16() {
        let tw = t(2);
        assert_eq!(tw.q(), 4);
        assert_eq!(tw.q_sq(), 16);
        // Trace over GF(4): 0 and 1 have trace 0, so nu is the generator z.
        assert_eq!(tw.nu(), FieldElem(2));
    }

    #[test]
    fn every_nonzero_gf64_element_has_an_inverse() {
        let tw = t(3);
        for x in tw.ext_elems().skip(1) {
            assert_eq!(tw.mul(x, tw.inv(x)), FieldElem::ONE, "x={x}");
        }
    }

    #[test]
    fn extension_formula_matches_tables() {
        let tw = t(3);
        for x in tw.ext_elems() {
            for y in tw.ext_elems() {
                assert_eq!(tw.mul(x, y), tw.mul_ext_formula(x, y));
            }
        }
    }

    #[test]
    fn field_axioms_hold_exhaustively_in_gf16() {
        let tw = t(2);
        let elems: Vec<_> = tw.ext_elems().collect();
        for &x in &elems {
            assert_eq!(tw.mul(x, FieldElem::ONE), x);
            assert_eq!(tw.add(x, FieldElem::ZERO), x);
            assert_eq!(tw.add(x, x), FieldElem::ZERO);
            for &y in &elems {
                assert_eq!(tw.mul(x, y), tw.mul(y, x));
                for &z in &elems {
                    assert_eq!(tw.mul(x, tw.mul(y, z)), tw.mul(tw.mul(x, y), z));
                    assert_eq!(
                        tw.mul(x, tw.add(y, z)),
                        tw.add(tw.mul(x, y), tw.mul(x, z))
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_is_the_q_power_map() {
        let tw = t(3);
        for x in tw.ext_elems() {
            assert_eq!(tw.frobenius(x), tw.pow(x, 8), "x={x}");
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_base_field() {
        let tw = t(3);
        for x in tw.ext_elems() {
            let fixed = tw.frobenius(x) == x;
            assert_eq!(fixed, tw.in_base(x), "x={x}");
            // An involution on the extension.
            assert_eq!(tw.frobenius(tw.frobenius(x)), x);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        let tw = t(3);
        for x in tw.ext_elems() {
            for y in tw.ext_elems() {
                assert_eq!(
                    tw.frobenius(tw.mul(x, y)),
                    tw.mul(tw.frobenius(x), tw.frobenius(y))
                );
                assert_eq!(
                    tw.frobenius(tw.add(x, y)),
                    tw.add(tw.frobenius(x), tw.frobenius(y))
                );
            }
        }
    }

    #[test]
    fn norm_lands_in_base_with_uniform_fibers() {
        let tw = t(3);
        assert_eq!(tw.norm(FieldElem::ZERO), FieldElem::ZERO);
        assert_eq!(tw.norm(FieldElem::ONE), FieldElem::ONE);
        let mut fiber = vec![0u32; 8];
        for x in tw.ext_elems() {
            let n = tw.norm(x);
            assert!(tw.in_base(n));
            assert_eq!(n, tw.pow(x, 9), "norm is x^(q+1)");
            fiber[n.0 as usize] += 1;
        }
        assert_eq!(fiber[0], 1);
        // The norm is surjective onto GF(q)* with fibers of size q+1.
        for &count in &fiber[1..] {
            assert_eq!(count, 9);
        }
    }

    #[test]
    fn split_and_lift_roundtrip() {
        let tw = t(3);
        for x in tw.ext_elems() {
            let (a, b) = tw.split(x);
            assert!(a.0 < 8 && b.0 < 8);
            assert_eq!(tw.lift(a, b), x);
            // a + bw rebuilt through field arithmetic.
            let w = FieldElem(1 << 3);
            assert_eq!(tw.add(a, tw.mul(b, w)), x);
        }
    }

    #[test]
    fn base_elements_embed_with_zero_w_part() {
        let tw = t(3);
        for a in tw.base_elems() {
            assert!(tw.in_base(a));
            for b in tw.base_elems() {
                // Base products computed in the extension stay in the base.
                assert_eq!(tw.mul(a, b), tw.mul_base(a, b));
            }
        }
    }

    #[test]
    fn pow_agrees_with_repeated_multiplication() {
        let tw = t(2);
        for x in tw.ext_elems() {
            let mut acc = FieldElem::ONE;
            for e in 0..20 {
                assert_eq!(tw.pow(x, e), acc);
                acc = tw.mul(acc, x);
            }
        }
    }

    #[test]
    fn views_expose_the_right_orders() {
        let tw = t(3);
        assert_eq!(tw.base().order(), 8);
        assert_eq!(tw.ext().order(), 64);
        assert_eq!(tw.base().elems().count(), 8);
        assert_eq!(tw.ext().elems().count(), 64);
        let v = tw.base();
        assert_eq!(v.mul(FieldElem(3), v.inv(FieldElem(3))), FieldElem::ONE);
    }

    #[test]
    fn large_tower_without_ext_tables_still_multiplies() {
        let tw = t(11);
        assert!(tw.ext_log.is_none());
        let x = FieldElem(12345);
        assert_eq!(tw.mul(x, tw.inv(x)), FieldElem::ONE);
        assert_eq!(tw.frobenius(tw.frobenius(x)), x);
        assert!(tw.in_base(tw.norm(x)));
    }

    #[test]
    fn params_describe_the_tower() {
        let tw = t(3);
        let p = tw.params();
        assert_eq!(p.m, 3);
        assert_eq!(p.base_poly, 11);
        assert_eq!(p.ext_poly, [1, 1, 1]); // w^2 + w + 1; GF(8) has trace(1) = 1
    }
}
