// Arithmetic in the tower GF(q) < GF(q^2) for q = 2^m.
//
// GF(q) is GF(2)[x] mod a fixed irreducible polynomial, GF(q^2) is
// GF(q)[w] mod w^2 + w + nu with nu the least element of absolute trace 1.
// Elements are bit-string encodings: the ext element a + b*w is a | (b << m).

use arcforge::gf::{FieldElem, FieldTower};

fn main() {
    let tower = FieldTower::new(3).unwrap();
    let q = tower.q();
    println!("q = {q}, q^2 = {}", tower.q_sq());
    println!("parameters: {:?}", tower.params());

    // Base-field arithmetic.
    let a = FieldElem(5);
    let b = FieldElem(7);
    println!("\nin GF({q}):");
    println!("  {} + {} = {}", a.0, b.0, tower.add(a, b).0);
    println!("  {} * {} = {}", a.0, b.0, tower.mul_base(a, b).0);
    println!("  {}^-1 = {}", a.0, tower.inv_base(a).0);
    println!("  trace of {} = {}", a.0, tower.trace_base(a).0);

    // Extension-field arithmetic and the Frobenius map x -> x^q.
    let u = FieldElem(5 | (3 << 3));
    let v = FieldElem(1 | (6 << 3));
    println!("\nin GF({}):", tower.q_sq());
    println!("  u = {} splits as {:?}", u.0, tower.split(u));
    println!("  u * v = {}", tower.mul(u, v).0);
    println!("  u^-1 = {}", tower.inv(u).0);
    println!("  u^q = {}", tower.frobenius(u).0);
    println!("  norm(u) = u * u^q = {}", tower.norm(u).0);

    // Frobenius fixes exactly the base field.
    let fixed = tower
        .ext_elems()
        .filter(|&x| tower.frobenius(x) == x)
        .count();
    println!("\nelements fixed by x -> x^q: {fixed} (the copy of GF({q}))");
    assert_eq!(fixed as u64, q);

    // Norms land in the base field, and every base value is hit.
    let mut norms: Vec<u32> = tower.ext_elems().map(|x| tower.norm(x).0).collect();
    norms.sort_unstable();
    norms.dedup();
    println!("distinct norm values: {} (all of GF({q}))", norms.len());
    assert!(norms.iter().all(|&n| tower.in_base(FieldElem(n))));
}
