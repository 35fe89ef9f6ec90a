// Peeling linear components off a bivariate polynomial over GF(q^2).
//
// Divisibility by y + (ax + b) is tested by substituting y = ax + b and
// checking the result vanishes identically; by x + c via f(c, y) = 0.
// Factors come off with multiplicity and the product of all factors times
// the residual reassembles the input exactly.

use arcforge::curves::{extract_linear_factors, BivariatePoly, LinearFactor};
use arcforge::gf::{FieldElem, FieldTower};

fn main() {
    let tower = FieldTower::new(2).unwrap();

    // f = (x*y + 1) * y * (y + x)^2 * (x + 3)
    let core = BivariatePoly::from_terms([((1, 1), FieldElem::ONE), ((0, 0), FieldElem::ONE)]);
    let y = LinearFactor::YForm { a: FieldElem::ZERO, b: FieldElem::ZERO }.to_poly();
    let y_plus_x = LinearFactor::YForm { a: FieldElem::ONE, b: FieldElem::ZERO }.to_poly();
    let x_plus_3 = LinearFactor::XForm { c: FieldElem(3) }.to_poly();
    let f = core
        .mul(&y, &tower)
        .mul(&y_plus_x, &tower)
        .mul(&y_plus_x, &tower)
        .mul(&x_plus_3, &tower);
    println!("f = {f}");
    println!("degree {}, {} terms", f.degree(), f.term_count());

    let (factors, residual) = extract_linear_factors(&f, &tower).unwrap();
    println!("\nlinear factors ({}):", factors.len());
    for l in &factors {
        println!("  {l}");
    }
    println!("residual: {residual}");
    assert_eq!(factors.len(), 4);
    assert_eq!(residual, core);

    // Reassembly is exact.
    let product = factors
        .iter()
        .fold(residual.clone(), |acc, l| acc.mul(&l.to_poly(), &tower));
    assert_eq!(product, f);
    println!("product of factors times residual equals f");

    // The residual has no linear factors left.
    let (none, same) = extract_linear_factors(&residual, &tower).unwrap();
    assert!(none.is_empty());
    assert_eq!(same, residual);
    println!("residual is linear-factor free");
}
