// The minimum total degree of a plane curve through every point of a set.
//
// For a point set K and degree i, the evaluation matrix has one row per
// point and one column per monomial x^a y^b with a + b <= i. K lies on a
// degree-i curve exactly when that matrix has a nontrivial nullspace. The
// deficiency rank(i) - #monomials(i) never increases with i, so the least
// such i is found by bisection over the rank oracle.

use arcforge::curves::{
    eval_matrix, matrix_rank, min_cover_degree, monomials_upto, nullspace_vector, vector_to_poly,
};
use arcforge::gf::FieldTower;
use arcforge::projgeom::PointTable;

fn main() {
    let tower = FieldTower::new(2).unwrap();
    let t2 = PointTable::new_unmaterialized(2, tower.ext());
    let qq = tower.q_sq();

    // All affine points (1, x, y) of a 2 x 2 coordinate grid.
    let grid: Vec<u64> = t2
        .iter()
        .filter(|(_, p)| {
            let c = p.coords();
            c[0].0 == 1 && c[1].0 < 2 && c[2].0 < 2
        })
        .map(|(i, _)| i)
        .collect();
    println!("2 x 2 grid: {} points", grid.len());
    let d = min_cover_degree(&grid, &t2, &tower, qq as u32).unwrap().unwrap();
    println!("minimum covering degree: {d} (two lines)");
    assert_eq!(d, 2);

    // The matrix view at that degree.
    let monos = monomials_upto(d);
    let mat = eval_matrix(&grid, &monos, &t2, &tower).unwrap();
    let rank = matrix_rank(&mat, &tower);
    println!(
        "evaluation matrix: {} x {}, rank {}, nullity {}",
        mat.len(),
        monos.len(),
        rank,
        monos.len() - rank
    );

    // A representative curve from the nullspace.
    let v = nullspace_vector(&mat, &tower).unwrap();
    let poly = vector_to_poly(&v, &monos).unwrap();
    println!("one covering curve: {poly}");
    for &i in &grid {
        let c = t2.point_at(i);
        assert_eq!(poly.eval(&tower, c.coords()[1], c.coords()[2]).0, 0);
    }

    // The whole affine plane needs degree q^2: the universal curve
    // x^(q^2) + x (or y-form) vanishes everywhere.
    let all_affine: Vec<u64> = t2
        .iter()
        .filter(|(_, p)| p.coords()[0].0 == 1)
        .map(|(i, _)| i)
        .collect();
    println!("\nfull affine plane: {} points", all_affine.len());
    let d = min_cover_degree(&all_affine, &t2, &tower, qq as u32).unwrap().unwrap();
    println!("minimum covering degree: {d}");
    assert_eq!(d as u64, qq);

    // A degree cap below the answer reports not-found instead.
    let capped = min_cover_degree(&all_affine, &t2, &tower, 3).unwrap();
    println!("with the search capped at degree 3: {capped:?}");
    assert_eq!(capped, None);
}
