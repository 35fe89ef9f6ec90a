// From a tangent spread to a maximal arc of PG(2, q^2).
//
// The plane is modeled on PG(4, q): its affine points are the affine
// points of PG(4, q) and its points at infinity are the lines of a regular
// spread of the hyperplane at infinity. The map
//     (z, x1, x2, y1, y2) -> (z, x1 + e*x2, e*y1 + y2)
// collapses each spread line to a single plane point once the spread sits
// on the canonical frame and e is chosen so both coordinates tear
// consistently. The cone over an ovoid with vertex dropped then projects
// to q^3 - q^2 + q affine plane points met by every line in 0 or q of
// them: a maximal arc of degree q.

use arcforge::gf::FieldTower;
use arcforge::ovoids::{suzuki_tits_ovoid, tangent_complex, Ovoid};
use arcforge::plane::{build_arc, check_arc, find_epsilon, theta_map, verify_maximal_arc};
use arcforge::projgeom::{all_lines_pg3, embed_in_pg4, PointTable};
use arcforge::spreads::{
    canonical_spread, canonicalizing_collineation, carrier_line, find_tangent_spread,
};

fn main() {
    let tower = FieldTower::new(3).unwrap();
    let q = tower.q();
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);
    let ext_t3 = PointTable::new_unmaterialized(3, tower.ext());
    let t2 = PointTable::new_unmaterialized(2, tower.ext());

    let ovoid = suzuki_tits_ovoid(&tower, &t3).unwrap();
    let tc = tangent_complex(&ovoid, &t3, &lines);
    let spread = find_tangent_spread(&tc, &ovoid, &lines, &t3).unwrap();
    let carrier = carrier_line(&spread.line_ids, &lines, &t3, &ext_t3, &tower).unwrap();

    // Move the found spread onto the canonical frame; the collineation is
    // read off from the two carriers.
    let canon = canonical_spread(&tower, &t3, &lines, &ext_t3).unwrap();
    let mu = canonicalizing_collineation(
        &carrier,
        canon.carrier.as_ref().unwrap(),
        &tower,
        &ext_t3,
    )
    .unwrap();
    println!("collineation onto the canonical frame: {:?}", mu.matrix_encodings());
    let image = Ovoid {
        kind: ovoid.kind,
        points: mu.apply_points(&tower, &t3, &ovoid.points),
        sigma: ovoid.sigma,
        delta: ovoid.delta,
    };

    // Scalars e with both plane coordinates collapsing along spread lines.
    let candidates = find_epsilon(&canon.line_ids, &lines, &t3, &tower);
    println!(
        "collapse scalar candidates: {:?} (a conjugate pair)",
        candidates.iter().map(|e| e.0).collect::<Vec<_>>()
    );
    let epsilon = candidates[0];

    // Spread lines live in the hyperplane x0 = 0 and become single plane
    // points under theta.
    let l0 = lines.line(canon.line_ids[0]);
    let mut images: Vec<u64> = l0
        .points()
        .iter()
        .map(|&i| {
            let lifted = embed_in_pg4(&t3.point_at(i));
            t2.index_of(&theta_map(&tower, epsilon, &lifted, &t2))
        })
        .collect();
    images.dedup();
    println!("first spread line maps to plane point(s) {images:?}");
    assert_eq!(images.len(), 1);

    let arc = build_arc(&image, &canon.line_ids, epsilon, &tower, &t3, &lines, &t2).unwrap();
    println!("arc: {} points of PG(2,{})", arc.len(), q * q);
    assert_eq!(arc.len() as u64, q * q * q - q * q + q);

    assert!(check_arc(&arc, &t2, &tower));
    let (maximal, histogram) = verify_maximal_arc(&arc, &t2, &tower);
    println!("maximal: {maximal}, line histogram: {histogram:?}");
    assert!(maximal);
}
