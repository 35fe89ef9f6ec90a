// The two ovoids of PG(3, q) this crate builds, with their certificates.
//
// An ovoid is a set of q^2 + 1 points no three of which are collinear.
// Every line then meets it in 0, 1, or 2 points, and the tangent lines at
// a fixed point form a pencil of q + 1 lines in the tangent plane.

use arcforge::gf::FieldTower;
use arcforge::ovoids::{
    elliptic_quadric_ovoid, line_spectrum, suzuki_tits_ovoid, tangent_complex, verify_ovoid,
    Ovoid, OvoidKind,
};
use arcforge::projgeom::{all_lines_pg3, PointTable};

fn tour(tower: &FieldTower, kind: OvoidKind) {
    let q = tower.q();
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);

    let ovoid: Ovoid = match kind {
        OvoidKind::SuzukiTits => suzuki_tits_ovoid(tower, &t3).unwrap(),
        OvoidKind::EllipticQuadric => elliptic_quadric_ovoid(tower, &t3).unwrap(),
    };
    println!("{kind} ovoid in PG(3,{q}): {} points", ovoid.len());
    assert_eq!(ovoid.len() as u64, q * q + 1);

    let check = verify_ovoid(&ovoid.points, &t3, &lines);
    println!("  no three collinear: {}", check.passed());

    let spectrum = line_spectrum(&ovoid, &t3, &lines);
    println!(
        "  line spectrum: {} external, {} tangent, {} secant",
        spectrum.external, spectrum.tangent, spectrum.secant
    );
    // q^2 + 1 pencils of q + 1 tangents each.
    assert_eq!(spectrum.tangent, (q * q + 1) * (q + 1));

    let tc = tangent_complex(&ovoid, &t3, &lines);
    println!(
        "  tangent complex: {} lines in {} pencils",
        tc.len(),
        tc.pencils.len()
    );
    let (at, pencil) = &tc.pencils[0];
    println!(
        "  pencil at point {at}: lines {:?}",
        &pencil[..pencil.len().min(5)]
    );
    assert!(pencil.iter().all(|&id| tc.contains(id)));
    println!();
}

fn main() {
    let t2 = FieldTower::new(2).unwrap();
    tour(&t2, OvoidKind::EllipticQuadric);

    // The Suzuki-Tits ovoid needs q = 2^(2t+1); it is not a quadric.
    let t3 = FieldTower::new(3).unwrap();
    tour(&t3, OvoidKind::SuzukiTits);
    tour(&t3, OvoidKind::EllipticQuadric);
}
