// A regular spread made entirely of tangent lines to an ovoid.
//
// The search walks triples from the tangent pencils at the first three
// ovoid points, keeps those whose regulus stays inside the tangent
// complex, then looks for a fourth tangent line whose regular closure is
// a full spread of tangents. The spread is certified, and a carrier line
// over GF(q^2) is computed: a line L disjoint from PG(3,q) with the
// spread equal to the rational parts of the lines P P^q for P on L.

use arcforge::gf::FieldTower;
use arcforge::ovoids::{suzuki_tits_ovoid, tangent_complex};
use arcforge::projgeom::{all_lines_pg3, PointTable};
use arcforge::spreads::{carrier_line, find_tangent_spread, is_regular_spread, spread_from_carrier};

fn main() {
    let tower = FieldTower::new(3).unwrap();
    let q = tower.q();
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);
    let ext_t3 = PointTable::new_unmaterialized(3, tower.ext());

    let ovoid = suzuki_tits_ovoid(&tower, &t3).unwrap();
    let tc = tangent_complex(&ovoid, &t3, &lines);
    println!(
        "Suzuki-Tits ovoid in PG(3,{q}): {} points, {} tangent lines",
        ovoid.len(),
        tc.len()
    );

    let started = std::time::Instant::now();
    let spread = find_tangent_spread(&tc, &ovoid, &lines, &t3).expect("spread exists");
    println!(
        "spread: {} lines found in {:?}, regular: {}",
        spread.line_ids.len(),
        started.elapsed(),
        spread.regular
    );
    assert_eq!(spread.line_ids.len() as u64, q * q + 1);
    assert!(is_regular_spread(&spread.line_ids, &lines, &t3).unwrap());

    // Every spread line is tangent: it meets the ovoid exactly once.
    let bits = ovoid.membership(t3.len());
    for &id in &spread.line_ids {
        let hits = lines
            .line(id)
            .points()
            .iter()
            .filter(|&&p| bits[p as usize])
            .count();
        assert_eq!(hits, 1);
    }
    println!("every spread line meets the ovoid exactly once");

    let carrier = carrier_line(&spread.line_ids, &lines, &t3, &ext_t3, &tower)
        .expect("regular spreads have carriers");
    println!("carrier line over GF({}): {} points", tower.q_sq(), carrier.len());

    // The carrier reconstructs the spread.
    let rebuilt = spread_from_carrier(&carrier, &t3, &ext_t3, &tower);
    let mut original: Vec<_> = spread.line_ids.iter().map(|&id| lines.line(id).clone()).collect();
    original.sort_by(|a, b| a.points().cmp(b.points()));
    assert_eq!(rebuilt, original);
    println!("carrier reconstruction reproduces the spread exactly");
}
