// Points and lines of PG(3, q): deterministic enumeration and incidence.

use arcforge::gf::FieldTower;
use arcforge::projgeom::{all_lines_pg3, line_through, PointTable};

fn main() {
    let tower = FieldTower::new(2).unwrap();
    let q = tower.q();

    let t3 = PointTable::new(3, tower.base());
    println!("PG(3,{q}): {} points", t3.len());
    assert_eq!(t3.len(), q * q * q + q * q + q + 1);

    // Points are indexed by their normalized coordinates; the leading
    // nonzero coordinate is 1 and the index order is lexicographic.
    for i in [0u64, 1, 20, t3.len() - 1] {
        let p = t3.point_at(i);
        println!("  point {i}: {:?}", p.coords().iter().map(|c| c.0).collect::<Vec<_>>());
        assert_eq!(t3.index_of(&p), i);
    }

    let lines = all_lines_pg3(&t3);
    println!("\nlines: {}", lines.len());
    assert_eq!(
        lines.len() as u64,
        (q * q + 1) * (q * q + q + 1)
    );

    // Every line holds q + 1 points; every point lies on q^2 + q + 1 lines.
    let l0 = lines.line(0);
    println!("line 0 through points {:?}", l0.points());
    assert_eq!(l0.len() as u64, q + 1);
    let through_first = lines.through_point(l0.points()[0]);
    println!(
        "lines through point {}: {}",
        l0.points()[0],
        through_first.len()
    );
    assert_eq!(through_first.len() as u64, q * q + q + 1);

    // Two distinct points span exactly one line.
    let a = t3.point_at(3);
    let b = t3.point_at(47);
    let ab = line_through(&t3, &a, &b).unwrap();
    println!("\nline through points 3 and 47: {:?}", ab.points());
    assert!(ab.contains(3) && ab.contains(47));
    assert!(lines.id_of(&ab).is_some());

    // Two lines meet in at most one point.
    let other = lines.line(100);
    println!(
        "line 0 and line 100 share {} point(s)",
        l0.intersection_size(other)
    );
}
