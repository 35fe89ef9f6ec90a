// Reguli and the regular closure of four generic skew lines.
//
// Three pairwise skew lines determine a regulus: the q + 1 lines meeting
// all their common transversals. Adding a fourth skew line that avoids
// every point of that regulus and closing under regulus formation yields
// a full regular spread of q^2 + 1 lines, and the growth is forced: each
// round only adds lines that any regulus-closed superset must contain.

use arcforge::gf::FieldTower;
use arcforge::projgeom::{all_lines_pg3, LineId, PointTable};
use arcforge::spreads::{is_regular_spread, opposite_regulus, regular_closure, regulus};

fn main() {
    let tower = FieldTower::new(2).unwrap();
    let q = tower.q();
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);

    // First three pairwise skew lines in id order.
    let mut skew: Vec<LineId> = Vec::new();
    for id in 0..lines.len() as LineId {
        if skew.iter().all(|&s| !lines.line(s).meets(lines.line(id))) {
            skew.push(id);
            if skew.len() == 3 {
                break;
            }
        }
    }
    let [a, b, c] = [skew[0], skew[1], skew[2]];

    let r = regulus(a, b, c, &lines).unwrap();
    println!("regulus of lines {a}, {b}, {c}: {:?}", r.line_ids);
    assert_eq!(r.line_ids.len() as u64, q + 1);

    let opp = opposite_regulus(a, b, c, &lines).unwrap();
    println!("opposite regulus (the transversals): {:?}", opp.line_ids);
    for &t in &opp.line_ids {
        assert!(r.line_ids.iter().all(|&m| lines.line(t).meets(lines.line(m))));
    }

    // A fourth line missing every point of the regulus.
    let mut covered = vec![false; t3.len() as usize];
    for &id in &r.line_ids {
        for &p in lines.line(id).points() {
            covered[p as usize] = true;
        }
    }
    let d = (0..lines.len() as LineId)
        .find(|&id| lines.line(id).points().iter().all(|&p| !covered[p as usize]))
        .unwrap();
    println!("fourth line: {d}");

    let closure = regular_closure(&[a, b, c, d], &lines, &t3).unwrap();
    println!("regular closure: {} lines", closure.len());
    assert_eq!(closure.len() as u64, q * q + 1);
    assert!(is_regular_spread(&closure, &lines, &t3).unwrap());
    println!("closure is a regular spread of PG(3,{q})");

    // Closing again adds nothing.
    let again = regular_closure(&closure, &lines, &t3).unwrap();
    assert_eq!(again, closure);
    println!("closure is idempotent");
}
