// The whole chain in one call per configuration: ovoid, tangent spread,
// canonical frame, maximal arc, minimum covering curve, linear factors.
//
// Runs the fast elliptic case at q = 4, then both ovoids at q = 8. The
// q = 8 Suzuki-Tits run is the interesting one: the minimum covering
// degree is 22 and the curve splits into 5 lines and a degree-17 part,
// while the elliptic arcs are covered at degree 2q - 1 by a pencil of
// conics.

use arcforge::ovoids::OvoidKind;
use arcforge::pipeline::{emit_report, run_pipeline, PipelineConfig, ReportFormat};

fn main() {
    for (q, kind) in [
        (4, OvoidKind::EllipticQuadric),
        (8, OvoidKind::SuzukiTits),
        (8, OvoidKind::EllipticQuadric),
    ] {
        let cfg = PipelineConfig::new(q, kind);
        let report = run_pipeline(&cfg).unwrap();
        print!("{}", emit_report(&report, ReportFormat::Text));
        println!();
        assert!(report.pass);
    }
}
