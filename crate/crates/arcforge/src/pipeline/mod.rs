//! End-to-end orchestration: field towers, ovoid, tangent spread (cached),
//! canonical frame, arc, minimum covering curve, linear factors, report.
//!
//! The pipeline is a single thread of stages; parallelism lives inside the
//! stage functions.  Every run with the same config writes byte-identical
//! arc and curve artifacts.

pub mod cache;
pub mod io;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::curves::{
    eval_matrix, extract_linear_factors, matrix_rank, min_cover_degree, monomials_upto,
    nullspace_vector, vector_to_poly,
};
use crate::gf::FieldTower;
use crate::ovoids::{
    elliptic_quadric_ovoid, suzuki_tits_ovoid, tangent_complex, verify_ovoid, Ovoid, OvoidKind,
};
use crate::plane::{build_arc, check_arc, check_secants, find_epsilon, verify_maximal_arc,
    ArcProvenance};
use crate::projgeom::{all_lines_pg3, PointTable};
use crate::spreads::{
    canonical_spread, canonicalizing_collineation, carrier_line, find_tangent_spread,
};
use crate::Error;

use io::{arc_hash, write_json, ArcFile, CurveFile, CurveProvenance};

/// Settings for one pipeline run.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    /// Base field order; the ovoid lives in PG(3, q), the arc in PG(2, q^2).
    pub q: u64,
    pub ovoid: OvoidKind,
    /// Cap on the covering-degree search; defaults to q^2, which always
    /// suffices.
    pub max_degree: Option<u32>,
    /// Directory for the spread cache; no caching when unset.
    pub cache_dir: Option<PathBuf>,
    /// Where to write the arc JSON; skipped when unset.
    pub arc_out: Option<PathBuf>,
    /// Where to write the curve JSON; skipped when unset.
    pub curve_out: Option<PathBuf>,
    /// Stage progress on stderr.
    pub verbose: bool,
}

impl PipelineConfig {
    pub fn new(q: u64, ovoid: OvoidKind) -> Self {
        PipelineConfig {
            q,
            ovoid,
            max_degree: None,
            cache_dir: None,
            arc_out: None,
            curve_out: None,
            verbose: false,
        }
    }

    /// Checks the field and ovoid constraints; returns m with q = 2^m.
    pub fn validate(&self) -> Result<u32, Error> {
        if self.q < 4 || !self.q.is_power_of_two() {
            return Err(Error::Config(format!(
                "q must be a power of 2, at least 4, got {}",
                self.q
            )));
        }
        let m = self.q.trailing_zeros();
        if self.ovoid == OvoidKind::SuzukiTits && (m < 3 || m % 2 == 0) {
            return Err(Error::Config(format!(
                "a Suzuki-Tits ovoid needs q = 2^(2t+1) with t >= 1, got q = 2^{m}"
            )));
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub ms: f64,
}

/// Pass/fail verdict of each verification layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    /// Ovoid size q^2 + 1 and no collinear triple.
    pub ovoid_certified: bool,
    /// Spread closed under reguli of member triples.
    pub spread_regular: bool,
    /// Every plane line meets the arc in 0 or q points.
    pub arc_maximal: bool,
    /// Fitted curve vanishes at every arc point.
    pub curve_vanishes_on_arc: bool,
    /// Product of linear factors and residual reassembles the curve.
    pub factors_reassemble: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.ovoid_certified
            && self.spread_regular
            && self.arc_maximal
            && self.curve_vanishes_on_arc
            && self.factors_reassemble
    }
}

/// Everything a run produced, in summary form.  Field order is the
/// serialization order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub q: u64,
    pub ovoid_kind: OvoidKind,
    pub pg3_points: u64,
    pub pg3_lines: u64,
    pub ovoid_size: u64,
    pub tangent_count: u64,
    pub spread_size: u64,
    pub spread_from_cache: bool,
    pub collineation: [[u32; 4]; 4],
    pub epsilon_candidates: Vec<u32>,
    pub epsilon: u32,
    pub arc_size: u64,
    pub arc_degree: u64,
    pub secant_count: u64,
    pub line_histogram: BTreeMap<usize, u64>,
    pub degree_lower_bound: u32,
    pub min_degree: u32,
    pub monomial_count: usize,
    pub rank: usize,
    pub nullity: usize,
    pub curve: String,
    pub curve_term_count: usize,
    pub curve_affine_zeros: usize,
    pub curve_zeros_on_arc: usize,
    pub linear_factors: Vec<String>,
    pub residual_degree: u32,
    pub residual_term_count: usize,
    pub residual_affine_zeros: usize,
    pub residual_zeros_on_arc: usize,
    pub notes: Vec<String>,
    pub verdicts: Verdicts,
    pub pass: bool,
    pub timings: Vec<StageTiming>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

fn stage<T>(name: &'static str, r: Result<T, Error>) -> Result<T, Error> {
    r.map_err(|e| Error::Stage { stage: name, source: Box::new(e) })
}

/// Runs the whole chain and returns the report.  Verification failures do
/// not error; they land in `verdicts` with `pass = false`.  Errors mean a
/// stage could not produce its output at all.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<PipelineReport, Error> {
    let m = cfg.validate()?;
    let q = cfg.q;
    let say = |msg: &str| {
        if cfg.verbose {
            eprintln!("[pipeline] {msg}");
        }
    };
    let mut timings: Vec<StageTiming> = Vec::new();
    let mut clock = Instant::now();
    let mark = |timings: &mut Vec<StageTiming>, clock: &mut Instant, name: &str| {
        timings.push(StageTiming {
            stage: name.to_string(),
            ms: clock.elapsed().as_secs_f64() * 1e3,
        });
        *clock = Instant::now();
    };

    say("building field tower");
    let tower = stage("fields", FieldTower::new(m))?;
    mark(&mut timings, &mut clock, "fields");

    say("enumerating PG(3, q)");
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);
    let ext_t3 = PointTable::new_unmaterialized(3, tower.ext());
    let t2 = PointTable::new_unmaterialized(2, tower.ext());
    mark(&mut timings, &mut clock, "tables");

    say("building ovoid and tangent complex");
    let ovoid = stage(
        "ovoid",
        match cfg.ovoid {
            OvoidKind::SuzukiTits => suzuki_tits_ovoid(&tower, &t3),
            OvoidKind::EllipticQuadric => elliptic_quadric_ovoid(&tower, &t3),
        },
    )?;
    let ovoid_certified = verify_ovoid(&ovoid.points, &t3, &lines).passed();
    let tc = tangent_complex(&ovoid, &t3, &lines);
    mark(&mut timings, &mut clock, "ovoid");

    say("searching for a regular spread of tangent lines");
    let mut spread_from_cache = false;
    let spread = match cfg.cache_dir.as_deref().and_then(|dir| {
        cache::spread_cache_get(dir, q, &tower, &ovoid, &t3, &lines, &ext_t3)
    }) {
        Some(s) => {
            spread_from_cache = true;
            say("spread loaded from cache");
            s
        }
        None => {
            let mut s = stage(
                "spread",
                find_tangent_spread(&tc, &ovoid, &lines, &t3).ok_or(Error::SpreadNotFound),
            )?;
            let carrier = stage(
                "spread",
                carrier_line(&s.line_ids, &lines, &t3, &ext_t3, &tower)
                    .ok_or_else(|| Error::Internal("no carrier line for the spread".into())),
            )?;
            s.carrier = Some(carrier);
            if let Some(dir) = cfg.cache_dir.as_deref() {
                stage("spread", cache::spread_cache_put(dir, q, &tower, &ovoid, &s, &lines))?;
            }
            s
        }
    };
    let spread_regular = spread.regular;
    mark(&mut timings, &mut clock, "spread");

    say("moving the spread onto the canonical frame");
    let canon = stage("canonicalize", canonical_spread(&tower, &t3, &lines, &ext_t3))?;
    let canon_carrier = canon
        .carrier
        .as_ref()
        .ok_or(Error::Internal("canonical spread lacks a carrier".into()))?;
    let found_carrier = spread
        .carrier
        .as_ref()
        .ok_or(Error::Internal("spread lacks a carrier".into()))?;
    let mu = stage(
        "canonicalize",
        canonicalizing_collineation(found_carrier, canon_carrier, &tower, &ext_t3),
    )?;
    let image = Ovoid {
        kind: ovoid.kind,
        points: mu.apply_points(&tower, &t3, &ovoid.points),
        sigma: ovoid.sigma,
        delta: ovoid.delta,
    };
    mark(&mut timings, &mut clock, "canonicalize");

    say("selecting the collapse scalar");
    let candidates = find_epsilon(&canon.line_ids, &lines, &t3, &tower);
    let epsilon = *stage(
        "epsilon",
        candidates
            .first()
            .ok_or_else(|| Error::Internal("no collapse scalar found".into())),
    )?;
    mark(&mut timings, &mut clock, "epsilon");

    say("projecting the ovoid cone to the plane");
    let arc = stage(
        "arc",
        build_arc(&image, &canon.line_ids, epsilon, &tower, &t3, &lines, &t2),
    )?;
    let arc_ok = check_arc(&arc, &t2, &tower);
    let (uniform, secants) = check_secants(&arc, &t2, &tower);
    let (hist_ok, histogram) = verify_maximal_arc(&arc, &t2, &tower);
    let arc_maximal = arc_ok && uniform && hist_ok;
    mark(&mut timings, &mut clock, "arc");

    say("fitting the minimum-degree covering curve");
    let cap = cfg.max_degree.unwrap_or((q * q) as u32);
    let min_degree = stage("curve", min_cover_degree(&arc, &t2, &tower, cap))?
        .ok_or_else(|| {
            Error::Config(format!(
                "no curve of degree <= {cap} passes through every arc point; raise --max-degree"
            ))
        })?;
    let monos = monomials_upto(min_degree);
    let mat = stage("curve", eval_matrix(&arc, &monos, &t2, &tower))?;
    let rank = matrix_rank(&mat, &tower);
    let nullity = monos.len() - rank;
    let v = stage("curve", nullspace_vector(&mat, &tower))?;
    let poly = stage("curve", vector_to_poly(&v, &monos))?;
    let (curve_zeros, curve_hits) =
        stage("curve", crate::curves::curve_points(&poly, &t2, &tower, &arc))?;
    let curve_vanishes = curve_hits == arc.len();
    mark(&mut timings, &mut clock, "curve");

    say("peeling linear factors");
    let (factors, residual) = stage("factors", extract_linear_factors(&poly, &tower))?;
    let (residual_zeros, residual_hits) = if residual.degree() == 0 {
        (Vec::new(), 0)
    } else {
        stage("factors", crate::curves::curve_points(&residual, &t2, &tower, &arc))?
    };
    mark(&mut timings, &mut clock, "factors");

    let verdicts = Verdicts {
        ovoid_certified,
        spread_regular,
        arc_maximal,
        curve_vanishes_on_arc: curve_vanishes,
        factors_reassemble: true,
    };

    let qq = q * q;
    let n = arc.len() as u64;
    let degree_lower_bound = (n + qq) / (qq + 1);
    let mut notes: Vec<String> = Vec::new();
    if cfg.ovoid == OvoidKind::EllipticQuadric {
        let d0 = degree_lower_bound - 1;
        notes.push(format!(
            "a curve of degree {d0} holds at most {d0}*{} = {} plane points, fewer than the \
             {n} arc points, so no curve of degree {d0} or lower covers the arc",
            qq + 1,
            d0 * (qq + 1),
        ));
        if u64::from(min_degree) == 2 * q - 1 {
            notes.push(format!(
                "computed minimum {min_degree} equals 2q-1: the degree of a cover by q-1 = {} \
                 disjoint conics plus one line through their common nucleus",
                q - 1
            ));
        } else {
            notes.push(format!(
                "computed minimum {min_degree} differs from the conic-cover degree 2q-1 = {}",
                2 * q - 1
            ));
        }
    }

    let provenance = ArcProvenance {
        q,
        ovoid_kind: cfg.ovoid,
        epsilon,
        collineation: mu.matrix_encodings(),
    };
    let arc_file = ArcFile::from_point_ids(q, &tower, &t2, &arc, provenance);
    let curve_file = CurveFile::from_poly(
        &poly,
        CurveProvenance {
            q,
            field: tower.params(),
            arc_hash: arc_hash(&arc_file.points),
            degree_found: min_degree,
            nullity,
        },
    );
    if let Some(path) = cfg.arc_out.as_deref() {
        stage("artifacts", write_json(path, &arc_file))?;
        say(&format!("arc written to {}", path.display()));
    }
    if let Some(path) = cfg.curve_out.as_deref() {
        stage("artifacts", write_json(path, &curve_file))?;
        say(&format!("curve written to {}", path.display()));
    }
    mark(&mut timings, &mut clock, "artifacts");

    Ok(PipelineReport {
        q,
        ovoid_kind: cfg.ovoid,
        pg3_points: t3.len(),
        pg3_lines: lines.len() as u64,
        ovoid_size: ovoid.len() as u64,
        tangent_count: tc.len() as u64,
        spread_size: spread.line_ids.len() as u64,
        spread_from_cache,
        collineation: mu.matrix_encodings(),
        epsilon_candidates: candidates.iter().map(|e| e.0).collect(),
        epsilon: epsilon.0,
        arc_size: n,
        arc_degree: q,
        secant_count: secants.len() as u64,
        line_histogram: histogram,
        degree_lower_bound: degree_lower_bound as u32,
        min_degree,
        monomial_count: monos.len(),
        rank,
        nullity,
        curve: poly.to_string(),
        curve_term_count: poly.term_count(),
        curve_affine_zeros: curve_zeros.len(),
        curve_zeros_on_arc: curve_hits,
        linear_factors: factors.iter().map(|f| f.to_string()).collect(),
        residual_degree: residual.degree(),
        residual_term_count: residual.term_count(),
        residual_affine_zeros: residual_zeros.len(),
        residual_zeros_on_arc: residual_hits,
        notes,
        verdicts,
        pass: verdicts.all(),
        timings,
    })
}

const IDENTITY_ENCODINGS: [[u32; 4]; 4] =
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

/// Renders a report.  Text is line-oriented with a fixed field order; the
/// polynomial appears in graded-lex term order.  A failed run gets a FAIL
/// banner as the last line.
pub fn emit_report(r: &PipelineReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let mut line = |s: String| {
                out.push_str(&s);
                out.push('\n');
            };
            line(format!("arc pipeline report: q = {}, ovoid = {}", r.q, r.ovoid_kind));
            line(format!(
                "  PG(3,{}): {} points, {} lines; ovoid: {} points, {} tangent lines",
                r.q, r.pg3_points, r.pg3_lines, r.ovoid_size, r.tangent_count
            ));
            line(format!(
                "  spread: {} lines, regular: {}, source: {}",
                r.spread_size,
                r.verdicts.spread_regular,
                if r.spread_from_cache { "cache" } else { "search" }
            ));
            line(format!(
                "  collineation to canonical frame: {:?}{}",
                r.collineation,
                if r.collineation == IDENTITY_ENCODINGS { " (identity)" } else { "" }
            ));
            line(format!(
                "  collapse scalar: {} of candidates {:?}",
                r.epsilon, r.epsilon_candidates
            ));
            line(format!(
                "  arc: {} points of degree {} in PG(2,{}), {} secant lines",
                r.arc_size,
                r.arc_degree,
                r.q * r.q,
                r.secant_count
            ));
            let hist: Vec<String> = r
                .line_histogram
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect();
            line(format!("  line histogram: {{{}}}", hist.join(", ")));
            line(format!(
                "  minimum covering degree: {} (lower bound {}, {} monomials, rank {}, nullity {})",
                r.min_degree, r.degree_lower_bound, r.monomial_count, r.rank, r.nullity
            ));
            line(format!("  curve ({} terms): {}", r.curve_term_count, r.curve));
            line(format!(
                "  curve zeros: {} affine, {} on the arc",
                r.curve_affine_zeros, r.curve_zeros_on_arc
            ));
            line(format!(
                "  linear factors ({}): {}",
                r.linear_factors.len(),
                if r.linear_factors.is_empty() {
                    "none".to_string()
                } else {
                    r.linear_factors.join("; ")
                }
            ));
            line(format!(
                "  residual: degree {}, {} terms, {} affine zeros, {} on the arc",
                r.residual_degree,
                r.residual_term_count,
                r.residual_affine_zeros,
                r.residual_zeros_on_arc
            ));
            for note in &r.notes {
                line(format!("  note: {note}"));
            }
            line(format!(
                "  verdicts: ovoid {}, spread {}, arc {}, curve {}, factors {}",
                r.verdicts.ovoid_certified,
                r.verdicts.spread_regular,
                r.verdicts.arc_maximal,
                r.verdicts.curve_vanishes_on_arc,
                r.verdicts.factors_reassemble
            ));
            let stages: Vec<String> = r
                .timings
                .iter()
                .map(|t| format!("{} {:.1}ms", t.stage, t.ms))
                .collect();
            line(format!("  timings: {}", stages.join(", ")));
            if r.pass {
                line("PASS".to_string());
            } else {
                line("==================== FAIL ====================".to_string());
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn elliptic_cfg(q: u64) -> PipelineConfig {
        PipelineConfig::new(q, OvoidKind::EllipticQuadric)
    }

    #[test]
    fn config_validation() {
        assert!(matches!(
            PipelineConfig::new(6, OvoidKind::EllipticQuadric).validate(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            PipelineConfig::new(2, OvoidKind::EllipticQuadric).validate(),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            PipelineConfig::new(16, OvoidKind::SuzukiTits).validate(),
            Err(Error::Config(_))
        ));
        assert_eq!(PipelineConfig::new(4, OvoidKind::EllipticQuadric).validate().unwrap(), 2);
        assert_eq!(PipelineConfig::new(8, OvoidKind::SuzukiTits).validate().unwrap(), 3);
    }

    #[test]
    fn elliptic_q4_report_values() {
        let r = run_pipeline(&elliptic_cfg(4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.pg3_points, 85);
        assert_eq!(r.ovoid_size, 17);
        assert_eq!(r.spread_size, 17);
        assert!(!r.spread_from_cache);
        assert_eq!(r.arc_size, 52);
        assert_eq!(r.arc_degree, 4);
        assert_eq!(r.secant_count, 221);
        assert_eq!(r.line_histogram, BTreeMap::from([(0, 52), (4, 221)]));
        assert_eq!(r.degree_lower_bound, 4);
        assert_eq!(r.min_degree, 7);
        assert_eq!(r.nullity, 2);
        assert_eq!(r.linear_factors, vec!["y".to_string()]);
        assert_eq!(r.residual_degree, 6);
        assert_eq!(r.residual_affine_zeros, 51);
        assert_eq!(r.residual_zeros_on_arc, 51);
        assert_eq!(r.notes.len(), 2);
        assert!(r.notes[1].contains("2q-1"));
    }

    #[test]
    fn artifacts_are_byte_identical_and_cache_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = elliptic_cfg(4);
        cfg.cache_dir = Some(dir.path().join("cache"));
        cfg.arc_out = Some(dir.path().join("arc.json"));
        cfg.curve_out = Some(dir.path().join("curve.json"));

        let r1 = run_pipeline(&cfg).unwrap();
        assert!(!r1.spread_from_cache);
        let arc1 = fs::read(dir.path().join("arc.json")).unwrap();
        let curve1 = fs::read(dir.path().join("curve.json")).unwrap();

        let r2 = run_pipeline(&cfg).unwrap();
        assert!(r2.spread_from_cache);
        let arc2 = fs::read(dir.path().join("arc.json")).unwrap();
        let curve2 = fs::read(dir.path().join("curve.json")).unwrap();

        assert_eq!(arc1, arc2);
        assert_eq!(curve1, curve2);
        assert_eq!(r1.collineation, r2.collineation);
        assert_eq!(r1.curve, r2.curve);
    }

    #[test]
    fn corrupt_cache_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache_dir = dir.path().join("cache");
        let mut cfg = elliptic_cfg(4);
        cfg.cache_dir = Some(cache_dir.clone());
        run_pipeline(&cfg).unwrap();

        let path = cache::cache_path(&cache_dir, 4, OvoidKind::EllipticQuadric);
        fs::write(&path, b"{ not json").unwrap();
        let r = run_pipeline(&cfg).unwrap();
        assert!(!r.spread_from_cache);
        assert!(r.pass);
    }

    #[test]
    fn tampered_cache_line_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache_dir = dir.path().join("cache");
        let mut cfg = elliptic_cfg(4);
        cfg.cache_dir = Some(cache_dir.clone());
        run_pipeline(&cfg).unwrap();

        let path = cache::cache_path(&cache_dir, 4, OvoidKind::EllipticQuadric);
        let mut v: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        let first = v["lines"][0][0].as_u64().unwrap();
        v["lines"][0][0] = serde_json::Value::from(first + 1);
        fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();

        let r = run_pipeline(&cfg).unwrap();
        assert!(!r.spread_from_cache);
        assert!(r.pass);
    }

    #[test]
    fn report_round_trips_and_text_renders() {
        let r = run_pipeline(&elliptic_cfg(4)).unwrap();

        let json = emit_report(&r, ReportFormat::Json);
        let mut back: PipelineReport = serde_json::from_str(&json).unwrap();
        // Timing floats survive JSON only approximately.
        let mut want = r.clone();
        back.timings.clear();
        want.timings.clear();
        assert_eq!(back, want);

        let text = emit_report(&r, ReportFormat::Text);
        assert!(text.contains("minimum covering degree: 7"));
        assert!(text.contains("linear factors (1): y"));
        assert!(text.contains(&r.curve));
        assert!(text.ends_with("PASS\n"));

        let mut failed = r.clone();
        failed.verdicts.arc_maximal = false;
        failed.pass = failed.verdicts.all();
        let text = emit_report(&failed, ReportFormat::Text);
        assert!(text.contains("FAIL"));
        assert!(!text.ends_with("PASS\n"));
    }

    #[test]
    fn arc_file_round_trips_point_ids() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = elliptic_cfg(4);
        cfg.arc_out = Some(dir.path().join("arc.json"));
        run_pipeline(&cfg).unwrap();

        let file: ArcFile = io::read_json(&dir.path().join("arc.json")).unwrap();
        let tower = FieldTower::new(2).unwrap();
        let t2 = PointTable::new_unmaterialized(2, tower.ext());
        let ids = file.point_ids(&tower, &t2).unwrap();
        assert_eq!(ids.len(), 52);
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(io::arc_hash(&file.points).len(), 64);
    }

    #[test]
    fn curve_file_round_trips_poly() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = elliptic_cfg(4);
        cfg.curve_out = Some(dir.path().join("curve.json"));
        let r = run_pipeline(&cfg).unwrap();

        let file: CurveFile = io::read_json(&dir.path().join("curve.json")).unwrap();
        assert_eq!(file.degree, 7);
        assert_eq!(file.provenance.nullity, 2);
        let tower = FieldTower::new(2).unwrap();
        let poly = file.to_poly(&tower).unwrap();
        assert_eq!(poly.to_string(), r.curve);
    }
}
