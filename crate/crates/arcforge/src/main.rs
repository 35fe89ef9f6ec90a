//! Subcommand front end over the library: build arcs, find spreads,
//! verify stored artifacts, fit curves, peel linear factors, report.
//!
//! `ARCFORGE_WORKERS` caps the worker threads; unset means one per core.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use arcforge::curves::{
    eval_matrix, extract_linear_factors, matrix_rank, min_cover_degree, monomials_upto,
    nullspace_vector, vector_to_poly,
};
use arcforge::gf::FieldTower;
use arcforge::ovoids::{
    elliptic_quadric_ovoid, suzuki_tits_ovoid, tangent_complex, OvoidKind,
};
use arcforge::pipeline::cache;
use arcforge::pipeline::io::{
    arc_hash, read_json, write_json, ArcFile, CurveFile, CurveProvenance,
};
use arcforge::pipeline::{emit_report, run_pipeline, PipelineConfig, ReportFormat};
use arcforge::plane::{check_arc, check_secants, verify_maximal_arc};
use arcforge::projgeom::{all_lines_pg3, PointTable};
use arcforge::spreads::{carrier_line, find_tangent_spread};
use arcforge::Error;

#[derive(Parser)]
#[command(name = "arcforge", version, about = "maximal plane arcs from ovoid tangent-line spreads")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_ovoid(s: &str) -> Result<OvoidKind, String> {
    match s {
        "suzuki-tits" => Ok(OvoidKind::SuzukiTits),
        "elliptic-quadric" => Ok(OvoidKind::EllipticQuadric),
        other => Err(format!(
            "unknown ovoid kind {other:?}; use suzuki-tits or elliptic-quadric"
        )),
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a maximal arc and write it as JSON.
    Build {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = parse_ovoid)]
        ovoid: OvoidKind,
        /// Spread cache directory.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, short)]
        verbose: bool,
    },
    /// Find and certify a regular spread of tangent lines.
    Spread {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = parse_ovoid)]
        ovoid: OvoidKind,
        /// Spread cache directory.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Also write the spread as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a stored arc; nonzero exit if any check fails.
    Verify {
        #[arg(long)]
        arc: PathBuf,
    },
    /// Fit the minimum-degree curve through a stored arc.
    Mincurve {
        #[arg(long)]
        arc: PathBuf,
        /// Cap on the degree search; defaults to q^2.
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Peel the linear factors off a stored curve.
    FactorLinear {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Run the full pipeline and print a report.
    Report {
        #[arg(long)]
        q: u64,
        #[arg(long, value_parser = parse_ovoid)]
        ovoid: OvoidKind,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        max_degree: Option<u32>,
        /// Also write the arc as JSON.
        #[arg(long)]
        arc_out: Option<PathBuf>,
        /// Also write the curve as JSON.
        #[arg(long)]
        curve_out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, short)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("ARCFORGE_WORKERS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .expect("worker pool built before first use");
            }
            _ => {
                eprintln!("error: ARCFORGE_WORKERS must be a positive integer, got {v:?}");
                return ExitCode::FAILURE;
            }
        }
    }
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

/// Ok(false) means the command ran but a verification failed.
fn dispatch(cmd: Cmd) -> Result<bool, Error> {
    match cmd {
        Cmd::Build { q, ovoid, cache, out, verbose } => {
            let mut cfg = PipelineConfig::new(q, ovoid);
            cfg.cache_dir = cache;
            cfg.arc_out = Some(out.clone());
            cfg.verbose = verbose;
            let report = run_pipeline(&cfg)?;
            println!(
                "arc: {} points of degree {} in PG(2,{}), written to {}",
                report.arc_size,
                report.arc_degree,
                q * q,
                out.display()
            );
            println!("verdict: {}", if report.pass { "PASS" } else { "FAIL" });
            Ok(report.pass)
        }
        Cmd::Spread { q, ovoid, cache, out } => cmd_spread(q, ovoid, cache, out),
        Cmd::Verify { arc } => cmd_verify(&arc),
        Cmd::Mincurve { arc, max_degree, out } => cmd_mincurve(&arc, max_degree, &out),
        Cmd::FactorLinear { curve } => cmd_factor_linear(&curve),
        Cmd::Report { q, ovoid, cache, max_degree, arc_out, curve_out, format, verbose } => {
            let mut cfg = PipelineConfig::new(q, ovoid);
            cfg.cache_dir = cache;
            cfg.max_degree = max_degree;
            cfg.arc_out = arc_out;
            cfg.curve_out = curve_out;
            cfg.verbose = verbose;
            let report = run_pipeline(&cfg)?;
            let rendered = match format {
                Format::Text => emit_report(&report, ReportFormat::Text),
                Format::Json => emit_report(&report, ReportFormat::Json),
            };
            print!("{rendered}");
            Ok(report.pass)
        }
    }
}

fn cmd_spread(
    q: u64,
    kind: OvoidKind,
    cache_dir: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<bool, Error> {
    let cfg = PipelineConfig::new(q, kind);
    let m = cfg.validate()?;
    let tower = FieldTower::new(m)?;
    let t3 = PointTable::new(3, tower.base());
    let lines = all_lines_pg3(&t3);
    let ext_t3 = PointTable::new_unmaterialized(3, tower.ext());
    let ovoid = match kind {
        OvoidKind::SuzukiTits => suzuki_tits_ovoid(&tower, &t3)?,
        OvoidKind::EllipticQuadric => elliptic_quadric_ovoid(&tower, &t3)?,
    };

    let mut from_cache = true;
    let spread = match cache_dir
        .as_deref()
        .and_then(|dir| cache::spread_cache_get(dir, q, &tower, &ovoid, &t3, &lines, &ext_t3))
    {
        Some(s) => s,
        None => {
            from_cache = false;
            let tc = tangent_complex(&ovoid, &t3, &lines);
            let mut s =
                find_tangent_spread(&tc, &ovoid, &lines, &t3).ok_or(Error::SpreadNotFound)?;
            let carrier = carrier_line(&s.line_ids, &lines, &t3, &ext_t3, &tower)
                .ok_or_else(|| Error::Internal("no carrier line for the spread".into()))?;
            s.carrier = Some(carrier);
            if let Some(dir) = cache_dir.as_deref() {
                cache::spread_cache_put(dir, q, &tower, &ovoid, &s, &lines)?;
            }
            s
        }
    };

    println!(
        "spread: {} tangent lines partitioning {} points, regular: {}, carrier: {}, source: {}",
        spread.line_ids.len(),
        t3.len(),
        spread.regular,
        if spread.carrier.is_some() { "found" } else { "missing" },
        if from_cache { "cache" } else { "search" }
    );
    if let Some(path) = out {
        let file = cache::spread_file(q, &tower, &ovoid, &spread, &lines);
        write_json(&path, &file)?;
        println!("spread written to {}", path.display());
    }
    Ok(spread.regular && spread.carrier.is_some())
}

fn cmd_verify(arc_path: &std::path::Path) -> Result<bool, Error> {
    let file: ArcFile = read_json(arc_path)?;
    let m = PipelineConfig::new(file.q, file.ovoid_kind).validate()?;
    let tower = FieldTower::new(m)?;
    let t2 = PointTable::new_unmaterialized(2, tower.ext());
    let ids = file.point_ids(&tower, &t2)?;

    let arc_ok = check_arc(&ids, &t2, &tower);
    let (uniform, secants) = check_secants(&ids, &t2, &tower);
    let (hist_ok, histogram) = verify_maximal_arc(&ids, &t2, &tower);
    let pass = arc_ok && uniform && hist_ok;

    let hist: Vec<String> = histogram.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    println!(
        "arc: {} points in PG(2,{}), {} secant lines, line histogram {{{}}}",
        ids.len(),
        file.q * file.q,
        secants.len(),
        hist.join(", ")
    );
    println!("verdict: {}", if pass { "PASS" } else { "FAIL" });
    Ok(pass)
}

fn cmd_mincurve(
    arc_path: &std::path::Path,
    max_degree: Option<u32>,
    out: &std::path::Path,
) -> Result<bool, Error> {
    let file: ArcFile = read_json(arc_path)?;
    let m = PipelineConfig::new(file.q, file.ovoid_kind).validate()?;
    let tower = FieldTower::new(m)?;
    let t2 = PointTable::new_unmaterialized(2, tower.ext());
    let ids = file.point_ids(&tower, &t2)?;

    let cap = max_degree.unwrap_or((file.q * file.q) as u32);
    let degree = min_cover_degree(&ids, &t2, &tower, cap)?.ok_or_else(|| {
        Error::Config(format!(
            "no curve of degree <= {cap} passes through every arc point; raise --max-degree"
        ))
    })?;
    let monos = monomials_upto(degree);
    let mat = eval_matrix(&ids, &monos, &t2, &tower)?;
    let rank = matrix_rank(&mat, &tower);
    let nullity = monos.len() - rank;
    let poly = vector_to_poly(&nullspace_vector(&mat, &tower)?, &monos)?;

    let curve = CurveFile::from_poly(
        &poly,
        CurveProvenance {
            q: file.q,
            field: tower.params(),
            arc_hash: arc_hash(&file.points),
            degree_found: degree,
            nullity,
        },
    );
    write_json(out, &curve)?;
    println!(
        "minimum covering degree: {degree} (nullity {nullity}), {} terms, written to {}",
        poly.term_count(),
        out.display()
    );
    Ok(true)
}

fn cmd_factor_linear(curve_path: &std::path::Path) -> Result<bool, Error> {
    let file: CurveFile = read_json(curve_path)?;
    let tower = FieldTower::new(file.field_params().m)?;
    let poly = file.to_poly(&tower)?;

    let (factors, residual) = extract_linear_factors(&poly, &tower)?;
    println!("curve: degree {}, {} terms", poly.degree(), poly.term_count());
    println!("linear factors: {}", factors.len());
    for f in &factors {
        println!("  {f}");
    }
    println!(
        "residual: degree {}, {} terms: {}",
        residual.degree(),
        residual.term_count(),
        residual
    );
    Ok(true)
}
