use std::fs;
use std::path::{Path, PathBuf};

use pisano_core::complete::{compute_shift, Direction};
use pisano_core::quasi::{predict_quasi, verify_quasi, QuasiClass, QuasiPrediction};
use pisano_core::render::{build_scene, render_frames, render_svg};
use pisano_core::subseq::{star_polygon, subsequence_period, DiagramType, SubsequenceSpec};
use pisano_core::{pisano_period, verify, ShiftCertificate};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::report::Report;
use crate::CliError;

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("plain data always serializes")
}

fn spec(k: u32, r: u32) -> Result<SubsequenceSpec, CliError> {
    SubsequenceSpec::new(k, r).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn period(m: u64) -> Result<Report, CliError> {
    let p = pisano_period(m).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Report::new(
        "period",
        json!({ "m": m }),
        json!({ "length": p.len(), "period": p.residues() }),
    ))
}

#[derive(Debug, Serialize)]
struct Classification {
    n: u32,
    q: u32,
    diagram_type: DiagramType,
    convex: bool,
    terms: Vec<u8>,
    quasi_class: QuasiClass,
    prediction: QuasiPrediction,
    #[serde(skip_serializing_if = "Option::is_none")]
    shift: Option<ShiftCertificate>,
}

fn classify_spec(s: SubsequenceSpec) -> Classification {
    let poly = star_polygon(s);
    let period = subsequence_period(s);
    let shift = if poly.diagram_type == DiagramType::Type3 {
        Some(compute_shift(s.k(), s.r()).expect("Type3 jumps are units of 60"))
    } else {
        None
    };
    Classification {
        n: poly.n,
        q: poly.q,
        diagram_type: poly.diagram_type,
        convex: poly.convex,
        quasi_class: verify_quasi(&period),
        prediction: predict_quasi(s.r()),
        terms: period.terms().to_vec(),
        shift,
    }
}

pub fn classify(k: u32, r: u32) -> Result<Report, CliError> {
    let s = spec(k, r)?;
    Ok(Report::new(
        "classify",
        json!({ "k": k, "r": r }),
        to_value(&classify_spec(s)),
    ))
}

#[derive(Debug, Serialize)]
struct SweepRow {
    k: u32,
    r: u32,
    n: u32,
    q: u32,
    diagram_type: DiagramType,
    convex: bool,
    quasi_class: QuasiClass,
    prediction: QuasiPrediction,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<Direction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n_kr: Option<u32>,
}

pub fn sweep() -> Report {
    let specs: Vec<SubsequenceSpec> = SubsequenceSpec::all().collect();
    // par_iter + collect keeps (k, r) order
    let rows: Vec<SweepRow> = specs
        .par_iter()
        .map(|&s| {
            let c = classify_spec(s);
            SweepRow {
                k: s.k(),
                r: s.r(),
                n: c.n,
                q: c.q,
                diagram_type: c.diagram_type,
                convex: c.convex,
                quasi_class: c.quasi_class,
                prediction: c.prediction,
                direction: c.shift.map(|x| x.direction),
                n_kr: c.shift.map(|x| x.n_kr),
            }
        })
        .collect();
    let count = |t: DiagramType| rows.iter().filter(|row| row.diagram_type == t).count();
    let summary = json!({
        "rows": rows.len(),
        "type1": count(DiagramType::Type1),
        "type2": count(DiagramType::Type2),
        "type3": count(DiagramType::Type3),
    });
    Report::new(
        "sweep",
        json!({}),
        json!({ "summary": summary, "rows": to_value(&rows) }),
    )
}

pub fn verify() -> (Report, Option<String>) {
    let report = verify::run_all();
    let failure = report
        .first_failure()
        .map(|c| format!("{}: {}", c.name, c.counterexample.clone().unwrap_or_default()));
    let mut out = Report::new("verify", json!({}), json!({ "checks": to_value(&report.checks) }));
    out.verified = Some(report.verified);
    (out, failure)
}

fn frame_path(out: &Path, index: usize) -> PathBuf {
    let stem = match out.extension() {
        Some(ext) if ext == "svg" => out.with_extension(""),
        _ => out.to_path_buf(),
    };
    let mut name = stem.into_os_string();
    name.push(format!("-{index:02}.svg"));
    PathBuf::from(name)
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn diagram(
    k: u32,
    r: u32,
    steps: Option<u32>,
    frames: bool,
    out: Option<PathBuf>,
) -> Result<Report, CliError> {
    let s = spec(k, r)?;
    let out = out.unwrap_or_else(|| PathBuf::from(format!("diagram-k{k}-r{r}.svg")));
    let mut written = Vec::new();
    if frames {
        for (i, svg) in render_frames(s).iter().enumerate() {
            let path = frame_path(&out, i);
            write(&path, svg)?;
            written.push(path.display().to_string());
        }
    } else {
        let scene = build_scene(s, steps).map_err(|e| CliError::Usage(e.to_string()))?;
        write(&out, &render_svg(&scene))?;
        written.push(out.display().to_string());
    }
    let poly = star_polygon(s);
    Ok(Report::new(
        "diagram",
        json!({ "k": k, "r": r, "steps": steps, "frames": frames }),
        json!({ "n": poly.n, "q": poly.q, "files": written }),
    ))
}
