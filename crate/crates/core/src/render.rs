//! Deterministic SVG drawings of the mod-10 circle and subsequence diagrams.
//!
//! Point `p` of the circle carries the label `F_p mod 10`. Point 0 is at the
//! top and indices run clockwise, 6° apart. All coordinates are rounded to
//! three decimals when written, so identical scenes give identical bytes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::modfib::fib10;
use crate::subseq::{star_polygon, SubsequenceSpec, CIRCLE};

pub const CANVAS: f64 = 600.0;
pub const RADIUS: f64 = 240.0;
pub const LABEL_RADIUS: f64 = 264.0;
const TICK_OUTER: f64 = 252.0;

const CIRCLE_STROKE: &str = "#1f4fd8";
const EDGE_STROKE: &str = "#000000";

#[derive(Debug, Clone, PartialEq)]
pub struct CircleLayout {
    pub center: (f64, f64),
    pub radius: f64,
    pub label_radius: f64,
    /// Screen position of each of the 60 circle points.
    pub points: Vec<(f64, f64)>,
    /// Screen position of each label.
    pub label_points: Vec<(f64, f64)>,
    pub labels: Vec<u8>,
}

/// Angle of point `p` in degrees, standard math convention.
pub fn angle_deg(p: u32) -> f64 {
    90.0 - 6.0 * f64::from(p)
}

fn polar(center: (f64, f64), radius: f64, p: u32) -> (f64, f64) {
    let theta = angle_deg(p).to_radians();
    // SVG's y axis points down.
    (center.0 + radius * theta.cos(), center.1 - radius * theta.sin())
}

impl CircleLayout {
    pub fn standard() -> Self {
        let center = (CANVAS / 2.0, CANVAS / 2.0);
        Self {
            center,
            radius: RADIUS,
            label_radius: LABEL_RADIUS,
            points: (0..CIRCLE).map(|p| polar(center, RADIUS, p)).collect(),
            label_points: (0..CIRCLE).map(|p| polar(center, LABEL_RADIUS, p)).collect(),
            labels: (0..CIRCLE).map(|p| fib10(i64::from(p))).collect(),
        }
    }

    pub fn point(&self, p: u32) -> (f64, f64) {
        self.points[p as usize]
    }
}

impl Default for CircleLayout {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramScene {
    pub layout: CircleLayout,
    pub spec: SubsequenceSpec,
    /// Edge `j` joins circle points `k + rj` and `k + r(j+1)` (mod 60).
    pub edges: Vec<(u32, u32)>,
    pub step_limit: Option<u32>,
    /// Circle points of a sub-polygon drawn bold on top of the edges.
    pub highlight: Option<Vec<u32>>,
}

impl DiagramScene {
    pub fn with_highlight(mut self, vertices: Vec<u32>) -> Self {
        self.highlight = Some(vertices);
        self
    }
}

pub fn build_scene(spec: SubsequenceSpec, step_limit: Option<u32>) -> Result<DiagramScene> {
    let n = star_polygon(spec).n;
    let count = match step_limit {
        None => n,
        Some(s) if (1..=n).contains(&s) => s,
        Some(s) => {
            return Err(Error::InvalidArgument(format!(
                "step limit {s} outside [1, {n}] for r={}",
                spec.r()
            )))
        }
    };
    let edges = (0..u64::from(count))
        .map(|j| (spec.index(j), spec.index(j + 1)))
        .collect();
    Ok(DiagramScene {
        layout: CircleLayout::standard(),
        spec,
        edges,
        step_limit,
        highlight: None,
    })
}

/// Formats to three decimals, never printing `-0.000`.
fn q3(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.3}")
}

pub fn render_svg(scene: &DiagramScene) -> Vec<u8> {
    let lay = &scene.layout;
    let mut s = String::with_capacity(16 * 1024);
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">",
        c = CANVAS
    );
    let _ = writeln!(
        s,
        "<title>F(n) mod 10 subsequence k={} r={}</title>",
        scene.spec.k(),
        scene.spec.r()
    );
    let _ = writeln!(
        s,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{CIRCLE_STROKE}\" stroke-width=\"2\"/>",
        q3(lay.center.0),
        q3(lay.center.1),
        q3(lay.radius)
    );

    s.push_str("<g class=\"ticks\" stroke=\"#000000\" stroke-width=\"1\">\n");
    let tick_scale = TICK_OUTER / RADIUS;
    for &(x, y) in &lay.points {
        let ox = lay.center.0 + (x - lay.center.0) * tick_scale;
        let oy = lay.center.1 + (y - lay.center.1) * tick_scale;
        let _ = writeln!(s, "<path d=\"M {} {} L {} {}\"/>", q3(x), q3(y), q3(ox), q3(oy));
    }
    s.push_str("</g>\n");

    s.push_str(
        "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"central\">\n",
    );
    for (p, (&(x, y), label)) in lay.label_points.iter().zip(&lay.labels).enumerate() {
        let _ = writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" data-index=\"{p}\">{label}</text>",
            q3(x),
            q3(y)
        );
    }
    s.push_str("</g>\n");

    let _ = writeln!(
        s,
        "<g class=\"edges\" stroke=\"{EDGE_STROKE}\" stroke-width=\"1.5\" stroke-linecap=\"round\">"
    );
    for &(a, b) in &scene.edges {
        let (x1, y1) = lay.point(a);
        let (x2, y2) = lay.point(b);
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            q3(x1),
            q3(y1),
            q3(x2),
            q3(y2)
        );
    }
    s.push_str("</g>\n");

    if let Some(vertices) = &scene.highlight {
        let _ = writeln!(
            s,
            "<g class=\"highlight\" fill=\"none\" stroke=\"{EDGE_STROKE}\" stroke-width=\"4\" stroke-linejoin=\"round\">"
        );
        let pts: Vec<String> = vertices
            .iter()
            .map(|&p| {
                let (x, y) = lay.point(p % CIRCLE);
                format!("{},{}", q3(x), q3(y))
            })
            .collect();
        let _ = writeln!(s, "<polygon points=\"{}\"/>", pts.join(" "));
        s.push_str("</g>\n");
    }

    s.push_str("</svg>\n");
    s.into_bytes()
}

/// One drawing per construction step: frame `s` shows the first `s + 1`
/// edges, the last frame is the closed diagram.
pub fn render_frames(spec: SubsequenceSpec) -> Vec<Vec<u8>> {
    let n = star_polygon(spec).n;
    (1..=n)
        .map(|s| {
            let scene = build_scene(spec, Some(s)).expect("step within [1, n]");
            render_svg(&scene)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(k: u32, r: u32) -> SubsequenceSpec {
        SubsequenceSpec::new(k, r).unwrap()
    }

    fn count(svg: &[u8], needle: &str) -> usize {
        std::str::from_utf8(svg).unwrap().matches(needle).count()
    }

    #[test]
    fn scene_edge_counts() {
        assert_eq!(build_scene(spec(3, 25), None).unwrap().edges.len(), 12);
        assert_eq!(build_scene(spec(9, 13), Some(10)).unwrap().edges.len(), 10);
        let diam = build_scene(spec(0, 30), None).unwrap();
        assert_eq!(diam.edges, vec![(0, 30), (30, 0)]);
    }

    #[test]
    fn step_limit_bounds() {
        assert!(build_scene(spec(3, 25), Some(0)).is_err());
        assert!(build_scene(spec(3, 25), Some(13)).is_err());
        assert!(build_scene(spec(3, 25), Some(12)).is_ok());
    }

    #[test]
    fn orientation() {
        let lay = CircleLayout::standard();
        let (x0, y0) = lay.point(0);
        assert_eq!((q3(x0), q3(y0)), ("300.000".into(), "60.000".into()));
        let (x15, y15) = lay.point(15);
        assert_eq!((q3(x15), q3(y15)), ("540.000".into(), "300.000".into()));
        assert!(lay.point(1).0 > 300.0);
    }

    #[test]
    fn line_elements_are_edges_only() {
        let svg = render_svg(&build_scene(spec(3, 25), None).unwrap());
        assert_eq!(count(&svg, "<line "), 12);
        assert_eq!(count(&svg, "<path "), 60);
        assert_eq!(count(&svg, "<text "), 60);
        assert!(!std::str::from_utf8(&svg).unwrap().contains("-0.000"));
    }

    #[test]
    fn highlight_is_extra_pass() {
        let scene = build_scene(spec(0, 15), None)
            .unwrap()
            .with_highlight(vec![0, 15, 30, 45]);
        let svg = render_svg(&scene);
        assert_eq!(count(&svg, "<polygon "), 1);
        assert_eq!(count(&svg, "<line "), 4);
    }

    #[test]
    fn frames_close() {
        let frames = render_frames(spec(0, 12));
        assert_eq!(frames.len(), 5);
        let full = render_svg(&build_scene(spec(0, 12), None).unwrap());
        assert_eq!(frames.last().unwrap(), &full);
    }
}
