//! Deterministic SVG drawings of the constructions.
//!
//! Geometry is written in mathematical coordinates inside a single
//! `scale(1,-1)` group; text is placed outside that group with its `y`
//! negated so it is not mirrored. Elements always appear in the order
//! squares, panels (sorted by label), triangle, altitude lines, labels.

use std::fmt::Write;
use std::str::FromStr;

use crate::circles::{CircumcircleData, IncircleData};
use crate::cuoco::{build, CuocoDecomposition, PanelLabel};
use crate::error::FigureError;
use crate::geometry::{foot_of_altitude, Point, Triangle, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureKind {
    /// Euclid's rectangle `BC × BD` on the square over `BC`.
    EuclidDefect,
    /// Squares cut by the extended altitudes.
    Cuoco,
    /// Same cut, panels coloured by equal-area class.
    CuocoPairs,
    /// Class colouring plus overrunning panels outlined.
    CuocoObtuse,
    Incircle,
    Circumcircle,
}

impl FigureKind {
    pub const ALL: [FigureKind; 6] = [
        FigureKind::EuclidDefect,
        FigureKind::Cuoco,
        FigureKind::CuocoPairs,
        FigureKind::CuocoObtuse,
        FigureKind::Incircle,
        FigureKind::Circumcircle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::EuclidDefect => "euclid_defect",
            FigureKind::Cuoco => "cuoco",
            FigureKind::CuocoPairs => "cuoco_pairs",
            FigureKind::CuocoObtuse => "cuoco_obtuse",
            FigureKind::Incircle => "incircle",
            FigureKind::Circumcircle => "circumcircle",
        }
    }
}

impl FromStr for FigureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown figure kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FigureSpec {
    pub kind: FigureKind,
    /// Index into the built-in palettes, taken modulo their count.
    pub palette: usize,
    pub labels: bool,
    /// Decimal places for coordinates, 1..=12.
    pub precision: u8,
    /// Drop zero-area panels instead of drawing them as segments.
    pub omit_degenerate: bool,
}

impl FigureSpec {
    pub fn new(kind: FigureKind) -> Self {
        Self {
            kind,
            palette: 0,
            labels: true,
            precision: 6,
            omit_degenerate: false,
        }
    }
}

/// What can be drawn.
#[derive(Debug, Clone, Copy)]
pub enum FigureData<'a> {
    Triangle(&'a Triangle),
    Decomposition(&'a CuocoDecomposition),
    Incircle(&'a IncircleData),
    Circumcircle(&'a CircumcircleData),
}

impl FigureData<'_> {
    fn name(&self) -> &'static str {
        match self {
            FigureData::Triangle(_) => "a triangle",
            FigureData::Decomposition(_) => "a decomposition",
            FigureData::Incircle(_) => "incircle data",
            FigureData::Circumcircle(_) => "circumcircle data",
        }
    }
}

struct Palette {
    stroke: &'static str,
    square: &'static str,
    panel: &'static str,
    classes: [&'static str; 3],
    negative: &'static str,
    accent: &'static str,
}

const PALETTES: [Palette; 3] = [
    Palette {
        stroke: "#222222",
        square: "#f4f4f4",
        panel: "#d9e6f2",
        classes: ["#e8a87c", "#85c1a8", "#9fb4e0"],
        negative: "#c0392b",
        accent: "#8e44ad",
    },
    Palette {
        stroke: "#000000",
        square: "#ffffff",
        panel: "#dddddd",
        classes: ["#bbbbbb", "#999999", "#777777"],
        negative: "#000000",
        accent: "#444444",
    },
    Palette {
        stroke: "#1b2631",
        square: "#fdfefe",
        panel: "#fcf3cf",
        classes: ["#f5b041", "#58d68d", "#5dade2"],
        negative: "#e74c3c",
        accent: "#2e86c1",
    },
];

/// Renders `data` according to `spec`. The output depends only on the inputs.
pub fn render(data: FigureData<'_>, spec: &FigureSpec) -> Result<String, FigureError> {
    if !(1..=12).contains(&spec.precision) {
        return Err(FigureError::InvalidPrecision(spec.precision));
    }
    let mismatch = || FigureError::KindMismatch {
        kind: spec.kind.name(),
        data: data.name(),
    };
    let mut canvas = Canvas::new(spec);
    match (spec.kind, data) {
        (FigureKind::EuclidDefect, FigureData::Triangle(t)) => draw_euclid(&mut canvas, t),
        (FigureKind::Cuoco | FigureKind::CuocoPairs | FigureKind::CuocoObtuse, FigureData::Decomposition(d)) => {
            draw_cuoco(&mut canvas, d)
        }
        (FigureKind::Incircle, FigureData::Incircle(c)) => draw_incircle(&mut canvas, c),
        (FigureKind::Circumcircle, FigureData::Circumcircle(c)) => draw_circumcircle(&mut canvas, c),
        _ => return Err(mismatch()),
    }
    Ok(canvas.finish())
}

/// Collects elements and the bounding box, then writes the document.
struct Canvas<'s> {
    spec: &'s FigureSpec,
    min: Point,
    max: Point,
    geometry: String,
    labels: Vec<(Point, String, &'static str)>,
}

impl<'s> Canvas<'s> {
    fn new(spec: &'s FigureSpec) -> Self {
        Self {
            spec,
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
            geometry: String::new(),
            labels: Vec::new(),
        }
    }

    fn num(&self, v: f64) -> String {
        fmt_num(v, self.spec.precision)
    }

    fn include(&mut self, p: Point) {
        self.min = Point::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    fn points_attr(&mut self, pts: &[Point]) -> String {
        pts.iter().for_each(|&p| self.include(p));
        pts.iter()
            .map(|p| format!("{},{}", self.num(p.x), self.num(p.y)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn path(&mut self, class: &str, pts: &[Point]) {
        pts.iter().for_each(|&p| self.include(p));
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let cmd = if i == 0 { "M" } else { "L" };
            let _ = write!(d, "{cmd}{} {} ", self.num(p.x), self.num(p.y));
        }
        d.push('Z');
        let _ = writeln!(self.geometry, r#"<path class="{class}" d="{d}"/>"#);
    }

    fn polygon(&mut self, class: &str, pts: &[Point], extra: &str) {
        let points = self.points_attr(pts);
        let _ = writeln!(self.geometry, r#"<polygon class="{class}"{extra} points="{points}"/>"#);
    }

    fn line(&mut self, class: &str, p: Point, q: Point) {
        self.include(p);
        self.include(q);
        let _ = writeln!(
            self.geometry,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            self.num(p.x),
            self.num(p.y),
            self.num(q.x),
            self.num(q.y)
        );
    }

    fn circle(&mut self, class: &str, center: Point, r: f64) {
        self.include(Point::new(center.x - r, center.y - r));
        self.include(Point::new(center.x + r, center.y + r));
        let _ = writeln!(
            self.geometry,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            self.num(center.x),
            self.num(center.y),
            self.num(r)
        );
    }

    fn dot(&mut self, class: &str, p: Point) {
        let r = self.extent() * 0.008;
        let _ = writeln!(
            self.geometry,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            self.num(p.x),
            self.num(p.y),
            self.num(r)
        );
    }

    fn label(&mut self, at: Point, text: impl Into<String>, class: &'static str) {
        if self.spec.labels {
            self.labels.push((at, text.into(), class));
        }
    }

    fn extent(&self) -> f64 {
        let w = self.max.x - self.min.x;
        let h = self.max.y - self.min.y;
        let e = w.max(h);
        if e.is_finite() && e > 0.0 {
            e
        } else {
            1.0
        }
    }

    fn finish(self) -> String {
        let palette = &PALETTES[self.spec.palette % PALETTES.len()];
        let extent = self.extent();
        let margin = 0.05 * extent;
        let (x0, y0) = (self.min.x - margin, -self.max.y - margin);
        let w = self.max.x - self.min.x + 2.0 * margin;
        let h = self.max.y - self.min.y + 2.0 * margin;
        let px_w = 800.0;
        let px_h = px_w * h / w;
        let stroke = extent * 0.004;
        let font = extent * 0.035;

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
            self.num(x0),
            self.num(y0),
            self.num(w),
            self.num(h),
            fmt_num(px_w, 1),
            fmt_num(px_h, 1)
        );
        let _ = writeln!(
            out,
            r#"<defs><pattern id="hatch" patternUnits="userSpaceOnUse" width="{s}" height="{s}" patternTransform="rotate(45)"><rect width="{s}" height="{s}" fill="{bg}"/><line x1="0" y1="0" x2="0" y2="{s}" stroke="{neg}" stroke-width="{sw}"/></pattern></defs>"#,
            s = self.num(extent * 0.02),
            bg = palette.square,
            neg = palette.negative,
            sw = self.num(stroke * 1.5),
        );
        let dash = format!("{} {}", self.num(extent * 0.02), self.num(extent * 0.01));
        out.push_str(&style(
            self.spec.kind,
            palette,
            &self.num(stroke),
            &self.num(font),
            &dash,
        ));
        out.push_str("<g transform=\"scale(1,-1)\">\n");
        out.push_str(&self.geometry);
        out.push_str("</g>\n");
        for (p, text, class) in &self.labels {
            let _ = writeln!(
                out,
                r#"<text class="{class}" x="{}" y="{}">{}</text>"#,
                self.num(p.x),
                self.num(-p.y),
                escape(text)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn style(kind: FigureKind, p: &Palette, stroke: &str, font: &str, dash: &str) -> String {
    let mut s = String::from("<style>\n");
    let _ = writeln!(
        s,
        ".square {{ fill: {}; stroke: {}; stroke-width: {stroke}; }}",
        p.square, p.stroke
    );
    let _ = writeln!(
        s,
        ".panel {{ fill: {}; stroke: {}; stroke-width: {stroke}; fill-opacity: 0.8; }}",
        p.panel, p.stroke
    );
    if matches!(
        kind,
        FigureKind::CuocoPairs | FigureKind::CuocoObtuse | FigureKind::EuclidDefect
    ) {
        for (name, fill) in ["R", "S", "T"].iter().zip(p.classes) {
            let _ = writeln!(s, ".pair-{name} {{ fill: {fill}; }}");
        }
    }
    let _ = writeln!(s, ".negative {{ fill: url(#hatch); stroke: {}; }}", p.negative);
    if kind == FigureKind::CuocoObtuse {
        let _ = writeln!(s, ".overrun {{ stroke: {}; stroke-dasharray: {dash}; }}", p.accent);
        let _ = writeln!(s, ".square {{ fill-opacity: 0.3; }}");
    }
    let _ = writeln!(
        s,
        ".triangle {{ fill: none; stroke: {}; stroke-width: {stroke}; }}",
        p.stroke
    );
    let _ = writeln!(
        s,
        ".altitude, .radius, .extension {{ stroke: {}; stroke-width: {stroke}; stroke-dasharray: {dash}; }}",
        p.accent
    );
    let _ = writeln!(
        s,
        ".incircle, .circumcircle {{ fill: none; stroke: {}; stroke-width: {stroke}; }}",
        p.accent
    );
    let _ = writeln!(s, ".point, .tangent-point, .center {{ fill: {}; }}", p.stroke);
    let _ = writeln!(
        s,
        "text {{ font-family: sans-serif; font-size: {font}px; fill: {}; }}",
        p.stroke
    );
    let _ = writeln!(s, ".value {{ font-size: 75%; }}");
    s.push_str("</style>\n");
    s
}

fn draw_cuoco(canvas: &mut Canvas<'_>, d: &CuocoDecomposition) {
    let kind = canvas.spec.kind;
    let t = &d.triangle;
    let m = &d.metrics;
    let scale = 1f64.max(m.a * m.a).max(m.b * m.b).max(m.c * m.c);
    for sq in &d.squares {
        canvas.path(&format!("square side-{}", sq.side.side_name()), &sq.vertices);
    }
    for panel in &d.panels {
        let degenerate = panel.signed_area.abs() <= 1e-12 * scale;
        if degenerate && canvas.spec.omit_degenerate {
            continue;
        }
        let mut class = format!("panel pair-{}", panel.label.pair().name());
        if panel.signed_area < 0.0 && !degenerate {
            class.push_str(" negative");
        }
        if degenerate {
            class.push_str(" degenerate");
        }
        if kind == FigureKind::CuocoObtuse && !d.panel_within_host(panel.label, 1e-9) {
            class.push_str(" overrun");
        }
        let extra = format!(
            r#" data-label="{}" data-area="{}""#,
            panel.label,
            canvas.num(panel.signed_area)
        );
        canvas.polygon(&class, &panel.quad, &extra);
    }
    canvas.polygon("triangle", &t.vertices(), "");
    for v in Vertex::ALL {
        let (foot, _) = foot_of_altitude(t, v);
        let sq = d.square(v);
        let out = sq.vertices[2] - sq.vertices[1];
        canvas.line("altitude", t.vertex(v), foot + out);
    }
    label_vertices(canvas, t);
    for panel in &d.panels {
        let q = panel.quad;
        let centre = Point::new(
            (q[0].x + q[1].x + q[2].x + q[3].x) / 4.0,
            (q[0].y + q[1].y + q[2].y + q[3].y) / 4.0,
        );
        canvas.label(centre, panel.label.name(), "label panel-label");
    }
}

fn draw_euclid(canvas: &mut Canvas<'_>, t: &Triangle) {
    let d = build(t);
    let sq = d.square(Vertex::A);
    canvas.path("square side-a", &sq.vertices);
    let panel = d.panel(PanelLabel::T2);
    let mut class = String::from("panel pair-T");
    if panel.signed_area < 0.0 {
        class.push_str(" negative");
    }
    let extra = format!(r#" data-label="BC*BD" data-area="{}""#, canvas.num(panel.signed_area));
    canvas.polygon(&class, &panel.quad, &extra);
    canvas.polygon("triangle", &t.vertices(), "");
    let (foot, tparam) = foot_of_altitude(t, Vertex::A);
    canvas.line("altitude", t.vertex(Vertex::A), foot);
    if !(0.0..=1.0).contains(&tparam) {
        let near = if tparam < 0.0 {
            t.vertex(Vertex::B)
        } else {
            t.vertex(Vertex::C)
        };
        canvas.line("extension", near, foot);
    }
    label_vertices(canvas, t);
    canvas.label(foot, "D", "label point-label");
}

fn draw_incircle(canvas: &mut Canvas<'_>, c: &IncircleData) {
    let t = &c.triangle;
    canvas.polygon("triangle", &t.vertices(), "");
    canvas.circle("incircle", c.center, c.radius);
    for p in c.tangent_points {
        canvas.dot("tangent-point", p);
    }
    canvas.dot("center", c.center);
    label_vertices(canvas, t);
    for v in Vertex::ALL {
        let p = t.vertex(v);
        for side in [v.prev(), v.next()] {
            let mid = p.midpoint(c.tangent_points[side.index()]);
            let text = canvas.num(c.tangent_lengths[v.index()]);
            canvas.label(mid, text, "label value");
        }
    }
}

fn draw_circumcircle(canvas: &mut Canvas<'_>, c: &CircumcircleData) {
    let t = &c.triangle;
    canvas.polygon("triangle", &t.vertices(), "");
    canvas.circle("circumcircle", c.center, c.radius);
    for p in t.vertices() {
        canvas.line("radius", c.center, p);
    }
    canvas.dot("center", c.center);
    label_vertices(canvas, t);
    canvas.label(c.center, "O", "label point-label");
    for v in Vertex::ALL {
        let s = c.splits[v.index()];
        let at = t.vertex(v);
        let text = format!("{} | {}", canvas.num(s.toward_next), canvas.num(s.toward_prev));
        canvas.label(at.lerp(c.center, 0.25), text, "label value");
    }
}

fn label_vertices(canvas: &mut Canvas<'_>, t: &Triangle) {
    for v in Vertex::ALL {
        canvas.label(t.vertex(v), v.name(), "label vertex-label");
    }
}

/// Fixed-point formatting with negative zero folded to zero.
pub fn fmt_num(v: f64, precision: u8) -> String {
    let s = format!("{:.*}", precision as usize, v);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::triangle_from_sides;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(-0.0000001, 3), "0.000");
        assert_eq!(fmt_num(-1.5, 2), "-1.50");
        assert_eq!(fmt_num(2.0, 1), "2.0");
    }

    #[test]
    fn kind_mismatch() {
        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        let err = render(FigureData::Triangle(&t), &FigureSpec::new(FigureKind::Cuoco)).unwrap_err();
        assert!(matches!(err, FigureError::KindMismatch { kind: "cuoco", .. }));
    }

    #[test]
    fn precision_bounds() {
        let t = triangle_from_sides(1.0, 1.0, 1.0).unwrap();
        for p in [0, 13] {
            let spec = FigureSpec {
                precision: p,
                ..FigureSpec::new(FigureKind::EuclidDefect)
            };
            assert_eq!(
                render(FigureData::Triangle(&t), &spec),
                Err(FigureError::InvalidPrecision(p))
            );
        }
    }

    #[test]
    fn kind_names_roundtrip() {
        for k in FigureKind::ALL {
            assert_eq!(k.name().parse::<FigureKind>().unwrap(), k);
        }
        assert!("hexagon".parse::<FigureKind>().is_err());
    }

    #[test]
    fn equilateral_counts() {
        let d = build(&triangle_from_sides(1.0, 1.0, 1.0).unwrap());
        let svg = render(FigureData::Decomposition(&d), &FigureSpec::new(FigureKind::Cuoco)).unwrap();
        assert_eq!(svg.matches("<path class=\"square").count(), 3);
        assert_eq!(svg.matches("<polygon class=\"panel").count(), 6);
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }

    #[test]
    fn right_triangle_degenerate_panels() {
        let d = build(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
        let spec = FigureSpec::new(FigureKind::Cuoco);
        let svg = render(FigureData::Decomposition(&d), &spec).unwrap();
        assert_eq!(svg.matches("degenerate").count(), 2);
        let spec = FigureSpec {
            omit_degenerate: true,
            ..spec
        };
        let svg = render(FigureData::Decomposition(&d), &spec).unwrap();
        assert_eq!(svg.matches("<polygon class=\"panel").count(), 4);
    }

    #[test]
    fn obtuse_panels_hatched() {
        let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
        let svg = render(FigureData::Decomposition(&d), &FigureSpec::new(FigureKind::CuocoObtuse)).unwrap();
        assert_eq!(svg.matches("panel pair-R negative").count(), 2);
        assert!(svg.contains("overrun"));
    }
}
