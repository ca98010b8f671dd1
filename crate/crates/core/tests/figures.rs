use std::path::PathBuf;

use cuoco_core::checks::random_triangles;
use cuoco_core::circles::{circumcircle, incircle};
use cuoco_core::cuoco::{build, polygon_area};
use cuoco_core::figure::{render, FigureData, FigureKind, FigureSpec};
use cuoco_core::geometry::triangle_from_sides;
use cuoco_core::Point;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Compares against a stored document; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, svg: &str) {
    let path = fixture(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, svg).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stored, svg, "{name} drifted from its golden copy");
}

fn parse_points(attr: &str) -> Vec<Point> {
    attr.split_whitespace()
        .map(|pair| {
            let (x, y) = pair.split_once(',').unwrap();
            Point::new(x.parse().unwrap(), y.parse().unwrap())
        })
        .collect()
}

#[test]
fn golden_equilateral_cuoco() {
    let d = build(&triangle_from_sides(1.0, 1.0, 1.0).unwrap());
    let svg = render(FigureData::Decomposition(&d), &FigureSpec::new(FigureKind::Cuoco)).unwrap();
    golden("equilateral_cuoco.svg", &svg);
}

#[test]
fn golden_obtuse_cuoco() {
    let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
    let svg = render(FigureData::Decomposition(&d), &FigureSpec::new(FigureKind::CuocoObtuse)).unwrap();
    golden("obtuse_cuoco_obtuse.svg", &svg);
}

#[test]
fn golden_right_incircle() {
    let c = incircle(&triangle_from_sides(3.0, 4.0, 5.0).unwrap());
    let svg = render(FigureData::Incircle(&c), &FigureSpec::new(FigureKind::Incircle)).unwrap();
    golden("right_incircle.svg", &svg);
}

#[test]
fn golden_obtuse_euclid() {
    let t = triangle_from_sides(2.0, 3.0, 4.0).unwrap();
    let svg = render(FigureData::Triangle(&t), &FigureSpec::new(FigureKind::EuclidDefect)).unwrap();
    golden("obtuse_euclid_defect.svg", &svg);
}

#[test]
fn panel_areas_survive_rendering() {
    for t in random_triangles(11, 200) {
        let d = build(&t);
        for precision in [3u8, 6, 9] {
            let spec = FigureSpec {
                precision,
                ..FigureSpec::new(FigureKind::Cuoco)
            };
            let svg = render(FigureData::Decomposition(&d), &spec).unwrap();
            let doc = roxmltree::Document::parse(&svg).unwrap();
            let rendered: f64 = doc
                .descendants()
                .filter(|n| n.has_tag_name("polygon"))
                .filter(|n| n.attribute("class").unwrap().starts_with("panel"))
                .map(|n| polygon_area(&parse_points(n.attribute("points").unwrap())).abs())
                .sum();
            let expected: f64 = d.panels.iter().map(|p| p.signed_area.abs()).sum();
            let tol = 10f64.powi(1 - precision as i32);
            assert!(
                (rendered - expected).abs() <= tol * expected,
                "precision {precision}: {rendered} vs {expected}"
            );
        }
    }
}

#[test]
fn every_kind_parses_for_random_triangles() {
    for t in random_triangles(12, 50) {
        let d = build(&t);
        let inc = incircle(&t);
        let circ = circumcircle(&t);
        for kind in FigureKind::ALL {
            let data = match kind {
                FigureKind::EuclidDefect => FigureData::Triangle(&t),
                FigureKind::Incircle => FigureData::Incircle(&inc),
                FigureKind::Circumcircle => FigureData::Circumcircle(&circ),
                _ => FigureData::Decomposition(&d),
            };
            for palette in 0..3 {
                let spec = FigureSpec {
                    palette,
                    labels: palette != 1,
                    ..FigureSpec::new(kind)
                };
                let svg = render(data, &spec).unwrap();
                let doc = roxmltree::Document::parse(&svg).unwrap();
                assert_eq!(doc.root_element().tag_name().name(), "svg");
                assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
                for poly in doc.descendants().filter(|n| n.has_tag_name("polygon")) {
                    let n = parse_points(poly.attribute("points").unwrap()).len();
                    assert!(n == 3 || n == 4);
                }
                assert!(!svg.contains("NaN") && !svg.contains("inf"));
                if !spec.labels {
                    assert!(!svg.contains("<text"));
                }
            }
        }
    }
}

#[test]
fn element_order_is_fixed() {
    let d = build(&triangle_from_sides(2.0, 3.0, 4.0).unwrap());
    let svg = render(FigureData::Decomposition(&d), &FigureSpec::new(FigureKind::CuocoPairs)).unwrap();
    let pos = |needle: &str| svg.find(needle).unwrap_or_else(|| panic!("missing {needle}"));
    let last_square = svg.rfind("<path class=\"square").unwrap();
    assert!(last_square < pos("<polygon class=\"panel"));
    let labels: Vec<_> = ["R1", "R2", "S1", "S2", "T1", "T2"]
        .iter()
        .map(|l| pos(&format!("data-label=\"{l}\"")))
        .collect();
    assert!(labels.windows(2).all(|w| w[0] < w[1]));
    assert!(labels[5] < pos("class=\"triangle\""));
    assert!(pos("class=\"triangle\"") < pos("class=\"altitude\""));
    assert!(svg.rfind("class=\"altitude\"").unwrap() < pos("<text"));
}
