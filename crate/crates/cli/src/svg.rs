//! Static SVG figures of a scene and, optionally, a result on top of it.
//!
//! Output is deterministic: coordinates are printed with six decimals and
//! elements are emitted in index order.

use std::collections::BTreeSet;
use std::fmt::Write;

use polyguard::geom::Point;
use serde_json::Value;

use crate::error::CliError;
use crate::report::ResultDocument;
use crate::scene::{Geometry, SceneDocument};

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324", "#800000", "#000075",
];

fn color_of(c: u32) -> String {
    match PALETTE.get(c as usize - 1) {
        Some(s) => (*s).to_owned(),
        None => format!("hsl({},65%,45%)", (c * 137) % 360),
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Scene coordinates with the y axis flipped for SVG.
fn xy(p: &Point) -> (f64, f64) {
    let (x, y) = p.to_f64();
    (x, -y)
}

fn pair(p: &Point) -> String {
    let (x, y) = xy(p);
    format!("{},{}", num(x), num(y))
}

fn index_lists(v: Option<&Value>) -> Vec<Vec<usize>> {
    let Some(Value::Array(items)) = v else { return Vec::new() };
    items
        .iter()
        .filter_map(|e| e.as_array().map(|a| a.iter().filter_map(|x| x.as_u64().map(|x| x as usize)).collect()))
        .collect()
}

pub fn render(scene: &SceneDocument, result: Option<&ResultDocument>) -> Result<String, CliError> {
    if let (Some(r), Some(s)) = (result, &scene.name) {
        if let Some(rs) = &r.scene {
            if rs != s {
                return Err(CliError::input(format!("result was computed for scene {rs:?}, not {s:?}")));
            }
        }
    }
    let geometry = scene.geometry()?;
    let (rings, verts): (Vec<Vec<Point>>, Vec<Point>) = match &geometry {
        Geometry::Polygon(p) => {
            let (outer, holes) = p.input_rings();
            (std::iter::once(outer).chain(holes).collect(), p.vertices().to_vec())
        }
        Geometry::Points(pts) => (Vec::new(), pts.clone()),
        Geometry::Segments(segs) => (Vec::new(), polyguard::udvg::segment_endpoints(segs)),
    };
    if verts.is_empty() {
        return Err(CliError::input("scene has no vertices"));
    }
    let n = verts.len();
    if let Some(r) = result {
        if let Some(&g) = r.guards.iter().chain(r.colors.keys()).find(|&&g| g >= n) {
            return Err(CliError::input(format!("result names vertex {g}, but the scene has {n}")));
        }
    }

    let xs: Vec<(f64, f64)> = verts.iter().map(xy).collect();
    let (mut lo, mut hi) = (xs[0], xs[0]);
    for &(x, y) in &xs {
        lo = (lo.0.min(x), lo.1.min(y));
        hi = (hi.0.max(x), hi.1.max(y));
    }
    let size = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
    let w = (hi.0 - lo.0).max(size * 1e-3);
    let h = (hi.1 - lo.1).max(size * 1e-3);
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = size / 250.0;
    let dot = size / 120.0;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        num(lo.0 - mx),
        num(lo.1 - my),
        num(w + 2.0 * mx),
        num(h + 2.0 * my)
    )
    .unwrap();
    if let Some(name) = &scene.name {
        writeln!(s, "<title>{}</title>", escape(name)).unwrap();
    }

    if !rings.is_empty() {
        let mut d = String::new();
        for r in &rings {
            for (k, p) in r.iter().enumerate() {
                d.push_str(if k == 0 { "M" } else { " L" });
                d.push_str(&pair(p).replace(',', " "));
            }
            d.push_str(" Z ");
        }
        writeln!(
            s,
            "<path class=\"boundary\" d=\"{}\" fill=\"#d9d9d9\" fill-rule=\"evenodd\" stroke=\"#000000\" stroke-width=\"{}\"/>",
            d.trim_end(),
            num(stroke)
        )
        .unwrap();
    }
    if let Geometry::Segments(segs) = &geometry {
        for seg in segs {
            let (a, b) = (xy(&seg.a), xy(&seg.b));
            writeln!(
                s,
                "<line class=\"segment\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"{}\"/>",
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1),
                num(2.0 * stroke)
            )
            .unwrap();
        }
    }

    if let Some(r) = result {
        for e in index_lists(r.stats.get("edges")) {
            if let [a, b] = e[..] {
                if a < n && b < n {
                    writeln!(
                        s,
                        "<line class=\"edge\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#4363d8\" stroke-width=\"{}\"/>",
                        num(xs[a].0),
                        num(xs[a].1),
                        num(xs[b].0),
                        num(xs[b].1),
                        num(stroke / 2.0)
                    )
                    .unwrap();
                }
            }
        }
        if let Some(Value::Array(funnels)) = r.stats.get("max_funnels") {
            for (k, f) in funnels.iter().enumerate() {
                let chain = |key: &str| -> Vec<usize> {
                    f.get(key).and_then(Value::as_array).map_or_else(Vec::new, |a| a.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
                };
                let mut ring = chain("left");
                let right = chain("right");
                ring.extend(right.iter().rev().skip(1));
                let pts: Vec<String> = ring.iter().filter(|&&v| v < n).map(|&v| pair(&verts[v])).collect();
                writeln!(
                    s,
                    "<polygon class=\"funnel\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"/>",
                    pts.join(" "),
                    color_of(k as u32 + 1),
                    num(stroke),
                    num(4.0 * stroke),
                    num(2.0 * stroke)
                )
                .unwrap();
            }
        }
    }

    for (i, &(x, y)) in xs.iter().enumerate() {
        writeln!(
            s,
            "<circle class=\"vertex\" data-index=\"{i}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"{}\"/>",
            num(x),
            num(y),
            num(dot / 2.0),
            num(stroke / 2.0)
        )
        .unwrap();
    }

    if let Some(r) = result {
        let mut marks: Vec<(usize, Option<u32>)> = r.colors.iter().map(|(&v, &c)| (v, Some(c))).collect();
        for &g in &r.guards {
            if !r.colors.contains_key(&g) {
                marks.push((g, None));
            }
        }
        marks.sort_unstable();
        for (v, c) in &marks {
            let fill = c.map_or_else(|| "#000000".to_owned(), color_of);
            let label = c.map_or(String::new(), |c| format!(" data-color=\"{c}\""));
            writeln!(
                s,
                "<circle class=\"guard\" data-index=\"{v}\"{label} cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\" stroke=\"#000000\" stroke-width=\"{}\"/>",
                num(xs[*v].0),
                num(xs[*v].1),
                num(dot),
                num(stroke / 2.0)
            )
            .unwrap();
        }
        let classes: BTreeSet<u32> = r.colors.values().copied().collect();
        if !classes.is_empty() {
            s.push_str("<g class=\"legend\">\n");
            let font = size / 40.0;
            for (k, c) in classes.iter().enumerate() {
                let y = lo.1 + font * 1.5 * k as f64;
                writeln!(
                    s,
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                    num(lo.0),
                    num(y),
                    num(font),
                    num(font),
                    color_of(*c)
                )
                .unwrap();
                writeln!(s, "<text x=\"{}\" y=\"{}\" font-size=\"{}\">colour {c}</text>", num(lo.0 + 1.5 * font), num(y + font), num(font)).unwrap();
            }
            s.push_str("</g>\n");
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
