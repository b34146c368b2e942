//! One function per subcommand; each returns the document to write.

use std::collections::BTreeMap;
use std::path::Path;

use polyguard::decompose::cf_color_polygon_with;
use polyguard::funnel::{cf_color_funnel, funnel_from_polygon, guard_funnel_optimal, guard_funnel_simple, ruler_color, GuardColoring};
use polyguard::geom::{format_decimal, parse_decimal, Point};
use polyguard::oracle::{
    cf_assignment, cf_chromatic_number_bruteforce, chromatic_number_bruteforce, conflict_free_check, coverage_check, face_masks,
    min_guard_set_bruteforce, proper_coloring, v2v_assignment, v2v_cf_bruteforce, Method, Mode,
};
use polyguard::proper::{four_color, three_color, ColoringResult, Verdict};
use polyguard::udvg::{find_induced_k16, udvg_points, udvg_polygon, udvg_segments};
use polyguard::visibility::{visibility_graph, VisibilityGraph};
use polyguard::weakvis::{cf_color_weakvis, max_funnels, weakvis_color_bound};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::ResultDocument;
use crate::scene::{Geometry, SceneDocument};
use crate::{Algo, CfKind, Global, Output, UdvgKind};

/// Polygons up to this size are verified exactly unless sampling is forced.
const EXACT_VERIFY_LIMIT: usize = 12;

fn load(path: &Path) -> Result<SceneDocument, CliError> {
    SceneDocument::read(path)
}

fn doc(command: &str, scene: &SceneDocument) -> ResultDocument {
    ResultDocument::new(command, scene.name.as_deref())
}

fn point_json(p: &Point) -> Value {
    json!([format_decimal(&p.x), format_decimal(&p.y)])
}

fn edges_json(g: &VisibilityGraph) -> Value {
    Value::Array(g.edges().into_iter().map(|(a, b)| json!([a, b])).collect())
}

fn method_json(m: &Method) -> Value {
    match m {
        Method::ExactArrangement { faces } => json!({"kind": "exact_arrangement", "faces": faces}),
        Method::Sampled { count, seed } => json!({"kind": "sampled", "count": count, "seed": seed}),
    }
}

fn set_colors(r: &mut ResultDocument, c: &GuardColoring) {
    r.colors = c.colors.clone();
    r.guards = c.guards();
    r.count = Some(c.color_count());
}

fn assignment(col: &[u32]) -> BTreeMap<usize, u32> {
    col.iter().enumerate().filter(|(_, &c)| c > 0).map(|(v, &c)| (v, c)).collect()
}

pub fn visgraph(path: &Path) -> Result<Output, CliError> {
    let scene = load(path)?;
    let poly = scene.polygon()?;
    let g = visibility_graph(&poly);
    let mut r = doc("visgraph", &scene);
    r.count = Some(g.edge_count());
    r.stat("n", g.n()).stat("edges", edges_json(&g));
    Ok(Output::Result(r, Some(scene)))
}

pub fn guard_funnel(algo: Algo, path: &Path) -> Result<Output, CliError> {
    let scene = load(path)?;
    let f = funnel_from_polygon(&scene.polygon()?, scene.base())?;
    let (name, g) = match algo {
        Algo::Simple => ("guard funnel simple", guard_funnel_simple(&f)?),
        Algo::Optimal => ("guard funnel optimal", guard_funnel_optimal(&f)?),
    };
    let mut r = doc(name, &scene);
    r.guards = g.sorted();
    r.count = Some(g.len());
    let labels: BTreeMap<String, Value> = g.sorted().iter().map(|&v| (v.to_string(), json!(f.label(v)))).collect();
    r.stat("labels", Value::Object(labels.into_iter().collect()))
        .stat("placement_order", json!(g.guards))
        .stat("apex", f.apex_index());
    Ok(Output::Result(r, Some(scene)))
}

pub fn cfcolor(kind: CfKind, path: &Path, verify: bool, sampled: bool, g: &Global) -> Result<Output, CliError> {
    let scene = load(path)?;
    let poly = scene.polygon()?;
    let mut r;
    let coloring = match kind {
        CfKind::Funnel => {
            let f = funnel_from_polygon(&poly, scene.base())?;
            r = doc("cfcolor funnel", &scene);
            cf_color_funnel(&f)?
        }
        CfKind::Weakvis => {
            let base = scene.base().ok_or_else(|| CliError::input("cfcolor weakvis needs base_edge in the scene"))?;
            let set = max_funnels(&poly, base)?;
            let c = cf_color_weakvis(&poly, base)?;
            r = doc("cfcolor weakvis", &scene);
            let funnels: Vec<Value> =
                set.funnels.iter().map(|f| json!({"apex": f.apex_index(), "left": f.left_idx, "right": f.right_idx})).collect();
            r.stat("max_funnels", Value::Array(funnels))
                .stat("color_sets", json!(set.color_sets))
                .stat("bound", weakvis_color_bound(poly.n(), set.len()));
            c
        }
        CfKind::Polygon => {
            let pc = cf_color_polygon_with(&poly, scene.base().unwrap_or((0, 1)))?;
            r = doc("cfcolor polygon", &scene);
            r.stat("nodes", pc.decomposition.len())
                .stat("ordinary_colors", pc.ordinary_colors)
                .stat("forward_colors", pc.forward_colors)
                .stat("bound", pc.bound());
            pc.coloring
        }
    };
    set_colors(&mut r, &coloring);
    if verify {
        let mode = if sampled || poly.n() > EXACT_VERIFY_LIMIT { Mode::Sampled { samples: g.samples, seed: g.seed } } else { Mode::Exact };
        let rep = conflict_free_check(&poly, &coloring, mode)?;
        r.verdict = if rep.conflict_free && rep.covered { "conflict_free" } else { "conflicts" }.to_owned();
        r.stat(
            "verification",
            json!({
                "method": method_json(&rep.method),
                "covered": rep.covered,
                "violations": rep.violations,
                "witness": rep.witness.as_ref().map(point_json),
            }),
        );
    }
    Ok(Output::Result(r, Some(scene)))
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Colorable => "colorable",
        Verdict::NotColorable => "not_colorable",
        Verdict::Indeterminate => "indeterminate",
    }
}

pub fn proper_color(k: u32, path: &Path) -> Result<Output, CliError> {
    let scene = load(path)?;
    let poly = scene.polygon()?;
    poly.require_simple()?;
    let res: ColoringResult = if k == 3 { three_color(&poly)? } else { four_color(&visibility_graph(&poly))? };
    let mut r = doc(&format!("color {k}"), &scene);
    r.verdict = verdict_name(res.verdict).to_owned();
    if let Some(a) = &res.assignment {
        r.colors = assignment(a);
        r.count = Some(*a.iter().max().unwrap_or(&0) as usize);
    }
    r.stat("stalled", res.stalled);
    Ok(Output::Result(r, Some(scene)))
}

pub fn ruler(t: usize) -> Output {
    let seq = ruler_color(t);
    let text: Vec<String> = seq.iter().map(u32::to_string).collect();
    let mut r = ResultDocument::new("color ruler", None);
    r.count = Some(t);
    r.stat("sequence", json!(seq));
    Output::Text(text.join(" ") + "\n", Some(r))
}

pub fn udvg(kind: UdvgKind, path: &Path, g: &Global) -> Result<Output, CliError> {
    let scene = load(path)?;
    let t = parse_decimal(&g.threshold)?;
    let geometry = scene.geometry()?;
    let (name, u) = match (kind, geometry) {
        (UdvgKind::Points, Geometry::Points(p)) => ("udvg points", udvg_points(&p, &t)?),
        (UdvgKind::Segments, Geometry::Segments(s)) => ("udvg segments", udvg_segments(&s, &t)?),
        (UdvgKind::Polygon, Geometry::Polygon(p)) => ("udvg polygon", udvg_polygon(&p, &t)?),
        _ => return Err(CliError::input("scene kind does not match the udvg variant")),
    };
    let mut r = doc(name, &scene);
    r.count = Some(u.graph.edge_count());
    let star = find_induced_k16(&u.graph).map(|(c, leaves)| json!({"center": c, "leaves": leaves}));
    r.stat("threshold", format_decimal(&u.threshold))
        .stat("n", u.graph.n())
        .stat("edges", edges_json(&u.graph))
        .stat("induced_k16", star.unwrap_or(Value::Null));
    Ok(Output::Result(r, Some(scene)))
}

pub fn min_guards(path: &Path, limit: usize) -> Result<Output, CliError> {
    let scene = load(path)?;
    let guards = min_guard_set_bruteforce(&scene.polygon()?, limit)?;
    let mut r = doc("oracle min-guards", &scene);
    r.count = Some(guards.len());
    r.guards = guards;
    Ok(Output::Result(r, Some(scene)))
}

fn optimum(r: &mut ResultDocument, found: Option<u32>, col: Option<Vec<u32>>) {
    match found {
        Some(k) => {
            r.count = Some(k as usize);
            if let Some(c) = col {
                r.colors = assignment(&c);
                r.guards = r.colors.keys().copied().collect();
            }
        }
        None => r.verdict = "exceeds_max".to_owned(),
    }
}

pub fn cf_number(path: &Path, kmax: u32, limit: usize) -> Result<Output, CliError> {
    let scene = load(path)?;
    let poly = scene.polygon()?;
    let k = cf_chromatic_number_bruteforce(&poly, kmax, limit)?;
    let col = k.and_then(|k| face_masks(&poly).ok().and_then(|m| cf_assignment(poly.n(), &m, k)));
    let mut r = doc("oracle cf-number", &scene);
    optimum(&mut r, k, col);
    r.stat("kmax", kmax);
    Ok(Output::Result(r, Some(scene)))
}

pub fn chromatic(path: &Path, kmax: u32) -> Result<Output, CliError> {
    let scene = load(path)?;
    let g = visibility_graph(&scene.polygon()?);
    let k = chromatic_number_bruteforce(&g, kmax)?;
    let col = k.and_then(|k| proper_coloring(&g, k));
    let mut r = doc("oracle chromatic", &scene);
    optimum(&mut r, k, col);
    r.guards.clear();
    r.stat("kmax", kmax);
    Ok(Output::Result(r, Some(scene)))
}

pub fn v2vcf(path: &Path, cmax: u32, limit: usize) -> Result<Output, CliError> {
    let scene = load(path)?;
    let g = visibility_graph(&scene.polygon()?);
    let k = v2v_cf_bruteforce(&g, cmax, limit)?;
    let col = k.and_then(|k| v2v_assignment(&g, k, &[]));
    let mut r = doc("oracle v2vcf", &scene);
    optimum(&mut r, k, col);
    r.stat("cmax", cmax);
    Ok(Output::Result(r, Some(scene)))
}

pub fn coverage(path: &Path, guards: &[usize], sampled: bool, g: &Global) -> Result<Output, CliError> {
    let scene = load(path)?;
    let poly = scene.polygon()?;
    let mode = if sampled { Mode::Sampled { samples: g.samples, seed: g.seed } } else { Mode::Exact };
    let rep = coverage_check(&poly, guards, mode)?;
    let mut r = doc("oracle coverage", &scene);
    r.guards = guards.to_vec();
    r.verdict = if rep.covered { "covered" } else { "not_covered" }.to_owned();
    r.stat("method", method_json(&rep.method)).stat("witness", rep.witness.as_ref().map(point_json));
    Ok(Output::Result(r, Some(scene)))
}

pub fn render(path: &Path, result: Option<&Path>) -> Result<Output, CliError> {
    let scene = load(path)?;
    let res = result.map(ResultDocument::read).transpose()?;
    Ok(Output::Text(crate::svg::render(&scene, res.as_ref())?, None))
}
