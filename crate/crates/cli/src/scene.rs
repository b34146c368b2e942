//! Scene documents: input geometry with decimal-string coordinates.

use std::path::Path;

use polyguard::geom::{format_decimal, parse_decimal, Point, Polygon, Segment};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type Coord = [String; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SceneKind {
    Polygon,
    PolygonWithHoles,
    Points,
    Segments,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneDocument {
    pub kind: SceneKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outer: Vec<Coord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub holes: Vec<Vec<Coord>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Coord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<[Coord; 2]>,
    /// Edge from outer vertex `i` to vertex `i + 1` (cyclically).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_edge: Option<usize>,
}

/// Parsed geometry of a scene.
#[derive(Debug, Clone)]
pub enum Geometry {
    Polygon(Polygon),
    Points(Vec<Point>),
    Segments(Vec<Segment>),
}

fn point(c: &Coord) -> Result<Point, CliError> {
    Ok(Point::parse(&c[0], &c[1])?)
}

fn canon(c: &Coord) -> Result<Coord, CliError> {
    Ok([format_decimal(&parse_decimal(&c[0])?), format_decimal(&parse_decimal(&c[1])?)])
}

impl SceneDocument {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: SceneDocument = serde_json::from_str(text).map_err(|e| CliError::input(format!("scene: {e}")))?;
        doc.check_schema()?;
        Ok(doc)
    }

    fn check_schema(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::input(format!("scene: {m}")));
        let polygonal = matches!(self.kind, SceneKind::Polygon | SceneKind::PolygonWithHoles);
        if polygonal && self.outer.is_empty() {
            return bad("polygon scenes need an outer ring");
        }
        if !polygonal && (!self.outer.is_empty() || !self.holes.is_empty()) {
            return bad("outer and holes are only allowed in polygon scenes");
        }
        if self.kind == SceneKind::Polygon && !self.holes.is_empty() {
            return bad("kind polygon cannot have holes; use polygon_with_holes");
        }
        if self.kind != SceneKind::Points && !self.points.is_empty() {
            return bad("points are only allowed in points scenes");
        }
        if self.kind != SceneKind::Segments && !self.segments.is_empty() {
            return bad("segments are only allowed in segments scenes");
        }
        if let Some(b) = self.base_edge {
            if !polygonal || b >= self.outer.len() {
                return bad("base_edge must index an edge of the outer ring");
            }
        }
        Ok(())
    }

    pub fn geometry(&self) -> Result<Geometry, CliError> {
        Ok(match self.kind {
            SceneKind::Polygon | SceneKind::PolygonWithHoles => {
                let outer = self.outer.iter().map(point).collect::<Result<_, _>>()?;
                let holes = self.holes.iter().map(|h| h.iter().map(point).collect()).collect::<Result<_, _>>()?;
                Geometry::Polygon(Polygon::new(outer, holes)?)
            }
            SceneKind::Points => Geometry::Points(self.points.iter().map(point).collect::<Result<_, _>>()?),
            SceneKind::Segments => Geometry::Segments(
                self.segments.iter().map(|[a, b]| Ok(Segment::new(point(a)?, point(b)?)?)).collect::<Result<_, CliError>>()?,
            ),
        })
    }

    pub fn polygon(&self) -> Result<Polygon, CliError> {
        match self.geometry()? {
            Geometry::Polygon(p) => Ok(p),
            _ => Err(CliError::input("this command needs a polygon scene")),
        }
    }

    /// Base edge as a vertex pair.
    pub fn base(&self) -> Option<(usize, usize)> {
        self.base_edge.map(|i| (i, (i + 1) % self.outer.len()))
    }

    /// Same scene with every coordinate in canonical decimal form.
    pub fn canonical(&self) -> Result<Self, CliError> {
        Ok(SceneDocument {
            outer: self.outer.iter().map(canon).collect::<Result<_, _>>()?,
            holes: self.holes.iter().map(|h| h.iter().map(canon).collect()).collect::<Result<_, _>>()?,
            points: self.points.iter().map(canon).collect::<Result<_, _>>()?,
            segments: self.segments.iter().map(|[a, b]| Ok([canon(a)?, canon(b)?])).collect::<Result<_, CliError>>()?,
            ..self.clone()
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("scene serialises");
        s.push('\n');
        s
    }

    pub fn from_polygon(poly: &Polygon, name: Option<&str>, base_edge: Option<usize>) -> Self {
        let (outer, holes) = poly.input_rings();
        let coords = |r: &[Point]| r.iter().map(|p| [format_decimal(&p.x), format_decimal(&p.y)]).collect::<Vec<_>>();
        SceneDocument {
            kind: if holes.is_empty() { SceneKind::Polygon } else { SceneKind::PolygonWithHoles },
            name: name.map(str::to_owned),
            outer: coords(&outer),
            holes: holes.iter().map(|h| coords(h)).collect(),
            points: Vec::new(),
            segments: Vec::new(),
            base_edge,
        }
    }
}
