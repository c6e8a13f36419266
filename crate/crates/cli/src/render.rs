//! Deterministic SVG figures.
//!
//! Fixed 1000×1000 canvas, fixed styling, elements in a fixed order and all
//! coordinates printed with three decimals, so equal input gives equal bytes.

use std::fmt::Write;

use brocard_core::embed::{CartesianPoint, Embedding};
use brocard_core::nine::{build_nine, published_centres, CentreId, CircleId};
use brocard_core::points::{named_point, PointId};
use brocard_core::scalar::to_f64;
use brocard_core::similar::{six_triangles, TriangleId};
use brocard_core::{GeometryError, RefTriangle, Vertex};

pub const CANVAS: f64 = 1000.0;
const MARGIN: f64 = 0.05;
const DIRECT_COLOUR: &str = "#1f77b4";
const INDIRECT_COLOUR: &str = "#d62728";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    NineCircles,
    SixTriangles,
}

/// Maps Cartesian coordinates onto the canvas, y pointing down.
struct Viewport {
    scale: f64,
    min_x: f64,
    max_y: f64,
    off_x: f64,
    off_y: f64,
}

impl Viewport {
    fn fit(points: &[CartesianPoint]) -> Self {
        let min_x = points.iter().map(|p| p.px).fold(f64::INFINITY, f64::min);
        let max_x = points.iter().map(|p| p.px).fold(f64::NEG_INFINITY, f64::max);
        let min_y = points.iter().map(|p| p.py).fold(f64::INFINITY, f64::min);
        let max_y = points.iter().map(|p| p.py).fold(f64::NEG_INFINITY, f64::max);
        let inner = CANVAS * (1.0 - 2.0 * MARGIN);
        let span = (max_x - min_x).max(max_y - min_y).max(f64::MIN_POSITIVE);
        let scale = inner / span;
        let off_x = CANVAS * MARGIN + (inner - (max_x - min_x) * scale) / 2.0;
        let off_y = CANVAS * MARGIN + (inner - (max_y - min_y) * scale) / 2.0;
        Viewport { scale, min_x, max_y, off_x, off_y }
    }

    fn map(&self, p: CartesianPoint) -> (f64, f64) {
        (self.off_x + (p.px - self.min_x) * self.scale, self.off_y + (self.max_y - p.py) * self.scale)
    }
}

fn header(out: &mut String, title: &str) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">",
        c = CANVAS
    );
    let _ = writeln!(out, "<title>{title}</title>");
}

fn reference_triangle(out: &mut String, vp: &Viewport, emb: &Embedding) {
    let pts: Vec<String> = [emb.a, emb.b, emb.c]
        .iter()
        .map(|&p| {
            let (x, y) = vp.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        "<polygon class=\"reference\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>",
        pts.join(" ")
    );
    for (v, p) in [(Vertex::A, emb.a), (Vertex::B, emb.b), (Vertex::C, emb.c)] {
        let (x, y) = vp.map(p);
        let name = match v {
            Vertex::A => "A",
            Vertex::B => "B",
            Vertex::C => "C",
        };
        let _ = writeln!(
            out,
            "<text class=\"vertex\" x=\"{:.3}\" y=\"{:.3}\" font-size=\"22\">{name}</text>",
            x + 6.0,
            y - 6.0
        );
    }
}

fn marker(out: &mut String, vp: &Viewport, p: CartesianPoint, label: &str) {
    let (x, y) = vp.map(p);
    let _ = writeln!(
        out,
        "<rect class=\"marker\" x=\"{:.3}\" y=\"{:.3}\" width=\"8\" height=\"8\" fill=\"#000000\"/>",
        x - 4.0,
        y - 4.0
    );
    let _ = writeln!(
        out,
        "<text class=\"label\" x=\"{:.3}\" y=\"{:.3}\" font-size=\"18\">{label}</text>",
        x + 6.0,
        y - 6.0
    );
}

pub fn render(t: &RefTriangle, figure: Figure) -> Result<String, GeometryError> {
    match figure {
        Figure::NineCircles => nine_circles(t),
        Figure::SixTriangles => six_triangle_figure(t),
    }
}

fn nine_circles(t: &RefTriangle) -> Result<String, GeometryError> {
    let emb = Embedding::new(t);
    let vp = Viewport::fit(&[emb.a, emb.b, emb.c]);
    let mut out = String::new();
    header(&mut out, "The three circles through each of H, H+ and H- and the orthocentroidal circle");
    out.push_str("<g class=\"circles\" fill=\"none\" stroke-width=\"1.5\">\n");
    let set = build_nine(t);
    for id in CircleId::TEN {
        let c = set.get(id);
        let centre = emb.embed(&c.center()?)?;
        let r = to_f64(&c.radius2()?).sqrt() * vp.scale;
        let (x, y) = vp.map(centre);
        let colour = match id {
            CircleId::BHC | CircleId::CHA | CircleId::AHB => "#2ca02c",
            CircleId::BHpC | CircleId::CHpA | CircleId::AHpB => DIRECT_COLOUR,
            CircleId::CHmA | CircleId::AHmB | CircleId::BHmC => INDIRECT_COLOUR,
            CircleId::Orthocentroidal => "#7f7f7f",
        };
        let _ = writeln!(
            out,
            "<circle id=\"{}\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{r:.3}\" stroke=\"{colour}\"/>",
            id.name()
        );
    }
    out.push_str("</g>\n");
    reference_triangle(&mut out, &vp, &emb);
    out.push_str("<g class=\"points\">\n");
    for id in PointId::SIX {
        let p = emb.embed(&named_point(id, t).coords)?;
        marker(&mut out, &vp, p, id.name());
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

fn six_triangle_figure(t: &RefTriangle) -> Result<String, GeometryError> {
    let emb = Embedding::new(t);
    let cs = published_centres(t);
    let centres: Vec<(CentreId, CartesianPoint)> =
        CentreId::ALL.iter().map(|&id| Ok((id, emb.embed(&cs.point(id))?))).collect::<Result<_, GeometryError>>()?;
    let mut extent = vec![emb.a, emb.b, emb.c];
    extent.extend(centres.iter().map(|(_, p)| *p));
    let vp = Viewport::fit(&extent);
    let mut out = String::new();
    header(&mut out, "The nine points each used twice to form the six similar triangles");
    reference_triangle(&mut out, &vp, &emb);
    out.push_str("<g class=\"triangles\" fill=\"none\" stroke-width=\"2\">\n");
    for lt in six_triangles(t)? {
        let indirect = TriangleId::INDIRECT.contains(&lt.id);
        let (class, colour) = if indirect { ("indirect", INDIRECT_COLOUR) } else { ("direct", DIRECT_COLOUR) };
        let mut d = String::new();
        for (i, v) in lt.triangle.v.iter().enumerate() {
            let (x, y) = vp.map(emb.embed(v)?);
            let _ = write!(d, "{}{x:.3} {y:.3} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
        let _ =
            writeln!(out, "<path id=\"{}\" class=\"triangle {class}\" d=\"{d}\" stroke=\"{colour}\"/>", lt.id.name());
    }
    out.push_str("</g>\n<g class=\"points\">\n");
    for (id, p) in &centres {
        marker(&mut out, &vp, *p, id.name());
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
