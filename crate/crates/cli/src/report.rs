//! The `report` document: every exact construction plus the float tables.

use brocard_core::hagge::hagge_figure;
use brocard_core::nine::{build_nine, membership_report, published_centres, tangency_report, CentreId, CircleId};
use brocard_core::points::{angle_table, distance_table, exact_vertex_distances2, named_point, PointId};
use brocard_core::scalar::{self, Scalar};
use brocard_core::similar::{
    bisector_collinearity, classify_similarity, mutual_perspectivity, rotation_congruence, similarity_coefficients,
    six_triangles,
};
use brocard_core::{ArealPoint, GeometryError, RefTriangle, Vertex};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Input must be a scalene triangle.
pub fn validate(t: &RefTriangle) -> Result<(), GeometryError> {
    if !t.scalene {
        return Err(GeometryError::NotScalene);
    }
    Ok(())
}

fn int_value(n: &num_bigint::BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

/// Integers as JSON numbers, everything else as `"p/q"`.
fn scalar_value(x: &Scalar) -> Value {
    if x.is_integer() {
        int_value(x.numer())
    } else {
        json!(scalar::format(x))
    }
}

fn exact(x: &Scalar) -> Value {
    json!(scalar::format(x))
}

fn point_value(p: &ArealPoint) -> Value {
    Value::Array(p.canonical().iter().map(int_value).collect())
}

fn vertex_name(v: Vertex) -> &'static str {
    match v {
        Vertex::A => "A",
        Vertex::B => "B",
        Vertex::C => "C",
    }
}

const REPORT_POINTS: [PointId; 9] = [
    PointId::G,
    PointId::H,
    PointId::O,
    PointId::N,
    PointId::HPlus,
    PointId::HMinus,
    PointId::AH,
    PointId::BH,
    PointId::CH,
];

pub fn build_report(t: &RefTriangle) -> Value {
    let mut doc = Map::new();
    doc.insert("sides".into(), json!([t.a.clone(), t.b.clone(), t.c.clone()].map(|s| scalar::format(&s))));
    doc.insert("triangle".into(), json!({ "Q": exact(&t.q), "scalene": t.scalene, "acute": t.acute }));

    let points: Map<String, Value> =
        REPORT_POINTS.iter().map(|&id| (id.name().to_string(), point_value(&named_point(id, t).coords))).collect();
    doc.insert("points".into(), Value::Object(points));

    let set = build_nine(t);
    let circles: Map<String, Value> = CircleId::TEN
        .iter()
        .map(|&id| (id.name().to_string(), json!(set.get(id).uvw().iter().map(exact).collect::<Vec<_>>())))
        .collect();
    doc.insert("circles".into(), Value::Object(circles));

    let cs = published_centres(t);
    let centres: Map<String, Value> = CentreId::ALL
        .iter()
        .map(|&id| (id.name().to_string(), Value::Array(cs.raw(id).iter().map(scalar_value).collect())))
        .collect();
    doc.insert("centres".into(), Value::Object(centres));

    let k = similarity_coefficients(t);
    doc.insert(
        "coefficients".into(),
        json!({ "k": exact(&k.k), "l": exact(&k.l), "m": exact(&k.m), "n": exact(&k.n) }),
    );

    let similarity = match six_triangles(t) {
        Ok(tris) => {
            let m: Map<String, Value> = tris
                .iter()
                .map(|lt| {
                    let entry = match classify_similarity(&lt.triangle, t) {
                        Ok(rep) => json!({
                            "vertices": lt.labels.map(|c| c.name()),
                            "kind": rep.kind.name(),
                            "ratio2": rep.ratio2.as_ref().map(exact),
                            "congruent": rep.congruent,
                        }),
                        Err(_) => Value::Null,
                    };
                    (lt.id.name().to_string(), entry)
                })
                .collect();
            Value::Object(m)
        }
        Err(_) => Value::Null,
    };
    doc.insert("similarity".into(), similarity);

    let persp: Vec<Value> = mutual_perspectivity(t)
        .iter()
        .map(|p| {
            json!({
                "pair": [p.first.name(), p.second.name()],
                "perspective": p.report.perspective,
                "perspector": p.report.perspector.as_ref().map(point_value),
            })
        })
        .collect();
    doc.insert("perspectivity".into(), Value::Array(persp));

    let bisectors: Map<String, Value> = bisector_collinearity(t)
        .iter()
        .map(|b| {
            let centres: Vec<&str> = b.centres.iter().map(|c| c.name()).collect();
            (b.side.name().to_string(), json!({ "centres": centres, "collinear": b.all_incident }))
        })
        .collect();
    doc.insert("bisectors".into(), Value::Object(bisectors));
    doc.insert("rotation_congruence".into(), json!(rotation_congruence(t)));

    let tangencies: Vec<Value> = tangency_report(t)
        .iter()
        .map(|e| {
            json!({
                "circle": e.circle.name(),
                "side": e.side.name(),
                "vertex": vertex_name(e.vertex),
                "tangent": e.tangent,
            })
        })
        .collect();
    doc.insert("tangencies".into(), Value::Array(tangencies));

    let mem = membership_report(t);
    let membership: Map<String, Value> = mem
        .rows
        .iter()
        .map(|&p| {
            let on: Vec<&str> = mem.cols.iter().filter(|&&c| mem.get(p, c)).map(|c| c.name()).collect();
            (p.name().to_string(), json!(on))
        })
        .collect();
    doc.insert("membership".into(), Value::Object(membership));

    let g = ArealPoint::from_ints(1, 1, 1);
    let hagge = hagge_figure(&g, t).ok().and_then(|fig| {
        let checks = fig.check(t).ok()?;
        Some(json!({
            "pivot": point_value(&g),
            "circle": fig.circle.uvw().iter().map(exact).collect::<Vec<_>>(),
            "through_H": checks.through_h,
            "carried_kind": checks.carried_kind.name(),
            "pivot_lines": checks.pivot_lines,
        }))
    });
    doc.insert("hagge".into(), hagge.unwrap_or(Value::Null));

    let exact_d2: Map<String, Value> = PointId::SIX
        .iter()
        .map(|&id| {
            let entry = exact_vertex_distances2(&named_point(id, t).coords, t)
                .map(|d| json!({ "A": exact(&d[0]), "B": exact(&d[1]), "C": exact(&d[2]) }))
                .unwrap_or(Value::Null);
            (id.name().to_string(), entry)
        })
        .collect();
    doc.insert("exact_distances2".into(), Value::Object(exact_d2));

    let table = distance_table(t);
    let distances: Map<String, Value> = table
        .rows
        .iter()
        .map(|r| (r.point.name().to_string(), json!({ "A": r.dists[0], "B": r.dists[1], "C": r.dists[2], "R0": r.r0 })))
        .collect();
    let angles = angle_table(t)
        .map(|rows| {
            let m: Map<String, Value> = rows
                .iter()
                .map(|(id, a)| (id.name().to_string(), json!({ "BJC": a.bjc, "CJA": a.cja, "AJB": a.ajb })))
                .collect();
            Value::Object(m)
        })
        .unwrap_or(Value::Null);
    doc.insert(
        "float".into(),
        json!({
            "circumradius": table.circumradius,
            "unsigned_for_obtuse": table.unsigned_for_obtuse,
            "distances": distances,
            "angles": angles,
        }),
    );
    Value::Object(doc)
}

/// Plain-text rendering of the same document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let field = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if let Value::Object(map) = doc {
        for (section, body) in map {
            match body {
                Value::Object(inner) => {
                    out.push_str(section);
                    out.push_str(":\n");
                    for (k, v) in inner {
                        out.push_str(&format!("  {k}: {}\n", field(v)));
                    }
                }
                Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                    out.push_str(section);
                    out.push_str(":\n");
                    for item in items {
                        out.push_str(&format!("  {}\n", field(item)));
                    }
                }
                other => out.push_str(&format!("{section}: {}\n", field(other))),
            }
        }
    }
    out
}
