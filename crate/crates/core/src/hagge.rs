//! Triangles carried by circles through one of the six special points, and
//! the Hagge circle construction from a pivot point.

use num_traits::{One, Signed, Zero};

use crate::areal::{collinear, line_through, reflect_in_side, ArealPoint};
use crate::circle::{circle_through, Circle};
use crate::error::{GeometryError, Result};
use crate::points::{classic_centers, named_point, PointId};
use crate::similar::{classify_similarity, OrderedTriangle, SimilarityKind, SimilarityReport};
use crate::triangle::{RefTriangle, Side, Vertex};

const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

#[derive(Debug, Clone, PartialEq)]
pub struct CarriedTriangle {
    /// `(X, Y, Z)` on the lines J–A, J–B, J–C.
    pub xyz: OrderedTriangle,
    /// Positions of `(X, Y, Z)` matched to `(A, B, C)`; `[0, 1, 2]` is the identity.
    pub order: [usize; 3],
    pub report: SimilarityReport,
}

impl CarriedTriangle {
    /// The matched order written with X, Y, Z, e.g. `"ZXY"`.
    pub fn order_label(&self) -> String {
        self.order.iter().map(|&i| ['X', 'Y', 'Z'][i]).collect()
    }
}

/// Similarity of `tri` to ABC under the first vertex order that makes them similar.
pub fn best_correspondence(tri: &OrderedTriangle, t: &RefTriangle) -> Result<([usize; 3], SimilarityReport)> {
    let sides = tri.squared_sides(t)?;
    let area = tri.area_ratio()?;
    if area.is_zero() {
        return Err(GeometryError::DegenerateTriangle);
    }
    let reference = t.squared_sides();
    let mut first = None;
    for (n, order) in ORDERS.into_iter().enumerate() {
        let ratios = [0, 1, 2].map(|i| &sides[order[i]] / &reference[i]);
        let rep = if ratios[0] == ratios[1] && ratios[1] == ratios[2] {
            // the first three orders are even permutations
            let kind = if (n < 3) == area.is_positive() { SimilarityKind::Direct } else { SimilarityKind::Indirect };
            let congruent = ratios[0].is_one();
            SimilarityReport { kind, ratio2: Some(ratios[0].clone()), congruent }
        } else {
            SimilarityReport { kind: SimilarityKind::None, ratio2: None, congruent: false }
        };
        if rep.kind != SimilarityKind::None {
            return Ok((order, rep));
        }
        first.get_or_insert((order, rep));
    }
    Ok(first.expect("six orders tried"))
}

/// The triangle cut from `circle` by the lines joining `j` to the vertices.
pub fn carried_triangle(j: &ArealPoint, circle: &Circle, t: &RefTriangle) -> Result<CarriedTriangle> {
    if !circle.contains(j) {
        return Err(GeometryError::PivotNotOnCircle);
    }
    let mut pts = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let line = line_through(j, &t.vertex(v)).map_err(|_| GeometryError::DegenerateAngle)?;
        let s = circle.second_intersection(&line, j)?;
        if s.tangent {
            return Err(GeometryError::TangentPivotLine);
        }
        pts.push(s.point);
    }
    let [x, y, z]: [ArealPoint; 3] = pts.try_into().expect("three points");
    let xyz = OrderedTriangle::new(x, y, z)?;
    let (order, report) = best_correspondence(&xyz, t)?;
    Ok(CarriedTriangle { xyz, order, report })
}

pub fn pivot_carried_triangle(j: PointId, circle: &Circle, t: &RefTriangle) -> Result<CarriedTriangle> {
    carried_triangle(&named_point(j, t).coords, circle, t)
}

/// The similarity kind each pivot's carried triangles are expected to have.
pub fn predicted_kind(j: PointId) -> Option<SimilarityKind> {
    match j {
        PointId::H | PointId::HPlus | PointId::HMinus => Some(SimilarityKind::Indirect),
        PointId::AH | PointId::BH | PointId::CH => Some(SimilarityKind::Direct),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HaggeFigure {
    pub pivot: ArealPoint,
    pub circle: Circle,
    /// Second intersections of AP, BP, CP with the circumcircle.
    pub def: [ArealPoint; 3],
    /// Reflections of D, E, F in BC, CA, AB.
    pub uvw: [ArealPoint; 3],
    /// Second intersections of the circle with AH, BH, CH.
    pub xyz: [ArealPoint; 3],
    pub carried: OrderedTriangle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HaggeChecks {
    pub through_h: bool,
    pub contains_all: bool,
    pub reflections: bool,
    pub carried_kind: SimilarityKind,
    /// X, P, U collinear; likewise Y, P, V and Z, P, W.
    pub pivot_lines: [bool; 3],
}

impl HaggeChecks {
    pub fn all_hold(&self) -> bool {
        self.through_h
            && self.contains_all
            && self.reflections
            && self.carried_kind == SimilarityKind::Indirect
            && self.pivot_lines.iter().all(|&b| b)
    }
}

/// Builds the Hagge circle of `p`: the circle through the reflections in the
/// sides of the second intersections of AP, BP, CP with the circumcircle.
pub fn hagge_figure(p: &ArealPoint, t: &RefTriangle) -> Result<HaggeFigure> {
    if p.is_at_infinity() {
        return Err(GeometryError::PointAtInfinity);
    }
    let circum = Circle::circumcircle(t);
    if circum.contains(p) {
        return Err(GeometryError::PivotOnCircumcircle);
    }
    let h = classic_centers(t).h;
    if p.same_as(&h) {
        return Err(GeometryError::DegenerateHagge);
    }
    let mut def = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let vertex = t.vertex(v);
        let line = line_through(&vertex, p)?;
        def.push(circum.second_intersection(&line, &vertex)?.point);
    }
    let def: [ArealPoint; 3] = def.try_into().expect("three points");
    let uvw = [
        reflect_in_side(&def[0], Side::BC, t)?,
        reflect_in_side(&def[1], Side::CA, t)?,
        reflect_in_side(&def[2], Side::AB, t)?,
    ];
    let circle = circle_through(&uvw[0], &uvw[1], &uvw[2], t).map_err(|_| GeometryError::DegenerateHagge)?;
    if !circle.contains(&h) {
        return Err(GeometryError::KnownPointNotIncident);
    }
    let mut xyz = Vec::with_capacity(3);
    for v in Vertex::ALL {
        let line = line_through(&t.vertex(v), &h).map_err(|_| GeometryError::DegenerateHagge)?;
        let s = circle.second_intersection(&line, &h)?;
        if s.tangent {
            return Err(GeometryError::DegenerateHagge);
        }
        xyz.push(s.point);
    }
    let xyz: [ArealPoint; 3] = xyz.try_into().expect("three points");
    let carried = OrderedTriangle::new(xyz[0].clone(), xyz[1].clone(), xyz[2].clone())?;
    Ok(HaggeFigure { pivot: p.clone(), circle, def, uvw, xyz, carried })
}

impl HaggeFigure {
    pub fn check(&self, t: &RefTriangle) -> Result<HaggeChecks> {
        let h = classic_centers(t).h;
        let through_h = self.circle.contains(&h);
        let contains_all = self.uvw.iter().chain(self.xyz.iter()).all(|q| self.circle.contains(q));
        let reflections = Side::ALL
            .iter()
            .enumerate()
            .all(|(i, &s)| reflect_in_side(&self.uvw[i], s, t).map(|back| back.same_as(&self.def[i])).unwrap_or(false));
        let carried_kind = classify_similarity(&self.carried, t)?.kind;
        let pivot_lines = [0, 1, 2].map(|i| collinear(&self.xyz[i], &self.pivot, &self.uvw[i]));
        Ok(HaggeChecks { through_h, contains_all, reflections, carried_kind, pivot_lines })
    }
}
