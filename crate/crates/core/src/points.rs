//! Named points of the reference triangle and the metric tables built on them.

use std::f64::consts::PI;

use num_traits::{Signed, Zero};

use crate::areal::{distance2, foot_on_side, ArealPoint};
use crate::circle::Circle;
use crate::embed::angle_at;
use crate::error::{GeometryError, Result};
use crate::scalar::{checked_div, int, to_f64, Scalar};
use crate::triangle::{RefTriangle, Side, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointId {
    G,
    H,
    O,
    N,
    HPlus,
    HMinus,
    AH,
    BH,
    CH,
    A,
    B,
    C,
}

impl PointId {
    /// The six points at which the sides subtend a permutation of `(π−A, π−B, π−C)`.
    pub const SIX: [PointId; 6] = [PointId::H, PointId::HPlus, PointId::HMinus, PointId::AH, PointId::BH, PointId::CH];

    /// ASCII-safe identifier used in external output.
    pub fn name(self) -> &'static str {
        match self {
            PointId::G => "G",
            PointId::H => "H",
            PointId::O => "O",
            PointId::N => "N",
            PointId::HPlus => "Hp",
            PointId::HMinus => "Hm",
            PointId::AH => "aH",
            PointId::BH => "bH",
            PointId::CH => "cH",
            PointId::A => "A",
            PointId::B => "B",
            PointId::C => "C",
        }
    }

    /// Which of `(α, β, γ)` appear as `(∠BJC, ∠CJA, ∠AJB)`, as indices.
    pub fn angle_pattern(self) -> Option<[usize; 3]> {
        match self {
            PointId::H => Some([0, 1, 2]),
            PointId::HPlus => Some([2, 0, 1]),
            PointId::HMinus => Some([1, 2, 0]),
            PointId::AH => Some([0, 2, 1]),
            PointId::BH => Some([2, 1, 0]),
            PointId::CH => Some([1, 0, 2]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedPoint {
    pub id: PointId,
    pub coords: ArealPoint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicCenters {
    pub g: ArealPoint,
    pub h: ArealPoint,
    pub o: ArealPoint,
    pub n: ArealPoint,
}

/// Centroid, orthocentre, circumcentre and nine-point centre.
pub fn classic_centers(t: &RefTriangle) -> ClassicCenters {
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    let g = ArealPoint::from_ints(1, 1, 1);
    // (1/S_A : 1/S_B : 1/S_C) with denominators cleared; a vertex when right-angled
    let h = ArealPoint::new(&sb * &sc, &sc * &sa, &sa * &sb).expect("orthocentre is a finite point");
    let o = Circle::circumcircle(t).center().expect("circumcircle is non-degenerate");
    let n = ArealPoint::midpoint(&o, &h).expect("O and H are finite");
    ClassicCenters { g, h, o, n }
}

/// `H+ = (1/b² : 1/c² : 1/a²)` and `H− = (1/c² : 1/a² : 1/b²)`, cleared.
pub fn brocard_points(t: &RefTriangle) -> (ArealPoint, ArealPoint) {
    let (a2, b2, c2) = (&t.a2, &t.b2, &t.c2);
    let plus = ArealPoint::new(a2 * c2, a2 * b2, b2 * c2).expect("positive coordinates");
    let minus = ArealPoint::new(a2 * b2, b2 * c2, a2 * c2).expect("positive coordinates");
    (plus, minus)
}

/// Second intersections of the medians with the orthocentroidal circle.
pub fn medial_points(t: &RefTriangle) -> (ArealPoint, ArealPoint, ArealPoint) {
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    let ah = ArealPoint::new(t.a2.clone(), sa.clone(), sa).expect("a² > 0");
    let bh = ArealPoint::new(sb.clone(), t.b2.clone(), sb).expect("b² > 0");
    let ch = ArealPoint::new(sc.clone(), sc, t.c2.clone()).expect("c² > 0");
    (ah, bh, ch)
}

pub fn named_point(id: PointId, t: &RefTriangle) -> NamedPoint {
    let coords = match id {
        PointId::G | PointId::H | PointId::O | PointId::N => {
            let cc = classic_centers(t);
            match id {
                PointId::G => cc.g,
                PointId::H => cc.h,
                PointId::O => cc.o,
                _ => cc.n,
            }
        }
        PointId::HPlus => brocard_points(t).0,
        PointId::HMinus => brocard_points(t).1,
        PointId::AH => medial_points(t).0,
        PointId::BH => medial_points(t).1,
        PointId::CH => medial_points(t).2,
        PointId::A => t.vertex(Vertex::A),
        PointId::B => t.vertex(Vertex::B),
        PointId::C => t.vertex(Vertex::C),
    };
    NamedPoint { id, coords }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTriple {
    pub bjc: f64,
    pub cja: f64,
    pub ajb: f64,
}

impl AngleTriple {
    pub fn as_array(&self) -> [f64; 3] {
        [self.bjc, self.cja, self.ajb]
    }

    pub fn sum(&self) -> f64 {
        self.bjc + self.cja + self.ajb
    }

    pub fn max_abs_diff(&self, other: &AngleTriple) -> f64 {
        let (p, q) = (self.as_array(), other.as_array());
        (0..3).map(|i| (p[i] - q[i]).abs()).fold(0.0, f64::max)
    }
}

/// The permutation of `(π−A, π−B, π−C)` predicted for point `id`.
pub fn predicted_angles(id: PointId, t: &RefTriangle) -> Option<AngleTriple> {
    let supp = t.angles_f64().map(|x| PI - x);
    id.angle_pattern().map(|[i, j, k]| AngleTriple { bjc: supp[i], cja: supp[j], ajb: supp[k] })
}

pub fn measured_angles(j: &ArealPoint, t: &RefTriangle) -> Result<AngleTriple> {
    let [a, b, c] = Vertex::ALL.map(|v| t.vertex(v));
    if [&a, &b, &c].iter().any(|v| v.same_as(j)) {
        return Err(GeometryError::DegenerateAngle);
    }
    Ok(AngleTriple { bjc: angle_at(j, &b, &c, t)?, cja: angle_at(j, &c, &a, t)?, ajb: angle_at(j, &a, &b, t)? })
}

/// Measured `(∠BJC, ∠CJA, ∠AJB)` at each of the six points.
pub fn angle_table(t: &RefTriangle) -> Result<Vec<(PointId, AngleTriple)>> {
    if t.a == t.b && t.b == t.c {
        return Err(GeometryError::NotScalene);
    }
    PointId::SIX.iter().map(|&id| Ok((id, measured_angles(&named_point(id, t).coords, t)?))).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceRow {
    pub point: PointId,
    /// `(AJ, BJ, CJ)` from the closed-form expressions.
    pub dists: [f64; 3],
    /// Circumradius of the pedal triangle of `J` that the expressions use.
    pub r0: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceTable {
    pub rows: Vec<DistanceRow>,
    pub circumradius: f64,
    /// Set for non-acute input, where the entries are absolute values.
    pub unsigned_for_obtuse: bool,
}

impl DistanceTable {
    pub fn row(&self, id: PointId) -> Option<&DistanceRow> {
        self.rows.iter().find(|r| r.point == id)
    }
}

/// Vertex distances to the six points from the trigonometric closed forms.
pub fn distance_table(t: &RefTriangle) -> DistanceTable {
    let r = t.circumradius_f64();
    let [a, b, c] = t.sides_f64();
    let [ca, cb, cc] = t.cosines_f64();
    let [sa, sb, sc] = t.angles_f64().map(f64::sin);
    let [a2, b2, c2] = [a * a, b * b, c * c];

    let r_brocard = 0.5 * a * b * c / (b2 * c2 + c2 * a2 + a2 * b2).sqrt();
    let r_ah = 0.5 * b * c / (2.0 * b2 + 2.0 * c2 - a2).sqrt();
    let r_bh = 0.5 * c * a / (2.0 * c2 + 2.0 * a2 - b2).sqrt();
    let r_ch = 0.5 * a * b / (2.0 * a2 + 2.0 * b2 - c2).sqrt();

    let rows = vec![
        DistanceRow { point: PointId::H, dists: [2.0 * r * ca, 2.0 * r * cb, 2.0 * r * cc], r0: r / 2.0 },
        DistanceRow {
            point: PointId::HPlus,
            dists: [2.0 * r_brocard * sb / sa, 2.0 * r_brocard * sc / sb, 2.0 * r_brocard * sa / sc],
            r0: r_brocard,
        },
        DistanceRow {
            point: PointId::HMinus,
            dists: [2.0 * r_brocard * sc / sa, 2.0 * r_brocard * sa / sb, 2.0 * r_brocard * sb / sc],
            r0: r_brocard,
        },
        DistanceRow {
            point: PointId::AH,
            dists: [4.0 * r_ah * ca, 2.0 * r_ah * sa / sb, 2.0 * r_ah * sa / sc],
            r0: r_ah,
        },
        DistanceRow {
            point: PointId::BH,
            dists: [2.0 * r_bh * sb / sa, 4.0 * r_bh * cb, 2.0 * r_bh * sb / sc],
            r0: r_bh,
        },
        DistanceRow {
            point: PointId::CH,
            dists: [2.0 * r_ch * sc / sa, 2.0 * r_ch * sc / sb, 4.0 * r_ch * cc],
            r0: r_ch,
        },
    ];
    let rows = rows.into_iter().map(|row| DistanceRow { dists: row.dists.map(f64::abs), ..row }).collect();
    DistanceTable { rows, circumradius: r, unsigned_for_obtuse: !t.acute }
}

/// Exact squared distances `(AJ², BJ², CJ²)` through the areal metric.
pub fn exact_vertex_distances2(j: &ArealPoint, t: &RefTriangle) -> Result<[Scalar; 3]> {
    let [a, b, c] = Vertex::ALL.map(|v| t.vertex(v));
    Ok([distance2(&a, j, t)?, distance2(&b, j, t)?, distance2(&c, j, t)?])
}

#[derive(Debug, Clone, PartialEq)]
pub struct PedalTriangle {
    /// Feet on BC, CA, AB.
    pub feet: [ArealPoint; 3],
    pub circumradius2: Scalar,
    pub circumradius: f64,
}

/// Circumradius² from squared side lengths `p, q, r`.
pub fn circumradius2_from_sides2(p: &Scalar, q: &Scalar, r: &Scalar) -> Result<Scalar> {
    let two = int(2);
    let sixteen_area2 = &two * (p * q + q * r + r * p) - (p * p + q * q + r * r);
    if !sixteen_area2.is_positive() {
        return Err(GeometryError::DegenerateTriangle);
    }
    checked_div(&(p * q * r), &sixteen_area2)
}

pub fn pedal_triangle(p: &ArealPoint, t: &RefTriangle) -> Result<PedalTriangle> {
    if p.is_at_infinity() {
        return Err(GeometryError::PointAtInfinity);
    }
    if Circle::circumcircle(t).contains(p) {
        return Err(GeometryError::DegeneratePedal);
    }
    let feet = [foot_on_side(p, Side::BC, t)?, foot_on_side(p, Side::CA, t)?, foot_on_side(p, Side::AB, t)?];
    let s1 = distance2(&feet[1], &feet[2], t)?;
    let s2 = distance2(&feet[2], &feet[0], t)?;
    let s3 = distance2(&feet[0], &feet[1], t)?;
    let circumradius2 = circumradius2_from_sides2(&s1, &s2, &s3).map_err(|_| GeometryError::DegeneratePedal)?;
    let circumradius = to_f64(&circumradius2).sqrt();
    Ok(PedalTriangle { feet, circumradius2, circumradius })
}

pub fn is_equilateral(t: &RefTriangle) -> bool {
    t.a == t.b && t.b == t.c && !t.a.is_zero()
}
