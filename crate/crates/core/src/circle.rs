//! Circles in canonical areal form
//! `a²yz + b²zx + c²xy − (x+y+z)(ux+vy+wz) = 0`.

use num_traits::{Signed, Zero};

use crate::areal::{ArealLine, ArealPoint};
use crate::error::{GeometryError, Result};
use crate::scalar::{self, det3, Scalar};
use crate::triangle::RefTriangle;

/// A circle `(u, v, w)`, carrying the squared sides of its reference triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct Circle {
    sq: [Scalar; 3],
    uvw: [Scalar; 3],
}

#[derive(Debug, Clone, PartialEq)]
pub enum Tangency {
    Tangent(ArealPoint),
    Secant,
    Disjoint,
}

impl Tangency {
    pub fn is_tangent(&self) -> bool {
        matches!(self, Tangency::Tangent(_))
    }
}

/// Result of intersecting a line through a known point of a circle.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondIntersection {
    pub point: ArealPoint,
    /// The line touches the circle at the known point; `point` is that point.
    pub tangent: bool,
}

impl Circle {
    pub fn new(t: &RefTriangle, u: Scalar, v: Scalar, w: Scalar) -> Self {
        Circle { sq: t.squared_sides(), uvw: [u, v, w] }
    }

    pub fn circumcircle(t: &RefTriangle) -> Self {
        Self::new(t, Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn uvw(&self) -> &[Scalar; 3] {
        &self.uvw
    }

    /// Symmetric matrix `M` with `PᵀMP` equal to [`Circle::eval`].
    pub fn conic_matrix(&self) -> [[Scalar; 3]; 3] {
        let [a2, b2, c2] = &self.sq;
        let [u, v, w] = &self.uvw;
        let half = scalar::ratio(1, 2);
        let xy = (c2 - u - v) * &half;
        let yz = (a2 - v - w) * &half;
        let zx = (b2 - w - u) * &half;
        [[-u.clone(), xy.clone(), zx.clone()], [xy, -v.clone(), yz.clone()], [zx, yz, -w.clone()]]
    }

    pub fn eval(&self, p: &ArealPoint) -> Scalar {
        let [a2, b2, c2] = &self.sq;
        let [u, v, w] = &self.uvw;
        let [x, y, z] = p.coords();
        a2 * y * z + b2 * z * x + c2 * x * y - (x + y + z) * (u * x + v * y + w * z)
    }

    pub fn contains(&self, p: &ArealPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Polar bilinear form `PᵀMR`.
    pub fn bilinear(&self, p: &ArealPoint, r: &ArealPoint) -> Scalar {
        let m = self.conic_matrix();
        let (p, r) = (p.coords(), r.coords());
        let mut acc = Scalar::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += &p[i] * &m[i][j] * &r[j];
            }
        }
        acc
    }

    pub fn is_degenerate(&self) -> bool {
        det3(&self.conic_matrix()).is_zero()
    }

    /// Centre as the pole of the line at infinity: `adj(M)·(1,1,1)`.
    pub fn center(&self) -> Result<ArealPoint> {
        let m = self.conic_matrix();
        if det3(&m).is_zero() {
            return Err(GeometryError::DegenerateConic);
        }
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
        // adjugate of a symmetric matrix is symmetric
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let row_sums = adj.map(|row| row.iter().sum::<Scalar>());
        ArealPoint::from_array(row_sums).map_err(|_| GeometryError::DegenerateConic)
    }

    /// Squared radius, the value of the canonical form at the normalized centre.
    pub fn radius2(&self) -> Result<Scalar> {
        let c = self.center()?.normalize()?;
        Ok(self.eval(&c))
    }

    pub fn second_intersection(&self, line: &ArealLine, known: &ArealPoint) -> Result<SecondIntersection> {
        if !self.contains(known) || !line.contains(known) {
            return Err(GeometryError::KnownPointNotIncident);
        }
        let (p1, p2) = line.two_points();
        let other = if p1.same_as(known) { p2 } else { p1 };
        let f = self.eval(&other);
        let b = self.bilinear(known, &other);
        if b.is_zero() {
            return Ok(SecondIntersection { point: known.clone(), tangent: true });
        }
        // K + tP with t = −2B/f, scaled by f
        let two_b = &b + &b;
        let (k, o) = (known.coords(), other.coords());
        let coords = [0, 1, 2].map(|i| &f * &k[i] - &two_b * &o[i]);
        let point = ArealPoint::from_array(coords).map_err(|_| GeometryError::DegenerateConic)?;
        let point = ArealPoint::from_array(point.canonical().map(Scalar::from_integer))?;
        Ok(SecondIntersection { point, tangent: false })
    }

    /// Classifies the line by the discriminant of the circle restricted to it.
    pub fn tangency(&self, line: &ArealLine) -> Tangency {
        let (p1, p2) = line.two_points();
        let f1 = self.eval(&p1);
        let f2 = self.eval(&p2);
        let b = self.bilinear(&p1, &p2);
        let disc = &b * &b - &f1 * &f2;
        if disc.is_positive() {
            Tangency::Secant
        } else if disc.is_negative() {
            Tangency::Disjoint
        } else if f1.is_zero() {
            Tangency::Tangent(p1)
        } else {
            let coords = [0, 1, 2].map(|i| -&b * &p1.coords()[i] + &f1 * &p2.coords()[i]);
            Tangency::Tangent(ArealPoint::from_array(coords).expect("distinct points on the line"))
        }
    }
}

/// The circle through three finite, non-collinear points.
pub fn circle_through(p: &ArealPoint, r: &ArealPoint, s: &ArealPoint, t: &RefTriangle) -> Result<Circle> {
    let rows = [p.normalized_coords()?, r.normalized_coords()?, s.normalized_coords()?];
    let det = det3(&rows);
    if det.is_zero() {
        return Err(GeometryError::CollinearInput);
    }
    // each normalized point gives ux + vy + wz = a²yz + b²zx + c²xy
    let rhs = rows.clone().map(|[x, y, z]| &t.a2 * &y * &z + &t.b2 * &z * &x + &t.c2 * &x * &y);
    let solve = |col: usize| -> Result<Scalar> {
        let mut m = rows.clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[col] = rhs[i].clone();
        }
        scalar::checked_div(&det3(&m), &det).map_err(|_| GeometryError::DegenerateSystem)
    };
    Ok(Circle::new(t, solve(0)?, solve(1)?, solve(2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::areal::{distance2, line_through};
    use crate::scalar::{int, ratio};
    use crate::triangle::Side;

    fn t654() -> RefTriangle {
        RefTriangle::from_ints(6, 5, 4).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ArealPoint {
        ArealPoint::from_ints(x, y, z)
    }

    #[test]
    fn circle_through_examples() {
        let t = t654();
        let c = circle_through(&pt(0, 1, 0), &pt(27, 5, 3), &pt(0, 0, 1), &t).unwrap();
        assert_eq!(c.uvw(), &[int(5), int(0), int(0)]);
        let cc = circle_through(&pt(1, 0, 0), &pt(0, 1, 0), &pt(0, 0, 1), &t).unwrap();
        assert_eq!(cc, Circle::circumcircle(&t));
        assert_eq!(
            circle_through(&pt(1, 0, 0), &pt(0, 1, 0), &pt(1, 1, 0), &t).unwrap_err(),
            GeometryError::CollinearInput
        );
        assert_eq!(
            circle_through(&pt(1, -1, 0), &pt(0, 1, 0), &pt(0, 0, 1), &t).unwrap_err(),
            GeometryError::PointAtInfinity
        );
    }

    #[test]
    fn eval_examples() {
        let t = t654();
        let bhc = Circle::new(&t, int(5), int(0), int(0));
        assert_eq!(bhc.eval(&pt(27, 5, 3)), int(0));
        assert!(Circle::circumcircle(&t).contains(&pt(1, 0, 0)));
        let bhpc = Circle::new(&t, int(25), int(0), int(0));
        assert!(bhpc.contains(&pt(144, 225, 100)));
    }

    #[test]
    fn center_examples() {
        let t = t654();
        let bhc = Circle::new(&t, int(5), int(0), int(0));
        assert_eq!(bhc.center().unwrap().scaled_to_sum(&t.q).unwrap(), [int(-180), int(900), int(855)]);
        let o = Circle::circumcircle(&t).center().unwrap();
        assert_eq!(o, pt(180, 675, 720));
        let [a, b, c] = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        let ra = distance2(&o, &a, &t).unwrap();
        assert_eq!(ra, distance2(&o, &b, &t).unwrap());
        assert_eq!(ra, distance2(&o, &c, &t).unwrap());
        assert_eq!(Circle::circumcircle(&t).radius2().unwrap(), ra);

        let ortho = Circle::new(&t, ratio(5, 3), int(9), int(15));
        let mid = ArealPoint::midpoint(&pt(1, 1, 1), &pt(27, 5, 3)).unwrap();
        assert_eq!(ortho.center().unwrap(), mid);
    }

    #[test]
    fn degenerate_conic() {
        let t = t654();
        // point circle at A: all points at distance zero from A
        let a = pt(1, 0, 0);
        let u = int(0);
        let v = t.c2.clone();
        let w = t.b2.clone();
        let c = Circle::new(&t, u, v, w);
        assert!(c.contains(&a));
        assert!(c.is_degenerate());
        assert_eq!(c.center().unwrap_err(), GeometryError::DegenerateConic);
    }

    #[test]
    fn second_intersection_examples() {
        let t = t654();
        let ortho = Circle::new(&t, ratio(5, 3), int(9), int(15));
        let g = pt(1, 1, 1);
        let median = line_through(&pt(1, 0, 0), &g).unwrap();
        let s = ortho.second_intersection(&median, &g).unwrap();
        assert!(!s.tangent);
        assert_eq!(s.point, pt(36, 5, 5));

        let bc = ArealLine::side(Side::BC);
        let s = Circle::circumcircle(&t).second_intersection(&bc, &pt(0, 1, 0)).unwrap();
        assert_eq!(s.point, pt(0, 0, 1));

        let ahpb = Circle::new(&t, int(0), int(0), t.a2.clone());
        let s = ahpb.second_intersection(&bc, &pt(0, 1, 0)).unwrap();
        assert!(s.tangent);
        assert_eq!(s.point, pt(0, 1, 0));

        assert_eq!(ortho.second_intersection(&bc, &pt(0, 1, 0)).unwrap_err(), GeometryError::KnownPointNotIncident);
    }

    #[test]
    fn tangency_examples() {
        let t = t654();
        let ahpb = Circle::new(&t, int(0), int(0), t.a2.clone());
        assert_eq!(ahpb.tangency(&ArealLine::side(Side::BC)), Tangency::Tangent(pt(0, 1, 0)));
        assert_eq!(Circle::circumcircle(&t).tangency(&ArealLine::side(Side::BC)), Tangency::Secant);
        let bhmc = Circle::new(&t, t.c2.clone(), int(0), int(0));
        assert_eq!(bhmc.tangency(&ArealLine::side(Side::AB)), Tangency::Tangent(pt(0, 1, 0)));
        // line at infinity misses every real circle
        assert_eq!(Circle::circumcircle(&t).tangency(&ArealLine::at_infinity()), Tangency::Disjoint);
    }
}
