//! Homogeneous areal (barycentric) points, lines and displacements.
//!
//! Points are stored unnormalized; equality is projective and decided by the
//! vanishing of all 2×2 minors, so points at infinity compare correctly too.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::scalar::{self, cross, det3, dot, int, Scalar};
use crate::triangle::{RefTriangle, Side};

#[derive(Debug, Clone)]
pub struct ArealPoint {
    coords: [Scalar; 3],
}

impl ArealPoint {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Result<Self> {
        Self::from_array([x, y, z])
    }

    pub fn from_array(coords: [Scalar; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(GeometryError::ZeroTriple);
        }
        Ok(ArealPoint { coords })
    }

    /// Panics on the zero triple; meant for literals.
    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new(int(x), int(y), int(z)).expect("nonzero literal point")
    }

    pub fn coords(&self) -> &[Scalar; 3] {
        &self.coords
    }

    pub fn x(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn y(&self) -> &Scalar {
        &self.coords[1]
    }

    pub fn z(&self) -> &Scalar {
        &self.coords[2]
    }

    pub fn sum(&self) -> Scalar {
        &self.coords[0] + &self.coords[1] + &self.coords[2]
    }

    pub fn is_at_infinity(&self) -> bool {
        self.sum().is_zero()
    }

    /// The proportional point whose coordinates sum to one.
    pub fn normalize(&self) -> Result<ArealPoint> {
        Ok(ArealPoint { coords: self.normalized_coords()? })
    }

    pub fn normalized_coords(&self) -> Result<[Scalar; 3]> {
        let s = self.sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        Ok(self.coords.clone().map(|c| c / &s))
    }

    /// The proportional triple whose coordinates sum to `target`.
    pub fn scaled_to_sum(&self, target: &Scalar) -> Result<[Scalar; 3]> {
        let s = self.sum();
        if s.is_zero() {
            return Err(GeometryError::PointAtInfinity);
        }
        Ok(self.coords.clone().map(|c| c * target / &s))
    }

    /// Projective equality.
    pub fn same_as(&self, other: &ArealPoint) -> bool {
        cross(&self.coords, &other.coords).iter().all(Zero::is_zero)
    }

    /// Coprime integers, leading nonzero positive.
    pub fn canonical(&self) -> [BigInt; 3] {
        scalar::canonical_triple(&self.coords)
    }

    /// Affine combination of normalized forms: `Σ wᵢ·Pᵢ` with `Σ wᵢ = 1`.
    pub fn affine(terms: &[(Scalar, &ArealPoint)]) -> Result<ArealPoint> {
        let mut acc = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        for (w, p) in terms {
            let n = p.normalized_coords()?;
            for i in 0..3 {
                acc[i] += w * &n[i];
            }
        }
        ArealPoint::from_array(acc)
    }

    pub fn midpoint(p: &ArealPoint, r: &ArealPoint) -> Result<ArealPoint> {
        let half = scalar::ratio(1, 2);
        Self::affine(&[(half.clone(), p), (half, r)])
    }
}

impl PartialEq for ArealPoint {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl std::fmt::Display for ArealPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = self.coords.each_ref().map(scalar::format);
        write!(f, "({} : {} : {})", c[0], c[1], c[2])
    }
}

/// The line `l·x + m·y + n·z = 0`.
#[derive(Debug, Clone)]
pub struct ArealLine {
    coeffs: [Scalar; 3],
}

impl ArealLine {
    pub fn new(l: Scalar, m: Scalar, n: Scalar) -> Result<Self> {
        let coeffs = [l, m, n];
        if coeffs.iter().all(Zero::is_zero) {
            return Err(GeometryError::ZeroTriple);
        }
        Ok(ArealLine { coeffs })
    }

    pub fn at_infinity() -> Self {
        ArealLine { coeffs: [Scalar::one(), Scalar::one(), Scalar::one()] }
    }

    pub fn side(side: Side) -> Self {
        let mut coeffs = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
        coeffs[side.opposite().index()] = Scalar::one();
        ArealLine { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &ArealPoint) -> Scalar {
        dot(&self.coeffs, p.coords())
    }

    pub fn contains(&self, p: &ArealPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn same_as(&self, other: &ArealLine) -> bool {
        cross(&self.coeffs, &other.coeffs).iter().all(Zero::is_zero)
    }

    /// Intersection point; `None` when the lines coincide.
    pub fn meet(&self, other: &ArealLine) -> Option<ArealPoint> {
        ArealPoint::from_array(cross(&self.coeffs, &other.coeffs)).ok()
    }

    /// Two distinct points on this line, taken from its intersections with
    /// the coordinate lines.
    pub fn two_points(&self) -> (ArealPoint, ArealPoint) {
        let mut found: Vec<ArealPoint> = Vec::with_capacity(2);
        for s in Side::ALL {
            if let Some(p) = self.meet(&ArealLine::side(s)) {
                if found.iter().all(|q| !q.same_as(&p)) {
                    found.push(p);
                }
            }
            if found.len() == 2 {
                break;
            }
        }
        let second = found.pop().expect("a line meets the coordinate lines in two points");
        let first = found.pop().expect("a line meets the coordinate lines in two points");
        (first, second)
    }
}

impl PartialEq for ArealLine {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// A vector between two finite points; components sum to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Displacement {
    comps: [Scalar; 3],
}

impl Displacement {
    pub fn new(u: Scalar, v: Scalar, w: Scalar) -> Result<Self> {
        if !(&u + &v + &w).is_zero() {
            return Err(GeometryError::InvalidDisplacement);
        }
        Ok(Displacement { comps: [u, v, w] })
    }

    pub fn comps(&self) -> &[Scalar; 3] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }
}

/// `R − P` in normalized coordinates.
pub fn displacement(p: &ArealPoint, r: &ArealPoint) -> Result<Displacement> {
    let np = p.normalized_coords()?;
    let nr = r.normalized_coords()?;
    Ok(Displacement { comps: [&nr[0] - &np[0], &nr[1] - &np[1], &nr[2] - &np[2]] })
}

/// Squared length of a displacement: `−(a²vw + b²wu + c²uv)`.
pub fn metric_d2(d: &Displacement, t: &RefTriangle) -> Scalar {
    let [u, v, w] = &d.comps;
    -(&t.a2 * v * w + &t.b2 * w * u + &t.c2 * u * v)
}

/// Squared distance between two finite points.
pub fn distance2(p: &ArealPoint, r: &ArealPoint, t: &RefTriangle) -> Result<Scalar> {
    Ok(metric_d2(&displacement(p, r)?, t))
}

pub fn line_through(p: &ArealPoint, r: &ArealPoint) -> Result<ArealLine> {
    let c = cross(p.coords(), r.coords());
    if c.iter().all(Zero::is_zero) {
        return Err(GeometryError::IdenticalPoints);
    }
    Ok(ArealLine { coeffs: c })
}

pub fn collinear(p: &ArealPoint, r: &ArealPoint, s: &ArealPoint) -> bool {
    det3(&[p.coords().clone(), r.coords().clone(), s.coords().clone()]).is_zero()
}

pub fn concurrent(l1: &ArealLine, l2: &ArealLine, l3: &ArealLine) -> bool {
    det3(&[l1.coeffs.clone(), l2.coeffs.clone(), l3.coeffs.clone()]).is_zero()
}

/// Determinant of the normalized coordinates; signed area relative to ABC.
pub fn signed_area_ratio(p: &ArealPoint, r: &ArealPoint, s: &ArealPoint) -> Result<Scalar> {
    Ok(det3(&[p.normalized_coords()?, r.normalized_coords()?, s.normalized_coords()?]))
}

/// Reflection in a side line of the reference triangle.
///
/// Placing the side on an axis, the vertex weight flips sign and the other two
/// weights absorb twice its projection onto the side; the irrational height
/// cancels, so the map is rational and linear on homogeneous coordinates.
pub fn reflect_in_side(p: &ArealPoint, side: Side, t: &RefTriangle) -> Result<ArealPoint> {
    if p.is_at_infinity() {
        return Err(GeometryError::PointAtInfinity);
    }
    let [x, y, z] = p.coords();
    let coords = match side {
        Side::BC => {
            let k = &t.a2;
            [-x.clone(), y + x * t.sc() / k, z + x * t.sb() / k]
        }
        Side::CA => {
            let k = &t.b2;
            [x + y * t.sc() / k, -y.clone(), z + y * t.sa() / k]
        }
        Side::AB => {
            let k = &t.c2;
            [x + z * t.sb() / k, y + z * t.sa() / k, -z.clone()]
        }
    };
    ArealPoint::from_array(coords)
}

/// Orthogonal projection onto a side line.
pub fn foot_on_side(p: &ArealPoint, side: Side, t: &RefTriangle) -> Result<ArealPoint> {
    ArealPoint::midpoint(p, &reflect_in_side(p, side, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn t654() -> RefTriangle {
        RefTriangle::from_ints(6, 5, 4).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let p = ArealPoint::from_ints(36, 5, 5).normalize().unwrap();
        assert_eq!(p.coords(), &[ratio(36, 46), ratio(5, 46), ratio(5, 46)]);
        let g = ArealPoint::from_ints(1, 1, 1).normalize().unwrap();
        assert_eq!(g.coords(), &[ratio(1, 3), ratio(1, 3), ratio(1, 3)]);
        assert_eq!(ArealPoint::from_ints(1, -2, 1).normalize().unwrap_err(), GeometryError::PointAtInfinity);
        assert_eq!(ArealPoint::new(int(0), int(0), int(0)).unwrap_err(), GeometryError::ZeroTriple);
    }

    #[test]
    fn displacement_examples() {
        let a = ArealPoint::from_ints(1, 0, 0);
        let ah = ArealPoint::from_ints(36, 5, 5);
        let d = displacement(&a, &ah).unwrap();
        assert_eq!(d.comps(), &[ratio(-10, 46), ratio(5, 46), ratio(5, 46)]);
        assert!(displacement(&ah, &ah).unwrap().is_zero());

        let ab = ArealPoint::from_ints(1152, 855, -432);
        let bc = ArealPoint::from_ints(-1620, 1800, 1395);
        let d = displacement(&ab, &bc).unwrap();
        assert_eq!(d.comps(), &[ratio(-2772, 1575), ratio(945, 1575), ratio(1827, 1575)]);
    }

    #[test]
    fn metric_examples() {
        let t = t654();
        let a = ArealPoint::from_ints(1, 0, 0);
        let ah = ArealPoint::from_ints(36, 5, 5);
        assert_eq!(distance2(&a, &ah, &t).unwrap(), ratio(1150, 2116));
        assert_eq!(metric_d2(&Displacement::new(int(0), int(0), int(0)).unwrap(), &t), int(0));
        let ab = ArealPoint::from_ints(1152, 855, -432);
        let bc = ArealPoint::from_ints(-1620, 1800, 1395);
        assert_eq!(distance2(&bc, &ab, &t).unwrap(), ratio(9648, 225));
        assert_eq!(Displacement::new(int(1), int(0), int(0)).unwrap_err(), GeometryError::InvalidDisplacement);
    }

    #[test]
    fn side_lengths_from_metric() {
        let t = t654();
        let [a, b, c] = [(1, 0, 0), (0, 1, 0), (0, 0, 1)].map(|(x, y, z)| ArealPoint::from_ints(x, y, z));
        assert_eq!(distance2(&b, &c, &t).unwrap(), int(36));
        assert_eq!(distance2(&c, &a, &t).unwrap(), int(25));
        assert_eq!(distance2(&a, &b, &t).unwrap(), int(16));
    }

    #[test]
    fn lines_and_collinearity() {
        let a = ArealPoint::from_ints(1, 0, 0);
        let b = ArealPoint::from_ints(0, 1, 0);
        let c = ArealPoint::from_ints(0, 0, 1);
        let g = ArealPoint::from_ints(1, 1, 1);
        assert_eq!(line_through(&a, &b).unwrap(), ArealLine::new(int(0), int(0), int(1)).unwrap());
        assert_eq!(line_through(&a, &g).unwrap(), ArealLine::new(int(0), int(-1), int(1)).unwrap());
        assert_eq!(line_through(&a, &a).unwrap_err(), GeometryError::IdenticalPoints);
        assert!(collinear(&a, &g, &ArealPoint::from_ints(36, 5, 5)));
        assert!(!collinear(&a, &b, &c));
        let o = ArealPoint::from_ints(180, 675, 720);
        let aa = ArealPoint::from_ints(-180, 900, 855);
        assert!(collinear(&o, &aa, &ArealPoint::from_ints(0, 1, 1)));
    }

    #[test]
    fn reflection_examples() {
        let t = t654();
        let o = ArealPoint::from_ints(180, 675, 720);
        let r = reflect_in_side(&o, Side::BC, &t).unwrap();
        assert_eq!(r.scaled_to_sum(&int(1575)).unwrap(), [int(-180), int(900), int(855)]);
        let b = ArealPoint::from_ints(0, 1, 0);
        assert_eq!(reflect_in_side(&b, Side::BC, &t).unwrap(), b);
        let h = ArealPoint::from_ints(27, 5, 3);
        let twice = reflect_in_side(&reflect_in_side(&h, Side::CA, &t).unwrap(), Side::CA, &t).unwrap();
        assert_eq!(twice, h);
        // reflection preserves distance to points on the mirror
        let a = ArealPoint::from_ints(1, 0, 0);
        let rh = reflect_in_side(&h, Side::AB, &t).unwrap();
        assert_eq!(distance2(&h, &a, &t).unwrap(), distance2(&rh, &a, &t).unwrap());
    }

    #[test]
    fn two_points_on_line() {
        let l = ArealLine::new(int(0), int(-1), int(1)).unwrap();
        let (p, q) = l.two_points();
        assert!(l.contains(&p) && l.contains(&q) && !p.same_as(&q));
        let side = ArealLine::side(Side::BC);
        let (p, q) = side.two_points();
        assert!(side.contains(&p) && side.contains(&q) && !p.same_as(&q));
    }
}
