//! Floating-point Cartesian embedding: `B = (0,0)`, `C = (a,0)`, `A` above the x-axis.

use crate::areal::ArealPoint;
use crate::error::{GeometryError, Result};
use crate::scalar::to_f64;
use crate::triangle::RefTriangle;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianPoint {
    pub px: f64,
    pub py: f64,
}

impl CartesianPoint {
    pub fn new(px: f64, py: f64) -> Self {
        CartesianPoint { px, py }
    }

    pub fn dist(self, other: CartesianPoint) -> f64 {
        (self.px - other.px).hypot(self.py - other.py)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Embedding {
    pub a: CartesianPoint,
    pub b: CartesianPoint,
    pub c: CartesianPoint,
}

impl Embedding {
    pub fn new(t: &RefTriangle) -> Self {
        let a = to_f64(&t.a);
        // A_x is rational; only A_y needs a square root
        let ax = to_f64(&(&t.a2 + &t.c2 - &t.b2)) / (2.0 * a);
        let ay = (to_f64(&t.c2) - ax * ax).max(0.0).sqrt();
        Embedding { a: CartesianPoint::new(ax, ay), b: CartesianPoint::new(0.0, 0.0), c: CartesianPoint::new(a, 0.0) }
    }

    pub fn embed(&self, p: &ArealPoint) -> Result<CartesianPoint> {
        let [x, y, z] = p.normalized_coords()?.map(|c| to_f64(&c));
        Ok(CartesianPoint::new(
            x * self.a.px + y * self.b.px + z * self.c.px,
            x * self.a.py + y * self.b.py + z * self.c.py,
        ))
    }
}

pub fn cartesian_embed(p: &ArealPoint, t: &RefTriangle) -> Result<CartesianPoint> {
    Embedding::new(t).embed(p)
}

/// Unsigned angle `∠PJR` in `[0, π]`.
pub fn angle_at(j: &ArealPoint, p: &ArealPoint, r: &ArealPoint, t: &RefTriangle) -> Result<f64> {
    if j.same_as(p) || j.same_as(r) {
        return Err(GeometryError::CoincidentPoints);
    }
    let e = Embedding::new(t);
    let (j, p, r) = (e.embed(j)?, e.embed(p)?, e.embed(r)?);
    let (ux, uy) = (p.px - j.px, p.py - j.py);
    let (vx, vy) = (r.px - j.px, r.py - j.py);
    Ok((ux * vy - uy * vx).abs().atan2(ux * vx + uy * vy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn t654() -> RefTriangle {
        RefTriangle::from_ints(6, 5, 4).unwrap()
    }

    #[test]
    fn vertices_embed() {
        let t = t654();
        let b = cartesian_embed(&ArealPoint::from_ints(0, 1, 0), &t).unwrap();
        assert_eq!(b, CartesianPoint::new(0.0, 0.0));
        let c = cartesian_embed(&ArealPoint::from_ints(0, 0, 1), &t).unwrap();
        assert_eq!(c, CartesianPoint::new(6.0, 0.0));
        let a = cartesian_embed(&ArealPoint::from_ints(1, 0, 0), &t).unwrap();
        assert!((a.px - 2.25).abs() < 1e-15);
        assert!((a.py - 10.9375f64.sqrt()).abs() < 1e-14);
        assert!((a.py - 3.30718914).abs() < 1e-8);
    }

    #[test]
    fn angles() {
        let t = t654();
        let [a, b, c] = [(1, 0, 0), (0, 1, 0), (0, 0, 1)].map(|(x, y, z)| ArealPoint::from_ints(x, y, z));
        let bac = angle_at(&a, &b, &c, &t).unwrap();
        assert!((bac - 0.125f64.acos()).abs() < 1e-12);
        assert!((bac - 1.445468).abs() < 1e-6);
        let h = ArealPoint::from_ints(27, 5, 3);
        let bhc = angle_at(&h, &b, &c, &t).unwrap();
        assert!((bhc - (PI - bac)).abs() < 1e-12);
        assert!((bhc - 1.696125).abs() < 1e-6);
        assert_eq!(angle_at(&a, &a, &c, &t).unwrap_err(), GeometryError::CoincidentPoints);
    }
}
