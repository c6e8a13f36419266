//! Plain Cartesian floating-point geometry, independent of the areal code.

#![allow(dead_code)]

use brocard_core::scalar::to_f64;
use brocard_core::{ArealPoint, RefTriangle};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct P(pub f64, pub f64);

impl P {
    pub fn add(self, o: P) -> P {
        P(self.0 + o.0, self.1 + o.1)
    }
    pub fn sub(self, o: P) -> P {
        P(self.0 - o.0, self.1 - o.1)
    }
    pub fn scale(self, k: f64) -> P {
        P(self.0 * k, self.1 * k)
    }
    pub fn dot(self, o: P) -> f64 {
        self.0 * o.0 + self.1 * o.1
    }
    pub fn cross(self, o: P) -> f64 {
        self.0 * o.1 - self.1 * o.0
    }
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
    pub fn dist(self, o: P) -> f64 {
        self.sub(o).norm()
    }
}

pub struct Tri {
    pub a: P,
    pub b: P,
    pub c: P,
}

impl Tri {
    /// B at the origin, C on the positive x-axis, A above.
    pub fn new(t: &RefTriangle) -> Tri {
        let (a, b, c) = (to_f64(&t.a), to_f64(&t.b), to_f64(&t.c));
        let ax = (c * c + a * a - b * b) / (2.0 * a);
        let ay = (c * c - ax * ax).sqrt();
        Tri { a: P(ax, ay), b: P(0.0, 0.0), c: P(a, 0.0) }
    }

    pub fn verts(&self) -> [P; 3] {
        [self.a, self.b, self.c]
    }

    pub fn place(&self, p: &ArealPoint) -> P {
        let [x, y, z] = p.coords().clone().map(|c| to_f64(&c));
        let s = x + y + z;
        self.a.scale(x / s).add(self.b.scale(y / s)).add(self.c.scale(z / s))
    }

    pub fn circumcentre(&self) -> P {
        circumcentre(self.a, self.b, self.c)
    }

    pub fn orthocentre(&self) -> P {
        self.a.add(self.b).add(self.c).sub(self.circumcentre().scale(2.0))
    }
}

pub fn circumcentre(p: P, q: P, r: P) -> P {
    let d = 2.0 * (p.0 * (q.1 - r.1) + q.0 * (r.1 - p.1) + r.0 * (p.1 - q.1));
    let (p2, q2, r2) = (p.dot(p), q.dot(q), r.dot(r));
    P(
        (p2 * (q.1 - r.1) + q2 * (r.1 - p.1) + r2 * (p.1 - q.1)) / d,
        (p2 * (r.0 - q.0) + q2 * (p.0 - r.0) + r2 * (q.0 - p.0)) / d,
    )
}

/// Mirror image of `p` in the line through `u` and `v`.
pub fn reflect(p: P, u: P, v: P) -> P {
    let d = v.sub(u);
    let foot = u.add(d.scale(p.sub(u).dot(d) / d.dot(d)));
    foot.scale(2.0).sub(p)
}

/// The other point where the line from `k` towards `toward` meets the circle
/// with centre `centre` through `k`.
pub fn second_hit(centre: P, k: P, toward: P) -> P {
    let d = toward.sub(k);
    let s = -2.0 * d.dot(k.sub(centre)) / d.dot(d);
    k.add(d.scale(s))
}

/// Unsigned angle at `j` between the rays to `p` and `r`.
pub fn angle(j: P, p: P, r: P) -> f64 {
    let (u, v) = (p.sub(j), r.sub(j));
    u.cross(v).abs().atan2(u.dot(v))
}

pub fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
}

pub fn close_p(p: P, q: P, tol: f64) -> bool {
    close(p.0, q.0, tol) && close(p.1, q.1, tol)
}
