//! The reference triangle, described by its side lengths.

use num_traits::{Signed, Zero};

use crate::areal::ArealPoint;
use crate::error::{GeometryError, Result};
use crate::scalar::{self, int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The side opposite this vertex.
    pub fn opposite(self) -> Side {
        match self {
            Vertex::A => Side::BC,
            Vertex::B => Side::CA,
            Vertex::C => Side::AB,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    BC,
    CA,
    AB,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::BC, Side::CA, Side::AB];

    pub fn opposite(self) -> Vertex {
        match self {
            Side::BC => Vertex::A,
            Side::CA => Vertex::B,
            Side::AB => Vertex::C,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::BC => "BC",
            Side::CA => "CA",
            Side::AB => "AB",
        }
    }
}

/// Triangle ABC with exact rational side lengths `a = BC`, `b = CA`, `c = AB`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefTriangle {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub a2: Scalar,
    pub b2: Scalar,
    pub c2: Scalar,
    /// `(a+b+c)(b+c-a)(c+a-b)(a+b-c)`, i.e. sixteen times the squared area.
    pub q: Scalar,
    pub scalene: bool,
    pub acute: bool,
}

impl RefTriangle {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() || !c.is_positive() {
            return Err(GeometryError::NonPositiveSide);
        }
        let q = (&a + &b + &c) * (&b + &c - &a) * (&c + &a - &b) * (&a + &b - &c);
        if !q.is_positive() {
            return Err(GeometryError::TriangleInequality);
        }
        let a2 = &a * &a;
        let b2 = &b * &b;
        let c2 = &c * &c;
        let scalene = a != b && b != c && c != a;
        let acute =
            (&b2 + &c2 - &a2).is_positive() && (&c2 + &a2 - &b2).is_positive() && (&a2 + &b2 - &c2).is_positive();
        Ok(RefTriangle { a, b, c, a2, b2, c2, q, scalene, acute })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(int(a), int(b), int(c))
    }

    /// Parses `"a,b,c"` where each entry is an integer or `p/q`.
    pub fn parse_sides(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(GeometryError::Parse(text.to_string()));
        }
        Self::new(scalar::parse(parts[0])?, scalar::parse(parts[1])?, scalar::parse(parts[2])?)
    }

    /// Like [`RefTriangle::new`] but also rejects triangles with two equal sides.
    pub fn new_scalene(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
        let t = Self::new(a, b, c)?;
        if !t.scalene {
            return Err(GeometryError::NotScalene);
        }
        Ok(t)
    }

    /// `b²+c²−a²`
    pub fn sa(&self) -> Scalar {
        &self.b2 + &self.c2 - &self.a2
    }

    /// `c²+a²−b²`
    pub fn sb(&self) -> Scalar {
        &self.c2 + &self.a2 - &self.b2
    }

    /// `a²+b²−c²`
    pub fn sc(&self) -> Scalar {
        &self.a2 + &self.b2 - &self.c2
    }

    pub fn is_right(&self) -> bool {
        self.sa().is_zero() || self.sb().is_zero() || self.sc().is_zero()
    }

    pub fn squared_sides(&self) -> [Scalar; 3] {
        [self.a2.clone(), self.b2.clone(), self.c2.clone()]
    }

    pub fn vertex(&self, v: Vertex) -> ArealPoint {
        match v {
            Vertex::A => ArealPoint::from_ints(1, 0, 0),
            Vertex::B => ArealPoint::from_ints(0, 1, 0),
            Vertex::C => ArealPoint::from_ints(0, 0, 1),
        }
    }

    pub fn area_f64(&self) -> f64 {
        scalar::to_f64(&self.q).sqrt() / 4.0
    }

    /// Circumradius `abc / 4K`.
    pub fn circumradius_f64(&self) -> f64 {
        scalar::to_f64(&(&self.a * &self.b * &self.c)) / (4.0 * self.area_f64())
    }

    pub fn sides_f64(&self) -> [f64; 3] {
        [scalar::to_f64(&self.a), scalar::to_f64(&self.b), scalar::to_f64(&self.c)]
    }

    /// Cosines of the angles at A, B, C.
    pub fn cosines_f64(&self) -> [f64; 3] {
        let [a, b, c] = self.sides_f64();
        [
            scalar::to_f64(&self.sa()) / (2.0 * b * c),
            scalar::to_f64(&self.sb()) / (2.0 * c * a),
            scalar::to_f64(&self.sc()) / (2.0 * a * b),
        ]
    }

    /// Interior angles at A, B, C in radians.
    pub fn angles_f64(&self) -> [f64; 3] {
        self.cosines_f64().map(|c| c.clamp(-1.0, 1.0).acos())
    }
}
