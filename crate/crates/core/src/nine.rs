//! The nine circles through pairs of vertices and one of H, H+, H−, plus the
//! orthocentroidal circle, together with their published centres.

use num_traits::Zero;

use crate::areal::{ArealLine, ArealPoint};
use crate::circle::{Circle, Tangency};
use crate::points::{brocard_points, classic_centers, medial_points, PointId};
use crate::scalar::{cross, int, Scalar};
use crate::triangle::{RefTriangle, Side, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircleId {
    BHC,
    CHA,
    AHB,
    BHpC,
    CHpA,
    AHpB,
    CHmA,
    AHmB,
    BHmC,
    Orthocentroidal,
}

impl CircleId {
    pub const NINE: [CircleId; 9] = [
        CircleId::BHC,
        CircleId::CHA,
        CircleId::AHB,
        CircleId::BHpC,
        CircleId::CHpA,
        CircleId::AHpB,
        CircleId::CHmA,
        CircleId::AHmB,
        CircleId::BHmC,
    ];

    pub const TEN: [CircleId; 10] = [
        CircleId::BHC,
        CircleId::CHA,
        CircleId::AHB,
        CircleId::BHpC,
        CircleId::CHpA,
        CircleId::AHpB,
        CircleId::CHmA,
        CircleId::AHmB,
        CircleId::BHmC,
        CircleId::Orthocentroidal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CircleId::BHC => "BHC",
            CircleId::CHA => "CHA",
            CircleId::AHB => "AHB",
            CircleId::BHpC => "BHpC",
            CircleId::CHpA => "CHpA",
            CircleId::AHpB => "AHpB",
            CircleId::CHmA => "CHmA",
            CircleId::AHmB => "AHmB",
            CircleId::BHmC => "BHmC",
            CircleId::Orthocentroidal => "orthocentroidal",
        }
    }

    /// The two vertices and the special point the circle is drawn through.
    pub fn defining_points(self) -> Option<(Vertex, Vertex, PointId)> {
        use PointId::{HMinus, HPlus, H};
        use Vertex::{A, B, C};
        match self {
            CircleId::BHC => Some((B, C, H)),
            CircleId::CHA => Some((C, A, H)),
            CircleId::AHB => Some((A, B, H)),
            CircleId::BHpC => Some((B, C, HPlus)),
            CircleId::CHpA => Some((C, A, HPlus)),
            CircleId::AHpB => Some((A, B, HPlus)),
            CircleId::CHmA => Some((C, A, HMinus)),
            CircleId::AHmB => Some((A, B, HMinus)),
            CircleId::BHmC => Some((B, C, HMinus)),
            CircleId::Orthocentroidal => None,
        }
    }

    pub fn centre(self) -> Option<CentreId> {
        match self {
            CircleId::BHC => Some(CentreId::AA),
            CircleId::CHA => Some(CentreId::BB),
            CircleId::AHB => Some(CentreId::CC),
            CircleId::AHpB => Some(CentreId::AB),
            CircleId::BHpC => Some(CentreId::BC),
            CircleId::CHpA => Some(CentreId::CA),
            CircleId::CHmA => Some(CentreId::AC),
            CircleId::AHmB => Some(CentreId::BA),
            CircleId::BHmC => Some(CentreId::CB),
            CircleId::Orthocentroidal => None,
        }
    }
}

/// Centre labels. The lowercase letter names the vertex whose special point
/// (aH, bH, cH) lies on the circle; the uppercase letter groups by H (`aA`,
/// `bB`, `cC`), H+ (`aB`, `bC`, `cA`) and H− (`aC`, `bA`, `cB`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CentreId {
    AA,
    BB,
    CC,
    AB,
    BC,
    CA,
    AC,
    BA,
    CB,
}

impl CentreId {
    pub const ALL: [CentreId; 9] = [
        CentreId::AA,
        CentreId::BB,
        CentreId::CC,
        CentreId::AB,
        CentreId::BC,
        CentreId::CA,
        CentreId::AC,
        CentreId::BA,
        CentreId::CB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentreId::AA => "aA",
            CentreId::BB => "bB",
            CentreId::CC => "cC",
            CentreId::AB => "aB",
            CentreId::BC => "bC",
            CentreId::CA => "cA",
            CentreId::AC => "aC",
            CentreId::BA => "bA",
            CentreId::CB => "cB",
        }
    }

    pub fn circle(self) -> CircleId {
        CircleId::NINE.into_iter().find(|c| c.centre() == Some(self)).expect("every centre has a circle")
    }

    /// The side whose perpendicular bisector carries this centre.
    pub fn bisected_side(self) -> Side {
        let (p, q, _) = self.circle().defining_points().expect("one of the nine");
        Side::ALL.into_iter().find(|s| s.opposite() != p && s.opposite() != q).expect("two vertices determine a side")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NineCircleSet {
    pub circles: Vec<(CircleId, Circle)>,
    pub orthocentroidal: Circle,
}

impl NineCircleSet {
    pub fn get(&self, id: CircleId) -> &Circle {
        if id == CircleId::Orthocentroidal {
            return &self.orthocentroidal;
        }
        &self.circles.iter().find(|(c, _)| *c == id).expect("all nine present").1
    }
}

/// All ten circles in canonical `(u, v, w)` form.
pub fn build_nine(t: &RefTriangle) -> NineCircleSet {
    let z = Scalar::zero;
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    let (a2, b2, c2) = (t.a2.clone(), t.b2.clone(), t.c2.clone());
    let circles = vec![
        (CircleId::BHC, Circle::new(t, sa.clone(), z(), z())),
        (CircleId::CHA, Circle::new(t, z(), sb.clone(), z())),
        (CircleId::AHB, Circle::new(t, z(), z(), sc.clone())),
        (CircleId::BHpC, Circle::new(t, b2.clone(), z(), z())),
        (CircleId::CHpA, Circle::new(t, z(), c2.clone(), z())),
        (CircleId::AHpB, Circle::new(t, z(), z(), a2.clone())),
        (CircleId::CHmA, Circle::new(t, z(), a2, z())),
        (CircleId::AHmB, Circle::new(t, z(), z(), b2)),
        (CircleId::BHmC, Circle::new(t, c2, z(), z())),
    ];
    let third = |s: Scalar| s / int(3);
    let orthocentroidal = Circle::new(t, third(sa), third(sb), third(sc));
    NineCircleSet { circles, orthocentroidal }
}

/// Coefficients of `x², y², z², yz, zx, xy`.
pub type QuadraticCoeffs = [Scalar; 6];

pub fn quadratic_coeffs(c: &Circle) -> QuadraticCoeffs {
    let m = c.conic_matrix();
    let two = int(2);
    [m[0][0].clone(), m[1][1].clone(), m[2][2].clone(), &m[1][2] * &two, &m[2][0] * &two, &m[0][1] * &two]
}

/// The circle equations in the form they are usually written down
/// (before reduction to canonical form).
pub fn published_equation(id: CircleId, t: &RefTriangle) -> QuadraticCoeffs {
    let z = Scalar::zero;
    let (a2, b2, c2) = (&t.a2, &t.b2, &t.c2);
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    match id {
        CircleId::BHC => [-sa.clone(), z(), z(), a2.clone(), b2 - &sa, c2 - &sa],
        CircleId::CHA => [z(), -sb.clone(), z(), a2 - &sb, b2.clone(), c2 - &sb],
        CircleId::AHB => [z(), z(), -sc.clone(), a2 - &sc, b2 - &sc, c2.clone()],
        CircleId::AHpB => [z(), z(), a2.clone(), z(), a2 - b2, -c2.clone()],
        CircleId::BHpC => [b2.clone(), z(), z(), -a2.clone(), z(), b2 - c2],
        CircleId::CHpA => [z(), c2.clone(), z(), c2 - a2, -b2.clone(), z()],
        CircleId::CHmA => [z(), a2.clone(), z(), z(), -b2.clone(), a2 - c2],
        CircleId::AHmB => [z(), z(), b2.clone(), b2 - a2, z(), -c2.clone()],
        CircleId::BHmC => [c2.clone(), z(), z(), -a2.clone(), c2 - b2, z()],
        CircleId::Orthocentroidal => [sa, sb, sc, -a2.clone(), -b2.clone(), -c2.clone()],
    }
}

pub fn proportional(p: &[Scalar], q: &[Scalar]) -> bool {
    p.len() == q.len()
        && p.iter().any(|x| !x.is_zero())
        && q.iter().any(|x| !x.is_zero())
        && (0..p.len()).all(|i| (0..p.len()).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentreSet {
    pub centres: Vec<(CentreId, [Scalar; 3])>,
}

impl CentreSet {
    pub fn raw(&self, id: CentreId) -> &[Scalar; 3] {
        &self.centres.iter().find(|(c, _)| *c == id).expect("all nine present").1
    }

    pub fn point(&self, id: CentreId) -> ArealPoint {
        ArealPoint::from_array(self.raw(id).clone()).expect("published centres are nonzero")
    }
}

/// The nine centres as closed-form triples, each summing to `Q`.
pub fn published_centres(t: &RefTriangle) -> CentreSet {
    let (a2, b2, c2) = (&t.a2, &t.b2, &t.c2);
    let (a4, b4, c4) = (a2 * a2, b2 * b2, c2 * c2);
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    let two = int(2);
    let (ab, bc, ca) = (a2 * b2, b2 * c2, c2 * a2);
    // −p⁴ − q⁴ + 2p²q² + (the two remaining products): recurs in every triple
    let mixed = |p4: &Scalar, q4: &Scalar, pq: &Scalar, r1: &Scalar, r2: &Scalar| -> Scalar {
        -p4.clone() - q4 + &two * pq + r1 + r2
    };
    let m_ca = mixed(&c4, &a4, &ca, &ab, &bc);
    let m_ab = mixed(&a4, &b4, &ab, &ca, &bc);
    let m_bc = mixed(&b4, &c4, &bc, &ab, &ca);
    let centres = vec![
        (CentreId::AA, [-(a2 * &sa), m_ca.clone(), m_ab.clone()]),
        (CentreId::BB, [m_bc.clone(), -(b2 * &sb), m_ab.clone()]),
        (CentreId::CC, [m_bc.clone(), m_ca.clone(), -(c2 * &sc)]),
        (CentreId::AB, [&two * &ca, m_ab.clone(), -(c2 * &sb)]),
        (CentreId::BC, [-(a2 * &sc), &two * &ab, m_bc.clone()]),
        (CentreId::CA, [m_ca.clone(), -(b2 * &sa), &two * &bc]),
        (CentreId::AC, [&two * &ab, -(b2 * &sc), m_ca]),
        (CentreId::BA, [m_ab, &two * &bc, -(c2 * &sa)]),
        (CentreId::CB, [-(a2 * &sb), m_bc, &two * &ca]),
    ];
    CentreSet { centres }
}

/// Pole-of-infinity centres of the nine circles, as an independent route.
pub fn computed_centres(t: &RefTriangle) -> Vec<(CentreId, ArealPoint)> {
    let set = build_nine(t);
    set.circles
        .iter()
        .map(|(id, c)| {
            let centre = c.center().expect("the nine circles are non-degenerate");
            (id.centre().expect("one of the nine"), centre)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub rows: Vec<PointId>,
    pub cols: Vec<CircleId>,
    pub incidence: Vec<Vec<bool>>,
}

impl MembershipReport {
    pub fn get(&self, p: PointId, c: CircleId) -> bool {
        let i = self.rows.iter().position(|r| *r == p).expect("row");
        let j = self.cols.iter().position(|k| *k == c).expect("col");
        self.incidence[i][j]
    }
}

pub fn special_point(id: PointId, t: &RefTriangle) -> ArealPoint {
    crate::points::named_point(id, t).coords
}

/// Exact incidence of the six special points with the ten circles.
pub fn membership_report(t: &RefTriangle) -> MembershipReport {
    let set = build_nine(t);
    let rows = PointId::SIX.to_vec();
    let cols = CircleId::TEN.to_vec();
    let cc = classic_centers(t);
    let (hp, hm) = brocard_points(t);
    let (ah, bh, ch) = medial_points(t);
    let points = [cc.h, hp, hm, ah, bh, ch];
    let incidence = points.iter().map(|p| cols.iter().map(|&c| set.get(c).contains(p)).collect()).collect();
    MembershipReport { rows, cols, incidence }
}

/// The incidence pattern the constructions predict.
pub fn expected_membership(p: PointId, c: CircleId) -> bool {
    use CircleId::*;
    let on: &[CircleId] = match p {
        PointId::H => &[BHC, CHA, AHB, Orthocentroidal],
        PointId::HPlus => &[BHpC, CHpA, AHpB],
        PointId::HMinus => &[CHmA, AHmB, BHmC],
        PointId::AH => &[BHC, AHpB, CHmA, Orthocentroidal],
        PointId::BH => &[CHA, BHpC, AHmB, Orthocentroidal],
        PointId::CH => &[AHB, CHpA, BHmC, Orthocentroidal],
        _ => &[],
    };
    on.contains(&c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TangencyEntry {
    pub circle: CircleId,
    pub side: Side,
    pub vertex: Vertex,
    pub tangent: bool,
}

/// The six Brocard circles each touch a side at a vertex.
pub fn tangency_report(t: &RefTriangle) -> Vec<TangencyEntry> {
    let set = build_nine(t);
    let expected = [
        (CircleId::AHpB, Side::BC, Vertex::B),
        (CircleId::BHpC, Side::CA, Vertex::C),
        (CircleId::CHpA, Side::AB, Vertex::A),
        (CircleId::CHmA, Side::BC, Vertex::C),
        (CircleId::AHmB, Side::CA, Vertex::A),
        (CircleId::BHmC, Side::AB, Vertex::B),
    ];
    expected
        .into_iter()
        .map(|(circle, side, vertex)| {
            let tangent = match set.get(circle).tangency(&ArealLine::side(side)) {
                Tangency::Tangent(p) => p.same_as(&t.vertex(vertex)),
                _ => false,
            };
            TangencyEntry { circle, side, vertex, tangent }
        })
        .collect()
}

/// Projective equality of raw triples.
pub fn same_point(p: &[Scalar; 3], q: &[Scalar; 3]) -> bool {
    cross(p, q).iter().all(Zero::is_zero)
}
