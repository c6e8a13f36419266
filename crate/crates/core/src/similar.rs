//! The six triangles on the nine centres: similarity classification,
//! the coefficients k, l, m, n, bisector collinearities, perspectivity and
//! the half-turn congruence.

use num_traits::{Signed, Zero};

use crate::areal::{collinear, distance2, line_through, signed_area_ratio, ArealLine, ArealPoint};
use crate::error::{GeometryError, Result};
use crate::nine::{published_centres, CentreId, CentreSet};
use crate::points::classic_centers;
use crate::scalar::{checked_div, int, Scalar};
use crate::triangle::{RefTriangle, Side, Vertex};

#[derive(Debug, Clone, PartialEq)]
pub struct OrderedTriangle {
    pub v: [ArealPoint; 3],
}

impl OrderedTriangle {
    pub fn new(v1: ArealPoint, v2: ArealPoint, v3: ArealPoint) -> Result<Self> {
        if v1.same_as(&v2) || v2.same_as(&v3) || v3.same_as(&v1) || collinear(&v1, &v2, &v3) {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(OrderedTriangle { v: [v1, v2, v3] })
    }

    pub fn reference(t: &RefTriangle) -> Self {
        let [a, b, c] = Vertex::ALL.map(|v| t.vertex(v));
        OrderedTriangle { v: [a, b, c] }
    }

    /// Squared side opposite each position.
    pub fn squared_sides(&self, t: &RefTriangle) -> Result<[Scalar; 3]> {
        let [p, q, r] = &self.v;
        Ok([distance2(q, r, t)?, distance2(r, p, t)?, distance2(p, q, t)?])
    }

    /// Signed area as a multiple of the area of ABC.
    pub fn area_ratio(&self) -> Result<Scalar> {
        signed_area_ratio(&self.v[0], &self.v[1], &self.v[2])
    }

    pub fn permuted(&self, order: [usize; 3]) -> OrderedTriangle {
        OrderedTriangle { v: order.map(|i| self.v[i].clone()) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimilarityKind {
    Direct,
    Indirect,
    None,
}

impl SimilarityKind {
    pub fn name(self) -> &'static str {
        match self {
            SimilarityKind::Direct => "direct",
            SimilarityKind::Indirect => "indirect",
            SimilarityKind::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityReport {
    pub kind: SimilarityKind,
    /// Squared ratio of similitude; `None` when the triangles are not similar.
    pub ratio2: Option<Scalar>,
    pub congruent: bool,
}

/// Compares `s` with `r` position by position: similar when all three squared
/// side ratios agree, direct when the orientations agree.
pub fn compare_triangles(s: &OrderedTriangle, r: &OrderedTriangle, t: &RefTriangle) -> Result<SimilarityReport> {
    let ss = s.squared_sides(t)?;
    let rs = r.squared_sides(t)?;
    let ratios = [0, 1, 2].map(|i| checked_div(&ss[i], &rs[i]));
    let [r0, r1, r2] = match ratios {
        [Ok(x), Ok(y), Ok(z)] => [x, y, z],
        _ => return Err(GeometryError::DegenerateTriangle),
    };
    let os = s.area_ratio()?;
    let or = r.area_ratio()?;
    if os.is_zero() || or.is_zero() {
        return Err(GeometryError::DegenerateTriangle);
    }
    if r0 != r1 || r1 != r2 {
        return Ok(SimilarityReport { kind: SimilarityKind::None, ratio2: None, congruent: false });
    }
    let kind = if os.is_positive() == or.is_positive() { SimilarityKind::Direct } else { SimilarityKind::Indirect };
    let congruent = r0 == int(1);
    Ok(SimilarityReport { kind, ratio2: Some(r0), congruent })
}

pub fn classify_similarity(s: &OrderedTriangle, t: &RefTriangle) -> Result<SimilarityReport> {
    compare_triangles(s, &OrderedTriangle::reference(t), t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleId {
    Direct0,
    Direct1,
    Direct2,
    IndirectA,
    IndirectB,
    IndirectC,
}

impl TriangleId {
    pub const ALL: [TriangleId; 6] = [
        TriangleId::Direct0,
        TriangleId::Direct1,
        TriangleId::Direct2,
        TriangleId::IndirectA,
        TriangleId::IndirectB,
        TriangleId::IndirectC,
    ];

    pub const INDIRECT: [TriangleId; 3] = [TriangleId::IndirectA, TriangleId::IndirectB, TriangleId::IndirectC];

    pub fn name(self) -> &'static str {
        match self {
            TriangleId::Direct0 => "Direct0",
            TriangleId::Direct1 => "Direct1",
            TriangleId::Direct2 => "Direct2",
            TriangleId::IndirectA => "IndirectA",
            TriangleId::IndirectB => "IndirectB",
            TriangleId::IndirectC => "IndirectC",
        }
    }

    /// Vertex labels in the order that corresponds to `(A, B, C)`.
    pub fn nominal_vertices(self) -> [CentreId; 3] {
        use CentreId::*;
        match self {
            TriangleId::Direct0 => [AA, BB, CC],
            TriangleId::Direct1 => [CA, AB, BC],
            TriangleId::Direct2 => [BA, CB, AC],
            TriangleId::IndirectA => [AA, AB, AC],
            TriangleId::IndirectB => [BA, BB, BC],
            TriangleId::IndirectC => [CA, CB, CC],
        }
    }
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

#[derive(Debug, Clone, PartialEq)]
pub struct LabelledTriangle {
    pub id: TriangleId,
    pub labels: [CentreId; 3],
    pub triangle: OrderedTriangle,
}

/// The six triangles with vertex orders matched to `(A, B, C)`.
///
/// Each nominal order is checked by exact side matching; if it fails, the
/// first permutation that makes the triangle similar to ABC is used instead.
pub fn six_triangles(t: &RefTriangle) -> Result<Vec<LabelledTriangle>> {
    let cs = published_centres(t);
    TriangleId::ALL.iter().map(|&id| matched_triangle(id, &cs, t)).collect()
}

fn matched_triangle(id: TriangleId, cs: &CentreSet, t: &RefTriangle) -> Result<LabelledTriangle> {
    let nominal = id.nominal_vertices();
    for order in PERMUTATIONS {
        let labels = order.map(|i| nominal[i]);
        let [p, q, r] = labels.map(|l| cs.point(l));
        let triangle = OrderedTriangle::new(p, q, r)?;
        if classify_similarity(&triangle, t)?.kind != SimilarityKind::None {
            return Ok(LabelledTriangle { id, labels, triangle });
        }
    }
    // not similar under any order: keep the nominal one and let the report say so
    let [p, q, r] = nominal.map(|l| cs.point(l));
    Ok(LabelledTriangle { id, labels: nominal, triangle: OrderedTriangle::new(p, q, r)? })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients {
    pub k: Scalar,
    pub l: Scalar,
    pub m: Scalar,
    pub n: Scalar,
}

/// Closed-form squared ratios: `k` for the two H±-centre triangles,
/// `l, m, n` for the three triangles sharing a lowercase label.
pub fn similarity_coefficients(t: &RefTriangle) -> Coefficients {
    let (a2, b2, c2) = (&t.a2, &t.b2, &t.c2);
    let (a4, b4, c4) = (a2 * a2, b2 * b2, c2 * c2);
    let (a6, b6, c6) = (&a4 * a2, &b4 * b2, &c4 * c2);
    let two = int(2);
    let k_num = int(3) * a2 * b2 * c2 * (a2 + b2 + c2) + &two * (&b4 * &c4 + &c4 * &a4 + &a4 * &b4)
        - &a6 * (b2 + c2)
        - &b6 * (c2 + a2)
        - &c6 * (a2 + b2);
    let q = &t.q;
    Coefficients {
        k: k_num / (q * q),
        l: a2 * (&two * b2 + &two * c2 - a2) / q,
        m: b2 * (&two * c2 + &two * a2 - b2) / q,
        n: c2 * (&two * a2 + &two * b2 - c2) / q,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BisectorLine {
    pub side: Side,
    pub line: ArealLine,
    pub centres: Vec<CentreId>,
    /// O, the side midpoint and the three centres all lie on `line`.
    pub all_incident: bool,
}

pub fn side_midpoint(side: Side) -> ArealPoint {
    let mut c = [int(1), int(1), int(1)];
    c[side.opposite().index()] = int(0);
    ArealPoint::from_array(c).expect("nonzero")
}

/// Perpendicular bisector of a side: through its midpoint, in the direction
/// of the altitude onto it.
pub fn perpendicular_bisector(side: Side, t: &RefTriangle) -> ArealLine {
    let (sa, sb, sc) = (t.sa(), t.sb(), t.sc());
    let two = int(2);
    let direction = match side {
        Side::BC => [&two * &t.a2, -sc, -sb],
        Side::CA => [-sc, &two * &t.b2, -sa],
        Side::AB => [-sb, -sa, &two * &t.c2],
    };
    let ideal = ArealPoint::from_array(direction).expect("nonzero direction");
    line_through(&side_midpoint(side), &ideal).expect("midpoint is finite")
}

pub fn bisector_collinearity(t: &RefTriangle) -> Vec<BisectorLine> {
    let cs = published_centres(t);
    let o = classic_centers(t).o;
    Side::ALL
        .into_iter()
        .map(|side| {
            let mid = side_midpoint(side);
            let line = perpendicular_bisector(side, t);
            let centres: Vec<CentreId> = CentreId::ALL.into_iter().filter(|c| c.bisected_side() == side).collect();
            let all_incident =
                line.contains(&o) && line.contains(&mid) && centres.iter().all(|&c| line.contains(&cs.point(c)));
            BisectorLine { side, line, centres, all_incident }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerspectivityReport {
    pub perspective: bool,
    pub perspector: Option<ArealPoint>,
}

/// Whether the joins `pᵢqᵢ` concur.
pub fn perspectivity(p: &[ArealPoint; 3], q: &[ArealPoint; 3]) -> PerspectivityReport {
    let no = PerspectivityReport { perspective: false, perspector: None };
    let lines: Vec<ArealLine> = match (0..3).map(|i| line_through(&p[i], &q[i])).collect() {
        Ok(ls) => ls,
        Err(_) => return no,
    };
    let meet = (0..3).flat_map(|i| ((i + 1)..3).map(move |j| (i, j))).find_map(|(i, j)| lines[i].meet(&lines[j]));
    match meet {
        Some(x) if lines.iter().all(|l| l.contains(&x)) => {
            PerspectivityReport { perspective: true, perspector: Some(x) }
        }
        _ => no,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairPerspectivity {
    pub first: TriangleId,
    pub second: TriangleId,
    pub report: PerspectivityReport,
}

/// Perspectivity of each pair of the indirect triangles, pairing vertices
/// that share a perpendicular bisector.
pub fn mutual_perspectivity(t: &RefTriangle) -> Vec<PairPerspectivity> {
    let cs = published_centres(t);
    let pairs = [
        (TriangleId::IndirectA, TriangleId::IndirectB),
        (TriangleId::IndirectB, TriangleId::IndirectC),
        (TriangleId::IndirectC, TriangleId::IndirectA),
    ];
    pairs
        .into_iter()
        .map(|(first, second)| {
            let p_labels = first.nominal_vertices();
            let q_labels = second.nominal_vertices();
            let partner = |c: CentreId| {
                *q_labels
                    .iter()
                    .find(|q| q.bisected_side() == c.bisected_side())
                    .expect("each bisector carries one vertex of each triangle")
            };
            let p = p_labels.map(|c| cs.point(c));
            let q = p_labels.map(|c| cs.point(partner(c)));
            PairPerspectivity { first, second, report: perspectivity(&p, &q) }
        })
        .collect()
}

/// Half-turn about N applied to a finite point: `2N − P`.
pub fn half_turn(n: &ArealPoint, p: &ArealPoint) -> Result<ArealPoint> {
    ArealPoint::affine(&[(int(2), n), (int(-1), p)])
}

/// `aA = 2N − A`, `bB = 2N − B`, `cC = 2N − C`, checked exactly.
pub fn rotation_congruence(t: &RefTriangle) -> [bool; 3] {
    let cs = published_centres(t);
    let n = classic_centers(t).n;
    [(CentreId::AA, Vertex::A), (CentreId::BB, Vertex::B), (CentreId::CC, Vertex::C)].map(|(c, v)| {
        half_turn(&n, &t.vertex(v))
            .map(|img| img.normalized_coords().ok() == cs.point(c).normalized_coords().ok())
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn t654() -> RefTriangle {
        RefTriangle::from_ints(6, 5, 4).unwrap()
    }

    fn get(tris: &[LabelledTriangle], id: TriangleId) -> &LabelledTriangle {
        tris.iter().find(|x| x.id == id).unwrap()
    }

    #[test]
    fn six_triangles_654() {
        let t = t654();
        let tris = six_triangles(&t).unwrap();
        let d0 = get(&tris, TriangleId::Direct0);
        assert_eq!(d0.triangle.squared_sides(&t).unwrap(), [int(36), int(25), int(16)]);
        let ia = get(&tris, TriangleId::IndirectA);
        assert_eq!(ia.labels, [CentreId::AA, CentreId::AB, CentreId::AC]);
        assert_eq!(ia.triangle.squared_sides(&t).unwrap()[0], ratio(6624, 175));
        let d1 = get(&tris, TriangleId::Direct1);
        assert_eq!(d1.labels, [CentreId::CA, CentreId::AB, CentreId::BC]);
        assert_eq!(d1.triangle.squared_sides(&t).unwrap()[0], ratio(9648, 225));
        let d2 = get(&tris, TriangleId::Direct2);
        assert_eq!(d2.labels, TriangleId::Direct2.nominal_vertices());
    }

    #[test]
    fn classification_654() {
        let t = t654();
        let tris = six_triangles(&t).unwrap();
        let rep = classify_similarity(&get(&tris, TriangleId::Direct0).triangle, &t).unwrap();
        assert_eq!(rep, SimilarityReport { kind: SimilarityKind::Direct, ratio2: Some(int(1)), congruent: true });
        let rep = classify_similarity(&get(&tris, TriangleId::IndirectA).triangle, &t).unwrap();
        assert_eq!(rep.kind, SimilarityKind::Indirect);
        assert_eq!(rep.ratio2, Some(ratio(184, 175)));
        let rep = classify_similarity(&OrderedTriangle::reference(&t), &t).unwrap();
        assert!(rep.congruent && rep.kind == SimilarityKind::Direct);
        // medial triangle is similar with ratio 1/4, but in the order of the opposite sides
        let med = OrderedTriangle::new(
            ArealPoint::from_ints(0, 1, 1),
            ArealPoint::from_ints(1, 0, 1),
            ArealPoint::from_ints(1, 1, 0),
        )
        .unwrap();
        let rep = classify_similarity(&med, &t).unwrap();
        assert_eq!(rep.ratio2, Some(ratio(1, 4)));
        assert_eq!(rep.kind, SimilarityKind::Direct);
        let rep = classify_similarity(&med.permuted([0, 2, 1]), &t).unwrap();
        assert_eq!(rep.kind, SimilarityKind::None);
    }

    #[test]
    fn degenerate_triangle() {
        let r = OrderedTriangle::new(
            ArealPoint::from_ints(1, 0, 0),
            ArealPoint::from_ints(0, 1, 0),
            ArealPoint::from_ints(1, 1, 0),
        );
        assert_eq!(r.unwrap_err(), GeometryError::DegenerateTriangle);
    }

    #[test]
    fn coefficients_654() {
        let c = similarity_coefficients(&t654());
        assert_eq!(c.k, ratio(268, 225));
        assert_eq!(c.l, ratio(184, 175));
        assert_eq!(c.m, ratio(79, 63));
        assert_eq!(c.n, int(16) * int(2 * 36 + 2 * 25 - 16) / int(1575));
    }

    #[test]
    fn bisectors_654() {
        let t = t654();
        let lines = bisector_collinearity(&t);
        assert!(lines.iter().all(|l| l.all_incident));
        assert_eq!(lines[0].centres, vec![CentreId::AA, CentreId::BC, CentreId::CB]);
        let aa = published_centres(&t).point(CentreId::AA);
        assert!(!perpendicular_bisector(Side::AB, &t).contains(&aa));
    }

    #[test]
    fn perspectivity_654() {
        let t = t654();
        let o = classic_centers(&t).o;
        for pair in mutual_perspectivity(&t) {
            assert!(pair.report.perspective);
            assert_eq!(pair.report.perspector.unwrap(), o);
        }
        let abc = Vertex::ALL.map(|v| t.vertex(v));
        let medial = Side::ALL.map(side_midpoint);
        let rep = perspectivity(&abc, &medial);
        assert_eq!(rep.perspector, Some(ArealPoint::from_ints(1, 1, 1)));
    }

    #[test]
    fn rotation_654() {
        let t = t654();
        assert_eq!(rotation_congruence(&t), [true; 3]);
        let n = classic_centers(&t).n;
        let img = half_turn(&n, &t.vertex(Vertex::A)).unwrap();
        assert_eq!(img.scaled_to_sum(&int(1575)).unwrap(), [int(-180), int(900), int(855)]);
        assert_eq!(half_turn(&n, &n).unwrap(), n);
    }
}
