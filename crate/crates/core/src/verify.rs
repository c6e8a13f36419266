//! Property suites over seeded random (or fixed) triangles.
//!
//! Every exact suite compares rationals with zero tolerance; the float suites
//! (metric oracle, distances, angles) use the configured relative tolerance.

use rand::rngs::StdRng;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::areal::{distance2, reflect_in_side, ArealPoint};
use crate::circle::circle_through;
use crate::embed::Embedding;
use crate::hagge::{hagge_figure, pivot_carried_triangle, predicted_kind};
use crate::nine::{
    build_nine, computed_centres, expected_membership, membership_report, proportional, published_centres,
    published_equation, quadratic_coeffs, same_point, tangency_report, CentreId, CircleId,
};
use crate::points::{
    angle_table, classic_centers, distance_table, exact_vertex_distances2, named_point, pedal_triangle,
    predicted_angles, PointId,
};
use crate::sample::{random_point, random_triangle, rng_for};
use crate::scalar::{self, to_f64, Scalar};
use crate::similar::{
    bisector_collinearity, classify_similarity, compare_triangles, mutual_perspectivity, rotation_congruence,
    similarity_coefficients, six_triangles, SimilarityKind, TriangleId,
};
use crate::triangle::{RefTriangle, Side, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("random sample count must be at least 1")]
    InvalidCount,
    #[error("tolerance must be positive")]
    InvalidTolerance,
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum Mode {
    Fixed(RefTriangle),
    Random(usize),
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub mode: Mode,
    pub seed: u64,
    pub tol: f64,
    pub include_obtuse: bool,
    /// Random circles drawn through each of the six pivots, per triangle.
    pub pivot_circles: usize,
    /// Random Hagge pivots per triangle.
    pub hagge_pivots: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            mode: Mode::Random(100),
            seed: 0,
            tol: 1e-9,
            include_obtuse: false,
            pivot_circles: 4,
            hagge_pivots: 4,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if let Mode::Random(0) = self.mode {
            return Err(ConfigError::InvalidCount);
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(ConfigError::InvalidTolerance);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    CentreFormulas,
    CentreSums,
    Incidence,
    Tangency,
    ArealMetric,
    HalfTurn,
    Bisectors,
    Similarity,
    AreaRatios,
    Perspectivity,
    Distances,
    Angles,
    Pivots,
    Hagge,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::CentreFormulas,
        Suite::CentreSums,
        Suite::Incidence,
        Suite::Tangency,
        Suite::ArealMetric,
        Suite::HalfTurn,
        Suite::Bisectors,
        Suite::Similarity,
        Suite::AreaRatios,
        Suite::Perspectivity,
        Suite::Distances,
        Suite::Angles,
        Suite::Pivots,
        Suite::Hagge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CentreFormulas => "centre-formulas",
            Suite::CentreSums => "centre-sums",
            Suite::Incidence => "incidence",
            Suite::Tangency => "tangency",
            Suite::ArealMetric => "areal-metric",
            Suite::HalfTurn => "half-turn-and-reflections",
            Suite::Bisectors => "bisectors",
            Suite::Similarity => "similarity",
            Suite::AreaRatios => "area-ratios",
            Suite::Perspectivity => "perspectivity",
            Suite::Distances => "distances",
            Suite::Angles => "angles",
            Suite::Pivots => "pivots",
            Suite::Hagge => "hagge",
        }
    }

    /// Float and pivot suites only apply to acute triangles.
    pub fn acute_only(self) -> bool {
        matches!(self, Suite::Distances | Suite::Angles | Suite::Pivots | Suite::Hagge)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Skip(&'static str),
    Fail(String),
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

pub fn sides_label(t: &RefTriangle) -> String {
    format!("{},{},{}", scalar::format(&t.a), scalar::format(&t.b), scalar::format(&t.c))
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    pub tol: f64,
    pub pivot_circles: usize,
    pub hagge_pivots: usize,
}

impl From<&VerifyConfig> for SuiteParams {
    fn from(cfg: &VerifyConfig) -> Self {
        SuiteParams { tol: cfg.tol, pivot_circles: cfg.pivot_circles, hagge_pivots: cfg.hagge_pivots }
    }
}

/// Runs one suite on one triangle.
pub fn run_suite(suite: Suite, t: &RefTriangle, params: &SuiteParams, rng: &mut StdRng) -> Outcome {
    if !t.scalene {
        return Outcome::Skip("not scalene");
    }
    if suite.acute_only() && !t.acute {
        return Outcome::Skip("not acute");
    }
    if t.is_right() && suite == Suite::Incidence {
        return Outcome::Skip("orthocentre is a vertex");
    }
    let res = match suite {
        Suite::CentreFormulas => check_centre_formulas(t),
        Suite::CentreSums => check_centre_sums(t),
        Suite::Incidence => check_incidence(t),
        Suite::Tangency => check_tangency(t),
        Suite::ArealMetric => check_metric(t, params.tol, rng),
        Suite::HalfTurn => check_half_turn(t, rng),
        Suite::Bisectors => check_bisectors(t),
        Suite::Similarity => check_similarity(t),
        Suite::AreaRatios => check_area_ratios(t),
        Suite::Perspectivity => check_perspectivity(t),
        Suite::Distances => check_distances(t, params.tol),
        Suite::Angles => check_angles(t, params.tol),
        Suite::Pivots => check_pivots(t, params.pivot_circles, rng),
        Suite::Hagge => check_hagge(t, params.hagge_pivots, rng),
    };
    match res {
        Ok(()) => Outcome::Pass,
        Err(msg) => Outcome::Fail(msg),
    }
}

pub fn check_centre_formulas(t: &RefTriangle) -> Check {
    let published = published_centres(t);
    for (id, computed) in computed_centres(t) {
        ensure(same_point(computed.coords(), published.raw(id)), || {
            format!("centre {}: pole {} differs from closed form", id.name(), computed)
        })?;
    }
    Ok(())
}

pub fn check_centre_sums(t: &RefTriangle) -> Check {
    let published = published_centres(t);
    for (id, c) in &published.centres {
        let sum: Scalar = c.iter().sum();
        ensure(sum == t.q, || format!("centre {} sums to {}, Q = {}", id.name(), sum, t.q))?;
    }
    Ok(())
}

pub fn check_incidence(t: &RefTriangle) -> Check {
    let m = membership_report(t);
    for &p in &m.rows {
        for &c in &m.cols {
            ensure(m.get(p, c) == expected_membership(p, c), || {
                format!("{} on {}: got {}", p.name(), c.name(), m.get(p, c))
            })?;
        }
    }
    let set = build_nine(t);
    ensure(set.orthocentroidal.contains(&ArealPoint::from_ints(1, 1, 1)), || "G off orthocentroidal".into())?;
    for id in CircleId::TEN {
        ensure(proportional(&quadratic_coeffs(set.get(id)), &published_equation(id, t)), || {
            format!("{} not proportional to its published equation", id.name())
        })?;
    }
    for (id, v) in [(PointId::AH, Vertex::A), (PointId::BH, Vertex::B), (PointId::CH, Vertex::C)] {
        let p = named_point(id, t).coords;
        ensure(crate::areal::collinear(&t.vertex(v), &ArealPoint::from_ints(1, 1, 1), &p), || {
            format!("{} off its median", id.name())
        })?;
    }
    Ok(())
}

pub fn check_tangency(t: &RefTriangle) -> Check {
    for e in tangency_report(t) {
        ensure(e.tangent, || format!("{} not tangent to {} at {:?}", e.circle.name(), e.side.name(), e.vertex))?;
    }
    Ok(())
}

pub fn check_metric(t: &RefTriangle, tol: f64, rng: &mut StdRng) -> Check {
    let emb = Embedding::new(t);
    for _ in 0..8 {
        let (p, r) = (random_point(rng), random_point(rng));
        if p.same_as(&r) {
            continue;
        }
        let exact = to_f64(&distance2(&p, &r, t).map_err(|e| e.to_string())?);
        let (ep, er) = (emb.embed(&p).map_err(|e| e.to_string())?, emb.embed(&r).map_err(|e| e.to_string())?);
        let cart = (ep.px - er.px).powi(2) + (ep.py - er.py).powi(2);
        ensure(rel_err(exact, cart) < tol, || format!("metric {exact} vs Cartesian {cart} for {p}, {r}"))?;
    }
    Ok(())
}

pub fn check_half_turn(t: &RefTriangle, rng: &mut StdRng) -> Check {
    ensure(rotation_congruence(t) == [true; 3], || "aA, bB, cC are not 2N − A, 2N − B, 2N − C".into())?;
    let cs = published_centres(t);
    let o = classic_centers(t).o;
    let r2 = distance2(&o, &t.vertex(Vertex::A), t).map_err(|e| e.to_string())?;
    for (c, side) in [(CentreId::AA, Side::BC), (CentreId::BB, Side::CA), (CentreId::CC, Side::AB)] {
        let refl = reflect_in_side(&o, side, t).map_err(|e| e.to_string())?;
        let centre = cs.point(c);
        ensure(refl.same_as(&centre), || format!("{} is not O reflected in {}", c.name(), side.name()))?;
        let (p, q, _) = c.circle().defining_points().expect("one of the nine");
        for v in [p, q] {
            let d2 = distance2(&centre, &t.vertex(v), t).map_err(|e| e.to_string())?;
            ensure(d2 == r2, || format!("radius of circle {} is not R", c.circle().name()))?;
        }
    }
    let p = random_point(rng);
    for side in Side::ALL {
        let back = reflect_in_side(&reflect_in_side(&p, side, t).map_err(|e| e.to_string())?, side, t)
            .map_err(|e| e.to_string())?;
        ensure(back.same_as(&p), || format!("reflection in {} is not an involution", side.name()))?;
    }
    Ok(())
}

pub fn check_bisectors(t: &RefTriangle) -> Check {
    for line in bisector_collinearity(t) {
        ensure(line.all_incident, || format!("centres off the perpendicular bisector of {}", line.side.name()))?;
    }
    Ok(())
}

pub fn check_similarity(t: &RefTriangle) -> Check {
    let coeffs = similarity_coefficients(t);
    let tris = six_triangles(t).map_err(|e| e.to_string())?;
    let expect = |id: TriangleId| match id {
        TriangleId::Direct0 => (SimilarityKind::Direct, scalar::int(1)),
        TriangleId::Direct1 | TriangleId::Direct2 => (SimilarityKind::Direct, coeffs.k.clone()),
        TriangleId::IndirectA => (SimilarityKind::Indirect, coeffs.l.clone()),
        TriangleId::IndirectB => (SimilarityKind::Indirect, coeffs.m.clone()),
        TriangleId::IndirectC => (SimilarityKind::Indirect, coeffs.n.clone()),
    };
    for lt in &tris {
        let rep = classify_similarity(&lt.triangle, t).map_err(|e| e.to_string())?;
        let (kind, ratio2) = expect(lt.id);
        ensure(rep.kind == kind && rep.ratio2.as_ref() == Some(&ratio2), || {
            format!("{}: {:?} with ratio² {:?}, expected {:?} {}", lt.id.name(), rep.kind, rep.ratio2, kind, ratio2)
        })?;
    }
    let indirect: Vec<_> = tris.iter().filter(|lt| TriangleId::INDIRECT.contains(&lt.id)).collect();
    for i in 0..indirect.len() {
        for j in (i + 1)..indirect.len() {
            let rep = compare_triangles(&indirect[i].triangle, &indirect[j].triangle, t).map_err(|e| e.to_string())?;
            ensure(rep.kind == SimilarityKind::Direct, || {
                format!("{} and {} not directly similar", indirect[i].id.name(), indirect[j].id.name())
            })?;
        }
    }
    Ok(())
}

pub fn check_area_ratios(t: &RefTriangle) -> Check {
    let coeffs = similarity_coefficients(t);
    let tris = six_triangles(t).map_err(|e| e.to_string())?;
    let area = |id: TriangleId| -> Result<Scalar, String> {
        let lt = tris.iter().find(|x| x.id == id).expect("present");
        lt.triangle.area_ratio().map_err(|e| e.to_string())
    };
    let (aa, ab, ac) = (area(TriangleId::IndirectA)?, area(TriangleId::IndirectB)?, area(TriangleId::IndirectC)?);
    ensure(&aa * &coeffs.m == &ab * &coeffs.l && &ab * &coeffs.n == &ac * &coeffs.m, || {
        format!("areas {aa} : {ab} : {ac} not in ratio l : m : n")
    })?;
    // reflected orientation: each area is −(ratio²)·[ABC]
    ensure(-aa == coeffs.l, || "area of IndirectA is not −l·[ABC]".into())
}

pub fn check_perspectivity(t: &RefTriangle) -> Check {
    let o = classic_centers(t).o;
    for pair in mutual_perspectivity(t) {
        let ok = pair.report.perspective && pair.report.perspector.as_ref().is_some_and(|p| p.same_as(&o));
        ensure(ok, || format!("{} / {} not perspective at O", pair.first.name(), pair.second.name()))?;
    }
    Ok(())
}

pub fn check_distances(t: &RefTriangle, tol: f64) -> Check {
    let table = distance_table(t);
    for row in &table.rows {
        let p = named_point(row.point, t).coords;
        let exact = exact_vertex_distances2(&p, t).map_err(|e| e.to_string())?;
        for (i, v) in Vertex::ALL.iter().enumerate() {
            let oracle = to_f64(&exact[i]).sqrt();
            ensure(rel_err(row.dists[i], oracle) < tol, || {
                format!("{:?}{}: formula {} vs metric {}", v, row.point.name(), row.dists[i], oracle)
            })?;
        }
        let pedal = pedal_triangle(&p, t).map_err(|e| e.to_string())?;
        ensure(rel_err(row.r0, pedal.circumradius) < tol, || {
            format!("R0({}) = {} but pedal circumradius is {}", row.point.name(), row.r0, pedal.circumradius)
        })?;
    }
    Ok(())
}

pub fn check_angles(t: &RefTriangle, tol: f64) -> Check {
    let table = angle_table(t).map_err(|e| e.to_string())?;
    for (id, measured) in table {
        let want = predicted_angles(id, t).expect("one of the six");
        ensure(measured.max_abs_diff(&want) < tol, || format!("{}: {:?} vs {:?}", id.name(), measured, want))?;
        ensure((measured.sum() - 2.0 * std::f64::consts::PI).abs() < tol, || {
            format!("{}: angles sum to {}", id.name(), measured.sum())
        })?;
    }
    Ok(())
}

const MAX_ATTEMPTS: usize = 50;

pub fn check_pivots(t: &RefTriangle, per_pivot: usize, rng: &mut StdRng) -> Check {
    for j in PointId::SIX {
        let jp = named_point(j, t).coords;
        let mut done = 0;
        let mut attempts = 0;
        while done < per_pivot {
            attempts += 1;
            if attempts > per_pivot * MAX_ATTEMPTS {
                return Err(format!("{}: could not draw usable circles", j.name()));
            }
            let (p, q) = (random_point(rng), random_point(rng));
            let Ok(circle) = circle_through(&jp, &p, &q, t) else { continue };
            let Ok(carried) = pivot_carried_triangle(j, &circle, t) else { continue };
            ensure(Some(carried.report.kind) == predicted_kind(j), || {
                format!("pivot {} through {p}, {q}: carried triangle is {:?}", j.name(), carried.report.kind)
            })?;
            done += 1;
        }
    }
    Ok(())
}

pub fn check_hagge(t: &RefTriangle, count: usize, rng: &mut StdRng) -> Check {
    let mut done = 0;
    let mut attempts = 0;
    while done < count {
        attempts += 1;
        if attempts > count * MAX_ATTEMPTS {
            return Err("could not draw usable Hagge pivots".into());
        }
        let p = random_point(rng);
        let fig = match hagge_figure(&p, t) {
            Ok(f) => f,
            Err(crate::GeometryError::KnownPointNotIncident) => {
                return Err(format!("Hagge circle of {p} misses H"));
            }
            Err(_) => continue,
        };
        let checks = fig.check(t).map_err(|e| e.to_string())?;
        ensure(checks.all_hold(), || format!("Hagge pivot {p}: {checks:?}"))?;
        done += 1;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub sides: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<Failure>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySummary {
    pub triangles: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn suites_passed(&self) -> usize {
        self.suites.iter().filter(|s| s.ok()).count()
    }
}

fn suite_rng(seed: u64, index: u64, suite: usize) -> StdRng {
    let mut base = rng_for(seed, index);
    let salt: u64 = base.gen();
    rng_for(salt, suite as u64)
}

/// Outcomes of every suite on one triangle.
pub fn run_triangle(t: &RefTriangle, seed: u64, index: u64, params: &SuiteParams) -> Vec<Outcome> {
    Suite::ALL.iter().enumerate().map(|(k, &s)| run_suite(s, t, params, &mut suite_rng(seed, index, k))).collect()
}

pub fn sample_triangles(cfg: &VerifyConfig) -> Vec<RefTriangle> {
    match &cfg.mode {
        Mode::Fixed(t) => vec![t.clone()],
        Mode::Random(n) => {
            (0..*n as u64).map(|i| random_triangle(&mut rng_for(cfg.seed, i), cfg.include_obtuse)).collect()
        }
    }
}

/// Runs all suites; samples run in parallel and are reduced in index order.
pub fn verify(cfg: &VerifyConfig) -> Result<VerifySummary, ConfigError> {
    cfg.validate()?;
    let params = SuiteParams::from(cfg);
    let triangles = sample_triangles(cfg);
    let outcomes: Vec<Vec<Outcome>> =
        triangles.par_iter().enumerate().map(|(i, t)| run_triangle(t, cfg.seed, i as u64, &params)).collect();
    let suites = Suite::ALL
        .iter()
        .enumerate()
        .map(|(k, &suite)| {
            let mut res = SuiteResult { suite, passed: 0, failed: 0, skipped: 0, first_failure: None };
            for (t, row) in triangles.iter().zip(&outcomes) {
                match &row[k] {
                    Outcome::Pass => res.passed += 1,
                    Outcome::Skip(_) => res.skipped += 1,
                    Outcome::Fail(msg) => {
                        res.failed += 1;
                        res.first_failure
                            .get_or_insert_with(|| Failure { sides: sides_label(t), message: msg.clone() });
                    }
                }
            }
            res
        })
        .collect();
    Ok(VerifySummary { triangles: triangles.len(), suites })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let cfg = VerifyConfig { mode: Mode::Random(0), ..Default::default() };
        assert_eq!(verify(&cfg).unwrap_err(), ConfigError::InvalidCount);
        let cfg = VerifyConfig { tol: 0.0, ..Default::default() };
        assert_eq!(cfg.validate().unwrap_err(), ConfigError::InvalidTolerance);
    }

    #[test]
    fn fixed_654_all_pass() {
        let cfg = VerifyConfig { mode: Mode::Fixed(RefTriangle::from_ints(6, 5, 4).unwrap()), ..Default::default() };
        let s = verify(&cfg).unwrap();
        assert!(s.all_passed(), "{:?}", s.suites.iter().filter(|r| !r.ok()).collect::<Vec<_>>());
        assert_eq!(s.suites_passed(), 14);
    }

    #[test]
    fn deterministic_summary() {
        let cfg = VerifyConfig { mode: Mode::Random(6), seed: 9, include_obtuse: true, ..Default::default() };
        assert_eq!(verify(&cfg).unwrap(), verify(&cfg).unwrap());
    }

    #[test]
    fn obtuse_skips_float_suites() {
        let t = RefTriangle::from_ints(4, 3, 2).unwrap();
        let params = SuiteParams { tol: 1e-9, pivot_circles: 1, hagge_pivots: 1 };
        let out = run_triangle(&t, 0, 0, &params);
        for (s, o) in Suite::ALL.iter().zip(&out) {
            if s.acute_only() {
                assert_eq!(o, &Outcome::Skip("not acute"));
            } else {
                assert_eq!(o, &Outcome::Pass, "{}", s.name());
            }
        }
    }

    #[test]
    fn failure_is_reported_with_sides() {
        // an isosceles triangle is skipped rather than failed
        let t = RefTriangle::from_ints(5, 5, 6).unwrap();
        let cfg = VerifyConfig { mode: Mode::Fixed(t), ..Default::default() };
        let s = verify(&cfg).unwrap();
        assert!(s.suites.iter().all(|r| r.skipped == 1));
        assert_eq!(sides_label(&RefTriangle::parse_sides("6,5/2,4").unwrap()), "6,5/2,4");
    }
}
