//! Exact incidence engine for line arrangements.
//!
//! Lines and points carry coprime integer homogeneous coordinates with a
//! fixed sign convention, so projective equality is structural equality and
//! intersections group exactly, with no epsilon anywhere. A seeded generator
//! produces arrangements in general position; certified-numeric generators
//! for the classical regular-polygon families live in [`polygon`].

mod interval;
mod polygon;

pub use interval::RatInterval;
pub use polygon::{PolygonFamily, PresumedSpectrum, generate_regular_polygon_family};

use crate::config::{ConfigError, Validated};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::RngExt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("homogeneous coordinates must not all be zero")]
    ZeroVector,
    #[error("identical lines have no unique intersection point")]
    IdenticalLines,
    #[error("arrangement contains duplicate lines (positions {0} and {1})")]
    DuplicateLine(usize, usize),
    #[error("need at least 2 lines, got {0}")]
    TooFewLines(usize),
    #[error("generation budget of {budget} candidates exhausted for k = {k}")]
    GenerationBudget { k: u64, budget: u64 },
    #[error("arrangement line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Divides out the gcd and makes the first nonzero coordinate positive.
fn normalize(mut v: [BigInt; 3]) -> Result<[BigInt; 3], IncidenceError> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Err(IncidenceError::ZeroVector);
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    if v.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative) {
        for c in &mut v {
            *c = -&*c;
        }
    }
    Ok(v)
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// A point of the projective plane with canonical integer coordinates:
/// coprime, first nonzero coordinate positive. Structural equality is
/// projective equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([BigInt; 3]);

impl ProjPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self, IncidenceError> {
        Ok(ProjPoint(normalize([x.into(), y.into(), z.into()])?))
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn lies_on(&self, line: &ProjLine) -> bool {
        dot(&self.0, &line.0).is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A line of the projective plane, as the dual triple with the same
/// normalization as [`ProjPoint`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine([BigInt; 3]);

impl ProjLine {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self, IncidenceError> {
        Ok(ProjLine(normalize([a.into(), b.into(), c.into()])?))
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    /// The line through two distinct points.
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, IncidenceError> {
        normalize(cross(&p.0, &q.0))
            .map(ProjLine)
            .map_err(|_| IncidenceError::IdenticalLines)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

/// Intersection point of two distinct lines (projective duality: the cross
/// product of their coordinate triples).
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, IncidenceError> {
    normalize(cross(&l1.0, &l2.0))
        .map(ProjPoint)
        .map_err(|_| IncidenceError::IdenticalLines)
}

/// An ordered list of pairwise-distinct lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineArrangement {
    lines: Vec<ProjLine>,
    label: Option<String>,
}

impl LineArrangement {
    pub fn new(lines: Vec<ProjLine>) -> Result<Self, IncidenceError> {
        for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                if lines[i] == lines[j] {
                    return Err(IncidenceError::DuplicateLine(i, j));
                }
            }
        }
        Ok(LineArrangement { lines, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }
}

/// Computes the multiplicity spectrum of an arrangement: every pairwise
/// intersection point is grouped by its canonical coordinates, and a point
/// lying on exactly `m` lines contributes one `m`-fold point. The result
/// always satisfies the combinatorial identity.
pub fn spectrum_of(arr: &LineArrangement) -> Result<Validated, IncidenceError> {
    let k = arr.len();
    if k < 2 {
        return Err(IncidenceError::TooFewLines(k));
    }
    let mut points: BTreeMap<ProjPoint, u64> = BTreeMap::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let p = intersect(&arr.lines[i], &arr.lines[j]).expect("lines are distinct");
            *points.entry(p).or_insert(0) += 1;
        }
    }
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    for (point, pairs) in &points {
        // A point on exactly m lines collects C(m, 2) pairs.
        let m = arr.lines.iter().filter(|l| point.lies_on(l)).count() as u64;
        debug_assert_eq!(m * (m - 1) / 2, *pairs);
        *spectrum.entry(m).or_insert(0) += 1;
    }
    let mut cfg = crate::config::Configuration::new(
        1,
        k as u64,
        crate::config::MultiplicitySpectrum::from_pairs(spectrum)?,
    )?;
    if let Some(label) = &arr.label {
        cfg = cfg.with_label(label.clone());
    }
    Ok(cfg.validated().expect("incidence data satisfies the identity"))
}

/// Deterministically generates `k` rational lines in general position (only
/// double points), by rejection sampling with coefficients drawn from a
/// seeded stream over `[-10k, 10k]`. The budget is `100 k` candidates.
pub fn generate_generic(k: u64, seed: u64) -> Result<LineArrangement, IncidenceError> {
    if k < 2 {
        return Err(IncidenceError::TooFewLines(k as usize));
    }
    let budget = 100 * k;
    let bound = 10 * k as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<ProjLine> = Vec::with_capacity(k as usize);
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut attempts = 0;
    while (lines.len() as u64) < k {
        if attempts >= budget {
            return Err(IncidenceError::GenerationBudget { k, budget });
        }
        attempts += 1;
        let coords: [BigInt; 3] = [
            rng.random_range(-bound..=bound).into(),
            rng.random_range(-bound..=bound).into(),
            rng.random_range(-bound..=bound).into(),
        ];
        let Ok(candidate) = normalize(coords).map(ProjLine) else {
            continue;
        };
        if lines.contains(&candidate) {
            continue;
        }
        // General position: the new line may not pass through any existing
        // intersection point.
        if points.iter().any(|p| p.lies_on(&candidate)) {
            continue;
        }
        for l in &lines {
            points.push(intersect(l, &candidate).expect("distinct lines"));
        }
        lines.push(candidate);
    }
    let arr = LineArrangement::new(lines)?.with_label(format!("generic k={k} seed={seed}"));
    debug_assert!({
        let spec = spectrum_of(&arr).unwrap();
        spec.t(2) == k * (k - 1) / 2 && spec.f0() == BigInt::from(k * (k - 1) / 2)
    });
    Ok(arr)
}

/// Parses the plain-text arrangement format: one `a b c` integer triple per
/// line, `#` starts a comment, blank lines are skipped.
pub fn parse_arrangement(text: &str) -> Result<LineArrangement, IncidenceError> {
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let parts: Vec<&str> = content.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(IncidenceError::Parse {
                line: idx + 1,
                reason: format!("expected 3 integers, got {}", parts.len()),
            });
        }
        let mut coords = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for (slot, part) in coords.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| IncidenceError::Parse {
                line: idx + 1,
                reason: format!("{part:?} is not an integer"),
            })?;
        }
        let line = ProjLine(normalize(coords).map_err(|_| IncidenceError::Parse {
            line: idx + 1,
            reason: "all coordinates are zero".to_string(),
        })?);
        lines.push(line);
    }
    LineArrangement::new(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn line(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new(a, b, c).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        assert_eq!(line(2, -4, 6), line(-1, 2, -3));
        assert_eq!(
            ProjPoint::new(0, -5, -10).unwrap(),
            ProjPoint::new(0, 1, 2).unwrap()
        );
        assert!(ProjLine::new(0, 0, 0).is_err());
    }

    #[test]
    fn intersection_examples() {
        let p = intersect(&line(1, 0, 0), &line(0, 1, 0)).unwrap();
        assert_eq!(p, ProjPoint::new(0, 0, 1).unwrap());
        let q = intersect(&line(1, -1, 0), &line(1, 1, -2)).unwrap();
        assert_eq!(q, ProjPoint::new(1, 1, 1).unwrap());
        assert_eq!(
            intersect(&line(1, -1, 0), &line(-2, 2, 0)),
            Err(IncidenceError::IdenticalLines)
        );
    }

    #[test]
    fn triangle_spectrum() {
        let arr = LineArrangement::new(vec![line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)]).unwrap();
        let spec = spectrum_of(&arr).unwrap();
        assert_eq!(spec.count(), 3);
        assert_eq!(spec.t(2), 3);
        assert_eq!(spec.spectrum().iter().count(), 1);
    }

    #[test]
    fn pencil_spectrum() {
        // five lines through (0:0:1)
        let arr = LineArrangement::new(vec![
            line(1, 0, 0),
            line(0, 1, 0),
            line(1, 1, 0),
            line(1, -1, 0),
            line(2, 1, 0),
        ])
        .unwrap();
        let spec = spectrum_of(&arr).unwrap();
        assert_eq!(spec.t(5), 1);
        assert!(spec.f0() == BigInt::from(1));
    }

    #[test]
    fn four_generic_lines() {
        // Lines on the dual moment curve are never three-concurrent.
        let arr = LineArrangement::new(vec![
            line(1, 0, 0),
            line(1, 1, 1),
            line(1, 2, 4),
            line(1, 3, 9),
        ])
        .unwrap();
        let spec = spectrum_of(&arr).unwrap();
        assert_eq!(spec.t(2), 6);
        let report = spec.validate();
        assert_eq!(report.lhs, BigInt::from(12));
        assert_eq!(report.rhs, BigInt::from(12));
    }

    #[test]
    fn duplicate_lines_rejected() {
        assert_eq!(
            LineArrangement::new(vec![line(1, 2, 3), line(-2, -4, -6)]),
            Err(IncidenceError::DuplicateLine(0, 1))
        );
    }

    #[test]
    fn generic_generation() {
        let arr = generate_generic(6, 1).unwrap();
        assert_eq!(arr.len(), 6);
        let spec = spectrum_of(&arr).unwrap();
        assert_eq!(spec.t(2), 15);
        assert_eq!(spec.spectrum().iter().count(), 1);
        // deterministic in the seed
        assert_eq!(generate_generic(6, 1).unwrap(), arr);
        assert_ne!(generate_generic(6, 2).unwrap(), arr);
        assert_eq!(
            generate_generic(1, 7),
            Err(IncidenceError::TooFewLines(1))
        );
        let k3 = spectrum_of(&generate_generic(3, 99).unwrap()).unwrap();
        assert_eq!(k3.t(2), 3);
    }

    #[test]
    fn parse_format() {
        let text = "# triangle\n1 0 0\n0 1 0   # the y-axis... dually\n\n0 0 1\n";
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.len(), 3);
        assert!(parse_arrangement("1 2\n").is_err());
        assert!(parse_arrangement("1 2 x\n").is_err());
        assert!(parse_arrangement("0 0 0\n").is_err());
        assert!(matches!(
            parse_arrangement("1 0 0\n2 0 0\n"),
            Err(IncidenceError::DuplicateLine(0, 1))
        ));
    }

    proptest! {
        #[test]
        fn intersect_is_symmetric(a in -20i64..20, b in -20i64..20, c in -20i64..20,
                                  d in -20i64..20, e in -20i64..20, f in -20i64..20) {
            let l1 = ProjLine::new(a, b, c);
            let l2 = ProjLine::new(d, e, f);
            if let (Ok(l1), Ok(l2)) = (l1, l2) {
                if l1 != l2 {
                    let p = intersect(&l1, &l2).unwrap();
                    let q = intersect(&l2, &l1).unwrap();
                    prop_assert_eq!(&p, &q);
                    prop_assert!(p.lies_on(&l1) && p.lies_on(&l2));
                }
            }
        }

        #[test]
        fn spectrum_invariant_under_permutation(seed in 0u64..500, k in 3u64..7) {
            let arr = generate_generic(k, seed).unwrap();
            let mut lines = arr.lines().to_vec();
            lines.reverse();
            lines.rotate_left(1);
            let permuted = LineArrangement::new(lines).unwrap();
            let original = spectrum_of(&arr).unwrap();
            let reordered = spectrum_of(&permuted).unwrap();
            prop_assert_eq!(original.spectrum(), reordered.spectrum());
        }
    }
}
