//! Certified-numeric generators for the regular-polygon line families.
//!
//! The polyhedral arrangement takes the sides of a regular k-gon together
//! with its k axes of bilateral symmetry. The Böröczky arrangement joins
//! vertex `i` of a regular k-gon (k even) to vertex `k/2 - 2i`, drawing the
//! tangent line at the vertex when the two indices coincide.
//!
//! Coordinates are trigonometric, hence irrational; lines are built with
//! rational interval arithmetic and the pairwise intersection points are
//! clustered. Intervals can certify distinctness but never equality, so the
//! resulting spectrum is *presumed*: callers should reconcile it against the
//! closed-form family spectrum.

use super::interval::{RatInterval, cos_sin, pi};
use crate::config::{Configuration, MultiplicitySpectrum, Validated};
use crate::rational::{Rational, frac, rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("polyhedral arrangements need k >= 3, got {0}")]
    PolyhedralDomain(u64),
    #[error("Böröczky arrangements need even k >= 6, got {0}")]
    BoroczkyDomain(u64),
    #[error(
        "precision exhausted: {max_bits} bits (from {requested}) cannot separate all intersection points"
    )]
    PrecisionExhausted { requested: u32, max_bits: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonFamily {
    Polyhedral,
    Boroczky,
}

/// Spectrum obtained by numeric clustering. The underlying datum satisfies
/// the combinatorial identity, but equality of clustered points is presumed,
/// not certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresumedSpectrum {
    pub datum: Validated,
    pub bits_used: u32,
}

type IVec3 = [RatInterval; 3];

fn icross(a: &IVec3, b: &IVec3) -> IVec3 {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

/// Outward-rounds every component, bounding coordinate sizes between steps.
fn iround(v: &IVec3, bits: u32) -> IVec3 {
    [
        v[0].round_out(bits),
        v[1].round_out(bits),
        v[2].round_out(bits),
    ]
}

/// Two projective interval vectors certainly represent different points when
/// some component of their cross product excludes zero. Components are
/// computed one at a time; the first certificate wins.
fn certainly_distinct(a: &IVec3, b: &IVec3) -> bool {
    a[1].mul(&b[2]).sub(&a[2].mul(&b[1])).excludes_zero()
        || a[2].mul(&b[0]).sub(&a[0].mul(&b[2])).excludes_zero()
        || a[0].mul(&b[1]).sub(&a[1].mul(&b[0])).excludes_zero()
}

/// The lines of one family member, as interval triples.
fn build_lines(kind: PolygonFamily, k: u64, bits: u32) -> Vec<IVec3> {
    let pi_val = pi(bits);
    let angle = |num: i64, den: i64| {
        let (c, s) = cos_sin(&pi_val.scale(&frac(num, den)), bits);
        (c, s)
    };
    match kind {
        PolygonFamily::Polyhedral => {
            // Vertices at angles 2*pi*j/k.
            let vertices: Vec<IVec3> = (0..k)
                .map(|j| {
                    let (c, s) = angle(2 * j as i64, k as i64);
                    [c, s, RatInterval::point(rat(1))]
                })
                .collect();
            let mut lines = Vec::with_capacity(2 * k as usize);
            // Sides join consecutive vertices.
            for j in 0..k as usize {
                lines.push(iround(
                    &icross(&vertices[j], &vertices[(j + 1) % k as usize]),
                    bits,
                ));
            }
            // Symmetry axes pass through the center at angles pi*j/k:
            // the line (-sin, cos, 0).
            for j in 0..k as i64 {
                let (c, s) = angle(j, k as i64);
                lines.push([s.neg(), c, RatInterval::point(Rational::zero())]);
            }
            lines
        }
        PolygonFamily::Boroczky => {
            let vertices: Vec<(RatInterval, RatInterval)> = (0..k)
                .map(|j| angle(2 * j as i64, k as i64))
                .collect();
            (0..k)
                .map(|i| {
                    let partner = (k / 2 + 2 * k - 2 * i) % k; // k/2 - 2i mod k
                    let (ci, si) = &vertices[i as usize];
                    if partner == i {
                        // Tangent to the circumscribed circle at vertex i:
                        // x cos + y sin = 1.
                        [ci.clone(), si.clone(), RatInterval::point(rat(-1))]
                    } else {
                        let (cp, sp) = &vertices[partner as usize];
                        let vi = [ci.clone(), si.clone(), RatInterval::point(rat(1))];
                        let vp = [cp.clone(), sp.clone(), RatInterval::point(rat(1))];
                        iround(&icross(&vi, &vp), bits)
                    }
                })
                .collect()
        }
    }
}

/// One clustering attempt at a fixed precision. `None` means the precision
/// could not consistently separate the intersection points.
fn try_spectrum(kind: PolygonFamily, k: u64, bits: u32) -> Option<BTreeMap<u64, u64>> {
    let lines = build_lines(kind, k, bits);
    let n = lines.len();
    // The construction must yield pairwise distinct lines.
    for i in 0..n {
        for j in (i + 1)..n {
            if !certainly_distinct(&lines[i], &lines[j]) {
                return None;
            }
        }
    }
    let mut points: Vec<IVec3> = Vec::with_capacity(n * (n - 1) / 2);
    let mut pair_of: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            points.push(iround(&icross(&lines[i], &lines[j]), bits));
            pair_of.push((i, j));
        }
    }
    // Union-find over the "not certainly distinct" relation.
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut ambiguous: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for a in 0..points.len() {
        for b in (a + 1)..points.len() {
            if !certainly_distinct(&points[a], &points[b]) {
                ambiguous[a].push(b);
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut clusters: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for idx in 0..points.len() {
        let root = find(&mut parent, idx);
        clusters.entry(root).or_default().push(idx);
    }
    let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
    for members in clusters.values() {
        // Consistency: the cluster must be a clique of the ambiguity
        // relation (no member pair certainly distinct) ...
        for (pos, &a) in members.iter().enumerate() {
            for &b in &members[pos + 1..] {
                if !ambiguous[a].contains(&b) {
                    return None;
                }
            }
        }
        // ... and must consist of all pairs of some m-element line subset.
        let mut incident: Vec<usize> = members
            .iter()
            .flat_map(|&idx| [pair_of[idx].0, pair_of[idx].1])
            .collect();
        incident.sort_unstable();
        incident.dedup();
        let m = incident.len();
        if members.len() != m * (m - 1) / 2 {
            return None;
        }
        *spectrum.entry(m as u64).or_insert(0) += 1;
    }
    Some(spectrum)
}

/// Constructs the presumed multiplicity spectrum of a polyhedral or
/// Böröczky arrangement at the given interval precision, refining up to
/// eight-fold before giving up.
pub fn generate_regular_polygon_family(
    kind: PolygonFamily,
    k: u64,
    precision_bits: u32,
) -> Result<PresumedSpectrum, PolygonError> {
    match kind {
        PolygonFamily::Polyhedral if k < 3 => return Err(PolygonError::PolyhedralDomain(k)),
        PolygonFamily::Boroczky if k < 6 || k % 2 != 0 => {
            return Err(PolygonError::BoroczkyDomain(k));
        }
        _ => {}
    }
    let line_count = match kind {
        PolygonFamily::Polyhedral => 2 * k,
        PolygonFamily::Boroczky => k,
    };
    let mut bits = precision_bits.max(16);
    for _ in 0..4 {
        if let Some(spectrum) = try_spectrum(kind, k, bits) {
            let cfg = Configuration::new(
                1,
                line_count,
                MultiplicitySpectrum::from_pairs(spectrum)
                    .expect("clusters have multiplicity >= 2"),
            )
            .expect("multiplicities bounded by line count");
            let datum = cfg
                .validated()
                .expect("pair partition satisfies the identity");
            return Ok(PresumedSpectrum {
                datum,
                bits_used: bits,
            });
        }
        bits *= 2;
    }
    Err(PolygonError::PrecisionExhausted {
        requested: precision_bits,
        max_bits: bits / 2,
    })
}
