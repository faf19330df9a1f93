//! Chern numbers of Kummer covers branched along a curve configuration.
//!
//! For a configuration of `k` curves and an order parameter `n >= 2`,
//! Hirzebruch's abelian-cover construction produces a smooth surface whose
//! Chern numbers, divided by `n^{k-3}`, are quadratic polynomials in `n`
//! with coefficients determined by the moments `f_0`, `f_1` and `t_2` of the
//! spectrum. This module computes those quadratics exactly, together with
//! the derived quantities: Chern slopes, the characteristic number (the
//! slope's limit in `n`), the gap `3 c_2 - c_1^2` controlled by the
//! Bogomolov-Miyaoka-Yau inequality, and the exact set of orders at which
//! the gap vanishes (the ball-quotient candidates).

use crate::config::{Configuration, Validated};
use crate::rational::{Rational, frac, rat, rat_big, sqrt_exact};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChernError {
    #[error("Kummer covers need at least 4 curves, got {0}")]
    TooFewCurves(u64),
    #[error("spectrum has a point on all {0} curves (t_k != 0); the cover degenerates")]
    Pencil(u64),
    #[error("order parameter must be at least 2, got {0}")]
    OrderTooSmall(i64),
    #[error("c_2 is not positive at n = {0}; no surface to take a slope of")]
    InvalidSurface(i64),
    #[error("leading coefficient of c_2 is not positive; characteristic number undefined")]
    UndefinedGamma,
    #[error("defined for line configurations (degree 1), got degree {0}")]
    LinesOnly(u32),
    #[error("spectrum does not satisfy the {0} general-type condition")]
    ConditionNotSatisfied(&'static str),
    #[error("curve count must be at least 6, got {0}")]
    OutOfRange(u64),
    #[error("gap polynomial vanishes identically")]
    DegenerateGap,
}

/// `a n^2 + b n + c` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticInN {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl QuadraticInN {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        QuadraticInN { a, b, c }
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Self {
        QuadraticInN::new(rat(a), rat(b), rat(c))
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        (&self.a * n + &self.b) * n + &self.c
    }

    pub fn eval_i64(&self, n: i64) -> Rational {
        self.eval(&rat(n))
    }

    /// Coefficients highest-degree first, as in `(a, b, c)`.
    pub fn coefficients(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }

    fn scale(&self, s: i64) -> Self {
        QuadraticInN::new(&self.a * rat(s), &self.b * rat(s), &self.c * rat(s))
    }

    fn sub(&self, rhs: &Self) -> Self {
        QuadraticInN::new(&self.a - &rhs.a, &self.b - &rhs.b, &self.c - &rhs.c)
    }
}

/// The two Chern quadratics of the Kummer cover of a configuration, scaled
/// by `n^{k-3}`. The source datum is kept so every derived quantity is
/// reproducible from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernPair {
    pub c1sq: QuadraticInN,
    pub c2: QuadraticInN,
    source: Configuration,
}

impl ChernPair {
    pub fn source(&self) -> &Configuration {
        &self.source
    }
}

/// Spectrum predicates under which the cover is of general type, with the
/// admissible range of the order parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralTypeCondition {
    /// `t_k = t_{k-1} = t_{k-2} = 0`, any order `n >= 2`.
    Strong,
    /// `t_k = t_{k-1} = 0`, order `n >= 3`.
    Weak,
}

impl GeneralTypeCondition {
    pub fn minimum_order(self) -> i64 {
        match self {
            GeneralTypeCondition::Strong => 2,
            GeneralTypeCondition::Weak => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GeneralTypeCondition::Strong => "strong",
            GeneralTypeCondition::Weak => "weak",
        }
    }

    pub fn satisfied_by(self, cfg: &Configuration) -> bool {
        let k = cfg.count();
        let vanish_down_to = match self {
            GeneralTypeCondition::Strong => k.saturating_sub(2),
            GeneralTypeCondition::Weak => k.saturating_sub(1),
        };
        (vanish_down_to..=k).all(|r| cfg.t(r) == 0)
    }
}

fn moments(cfg: &Configuration) -> (Rational, Rational, Rational, Rational, Rational) {
    let d = rat(cfg.degree() as i64);
    let k = rat_big(BigInt::from(cfg.count()));
    let f0 = rat_big(cfg.f0());
    let f1 = rat_big(cfg.f1());
    let t2 = rat(cfg.t(2) as i64);
    (d, k, f0, f1, t2)
}

/// Chern quadratics from the general-degree formulas.
fn chern_general(cfg: &Configuration) -> (QuadraticInN, QuadraticInN) {
    let (d, k, f0, f1, t2) = moments(cfg);
    let dd3 = &d * &d - rat(3) * &d; // d^2 - 3d
    let linear = -(&dd3 * &k) - rat(2) * &f1 + rat(2) * &f0;
    let c2 = QuadraticInN::new(
        rat(3) + &dd3 * &k + &f1 - &f0,
        linear.clone(),
        &f1 - &t2,
    );
    let c1sq = QuadraticInN::new(
        rat(9) + (&d * &d - rat(6) * &d) * &k + rat(3) * &f1 - rat(4) * &f0,
        rat(2) * &linear,
        rat(3) * &d * &k + &dd3 * &k + &f1 - &f0 + &t2,
    );
    (c1sq, c2)
}

/// Chern quadratics from the specialized line-configuration formulas.
/// Kept as an independent route; the general formulas must reduce to it.
pub(crate) fn chern_lines(cfg: &Configuration) -> (QuadraticInN, QuadraticInN) {
    debug_assert_eq!(cfg.degree(), 1);
    let (_, k, f0, f1, t2) = moments(cfg);
    let c2 = QuadraticInN::new(
        rat(3) - rat(2) * &k + &f1 - &f0,
        rat(2) * (&k - &f1 + &f0),
        &f1 - &t2,
    );
    let c1sq = QuadraticInN::new(
        rat(-5) * &k + rat(9) + rat(3) * &f1 - rat(4) * &f0,
        rat(4) * (&k - &f1 + &f0),
        &f1 - &f0 + &k + &t2,
    );
    (c1sq, c2)
}

/// The Chern pair of the Kummer cover of a validated configuration.
///
/// Requires `k >= 4` and no point common to all curves.
pub fn chern_pair(cfg: &Validated) -> Result<ChernPair, ChernError> {
    let k = cfg.count();
    if k < 4 {
        return Err(ChernError::TooFewCurves(k));
    }
    if cfg.t(k) != 0 {
        return Err(ChernError::Pencil(k));
    }
    let (c1sq, c2) = chern_general(cfg);
    if cfg.degree() == 1 {
        let (l1, l2) = chern_lines(cfg);
        assert_eq!(c1sq, l1, "general formulas must reduce to the line case");
        assert_eq!(c2, l2, "general formulas must reduce to the line case");
    }
    Ok(ChernPair {
        c1sq,
        c2,
        source: cfg.as_config().clone(),
    })
}

/// Exact Chern slope `c_1^2(n) / c_2(n)` at a given order.
pub fn slope_at(pair: &ChernPair, n: i64) -> Result<Rational, ChernError> {
    if n < 2 {
        return Err(ChernError::OrderTooSmall(n));
    }
    let denom = pair.c2.eval_i64(n);
    if !denom.is_positive() {
        return Err(ChernError::InvalidSurface(n));
    }
    Ok(pair.c1sq.eval_i64(n) / denom)
}

/// The characteristic number: the limit of the Chern slope as the order
/// grows, i.e. the ratio of the leading coefficients. Defined only when the
/// leading coefficient of `c_2` is positive.
pub fn characteristic_number(pair: &ChernPair) -> Result<Rational, ChernError> {
    if !pair.c2.a.is_positive() {
        return Err(ChernError::UndefinedGamma);
    }
    let gamma = &pair.c1sq.a / &pair.c2.a;
    if pair.source.degree() == 1 {
        // Closed form for lines: 5/2 - (3 f_0 - f_1 - 3) / (2 (3 - 2k + f_1 - f_0)).
        let (_, k, f0, f1, _) = moments(&pair.source);
        let denom = rat(2) * (rat(3) - rat(2) * &k + &f1 - &f0);
        let closed = frac(5, 2) - (rat(3) * &f0 - &f1 - rat(3)) / denom;
        assert_eq!(gamma, closed, "leading-coefficient ratio vs closed form");
    }
    Ok(gamma)
}

/// The gap `3 c_2 - c_1^2` as a quadratic in the order, for line
/// configurations. Nonnegative whenever the strong general-type condition
/// holds; a zero at an admissible order certifies a ball quotient.
pub fn bmy_gap(pair: &ChernPair) -> Result<QuadraticInN, ChernError> {
    if pair.source.degree() != 1 {
        return Err(ChernError::LinesOnly(pair.source.degree()));
    }
    let gap = pair.c2.scale(3).sub(&pair.c1sq);
    // Closed form: n^2 (f_0 - k) + 2n (k - f_1 + f_0) + 2 f_1 + f_0 - k - 4 t_2.
    let (_, k, f0, f1, t2) = moments(&pair.source);
    let closed = QuadraticInN::new(
        &f0 - &k,
        rat(2) * (&k - &f1 + &f0),
        rat(2) * &f1 + &f0 - &k - rat(4) * &t2,
    );
    assert_eq!(gap, closed, "3c_2 - c_1^2 vs closed form");
    Ok(gap)
}

/// All integer orders `n >= n_min(cond)` at which the gap vanishes, found by
/// the exact rational root test on the quadratic. An empty list means the
/// construction never yields a ball quotient at admissible orders.
pub fn ball_quotient_candidates(
    pair: &ChernPair,
    cond: GeneralTypeCondition,
) -> Result<Vec<i64>, ChernError> {
    if !cond.satisfied_by(&pair.source) {
        return Err(ChernError::ConditionNotSatisfied(cond.name()));
    }
    let gap = bmy_gap(pair)?;
    let n_min = cond.minimum_order();
    let mut roots: Vec<Rational> = Vec::new();
    if gap.a.is_zero() {
        if gap.b.is_zero() {
            if gap.c.is_zero() {
                // t_2 = f_0 = k forces k = 3, below the Kummer threshold.
                return Err(ChernError::DegenerateGap);
            }
        } else {
            roots.push(-&gap.c / &gap.b);
        }
    } else {
        let disc = &gap.b * &gap.b - rat(4) * &gap.a * &gap.c;
        if !disc.is_negative() {
            if let Some(sq) = sqrt_exact(&disc) {
                let two_a = rat(2) * &gap.a;
                roots.push((-&gap.b + &sq) / &two_a);
                if !sq.is_zero() {
                    roots.push((-&gap.b - &sq) / &two_a);
                }
            }
        }
    }
    let mut candidates: Vec<i64> = roots
        .into_iter()
        .filter_map(|r| crate::rational::to_integer(&r))
        .filter_map(|n| i64::try_from(&n).ok())
        .filter(|&n| n >= n_min)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    Ok(candidates)
}

/// Sommese's bounds on the characteristic number of a configuration of
/// `k >= 6` lines: `2 (k-3)/(k-2) <= gamma <= 8/3`. The lower bound is
/// attained by general position, the upper by the dual Hesse configuration.
pub fn sommese_bounds(k: u64) -> Result<(Rational, Rational), ChernError> {
    if k < 6 {
        return Err(ChernError::OutOfRange(k));
    }
    let k = rat_big(BigInt::from(k));
    Ok((rat(2) * (&k - rat(3)) / (&k - rat(2)), frac(8, 3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Configuration;
    use crate::rational::within;

    fn t6() -> ChernPair {
        let cfg = Configuration::lines(6, [(2, 3), (3, 4)])
            .unwrap()
            .validated()
            .unwrap();
        chern_pair(&cfg).unwrap()
    }

    fn klein() -> ChernPair {
        let cfg = Configuration::lines(21, [(3, 28), (4, 21)])
            .unwrap()
            .validated()
            .unwrap();
        chern_pair(&cfg).unwrap()
    }

    #[test]
    fn t6_chern_pair() {
        let pair = t6();
        assert_eq!(pair.c2, QuadraticInN::from_integers(2, -10, 15));
        assert_eq!(pair.c1sq, QuadraticInN::from_integers(5, -20, 20));
    }

    #[test]
    fn klein_chern_pair() {
        let pair = klein();
        assert_eq!(pair.c1sq, QuadraticInN::from_integers(212, -392, 140));
        assert_eq!(pair.c2, QuadraticInN::from_integers(80, -196, 168));
    }

    #[test]
    fn boroczky_eight_by_hand() {
        // k=8, t_2 = 7, t_3 = 7: f_0 = 14, f_1 = 35 in the line formulas.
        let cfg = Configuration::lines(8, [(2, 7), (3, 7)])
            .unwrap()
            .validated()
            .unwrap();
        let pair = chern_pair(&cfg).unwrap();
        assert_eq!(pair.c2, QuadraticInN::from_integers(8, -26, 28));
        assert_eq!(pair.c1sq, QuadraticInN::from_integers(18, -52, 36));
    }

    #[test]
    fn slopes() {
        let pair = t6();
        assert_eq!(slope_at(&pair, 5).unwrap(), rat(3));
        assert_eq!(slope_at(&pair, 6).unwrap(), frac(80, 27));
        assert_eq!(slope_at(&pair, 1), Err(ChernError::OrderTooSmall(1)));
        let k = klein();
        assert_eq!(slope_at(&k, 4).unwrap(), frac(491, 166));
        assert_eq!(
            crate::rational::decimal_string(&slope_at(&k, 4).unwrap(), 5),
            "2.95783"
        );
    }

    #[test]
    fn characteristic_numbers() {
        assert_eq!(characteristic_number(&klein()).unwrap(), frac(53, 20));
        assert_eq!(characteristic_number(&t6()).unwrap(), frac(5, 2));
        let ap = Configuration::new(
            2,
            6,
            crate::config::MultiplicitySpectrum::from_pairs([(5, 6)]).unwrap(),
        )
        .unwrap()
        .validated()
        .unwrap();
        assert_eq!(
            characteristic_number(&chern_pair(&ap).unwrap()).unwrap(),
            frac(9, 5)
        );
        let hesse = Configuration::new(
            2,
            12,
            crate::config::MultiplicitySpectrum::from_pairs([(2, 12), (8, 9)]).unwrap(),
        )
        .unwrap()
        .validated()
        .unwrap();
        assert_eq!(
            characteristic_number(&chern_pair(&hesse).unwrap()).unwrap(),
            frac(13, 6)
        );
    }

    #[test]
    fn gap_and_ball_quotients() {
        let pair = t6();
        let gap = bmy_gap(&pair).unwrap();
        assert_eq!(gap, QuadraticInN::from_integers(1, -10, 25)); // (n-5)^2
        assert_eq!(
            ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap(),
            vec![5]
        );
        // Weak condition admits orders from 3 up; 5 still qualifies.
        assert_eq!(
            ball_quotient_candidates(&pair, GeneralTypeCondition::Weak).unwrap(),
            vec![5]
        );
    }

    #[test]
    fn pencil_and_size_errors() {
        let pencil = Configuration::lines(5, [(5, 1)]).unwrap().validated().unwrap();
        assert_eq!(chern_pair(&pencil), Err(ChernError::Pencil(5)));
        let small = Configuration::lines(3, [(2, 3)]).unwrap().validated().unwrap();
        assert_eq!(chern_pair(&small), Err(ChernError::TooFewCurves(3)));
    }

    #[test]
    fn condition_predicates() {
        let t6cfg = t6().source().clone();
        assert!(GeneralTypeCondition::Strong.satisfied_by(&t6cfg));
        // 8 lines with a 6-fold point: strong fails (t_{k-2} != 0), weak holds.
        let cfg = Configuration::lines(8, [(2, 13), (6, 1)]).unwrap();
        assert!(!GeneralTypeCondition::Strong.satisfied_by(&cfg));
        assert!(GeneralTypeCondition::Weak.satisfied_by(&cfg));
    }

    #[test]
    fn sommese() {
        let (lo, hi) = sommese_bounds(6).unwrap();
        assert_eq!(lo, frac(3, 2));
        assert_eq!(hi, frac(8, 3));
        assert!(sommese_bounds(5).is_err());
        let (lo, _) = sommese_bounds(1_000_000).unwrap();
        assert!(within(&lo, &rat(2), &frac(1, 100_000)));
        // Dual Hesse attains the upper bound.
        let dual_hesse = Configuration::lines(9, [(3, 12)]).unwrap().validated().unwrap();
        assert_eq!(
            characteristic_number(&chern_pair(&dual_hesse).unwrap()).unwrap(),
            frac(8, 3)
        );
    }
}
