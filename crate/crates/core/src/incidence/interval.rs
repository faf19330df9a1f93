//! Rational interval arithmetic with certified trigonometric enclosures.
//!
//! Endpoints are exact rationals, so ring operations introduce no rounding
//! error at all; only the transcendental seeds (pi, cosine, sine) carry an
//! explicit remainder interval. To keep denominators from exploding,
//! results are periodically rounded outward onto a dyadic grid.
//!
//! An interval can certify that two quantities differ (disjoint enclosures)
//! but never that they coincide; callers that cluster near-equal values must
//! treat the result as presumed.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rational,
    hi: Rational,
}

impl RatInterval {
    pub fn point(v: Rational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn zero() -> Self {
        RatInterval::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn excludes_zero(&self) -> bool {
        !self.contains_zero()
    }

    pub fn max_abs(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let candidates = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_negative() {
            RatInterval {
                lo: &self.hi * s,
                hi: &self.lo * s,
            }
        } else {
            RatInterval {
                lo: &self.lo * s,
                hi: &self.hi * s,
            }
        }
    }

    /// Widens by `r` on both sides (`r >= 0`).
    pub fn inflate(&self, r: &Rational) -> Self {
        debug_assert!(!r.is_negative());
        RatInterval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }

    /// Rounds outward onto the grid of multiples of `2^-bits`, bounding the
    /// denominator size without losing soundness.
    pub fn round_out(&self, bits: u32) -> Self {
        let scale = BigInt::one() << bits;
        let scale_r = Rational::from_integer(scale.clone());
        let lo_scaled = &self.lo * &scale_r;
        let hi_scaled = &self.hi * &scale_r;
        let lo = Rational::new(lo_scaled.numer().div_floor(lo_scaled.denom()), scale.clone());
        let hi = Rational::new(hi_scaled.numer().div_ceil(hi_scaled.denom()), scale);
        RatInterval { lo, hi }
    }

    /// True when the two intervals share no point.
    pub fn certainly_disjoint(&self, rhs: &Self) -> bool {
        self.hi < rhs.lo || rhs.hi < self.lo
    }
}

fn two_pow_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

/// `arctan(1/m)` for integer `m >= 2`, via the alternating series; the
/// truncation error is bounded by the first omitted term.
fn arctan_inv(m: i64, bits: u32) -> RatInterval {
    let eps = two_pow_neg(bits + 8);
    let x = Rational::new(BigInt::one(), BigInt::from(m));
    let x2 = &x * &x;
    let mut term = x; // x^{2i+1}/(2i+1), sign handled separately
    let mut sum = Rational::zero();
    let mut i: u64 = 0;
    loop {
        let contribution = &term / Rational::from_integer(BigInt::from(2 * i + 1));
        if contribution < eps {
            // remainder of an alternating series with decreasing terms
            return RatInterval::new(&sum - &contribution, &sum + &contribution);
        }
        if i % 2 == 0 {
            sum += &contribution;
        } else {
            sum -= &contribution;
        }
        term = &term * &x2;
        i += 1;
    }
}

/// Certified enclosure of pi (Machin's formula).
pub fn pi(bits: u32) -> RatInterval {
    let a = arctan_inv(5, bits + 6).scale(&crate::rational::rat(16));
    let b = arctan_inv(239, bits + 6).scale(&crate::rational::rat(4));
    a.sub(&b).round_out(bits + 4)
}

/// Certified `(cos x, sin x)` for `|x| <= 7`, accurate to roughly `2^-bits`
/// plus the width of the input.
pub fn cos_sin(x: &RatInterval, bits: u32) -> (RatInterval, RatInterval) {
    let work = bits + 16;
    let eps = two_pow_neg(bits + 6);
    let half_width = x.width() / crate::rational::rat(2);
    let mid = (x.lo() + x.hi()) / crate::rational::rat(2);
    debug_assert!(mid.abs() <= crate::rational::rat(7), "argument out of range");

    let m = RatInterval::point(mid).round_out(work);
    let m2 = m.mul(&m).round_out(work);

    // cos: terms t_i = (-1)^i m^{2i}/(2i)!,   ratio m^2/((2i+1)(2i+2))
    // sin: terms t_i = (-1)^i m^{2i+1}/(2i+1)!, ratio m^2/((2i+2)(2i+3))
    let cos = alternating_series(RatInterval::point(Rational::one()), &m2, work, &eps, 1);
    let sin = alternating_series(m.clone(), &m2, work, &eps, 2);
    (
        cos.inflate(&half_width).round_out(work),
        sin.inflate(&half_width).round_out(work),
    )
}

/// Sums `t_0 - t_1 + t_2 - ...` where `t_{i+1} = t_i * m2 / ((2i+a)(2i+a+1))`,
/// stopping once the next term is below `eps` and the term ratio has dropped
/// under 1/2 (so the tail is bounded by twice the next term).
fn alternating_series(
    first: RatInterval,
    m2: &RatInterval,
    work: u32,
    eps: &Rational,
    a: u64,
) -> RatInterval {
    let mut term = first;
    let mut acc = RatInterval::zero();
    let mut i: u64 = 0;
    loop {
        let f1 = 2 * i + a;
        let f2 = 2 * i + a + 1;
        let ratio_small = m2.max_abs() * Rational::new(BigInt::from(2), BigInt::from(f1 * f2))
            <= Rational::one();
        if ratio_small && term.max_abs() < *eps {
            let bound = term.max_abs() * crate::rational::rat(2);
            return acc.inflate(&bound);
        }
        if i % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
        let inv = Rational::new(BigInt::one(), BigInt::from(f1 * f2));
        term = term.mul(m2).scale(&inv).round_out(work);
        acc = acc.round_out(work);
        i += 1;
    }
}
