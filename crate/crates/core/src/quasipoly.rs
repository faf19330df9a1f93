//! Quasi-polynomials: polynomials whose coefficients depend periodically on
//! the integer argument.
//!
//! Floor expressions such as `⌊k(k-3)/6⌋` are exactly representable this way:
//! one polynomial branch per residue class of the argument. All ring
//! operations take the lcm of the operand periods.

use crate::poly::Poly;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuasiPolyError {
    #[error("branch count {got} does not match period {period}")]
    BranchCount { period: u64, got: usize },
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("coefficient of degree {degree} differs between residue classes")]
    ResidueDependent { degree: usize },
}

/// A polynomial in an integer variable whose coefficients are periodic
/// functions of that variable.
#[derive(Clone, Debug)]
pub struct QuasiPolynomial {
    period: u64,
    branches: Vec<Poly>, // index = argument mod period (euclidean)
}

impl QuasiPolynomial {
    pub fn zero() -> Self {
        QuasiPolynomial {
            period: 1,
            branches: vec![Poly::zero()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// An honest polynomial (period 1).
    pub fn from_poly(p: Poly) -> Self {
        QuasiPolynomial {
            period: 1,
            branches: vec![p],
        }
    }

    /// One branch per residue class; `branches[s]` applies when the argument
    /// is congruent to `s` modulo the period.
    pub fn from_branches(period: u64, branches: Vec<Poly>) -> Result<Self, QuasiPolyError> {
        if period == 0 {
            return Err(QuasiPolyError::ZeroPeriod);
        }
        if branches.len() != period as usize {
            return Err(QuasiPolyError::BranchCount {
                period,
                got: branches.len(),
            });
        }
        Ok(QuasiPolynomial { period, branches })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn branch(&self, residue: u64) -> &Poly {
        &self.branches[(residue % self.period) as usize]
    }

    /// Max degree across branches; `None` if identically zero.
    pub fn degree(&self) -> Option<usize> {
        self.branches.iter().filter_map(Poly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.branches.iter().all(Poly::is_zero)
    }

    pub fn eval(&self, k: &BigInt) -> Rational {
        let residue = k
            .mod_floor(&BigInt::from(self.period))
            .to_u64()
            .expect("residue fits in u64");
        self.branches[residue as usize].eval_int(k)
    }

    pub fn eval_i64(&self, k: i64) -> Rational {
        self.eval(&BigInt::from(k))
    }

    /// Re-expresses the same function with a period that is a multiple of the
    /// current one.
    fn expand(&self, period: u64) -> Self {
        debug_assert_eq!(period % self.period, 0);
        let branches = (0..period)
            .map(|s| self.branches[(s % self.period) as usize].clone())
            .collect();
        QuasiPolynomial { period, branches }
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Self {
        let period = self.period.lcm(&rhs.period);
        let a = self.expand(period);
        let b = rhs.expand(period);
        let branches = a
            .branches
            .iter()
            .zip(b.branches.iter())
            .map(|(x, y)| f(x, y))
            .collect();
        QuasiPolynomial { period, branches }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a * b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QuasiPolynomial {
            period: self.period,
            branches: self.branches.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Coefficient of `k^degree`, provided it is the same in every residue
    /// class. Errors otherwise: limits along residue classes would disagree.
    pub fn uniform_coefficient(&self, degree: usize) -> Result<Rational, QuasiPolyError> {
        let mut coeffs = self.branches.iter().map(|b| b.coeff(degree));
        let first = coeffs.next().expect("at least one branch");
        if coeffs.all(|c| c == first) {
            Ok(first)
        } else {
            Err(QuasiPolyError::ResidueDependent { degree })
        }
    }

    /// Structural equality of the underlying functions (branch-wise over the
    /// common period).
    pub fn equivalent(&self, rhs: &Self) -> bool {
        let period = self.period.lcm(&rhs.period);
        let a = self.expand(period);
        let b = rhs.expand(period);
        a.branches == b.branches
    }
}

/// The exact quasi-polynomial equal to `⌊p(k)/divisor⌋` for every integer `k`,
/// where `p` has integer coefficients (constant first).
///
/// For `k ≡ s (mod divisor)` the value `p(k) mod divisor` is constant, so each
/// branch is `(p(k) - p(s) mod divisor)/divisor`, an honest polynomial.
pub fn qp_from_floor(numer: &[BigInt], divisor: u64) -> QuasiPolynomial {
    assert!(divisor >= 1, "divisor must be positive");
    let q = BigInt::from(divisor);
    let p = Poly::from_coeffs(
        numer
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    );
    let branches = (0..divisor)
        .map(|s| {
            let value = p.eval_int(&BigInt::from(s));
            debug_assert!(value.denom().is_one() || value.is_zero());
            let rho = value.numer().mod_floor(&q);
            let shifted = &p - &Poly::constant(Rational::from_integer(rho));
            shifted.scale(&Rational::new(BigInt::from(1), q.clone()))
        })
        .collect();
    QuasiPolynomial {
        period: divisor,
        branches,
    }
}

/// Evaluates a quasi-polynomial that is expected to produce integers,
/// reporting the offending value otherwise.
pub fn eval_integer(qp: &QuasiPolynomial, k: i64) -> Result<BigInt, Rational> {
    let v = qp.eval_i64(k);
    crate::rational::to_integer(&v).ok_or(v)
}

/// Evaluates and additionally requires the integer to be non-negative.
pub fn eval_count(qp: &QuasiPolynomial, k: i64) -> Result<BigInt, Rational> {
    let v = eval_integer(qp, k)?;
    if v.is_negative() {
        return Err(Rational::from_integer(v));
    }
    Ok(v)
}

impl PartialEq for QuasiPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn floor_qp() -> QuasiPolynomial {
        // ⌊k(k-3)/6⌋
        qp_from_floor(&[BigInt::from(0), BigInt::from(-3), BigInt::from(1)], 6)
    }

    #[test]
    fn floor_examples() {
        let f = floor_qp();
        assert_eq!(f.eval_i64(8), rat(6));
        assert_eq!(f.eval_i64(12), rat(18));
        assert_eq!(f.eval_i64(6), rat(3));
    }

    #[test]
    fn floor_of_divisor_one_is_identity() {
        let id = qp_from_floor(&[BigInt::from(0), BigInt::from(1)], 1);
        assert_eq!(id.period(), 1);
        assert_eq!(id.eval_i64(-7), rat(-7));
        assert_eq!(id.eval_i64(41), rat(41));
    }

    #[test]
    fn arithmetic_takes_lcm_of_periods() {
        let eps = QuasiPolynomial::from_branches(
            3,
            vec![
                Poly::zero(),
                Poly::from_integers(&[2]),
                Poly::from_integers(&[2]),
            ],
        )
        .unwrap();
        let sum = eps.add(&floor_qp());
        assert_eq!(sum.period(), 6);
        // k=8: eps=2, floor=6
        assert_eq!(sum.eval_i64(8), rat(8));
    }

    #[test]
    fn uniform_coefficient_detects_residue_dependence() {
        let f = floor_qp();
        assert_eq!(f.uniform_coefficient(2), Ok(crate::rational::frac(1, 6)));
        assert!(matches!(
            f.uniform_coefficient(0),
            Err(QuasiPolyError::ResidueDependent { degree: 0 })
        ));
    }

    proptest! {
        // q * result(k) <= p(k) < q * (result(k) + 1): the exact floor property.
        #[test]
        fn floor_property(c0 in -50i64..50, c1 in -50i64..50, c2 in -10i64..10,
                          q in 1u64..12, k in -200i64..200) {
            let p = [BigInt::from(c0), BigInt::from(c1), BigInt::from(c2)];
            let f = qp_from_floor(&p, q);
            let val = f.eval_i64(k);
            prop_assert!(crate::rational::is_integer(&val));
            let pk = rat(c0) + rat(c1) * rat(k) + rat(c2) * rat(k) * rat(k);
            let qr = rat(q as i64);
            prop_assert!(&val * &qr <= pk);
            prop_assert!(pk < (&val + rat(1)) * &qr);
        }

        #[test]
        fn add_matches_pointwise(k in -100i64..100) {
            let f = floor_qp();
            let g = qp_from_floor(&[BigInt::from(1), BigInt::from(2)], 4);
            prop_assert_eq!(f.add(&g).eval_i64(k), f.eval_i64(k) + g.eval_i64(k));
            prop_assert_eq!(f.mul(&g).eval_i64(k), f.eval_i64(k) * g.eval_i64(k));
        }
    }
}
