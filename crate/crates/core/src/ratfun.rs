//! Rational functions in one variable, kept reduced with a monic denominator.

use crate::poly::Poly;
use crate::rational::Rational;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFunError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
}

/// A quotient of polynomials, normalized so that numerator and denominator
/// are coprime and the denominator is monic. Equality of normal forms is
/// equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Poly::zero(),
                den: Poly::constant(crate::rational::rat(1)),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = Rational::from_integer(1.into()) / lead;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_constant(c: Rational) -> Self {
        RationalFunction {
            num: Poly::constant(c),
            den: Poly::constant(crate::rational::rat(1)),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Exact value at `x`, or `None` on a pole of the reduced form.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn eval_i64(&self, x: i64) -> Option<Rational> {
        self.eval(&crate::rational::rat(x))
    }

    /// Limit as the variable tends to infinity: `None` if it diverges.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(n), Some(d)) if n < d => Some(Rational::zero()),
            (Some(n), Some(d)) if n == d => {
                Some(self.num.leading().unwrap() / self.den.leading().unwrap())
            }
            _ => None,
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    #[test]
    fn normal_form_identifies_equal_functions() {
        // (5n^2 - 8n + 2)/(2n^2 - 4n + 3) == (5/2 n^2 - 4n + 1)/(n^2 - 2n + 3/2)
        let a = RationalFunction::new(
            Poly::from_integers(&[2, -8, 5]),
            Poly::from_integers(&[3, -4, 2]),
        )
        .unwrap();
        let b = RationalFunction::new(
            Poly::from_coeffs(vec![rat(1), rat(-4), frac(5, 2)]),
            Poly::from_coeffs(vec![frac(3, 2), rat(-2), rat(1)]),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(5/2*n^2 - 4*n + 1)/(n^2 - 2*n + 3/2)");
    }

    #[test]
    fn common_factors_cancel() {
        // (n^2 - 1)/(n - 1) reduces to n + 1
        let f = RationalFunction::new(Poly::from_integers(&[-1, 0, 1]), Poly::from_integers(&[-1, 1]))
            .unwrap();
        assert_eq!(f.denominator(), &Poly::from_integers(&[1]));
        assert_eq!(f.numerator(), &Poly::from_integers(&[1, 1]));
        assert_eq!(f.eval_i64(1), Some(rat(2)));
    }

    #[test]
    fn limits() {
        let f = RationalFunction::new(
            Poly::from_integers(&[2, -8, 5]),
            Poly::from_integers(&[3, -4, 2]),
        )
        .unwrap();
        assert_eq!(f.limit_at_infinity(), Some(frac(5, 2)));
        let g =
            RationalFunction::new(Poly::from_integers(&[1, 1]), Poly::from_integers(&[0, 0, 1]))
                .unwrap();
        assert_eq!(g.limit_at_infinity(), Some(rat(0)));
        let h =
            RationalFunction::new(Poly::from_integers(&[0, 0, 1]), Poly::from_integers(&[1, 1]))
                .unwrap();
        assert_eq!(h.limit_at_infinity(), None);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(Poly::from_integers(&[1]), Poly::zero()).is_err());
    }
}
