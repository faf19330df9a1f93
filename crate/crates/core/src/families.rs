//! Parameterized line-configuration families and their asymptotic
//! invariants.
//!
//! Each family stores its spectrum entries as quasi-polynomials in the
//! family parameter, so instantiation at any admissible parameter is exact,
//! and the asymptotic quantities (Harbourne constant, Chern slope limits)
//! come out of leading coefficients rather than numeric extrapolation.
//!
//! Built-ins:
//! - Böröczky `B_k` (k even): `t_2 = k - 3 + eps`, `t_3 = 1 + ⌊k(k-3)/6⌋`,
//!   with `eps = 0` when `3 | k` and `2` otherwise;
//! - s-elliptic `E_k` with `w` flex lines: `t_2 = k - w`,
//!   `t_3 = k(k-3)/6 + w/3`;
//! - polyhedral `P_k` (2k lines): `t_2 = k`, `t_3 = C(k,2)`, a k-fold center;
//! - Fermat `F_m` (3m lines): `t_3 = m^2` plus three m-fold points.

use crate::config::{ConfigError, Configuration, MultiplicitySpectrum, Validated};
use crate::poly::Poly;
use crate::quasipoly::{QuasiPolyError, QuasiPolynomial, qp_from_floor};
use crate::ratfun::{RatFunError, RationalFunction};
use crate::rational::{Rational, frac, rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("parameter {k} outside the family domain: {reason}")]
    Domain { k: i64, reason: String },
    #[error("synthetic profile families describe limits only and cannot be instantiated")]
    NotInstantiable,
    #[error("no limit: {0}")]
    NoLimit(String),
    #[error("dominant multiplicity must be at least 3, got {0}")]
    ProfileMultiplicity(u64),
    #[error("profile density must be positive")]
    ProfileDensity,
    #[error(transparent)]
    Config(#[from] ConfigError),
}

impl From<QuasiPolyError> for FamilyError {
    fn from(e: QuasiPolyError) -> Self {
        FamilyError::NoLimit(e.to_string())
    }
}

impl From<RatFunError> for FamilyError {
    fn from(e: RatFunError) -> Self {
        FamilyError::NoLimit(e.to_string())
    }
}

/// The four built-in family names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinFamily {
    Boroczky,
    /// `flex_lines` counts the lines dual to flexes of the cubic.
    SElliptic {
        flex_lines: u64,
    },
    Polyhedral,
    Fermat,
}

/// `slope * parameter + offset`, for spectrum entries whose multiplicity
/// itself grows with the family parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: i64,
    pub offset: i64,
}

impl LinearForm {
    pub fn eval(&self, k: i64) -> i64 {
        self.slope * k + self.offset
    }

    fn as_poly(&self) -> Poly {
        Poly::linear(rat(self.slope), rat(self.offset))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowingEntry {
    pub multiplicity: LinearForm,
    pub count: QuasiPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum DomainRule {
    /// Parameter at least the bound.
    AtLeast(i64),
    /// Even parameter at least the bound.
    EvenAtLeast(i64),
    /// Limits only; `instantiate` always fails.
    NotInstantiable,
}

/// A family of line configurations: spectrum entry counts as
/// quasi-polynomials in the parameter, plus optional entries whose
/// multiplicity is a linear function of the parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpectrum {
    name: String,
    degree: u32,
    line_count: QuasiPolynomial,
    fixed_entries: BTreeMap<u64, QuasiPolynomial>,
    growing_entries: Vec<GrowingEntry>,
    domain: DomainRule,
}

impl FamilySpectrum {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn line_count(&self) -> &QuasiPolynomial {
        &self.line_count
    }

    pub fn fixed_entries(&self) -> &BTreeMap<u64, QuasiPolynomial> {
        &self.fixed_entries
    }

    pub fn growing_entries(&self) -> &[GrowingEntry] {
        &self.growing_entries
    }

    /// A custom line family with domain `parameter >= min_parameter`.
    pub fn custom_lines(
        name: impl Into<String>,
        line_count: QuasiPolynomial,
        fixed_entries: BTreeMap<u64, QuasiPolynomial>,
        growing_entries: Vec<GrowingEntry>,
        min_parameter: i64,
    ) -> Self {
        FamilySpectrum {
            name: name.into(),
            degree: 1,
            line_count,
            fixed_entries,
            growing_entries,
            domain: DomainRule::AtLeast(min_parameter),
        }
    }
}

/// The named families with the closed-form spectra listed in the module
/// docs.
pub fn builtin_family(which: BuiltinFamily) -> FamilySpectrum {
    let k = QuasiPolynomial::from_poly(Poly::from_integers(&[0, 1]));
    match which {
        BuiltinFamily::Boroczky => {
            let eps = QuasiPolynomial::from_branches(
                3,
                vec![
                    Poly::zero(),
                    Poly::from_integers(&[2]),
                    Poly::from_integers(&[2]),
                ],
            )
            .expect("three branches");
            let t2 = QuasiPolynomial::from_poly(Poly::from_integers(&[-3, 1])).add(&eps);
            let t3 = QuasiPolynomial::constant(rat(1)).add(&qp_from_floor(
                &[BigInt::from(0), BigInt::from(-3), BigInt::from(1)],
                6,
            ));
            FamilySpectrum {
                name: "boroczky".into(),
                degree: 1,
                line_count: k,
                fixed_entries: BTreeMap::from([(2, t2), (3, t3)]),
                growing_entries: Vec::new(),
                domain: DomainRule::EvenAtLeast(6),
            }
        }
        BuiltinFamily::SElliptic { flex_lines: w } => {
            let t2 = QuasiPolynomial::from_poly(Poly::linear(rat(1), rat(-(w as i64))));
            let t3 = QuasiPolynomial::from_poly(Poly::from_coeffs(vec![
                frac(w as i64, 3),
                frac(-1, 2),
                frac(1, 6),
            ]));
            FamilySpectrum {
                name: format!("s-elliptic(w={w})"),
                degree: 1,
                line_count: k,
                fixed_entries: BTreeMap::from([(2, t2), (3, t3)]),
                growing_entries: Vec::new(),
                domain: DomainRule::AtLeast(3),
            }
        }
        BuiltinFamily::Polyhedral => {
            let t2 = k.clone();
            let t3 = QuasiPolynomial::from_poly(Poly::from_coeffs(vec![
                rat(0),
                frac(-1, 2),
                frac(1, 2),
            ]));
            FamilySpectrum {
                name: "polyhedral".into(),
                degree: 1,
                line_count: QuasiPolynomial::from_poly(Poly::from_integers(&[0, 2])),
                fixed_entries: BTreeMap::from([(2, t2), (3, t3)]),
                growing_entries: vec![GrowingEntry {
                    multiplicity: LinearForm { slope: 1, offset: 0 },
                    count: QuasiPolynomial::constant(rat(1)),
                }],
                domain: DomainRule::AtLeast(3),
            }
        }
        BuiltinFamily::Fermat => FamilySpectrum {
            name: "fermat".into(),
            degree: 1,
            line_count: QuasiPolynomial::from_poly(Poly::from_integers(&[0, 3])),
            fixed_entries: BTreeMap::from([(
                3,
                QuasiPolynomial::from_poly(Poly::from_integers(&[0, 0, 1])),
            )]),
            growing_entries: vec![GrowingEntry {
                multiplicity: LinearForm { slope: 1, offset: 0 },
                count: QuasiPolynomial::constant(rat(3)),
            }],
            domain: DomainRule::AtLeast(3),
        },
    }
}

/// A synthetic family whose only entry is `t_r0 = c k^2`: the dominant
/// multiplicity profile. It exists purely for limit computations; the
/// combinatorial identity fails at finite parameters, so instantiation is
/// refused.
pub fn dominant_profile(r0: u64, c: Rational) -> Result<FamilySpectrum, FamilyError> {
    if r0 < 3 {
        return Err(FamilyError::ProfileMultiplicity(r0));
    }
    if !c.is_positive() {
        return Err(FamilyError::ProfileDensity);
    }
    let count = QuasiPolynomial::from_poly(Poly::monomial(2, c.clone()));
    Ok(FamilySpectrum {
        name: format!("profile(r0={r0}, c={c})"),
        degree: 1,
        line_count: QuasiPolynomial::from_poly(Poly::from_integers(&[0, 1])),
        fixed_entries: BTreeMap::from([(r0, count)]),
        growing_entries: Vec::new(),
        domain: DomainRule::NotInstantiable,
    })
}

impl FamilySpectrum {
    fn check_domain(&self, k: i64) -> Result<(), FamilyError> {
        match self.domain {
            DomainRule::NotInstantiable => Err(FamilyError::NotInstantiable),
            DomainRule::AtLeast(min) => {
                if k < min {
                    Err(FamilyError::Domain {
                        k,
                        reason: format!("parameter must be at least {min}"),
                    })
                } else {
                    Ok(())
                }
            }
            DomainRule::EvenAtLeast(min) => {
                if k < min {
                    Err(FamilyError::Domain {
                        k,
                        reason: format!("parameter must be at least {min}"),
                    })
                } else if k % 2 != 0 {
                    Err(FamilyError::Domain {
                        k,
                        reason: "parameter must be even (parity)".into(),
                    })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// The configuration at parameter `k`. Entry counts must evaluate to
    /// non-negative integers (integrality is part of the domain, e.g. for
    /// s-elliptic families); growing entries whose multiplicity collides
    /// with a fixed one merge additively. The result always passes
    /// validation.
    pub fn instantiate(&self, k: i64) -> Result<Validated, FamilyError> {
        self.check_domain(k)?;
        let as_count = |qp: &QuasiPolynomial, what: &str| -> Result<u64, FamilyError> {
            let v = qp.eval_i64(k);
            let int = crate::rational::to_integer(&v).ok_or_else(|| FamilyError::Domain {
                k,
                reason: format!("{what} = {v} is not an integer (integrality)"),
            })?;
            if int.is_negative() {
                return Err(FamilyError::Domain {
                    k,
                    reason: format!("{what} = {int} is negative"),
                });
            }
            int.to_u64().ok_or_else(|| FamilyError::Domain {
                k,
                reason: format!("{what} = {int} does not fit in 64 bits"),
            })
        };
        let lines = as_count(&self.line_count, "line count")?;
        let mut spectrum: BTreeMap<u64, u64> = BTreeMap::new();
        for (&r, qp) in &self.fixed_entries {
            let t = as_count(qp, &format!("t_{r}"))?;
            if t > 0 {
                *spectrum.entry(r).or_insert(0) += t;
            }
        }
        for entry in &self.growing_entries {
            let mult = entry.multiplicity.eval(k);
            let t = as_count(&entry.count, &format!("count at multiplicity {mult}"))?;
            if t == 0 {
                continue;
            }
            if mult < 2 {
                return Err(FamilyError::Domain {
                    k,
                    reason: format!("growing multiplicity {mult} is below 2"),
                });
            }
            *spectrum.entry(mult as u64).or_insert(0) += t;
        }
        let cfg = Configuration::new(
            self.degree,
            lines,
            MultiplicitySpectrum::from_pairs(spectrum)?,
        )?
        .with_label(format!("{} at k={k}", self.name));
        Ok(cfg.validated()?)
    }

    /// `f_0` and `f_1` as quasi-polynomials in the parameter.
    fn moment_qp(&self, order: u32) -> QuasiPolynomial {
        debug_assert!(order <= 1);
        let mut total = QuasiPolynomial::zero();
        for (&r, qp) in &self.fixed_entries {
            let weighted = if order == 0 {
                qp.clone()
            } else {
                qp.scale(&rat(r as i64))
            };
            total = total.add(&weighted);
        }
        for entry in &self.growing_entries {
            let weighted = if order == 0 {
                entry.count.clone()
            } else {
                entry
                    .count
                    .mul(&QuasiPolynomial::from_poly(entry.multiplicity.as_poly()))
            };
            total = total.add(&weighted);
        }
        total
    }

    fn t2_qp(&self) -> QuasiPolynomial {
        self.fixed_entries
            .get(&2)
            .cloned()
            .unwrap_or_else(QuasiPolynomial::zero)
    }

    /// The asymptotic linear Harbourne constant: the limit of
    /// `(lines - f_1)/f_0` along the family, computed as the ratio of the
    /// coefficients at the degree of `f_0`. Requires residue-independent
    /// leading coefficients.
    pub fn asymptotic_harbourne(&self) -> Result<Rational, FamilyError> {
        let f0 = self.moment_qp(0);
        let f1 = self.moment_qp(1);
        let num = self.line_count.sub(&f1);
        let den_degree = f0.degree().ok_or_else(|| {
            FamilyError::NoLimit("f_0 is identically zero: no singular points".into())
        })?;
        if den_degree < 1 {
            return Err(FamilyError::NoLimit(
                "f_0 is bounded; the family does not grow".into(),
            ));
        }
        if num.degree().unwrap_or(0) > den_degree {
            return Err(FamilyError::NoLimit(
                "lines - f_1 outgrows f_0; the ratio diverges".into(),
            ));
        }
        let den_lead = f0.uniform_coefficient(den_degree)?;
        let num_coeff = num.uniform_coefficient(den_degree)?;
        Ok(num_coeff / den_lead)
    }

    /// The six quadratic-in-`n` Chern coefficients as quasi-polynomials in
    /// the parameter: `(A', B', C')` for `c_1^2` and `(A, B, C)` for `c_2`.
    fn chern_coefficient_qps(&self) -> [QuasiPolynomial; 6] {
        let three = QuasiPolynomial::constant(rat(3));
        let nine = QuasiPolynomial::constant(rat(9));
        let kq = &self.line_count;
        let f0 = self.moment_qp(0);
        let f1 = self.moment_qp(1);
        let t2 = self.t2_qp();
        // c_2 = A n^2 + B n + C
        let a = three.sub(&kq.scale(&rat(2))).add(&f1).sub(&f0);
        let b = kq.sub(&f1).add(&f0).scale(&rat(2));
        let c = f1.sub(&t2);
        // c_1^2 = A' n^2 + B' n + C'
        let a1 = nine
            .sub(&kq.scale(&rat(5)))
            .add(&f1.scale(&rat(3)))
            .sub(&f0.scale(&rat(4)));
        let b1 = b.scale(&rat(2));
        let c1 = f1.sub(&f0).add(kq).add(&t2);
        [a1, b1, c1, a, b, c]
    }

    /// The limit of the Chern slope as the parameter grows, for each fixed
    /// order `n`: a rational function of `n` built from the quadratic-growth
    /// coefficients of the configuration-level Chern quadratics.
    pub fn k_chern_slope(&self) -> Result<RationalFunction, FamilyError> {
        if self.degree != 1 {
            return Err(FamilyError::NoLimit(
                "Chern slope limits are computed for line families".into(),
            ));
        }
        let qps = self.chern_coefficient_qps();
        for qp in &qps {
            if qp.degree().unwrap_or(0) > 2 {
                return Err(FamilyError::NoLimit(
                    "Chern coefficients grow faster than quadratically".into(),
                ));
            }
        }
        let lead: Vec<Rational> = qps
            .iter()
            .map(|qp| qp.uniform_coefficient(2))
            .collect::<Result<_, _>>()?;
        let num = Poly::from_coeffs(vec![lead[2].clone(), lead[1].clone(), lead[0].clone()]);
        let den = Poly::from_coeffs(vec![lead[5].clone(), lead[4].clone(), lead[3].clone()]);
        if den.is_zero() {
            return Err(FamilyError::NoLimit(
                "degenerate leading coefficients: c_2 has no quadratic growth".into(),
            ));
        }
        Ok(RationalFunction::new(num, den)?)
    }

    /// The joint limit of the Chern slope in the order and the parameter.
    /// Computed along both iterated routes, which must agree:
    /// first parameter then order (the order-infinity limit of
    /// [`Self::k_chern_slope`]), and first order then parameter (the ratio
    /// of the quadratic-growth coefficients of the two leading Chern
    /// coefficients).
    pub fn kn_chern_slope(&self) -> Result<Rational, FamilyError> {
        let slope = self.k_chern_slope()?;
        let n_then_k = slope.limit_at_infinity().ok_or_else(|| {
            FamilyError::NoLimit("the slope diverges with the order".into())
        })?;
        let qps = self.chern_coefficient_qps();
        let a1 = qps[0].uniform_coefficient(2)?;
        let a = qps[3].uniform_coefficient(2)?;
        if a.is_zero() {
            return Err(FamilyError::NoLimit(
                "degenerate leading coefficients: c_2 has no quadratic growth".into(),
            ));
        }
        let k_then_n = a1 / a;
        if n_then_k != k_then_n {
            return Err(FamilyError::NoLimit(format!(
                "iterated limits disagree: {n_then_k} vs {k_then_n}"
            )));
        }
        Ok(n_then_k)
    }
}
