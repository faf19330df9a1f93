//! Combinatorial data of a plane curve configuration.
//!
//! A configuration of `k` smooth degree-`d` curves meeting transversally is
//! described, up to the invariants computed here, by its multiplicity
//! spectrum: the map `r -> t_r` counting points that lie on exactly `r` of
//! the curves. Intersecting pairs of curves in the projective plane forces
//! the combinatorial identity
//!
//! ```text
//! d^2 (k^2 - k) = sum_{r >= 2} (r^2 - r) t_r
//! ```
//!
//! which `validate` checks; most operations in this crate only accept data
//! that passed it (the [`Validated`] wrapper).

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("degree must be at least 1")]
    InvalidDegree,
    #[error("curve count must be at least 1")]
    InvalidCount,
    #[error("multiplicity {0} is below 2")]
    MultiplicityTooSmall(u64),
    #[error("multiplicity {r} exceeds the curve count {k}")]
    MultiplicityExceedsCount { r: u64, k: u64 },
    #[error("moment index {0} is not in {{0, 1, 2}}")]
    InvalidMomentIndex(u32),
    #[error("spectrum key {0:?} is not a decimal multiplicity")]
    BadSpectrumKey(String),
    #[error("combinatorial identity fails: {0}")]
    IdentityFailed(ValidationReport),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarbourneError {
    #[error("linear Harbourne constant is defined for line configurations (degree 1), got degree {0}")]
    UnsupportedDegree(u32),
    #[error("configuration has no singular points")]
    NoSingularPoints,
}

/// Sparse multiplicity spectrum: `r -> t_r` with `r >= 2` and `t_r >= 1`
/// for every stored entry. Absent multiplicities have count zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiplicitySpectrum {
    entries: BTreeMap<u64, u64>,
}

impl MultiplicitySpectrum {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from `(multiplicity, count)` pairs. Zero counts are dropped,
    /// duplicate multiplicities are summed, multiplicities below 2 rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut entries = BTreeMap::new();
        for (r, t) in pairs {
            if t == 0 {
                continue;
            }
            if r < 2 {
                return Err(ConfigError::MultiplicityTooSmall(r));
            }
            *entries.entry(r).or_insert(0) += t;
        }
        Ok(MultiplicitySpectrum { entries })
    }

    pub fn count(&self, r: u64) -> u64 {
        self.entries.get(&r).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.entries.iter().map(|(&r, &t)| (r, t))
    }

    pub fn max_multiplicity(&self) -> Option<u64> {
        self.entries.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum r^i t_r` over the stored entries.
    pub fn moment(&self, i: u32) -> BigInt {
        self.entries
            .iter()
            .map(|(&r, &t)| BigInt::from(r).pow(i) * BigInt::from(t))
            .sum()
    }
}

impl fmt::Display for MultiplicitySpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, t)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "t_{r}={t}")?;
        }
        write!(f, "}}")
    }
}

/// A single configuration datum: `count` smooth curves of common `degree`
/// with the given multiplicity spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    degree: u32,
    count: u64,
    spectrum: MultiplicitySpectrum,
    label: Option<String>,
}

impl Configuration {
    pub fn new(
        degree: u32,
        count: u64,
        spectrum: MultiplicitySpectrum,
    ) -> Result<Self, ConfigError> {
        if degree < 1 {
            return Err(ConfigError::InvalidDegree);
        }
        if count < 1 {
            return Err(ConfigError::InvalidCount);
        }
        if let Some(r) = spectrum.max_multiplicity() {
            if r > count {
                return Err(ConfigError::MultiplicityExceedsCount { r, k: count });
            }
        }
        Ok(Configuration {
            degree,
            count,
            spectrum,
            label: None,
        })
    }

    /// Convenience constructor for line configurations (degree 1).
    pub fn lines<I>(count: u64, pairs: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        Configuration::new(1, count, MultiplicitySpectrum::from_pairs(pairs)?)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn spectrum(&self) -> &MultiplicitySpectrum {
        &self.spectrum
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn t(&self, r: u64) -> u64 {
        self.spectrum.count(r)
    }

    /// The moment `f_i = sum r^i t_r` for `i` in `{0, 1, 2}`.
    ///
    /// `f_0` counts singular points, `f_1` total incidences.
    pub fn f_moment(&self, i: u32) -> Result<BigInt, ConfigError> {
        if i > 2 {
            return Err(ConfigError::InvalidMomentIndex(i));
        }
        Ok(self.spectrum.moment(i))
    }

    pub fn f0(&self) -> BigInt {
        self.spectrum.moment(0)
    }

    pub fn f1(&self) -> BigInt {
        self.spectrum.moment(1)
    }

    pub fn f2(&self) -> BigInt {
        self.spectrum.moment(2)
    }

    /// Checks the combinatorial identity `d^2(k^2 - k) = sum (r^2 - r) t_r`.
    /// Failures are reported, not thrown.
    pub fn validate(&self) -> ValidationReport {
        let d = BigInt::from(self.degree);
        let k = BigInt::from(self.count);
        let lhs = &d * &d * (&k * &k - &k);
        let rhs: BigInt = self
            .spectrum
            .iter()
            .map(|(r, t)| {
                let r = BigInt::from(r);
                (&r * &r - &r) * BigInt::from(t)
            })
            .sum();
        let passes = lhs == rhs;
        // For lines the identity is equivalent to k^2 - k = f_2 - f_1.
        let line_form = (self.degree == 1).then(|| {
            let lhs = &k * &k - &k;
            let rhs = self.f2() - self.f1();
            let passes = lhs == rhs;
            SideBySide { lhs, rhs, passes }
        });
        ValidationReport {
            lhs,
            rhs,
            passes,
            line_form,
        }
    }

    /// Promotes to the validated form, or reports the failing identity.
    pub fn validated(self) -> Result<Validated, ConfigError> {
        let report = self.validate();
        if report.passes {
            Ok(Validated(self))
        } else {
            Err(ConfigError::IdentityFailed(report))
        }
    }

    /// Canonical fingerprint of the combinatorial data (label excluded).
    pub fn digest(&self) -> String {
        format!(
            "d{}k{}{}",
            self.degree,
            self.count,
            self.spectrum
        )
    }
}

/// Both sides of an equality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideBySide {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub passes: bool,
}

/// Outcome of the combinatorial identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub passes: bool,
    /// The equivalent `k^2 - k = f_2 - f_1` form, present for degree 1.
    pub line_form: Option<SideBySide>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d^2(k^2-k) = {} vs sum (r^2-r) t_r = {} [{}]",
            self.lhs,
            self.rhs,
            if self.passes { "ok" } else { "FAIL" }
        )
    }
}

/// A configuration that passed [`Configuration::validate`]. Operations with
/// mathematical content require this form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validated(Configuration);

impl Validated {
    pub fn into_inner(self) -> Configuration {
        self.0
    }

    pub fn as_config(&self) -> &Configuration {
        &self.0
    }
}

impl Deref for Validated {
    type Target = Configuration;
    fn deref(&self) -> &Configuration {
        &self.0
    }
}

impl TryFrom<Configuration> for Validated {
    type Error = ConfigError;
    fn try_from(cfg: Configuration) -> Result<Self, ConfigError> {
        cfg.validated()
    }
}

/// The linear Harbourne constant `(k^2 - f_2)/f_0` of a line configuration:
/// the normalized self-intersection of the strict transform after blowing up
/// all singular points. Equals `(k - f_1)/f_0` by the combinatorial identity.
pub fn linear_harbourne(cfg: &Validated) -> Result<Rational, HarbourneError> {
    if cfg.degree() != 1 {
        return Err(HarbourneError::UnsupportedDegree(cfg.degree()));
    }
    let f0 = cfg.f0();
    if f0.is_zero() {
        return Err(HarbourneError::NoSingularPoints);
    }
    let k = BigInt::from(cfg.count());
    let value = Rational::new(&k * &k - cfg.f2(), f0.clone());
    debug_assert_eq!(value, Rational::new(&k - cfg.f1(), f0));
    Ok(value)
}

/// Interchange form of a configuration: spectrum keys are decimal strings of
/// the multiplicities.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigurationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: u32,
    pub count: u64,
    pub spectrum: BTreeMap<String, u64>,
}

impl From<&Configuration> for ConfigurationJson {
    fn from(cfg: &Configuration) -> Self {
        ConfigurationJson {
            label: cfg.label.clone(),
            degree: cfg.degree,
            count: cfg.count,
            spectrum: cfg
                .spectrum
                .iter()
                .map(|(r, t)| (r.to_string(), t))
                .collect(),
        }
    }
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = ConfigError;
    fn try_from(json: ConfigurationJson) -> Result<Self, ConfigError> {
        let mut pairs = Vec::with_capacity(json.spectrum.len());
        for (key, t) in &json.spectrum {
            let r: u64 = key
                .trim()
                .parse()
                .map_err(|_| ConfigError::BadSpectrumKey(key.clone()))?;
            pairs.push((r, *t));
        }
        let mut cfg = Configuration::new(
            json.degree,
            json.count,
            MultiplicitySpectrum::from_pairs(pairs)?,
        )?;
        cfg.label = json.label;
        Ok(cfg)
    }
}

impl Configuration {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&ConfigurationJson::from(self)).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, String> {
        let json: ConfigurationJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        Configuration::try_from(json).map_err(|e| e.to_string())
    }
}
