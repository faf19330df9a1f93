//! Exact invariants of curve configurations in the projective plane.
//!
//! The input everywhere is the combinatorial datum of a configuration of
//! `k` smooth plane curves of common degree `d` meeting transversally: its
//! multiplicity spectrum `r -> t_r`. From that this crate computes, in exact
//! rational arithmetic,
//!
//! - moments and the combinatorial identity check ([`config`]),
//! - linear Harbourne constants ([`config::linear_harbourne`]),
//! - multiplicity spectra of explicit rational line arrangements, plus
//!   certified-numeric generators for the classical regular-polygon families
//!   ([`incidence`]),
//! - the named extremal line families with quasi-polynomial spectra and
//!   their asymptotic invariants ([`families`]),
//! - Chern numbers of Kummer covers, Chern slopes, characteristic numbers,
//!   the Bogomolov-Miyaoka-Yau gap and exact ball-quotient detection
//!   ([`chern`]),
//! - the classical incidence inequalities as exact verdicts
//!   ([`inequalities`]),
//! - and a frozen reproduction suite tying the above to their published
//!   values ([`reproduce`]).
//!
//! No floating point is used anywhere: quantities are arbitrary-precision
//! rationals, quasi-polynomials with rational coefficients, or rational
//! intervals (for the trigonometric generators, which certify distinctness
//! and flag clustered spectra as presumed).
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared and sent across threads freely.

pub mod chern;
pub mod config;
pub mod families;
pub mod incidence;
pub mod inequalities;
pub mod poly;
pub mod quasipoly;
pub mod ratfun;
pub mod rational;
pub mod reproduce;
pub mod sampling;

pub use chern::{ChernPair, GeneralTypeCondition, QuadraticInN};
pub use config::{Configuration, ConfigurationJson, MultiplicitySpectrum, Validated};
pub use families::{BuiltinFamily, FamilySpectrum};
pub use incidence::{LineArrangement, ProjLine, ProjPoint};
pub use inequalities::InequalityVerdict;
pub use quasipoly::QuasiPolynomial;
pub use ratfun::RationalFunction;
pub use rational::Rational;
