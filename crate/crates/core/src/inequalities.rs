//! Verdict-producing checkers for the classical incidence inequalities.
//!
//! Every checker computes both sides exactly and reports, rather than
//! throws, when an inequality fails: the theorems hold for configurations
//! realizable over the stated field, so a failing verdict on abstract data
//! is evidence of non-realizability (the Klein configuration fails
//! Melchior's inequality precisely because it has no real model).

use crate::chern::{ChernPair, chern_pair, characteristic_number};
use crate::config::Validated;
use crate::rational::{Rational, frac, rat, rat_big};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InequalityError {
    #[error("checker handles degree {expected}, got degree {got}; use `{suggestion}` instead")]
    WrongChecker {
        expected: &'static str,
        got: u32,
        suggestion: &'static str,
    },
}

/// Direction of the comparison a verdict certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `lhs >= rhs`; slack is `lhs - rhs`, holds iff slack >= 0.
    GreaterEq,
    /// `lhs < rhs` (strict); holds iff slack < 0.
    StrictLess,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::GreaterEq => ">=",
            Relation::StrictLess => "<",
        }
    }
}

/// Exact outcome of one inequality check. `holds` is `None` when the
/// hypotheses of the underlying theorem are not met, in which case the
/// verdict makes no claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub relation: Relation,
    pub slack: Rational,
    pub holds: Option<bool>,
    pub preconditions_met: bool,
    pub precondition_notes: Vec<String>,
    /// Field over which realizability makes the verdict meaningful.
    pub realizability: &'static str,
}

impl InequalityVerdict {
    fn decide(
        name: &'static str,
        lhs: Rational,
        rhs: Rational,
        relation: Relation,
        notes: Vec<String>,
        realizability: &'static str,
    ) -> Self {
        let slack = &lhs - &rhs;
        let preconditions_met = notes.is_empty();
        let holds = preconditions_met.then(|| match relation {
            Relation::GreaterEq => !slack.is_negative(),
            Relation::StrictLess => slack.is_negative(),
        });
        InequalityVerdict {
            name,
            lhs,
            rhs,
            relation,
            slack,
            holds,
            preconditions_met,
            precondition_notes: notes,
            realizability,
        }
    }
}

fn big(v: BigInt) -> Rational {
    rat_big(v)
}

/// `sum_{r >= from} (r - sub) * t_r`.
fn weighted_tail(cfg: &Validated, from: u64, sub: u64) -> Rational {
    let sum: BigInt = cfg
        .spectrum()
        .iter()
        .filter(|&(r, _)| r >= from)
        .map(|(r, t)| (BigInt::from(r) - BigInt::from(sub)) * BigInt::from(t))
        .sum();
    big(sum)
}

/// Hirzebruch's inequality for complex line configurations:
/// `t_2 + 3/4 t_3 >= k + sum_{r >= 5} (r - 4) t_r`,
/// valid for `k >= 4` lines with `t_k = t_{k-1} = 0`.
pub fn hirzebruch_lines(cfg: &Validated) -> InequalityVerdict {
    let k = cfg.count();
    let mut notes = Vec::new();
    if cfg.degree() != 1 {
        notes.push(format!("needs lines (degree 1), got degree {}", cfg.degree()));
    }
    if k < 4 {
        notes.push(format!("needs at least 4 lines, got {k}"));
    }
    if cfg.t(k) != 0 || (k >= 1 && cfg.t(k - 1) != 0) {
        notes.push("needs t_k = t_{k-1} = 0".to_string());
    }
    let lhs = rat(cfg.t(2) as i64) + frac(3, 4) * rat(cfg.t(3) as i64);
    let rhs = rat(k as i64) + weighted_tail(cfg, 5, 4);
    InequalityVerdict::decide(
        "hirzebruch_lines",
        lhs,
        rhs,
        Relation::GreaterEq,
        notes,
        "complex",
    )
}

/// Melchior's inequality for real line configurations:
/// `t_2 >= 3 + sum_{r >= 4} (r - 3) t_r`,
/// valid for `k >= 3` lines with `t_k = 0`. A failure certifies that the
/// datum has no realization over the reals.
pub fn melchior(cfg: &Validated) -> InequalityVerdict {
    let k = cfg.count();
    let mut notes = Vec::new();
    if cfg.degree() != 1 {
        notes.push(format!("needs lines (degree 1), got degree {}", cfg.degree()));
    }
    if k < 3 {
        notes.push(format!("needs at least 3 lines, got {k}"));
    }
    if cfg.t(k) != 0 {
        notes.push("needs t_k = 0".to_string());
    }
    let lhs = rat(cfg.t(2) as i64);
    let rhs = rat(3) + weighted_tail(cfg, 4, 3);
    InequalityVerdict::decide("melchior", lhs, rhs, Relation::GreaterEq, notes, "real")
}

/// The Hirzebruch-type inequality for configurations of smooth degree-`d`
/// curves with `d >= 3`:
/// `(7/2 d^2 - 9/2 d) k + t_2 + t_3 >= sum_{r >= 4} (r - 4) t_r`.
pub fn hirzebruch_dconfig(cfg: &Validated) -> Result<InequalityVerdict, InequalityError> {
    let d = cfg.degree();
    if d < 3 {
        return Err(InequalityError::WrongChecker {
            expected: "d >= 3",
            got: d,
            suggestion: if d == 2 { "tang_conics" } else { "hirzebruch_lines" },
        });
    }
    let mut notes = Vec::new();
    let k = cfg.count();
    if k < 4 {
        notes.push(format!("needs at least 4 curves, got {k}"));
    }
    if cfg.t(k) != 0 {
        notes.push("needs t_k = 0".to_string());
    }
    let dr = rat(d as i64);
    let coeff = frac(7, 2) * &dr * &dr - frac(9, 2) * &dr;
    let lhs = coeff * rat(k as i64) + rat(cfg.t(2) as i64) + rat(cfg.t(3) as i64);
    let rhs = weighted_tail(cfg, 4, 4);
    Ok(InequalityVerdict::decide(
        "hirzebruch_dconfig",
        lhs,
        rhs,
        Relation::GreaterEq,
        notes,
        "complex",
    ))
}

/// Tang's inequality for configurations of smooth conics:
/// `5k + t_2 + t_3 >= sum_{r >= 4} (r - 4) t_r`.
pub fn tang_conics(cfg: &Validated) -> Result<InequalityVerdict, InequalityError> {
    let d = cfg.degree();
    if d != 2 {
        return Err(InequalityError::WrongChecker {
            expected: "d = 2",
            got: d,
            suggestion: if d == 1 { "hirzebruch_lines" } else { "hirzebruch_dconfig" },
        });
    }
    let mut notes = Vec::new();
    let k = cfg.count();
    if k < 4 {
        notes.push(format!("needs at least 4 curves, got {k}"));
    }
    if cfg.t(k) != 0 {
        notes.push("needs t_k = 0".to_string());
    }
    let lhs = rat(5) * rat(k as i64) + rat(cfg.t(2) as i64) + rat(cfg.t(3) as i64);
    let rhs = weighted_tail(cfg, 4, 4);
    Ok(InequalityVerdict::decide(
        "tang_conics",
        lhs,
        rhs,
        Relation::GreaterEq,
        notes,
        "complex",
    ))
}

/// Strict bound on the characteristic number of a configuration of smooth
/// curves of degree `d >= 2`: `gamma < 8/3`, conditional on the applicable
/// degree inequality holding and on `c_2` having positive leading
/// coefficient. For lines the sharp bound `8/3` is attained (dual Hesse),
/// so no strict claim is made there.
pub fn gamma_bound(cfg: &Validated) -> InequalityVerdict {
    let mut notes = Vec::new();
    let d = cfg.degree();
    if d < 2 {
        notes.push("needs degree >= 2 (for lines the bound 8/3 is attained)".to_string());
    } else {
        let applicable = if d == 2 {
            tang_conics(cfg).expect("degree checked")
        } else {
            hirzebruch_dconfig(cfg).expect("degree checked")
        };
        match applicable.holds {
            Some(true) => {}
            Some(false) => notes.push(format!(
                "{} fails on this datum; the bound is conditional on it",
                applicable.name
            )),
            None => {
                notes.push(format!(
                    "{} makes no claim: {}",
                    applicable.name,
                    applicable.precondition_notes.join("; ")
                ));
            }
        }
    }
    let gamma = chern_pair(cfg)
        .ok()
        .and_then(|pair: ChernPair| characteristic_number(&pair).ok());
    let lhs = match gamma {
        Some(g) => g,
        None => {
            notes.push("characteristic number undefined (c_2 leading coefficient not positive or cover undefined)".to_string());
            Rational::zero()
        }
    };
    InequalityVerdict::decide(
        "gamma_bound",
        lhs,
        frac(8, 3),
        Relation::StrictLess,
        notes,
        "complex",
    )
}
