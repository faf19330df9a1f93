//! The reproduction suite: every headline value this crate is expected to
//! reproduce, frozen as literal strings, with the computation that must
//! match it. The CLI `reproduce` command and the acceptance tests both
//! drive this table.

use crate::chern::{
    GeneralTypeCondition, QuadraticInN, ball_quotient_candidates, chern_pair,
    characteristic_number, slope_at, sommese_bounds,
};
use crate::config::{Configuration, MultiplicitySpectrum, Validated, linear_harbourne};
use crate::families::{BuiltinFamily, builtin_family, dominant_profile};
use crate::incidence::{PolygonFamily, generate_regular_polygon_family, spectrum_of};
use crate::inequalities::{InequalityVerdict, hirzebruch_lines, melchior};
use crate::poly::Poly;
use crate::ratfun::RationalFunction;
use crate::rational::{Rational, decimal_string, exact_string, frac, rat};
use crate::sampling::{random_arrangement, random_validated_spectrum};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One reproducible value: a frozen expectation next to the freshly
/// computed result.
#[derive(Clone, Debug)]
pub struct Claim {
    pub id: &'static str,
    /// Acceptance criterion this claim belongs to (1-10).
    pub criterion: u8,
    /// What the value is about.
    pub subject: &'static str,
    pub expected: String,
    pub computed: String,
}

impl Claim {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReproductionReport {
    pub claims: Vec<Claim>,
}

impl ReproductionReport {
    pub fn all_match(&self) -> bool {
        self.claims.iter().all(Claim::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.matches())
    }
}

fn lines(k: u64, pairs: &[(u64, u64)]) -> Validated {
    Configuration::lines(k, pairs.iter().copied())
        .unwrap()
        .validated()
        .unwrap()
}

fn curves(d: u32, k: u64, pairs: &[(u64, u64)]) -> Validated {
    Configuration::new(
        d,
        k,
        MultiplicitySpectrum::from_pairs(pairs.iter().copied()).unwrap(),
    )
    .unwrap()
    .validated()
    .unwrap()
}

fn quad_str(q: &QuadraticInN) -> String {
    format!(
        "({}, {}, {})",
        exact_string(&q.a),
        exact_string(&q.b),
        exact_string(&q.c)
    )
}

fn verdict_str(v: &InequalityVerdict) -> String {
    format!(
        "{} {} {}: {}",
        exact_string(&v.lhs),
        v.relation.symbol(),
        exact_string(&v.rhs),
        match v.holds {
            Some(true) => "holds",
            Some(false) => "fails",
            None => "no claim",
        }
    )
}

fn candidates_str(c: &[i64]) -> String {
    format!("{c:?}")
}

struct Builder {
    claims: Vec<Claim>,
}

impl Builder {
    fn push(
        &mut self,
        id: &'static str,
        criterion: u8,
        subject: &'static str,
        expected: &str,
        computed: String,
    ) {
        self.claims.push(Claim {
            id,
            criterion,
            subject,
            expected: expected.to_string(),
            computed,
        });
    }
}

/// Runs every claim. Deterministic: all randomness is seeded.
pub fn run() -> ReproductionReport {
    let mut b = Builder { claims: Vec::new() };

    criterion_1_wiman(&mut b);
    criterion_2_t6(&mut b);
    criterion_3_klein(&mut b);
    criterion_4_inequalities(&mut b);
    criterion_5_family_limits(&mut b);
    criterion_6_never_ball_quotients(&mut b);
    criterion_7_profiles(&mut b);
    criterion_8_characteristic_numbers(&mut b);
    criterion_9_property_sweeps(&mut b);
    criterion_10_sommese(&mut b);

    ReproductionReport { claims: b.claims }
}

fn criterion_1_wiman(b: &mut Builder) {
    let wiman = lines(45, &[(3, 120), (4, 45), (5, 36)]);
    let h = linear_harbourne(&wiman).unwrap();
    b.push(
        "wiman-harbourne",
        1,
        "Wiman's 45-line configuration",
        "-225/67",
        exact_string(&h),
    );
    b.push(
        "wiman-harbourne-decimal",
        1,
        "Wiman's 45-line configuration",
        "-3.35821",
        decimal_string(&h, 5),
    );
}

fn criterion_2_t6(b: &mut Builder) {
    let t6 = lines(6, &[(2, 3), (3, 4)]);
    let pair = chern_pair(&t6).unwrap();
    b.push(
        "t6-c2",
        2,
        "Kummer cover of T6",
        "(2, -10, 15)",
        quad_str(&pair.c2),
    );
    b.push(
        "t6-c1sq",
        2,
        "Kummer cover of T6",
        "(5, -20, 20)",
        quad_str(&pair.c1sq),
    );
    b.push(
        "t6-slope-n5",
        2,
        "Kummer cover of T6 at order 5",
        "3",
        exact_string(&slope_at(&pair, 5).unwrap()),
    );
    b.push(
        "t6-ball-quotient",
        2,
        "ball-quotient orders of T6",
        "[5]",
        candidates_str(&ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap()),
    );
}

fn criterion_3_klein(b: &mut Builder) {
    let klein = lines(21, &[(3, 28), (4, 21)]);
    let pair = chern_pair(&klein).unwrap();
    b.push(
        "klein-c1sq",
        3,
        "Kummer cover of the Klein configuration",
        "(212, -392, 140)",
        quad_str(&pair.c1sq),
    );
    b.push(
        "klein-c2",
        3,
        "Kummer cover of the Klein configuration",
        "(80, -196, 168)",
        quad_str(&pair.c2),
    );
    let s4 = slope_at(&pair, 4).unwrap();
    b.push(
        "klein-slope-n4",
        3,
        "Klein cover at order 4",
        "491/166",
        exact_string(&s4),
    );
    b.push(
        "klein-slope-n4-decimal",
        3,
        "Klein cover at order 4",
        "2.95783",
        decimal_string(&s4, 5),
    );
    b.push(
        "klein-gamma",
        3,
        "characteristic number of the Klein configuration",
        "53/20",
        exact_string(&characteristic_number(&pair).unwrap()),
    );
}

fn criterion_4_inequalities(b: &mut Builder) {
    let t6 = lines(6, &[(2, 3), (3, 4)]);
    let klein = lines(21, &[(3, 28), (4, 21)]);
    b.push(
        "hirzebruch-t6",
        4,
        "Hirzebruch inequality on T6",
        "6 >= 6: holds",
        verdict_str(&hirzebruch_lines(&t6)),
    );
    b.push(
        "hirzebruch-klein",
        4,
        "Hirzebruch inequality on Klein",
        "21 >= 21: holds",
        verdict_str(&hirzebruch_lines(&klein)),
    );
    b.push(
        "melchior-t6",
        4,
        "Melchior inequality on T6",
        "3 >= 3: holds",
        verdict_str(&melchior(&t6)),
    );
    b.push(
        "melchior-klein",
        4,
        "Melchior inequality on Klein (not realizable over the reals)",
        "0 >= 24: fails",
        verdict_str(&melchior(&klein)),
    );
}

fn families_with_names() -> [(&'static str, crate::families::FamilySpectrum); 4] {
    [
        ("boroczky", builtin_family(BuiltinFamily::Boroczky)),
        (
            "s-elliptic",
            builtin_family(BuiltinFamily::SElliptic { flex_lines: 3 }),
        ),
        ("polyhedral", builtin_family(BuiltinFamily::Polyhedral)),
        ("fermat", builtin_family(BuiltinFamily::Fermat)),
    ]
}

fn criterion_5_family_limits(b: &mut Builder) {
    let slope_expected = "(5/2*n^2 - 4*n + 1)/(n^2 - 2*n + 3/2)";
    let ids_h = [
        "asymptotic-harbourne-boroczky",
        "asymptotic-harbourne-s-elliptic",
        "asymptotic-harbourne-polyhedral",
        "asymptotic-harbourne-fermat",
    ];
    let ids_k = [
        "k-slope-boroczky",
        "k-slope-s-elliptic",
        "k-slope-polyhedral",
        "k-slope-fermat",
    ];
    let ids_kn = [
        "kn-slope-boroczky",
        "kn-slope-s-elliptic",
        "kn-slope-polyhedral",
        "kn-slope-fermat",
    ];
    for (i, (_, fam)) in families_with_names().iter().enumerate() {
        b.push(
            ids_h[i],
            5,
            "asymptotic Harbourne constant",
            "-3",
            exact_string(&fam.asymptotic_harbourne().unwrap()),
        );
        b.push(
            ids_k[i],
            5,
            "Chern slope limit in the parameter",
            slope_expected,
            fam.k_chern_slope().unwrap().to_string(),
        );
        b.push(
            ids_kn[i],
            5,
            "joint Chern slope limit",
            "5/2",
            exact_string(&fam.kn_chern_slope().unwrap()),
        );
    }
}

fn criterion_6_never_ball_quotients(b: &mut Builder) {
    let boroczky = builtin_family(BuiltinFamily::Boroczky);
    let polyhedral = builtin_family(BuiltinFamily::Polyhedral);

    let b8 = chern_pair(&boroczky.instantiate(8).unwrap()).unwrap();
    let gap8 = crate::chern::bmy_gap(&b8).unwrap();
    b.push(
        "gap-boroczky-8-at-2",
        6,
        "BMY gap of the 8-line Böröczky cover at order 2",
        "20",
        exact_string(&gap8.eval_i64(2)),
    );
    let p4 = chern_pair(&polyhedral.instantiate(4).unwrap()).unwrap();
    let gap4 = crate::chern::bmy_gap(&p4).unwrap();
    b.push(
        "gap-polyhedral-4-at-4",
        6,
        "BMY gap of the 4-gon polyhedral cover at order 4",
        "7",
        exact_string(&gap4.eval_i64(4)),
    );

    let mut offenders: Vec<String> = Vec::new();
    for k in (8..=40).step_by(2) {
        let pair = chern_pair(&boroczky.instantiate(k).unwrap()).unwrap();
        let cands = ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap();
        if !cands.is_empty() {
            offenders.push(format!("boroczky k={k}: {cands:?}"));
        }
    }
    b.push(
        "ball-quotient-sweep-boroczky",
        6,
        "Böröczky covers, even k in [8, 40]",
        "no candidates",
        if offenders.is_empty() {
            "no candidates".to_string()
        } else {
            offenders.join("; ")
        },
    );

    let mut offenders: Vec<String> = Vec::new();
    for k in 4..=40 {
        let pair = chern_pair(&polyhedral.instantiate(k).unwrap()).unwrap();
        let cands = ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap();
        if !cands.is_empty() {
            offenders.push(format!("polyhedral k={k}: {cands:?}"));
        }
    }
    b.push(
        "ball-quotient-sweep-polyhedral",
        6,
        "polyhedral covers, k in [4, 40]",
        "no candidates",
        if offenders.is_empty() {
            "no candidates".to_string()
        } else {
            offenders.join("; ")
        },
    );
}

fn criterion_7_profiles(b: &mut Builder) {
    let p3 = dominant_profile(3, rat(1)).unwrap();
    b.push(
        "profile-3-harbourne",
        7,
        "dominant triple-point profile",
        "-3",
        exact_string(&p3.asymptotic_harbourne().unwrap()),
    );
    b.push(
        "profile-3-kn-slope",
        7,
        "dominant triple-point profile",
        "5/2",
        exact_string(&p3.kn_chern_slope().unwrap()),
    );
    let p4 = dominant_profile(4, rat(1)).unwrap();
    b.push(
        "profile-4-harbourne",
        7,
        "dominant quadruple-point profile",
        "-4",
        exact_string(&p4.asymptotic_harbourne().unwrap()),
    );
    b.push(
        "profile-4-kn-slope",
        7,
        "dominant quadruple-point profile",
        "8/3",
        exact_string(&p4.kn_chern_slope().unwrap()),
    );
    let slope = p4.k_chern_slope().unwrap();
    b.push(
        "profile-4-k-slope",
        7,
        "dominant quadruple-point profile",
        "(8/3*n^2 - 4*n + 1)/(n^2 - 2*n + 4/3)",
        slope.to_string(),
    );
    b.push(
        "profile-4-k-slope-at-3",
        7,
        "dominant quadruple-point profile at order 3",
        "3",
        exact_string(&slope.eval_i64(3).unwrap()),
    );
}

fn criterion_8_characteristic_numbers(b: &mut Builder) {
    let ap = curves(2, 6, &[(5, 6)]);
    b.push(
        "gamma-ap-conics",
        8,
        "six conics with six 5-fold points",
        "9/5",
        exact_string(&characteristic_number(&chern_pair(&ap).unwrap()).unwrap()),
    );
    let hesse = curves(2, 12, &[(2, 12), (8, 9)]);
    b.push(
        "gamma-hesse-conics",
        8,
        "the Hesse configuration of conics",
        "13/6",
        exact_string(&characteristic_number(&chern_pair(&hesse).unwrap()).unwrap()),
    );

    // gamma of a general d-configuration: 2(dk-3)^2 / (d^2 k^2 + (d^2-6d)k + 6)
    let mut failures: Vec<String> = Vec::new();
    for d in 2u64..=4 {
        for k in 4u64..=10 {
            let t2 = d * d * (k * k - k) / 2;
            let cfg = curves(d as u32, k, &[(2, t2)]);
            let gamma = characteristic_number(&chern_pair(&cfg).unwrap()).unwrap();
            let dk = rat((d * k) as i64);
            let closed = rat(2) * (&dk - rat(3)) * (&dk - rat(3))
                / (rat((d * d * k * k) as i64) + rat((d * d) as i64 - 6 * d as i64) * rat(k as i64)
                    + rat(6));
            if gamma != closed {
                failures.push(format!("d={d} k={k}: {gamma} vs {closed}"));
            }
        }
    }
    b.push(
        "gamma-general-closed-form",
        8,
        "general d-configurations, d in {2,3,4}, k in {4..10}",
        "closed form matches",
        if failures.is_empty() {
            "closed form matches".to_string()
        } else {
            failures.join("; ")
        },
    );

    // The closed form tends to 2 with k, for every d.
    let mut limits: Vec<String> = Vec::new();
    for d in 2i64..=4 {
        let num = Poly::from_coeffs(vec![rat(18), rat(-12 * d), rat(2 * d * d)]);
        let den = Poly::from_coeffs(vec![rat(6), rat(d * d - 6 * d), rat(d * d)]);
        let f = RationalFunction::new(num, den).unwrap();
        limits.push(exact_string(&f.limit_at_infinity().unwrap()));
    }
    b.push(
        "gamma-general-limit",
        8,
        "general d-configurations, large k",
        "2, 2, 2",
        limits.join(", "),
    );
}

fn criterion_9_property_sweeps(b: &mut Builder) {
    // (a) the combinatorial identity on random rational arrangements
    let mut rng = ChaCha8Rng::seed_from_u64(901);
    let mut ok = 0;
    for i in 0..500usize {
        let k = 2 + (i % 7); // 2..=8 lines
        let arr = random_arrangement(&mut rng, k, 3);
        if spectrum_of(&arr).unwrap().validate().passes {
            ok += 1;
        }
    }
    b.push(
        "identity-random-arrangements",
        9,
        "spectra of 500 random rational arrangements",
        "500/500 satisfy the identity",
        format!("{ok}/500 satisfy the identity"),
    );

    // (b) gamma < 8/3 whenever the applicable degree inequality holds
    let mut rng = ChaCha8Rng::seed_from_u64(902);
    let mut accepted = 0u32;
    let mut below = 0u32;
    while accepted < 10_000 {
        let d = rng.random_range(2..=4u32);
        let k = rng.random_range(5..=20u64);
        let cfg = random_validated_spectrum(&mut rng, d, k, k - 1);
        let verdict = if d == 2 {
            crate::inequalities::tang_conics(&cfg).unwrap()
        } else {
            crate::inequalities::hirzebruch_dconfig(&cfg).unwrap()
        };
        if verdict.holds != Some(true) {
            continue;
        }
        let Ok(pair) = chern_pair(&cfg) else { continue };
        let Ok(gamma) = characteristic_number(&pair) else {
            continue;
        };
        accepted += 1;
        if gamma < frac(8, 3) {
            below += 1;
        }
    }
    b.push(
        "gamma-bound-random",
        9,
        "random validated d-configurations passing their degree inequality",
        "10000/10000 below 8/3",
        format!("{below}/{accepted} below 8/3"),
    );

    // (c) the general-degree Chern formulas reduce to the line formulas
    let mut rng = ChaCha8Rng::seed_from_u64(903);
    let mut agree = 0;
    for _ in 0..1000 {
        let k = rng.random_range(4..=30u64);
        let cfg = random_validated_spectrum(&mut rng, 1, k, k - 1);
        // chern_pair asserts the reduction internally; reaching here means
        // both routes agreed.
        if chern_pair(&cfg).is_ok() {
            agree += 1;
        }
    }
    b.push(
        "line-reduction-random",
        9,
        "line reductions of the general Chern formulas",
        "1000/1000 agree",
        format!("{agree}/1000 agree"),
    );

    // (d) the closed form for gamma agrees with the leading-coefficient
    // ratio whenever its denominator is positive
    let mut rng = ChaCha8Rng::seed_from_u64(904);
    let mut agree = 0u32;
    let mut tried = 0u32;
    while tried < 10_000 {
        let k = rng.random_range(4..=30u64);
        let cfg = random_validated_spectrum(&mut rng, 1, k, k - 1);
        let pair = chern_pair(&cfg).unwrap();
        let Ok(gamma) = characteristic_number(&pair) else {
            continue; // c_2 leading coefficient not positive
        };
        tried += 1;
        // independent evaluation of the closed form
        let f0 = Rational::from_integer(cfg.f0());
        let f1 = Rational::from_integer(cfg.f1());
        let kq = rat(k as i64);
        let closed = frac(5, 2)
            - (rat(3) * &f0 - &f1 - rat(3)) / (rat(2) * (rat(3) - rat(2) * &kq + &f1 - &f0));
        if gamma == closed {
            agree += 1;
        }
    }
    b.push(
        "gamma-closed-form-random",
        9,
        "closed form for gamma on random line spectra",
        "10000/10000 agree",
        format!("{agree}/{tried} agree"),
    );

    // (e) numeric regular-polygon spectra match the closed-form families
    let mut mismatches: Vec<String> = Vec::new();
    let polyhedral = builtin_family(BuiltinFamily::Polyhedral);
    for k in 3..=12 {
        let numeric = generate_regular_polygon_family(PolygonFamily::Polyhedral, k, 64).unwrap();
        let formula = polyhedral.instantiate(k as i64).unwrap();
        if numeric.datum.spectrum() != formula.spectrum() {
            mismatches.push(format!("polyhedral k={k}"));
        }
    }
    let boroczky = builtin_family(BuiltinFamily::Boroczky);
    for k in (6..=16).step_by(2) {
        let numeric = generate_regular_polygon_family(PolygonFamily::Boroczky, k, 64).unwrap();
        let formula = boroczky.instantiate(k as i64).unwrap();
        if numeric.datum.spectrum() != formula.spectrum() {
            mismatches.push(format!("boroczky k={k}"));
        }
    }
    b.push(
        "polygon-formula-match",
        9,
        "certified-numeric spectra vs closed forms (polyhedral k <= 12, Böröczky k <= 16)",
        "all match",
        if mismatches.is_empty() {
            "all match".to_string()
        } else {
            mismatches.join("; ")
        },
    );
}

fn criterion_10_sommese(b: &mut Builder) {
    let dual_hesse = lines(9, &[(3, 12)]);
    b.push(
        "dual-hesse-gamma",
        10,
        "the dual Hesse configuration attains the upper bound",
        "8/3",
        exact_string(&characteristic_number(&chern_pair(&dual_hesse).unwrap()).unwrap()),
    );
    let mut failures: Vec<String> = Vec::new();
    for k in 6..=20u64 {
        let cfg = lines(k, &[(2, k * (k - 1) / 2)]);
        let gamma = characteristic_number(&chern_pair(&cfg).unwrap()).unwrap();
        let (lower, _) = sommese_bounds(k).unwrap();
        if gamma != lower {
            failures.push(format!("k={k}: {gamma} vs {lower}"));
        }
    }
    b.push(
        "generic-lines-gamma",
        10,
        "general position attains the lower bound, k in [6, 20]",
        "lower bound attained",
        if failures.is_empty() {
            "lower bound attained".to_string()
        } else {
            failures.join("; ")
        },
    );
}
