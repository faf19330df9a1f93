//! Acceptance suite: the headline values, frozen, one test per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! PASS/FAIL line per criterion.

use curveconf::chern::{
    GeneralTypeCondition, QuadraticInN, ball_quotient_candidates, bmy_gap, characteristic_number,
    chern_pair, slope_at, sommese_bounds,
};
use curveconf::config::{Configuration, MultiplicitySpectrum, Validated, linear_harbourne};
use curveconf::families::{BuiltinFamily, builtin_family, dominant_profile};
use curveconf::incidence::{PolygonFamily, generate_regular_polygon_family, spectrum_of};
use curveconf::inequalities::{hirzebruch_dconfig, hirzebruch_lines, melchior, tang_conics};
use curveconf::poly::Poly;
use curveconf::ratfun::RationalFunction;
use curveconf::rational::{decimal_string, frac, rat, rat_big};
use curveconf::sampling::{random_arrangement, random_validated_spectrum};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(number: u32, summary: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(body) {
        Ok(()) => println!("criterion {number:02}: PASS - {summary}"),
        Err(cause) => {
            println!("criterion {number:02}: FAIL - {summary}");
            std::panic::resume_unwind(cause);
        }
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

fn t6() -> Validated {
    lines(6, &[(2, 3), (3, 4)])
}

fn klein() -> Validated {
    lines(21, &[(3, 28), (4, 21)])
}

fn all_families() -> [curveconf::FamilySpectrum; 4] {
    [
        builtin_family(BuiltinFamily::Boroczky),
        builtin_family(BuiltinFamily::SElliptic { flex_lines: 3 }),
        builtin_family(BuiltinFamily::Polyhedral),
        builtin_family(BuiltinFamily::Fermat),
    ]
}

fn common_slope_limit() -> RationalFunction {
    RationalFunction::new(
        Poly::from_coeffs(vec![rat(1), rat(-4), frac(5, 2)]),
        Poly::from_coeffs(vec![frac(3, 2), rat(-2), rat(1)]),
    )
    .unwrap()
}

#[test]
fn criterion_01_wiman_harbourne() {
    criterion(1, "Wiman 45-line Harbourne constant is -225/67", || {
        let wiman = lines(45, &[(3, 120), (4, 45), (5, 36)]);
        let h = linear_harbourne(&wiman).unwrap();
        assert_eq!(h, frac(-225, 67));
        assert_eq!(decimal_string(&h, 5), "-3.35821");
    });
}

#[test]
fn criterion_02_t6_cover() {
    criterion(2, "T6 Chern pair, slope 3 at order 5, ball quotient [5]", || {
        let pair = chern_pair(&t6()).unwrap();
        assert_eq!(pair.c2, QuadraticInN::from_integers(2, -10, 15));
        assert_eq!(pair.c1sq, QuadraticInN::from_integers(5, -20, 20));
        assert_eq!(slope_at(&pair, 5).unwrap(), rat(3));
        assert_eq!(
            ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap(),
            vec![5]
        );
    });
}

#[test]
fn criterion_03_klein_cover() {
    criterion(3, "Klein Chern pair, slope 491/166 at order 4, gamma 53/20", || {
        let pair = chern_pair(&klein()).unwrap();
        assert_eq!(pair.c1sq, QuadraticInN::from_integers(212, -392, 140));
        assert_eq!(pair.c2, QuadraticInN::from_integers(80, -196, 168));
        let slope = slope_at(&pair, 4).unwrap();
        assert_eq!(slope, frac(491, 166));
        assert_eq!(decimal_string(&slope, 5), "2.95783");
        let gamma = characteristic_number(&pair).unwrap();
        assert_eq!(gamma, frac(53, 20));
        assert_eq!(decimal_string(&gamma, 2), "2.65");
    });
}

#[test]
fn criterion_04_inequality_checkers() {
    criterion(4, "Hirzebruch equalities on T6/Klein, Melchior verdicts", || {
        let h_t6 = hirzebruch_lines(&t6());
        assert_eq!((h_t6.lhs, h_t6.rhs, h_t6.holds), (rat(6), rat(6), Some(true)));
        let h_klein = hirzebruch_lines(&klein());
        assert_eq!(
            (h_klein.lhs, h_klein.rhs, h_klein.holds),
            (rat(21), rat(21), Some(true))
        );
        let m_t6 = melchior(&t6());
        assert_eq!((m_t6.lhs, m_t6.rhs, m_t6.holds), (rat(3), rat(3), Some(true)));
        let m_klein = melchior(&klein());
        assert_eq!(
            (m_klein.lhs, m_klein.rhs, m_klein.holds),
            (rat(0), rat(24), Some(false))
        );
    });
}

#[test]
fn criterion_05_family_limits() {
    criterion(5, "all four families: Harbourne -3, common slope limit, joint 5/2", || {
        let target = common_slope_limit();
        let mut harbournes = Vec::new();
        for fam in all_families() {
            let h = fam.asymptotic_harbourne().unwrap();
            assert_eq!(h, rat(-3), "{}", fam.name());
            harbournes.push(h);
            assert_eq!(fam.k_chern_slope().unwrap(), target, "{}", fam.name());
            assert_eq!(fam.kn_chern_slope().unwrap(), frac(5, 2), "{}", fam.name());
        }
        assert!(harbournes.windows(2).all(|w| w[0] == w[1]));
    });
}

#[test]
fn criterion_06_never_ball_quotients() {
    criterion(6, "gap values 20 and 7; no ball quotients in the sweeps", || {
        let boroczky = builtin_family(BuiltinFamily::Boroczky);
        let b8 = chern_pair(&boroczky.instantiate(8).unwrap()).unwrap();
        assert_eq!(bmy_gap(&b8).unwrap().eval_i64(2), rat(20));

        let polyhedral = builtin_family(BuiltinFamily::Polyhedral);
        let p4 = chern_pair(&polyhedral.instantiate(4).unwrap()).unwrap();
        assert_eq!(bmy_gap(&p4).unwrap().eval_i64(4), rat(7));

        for k in (8..=40).step_by(2) {
            let pair = chern_pair(&boroczky.instantiate(k).unwrap()).unwrap();
            let candidates =
                ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap();
            assert!(candidates.is_empty(), "boroczky k={k}: {candidates:?}");
        }
        for k in 4..=40 {
            let pair = chern_pair(&polyhedral.instantiate(k).unwrap()).unwrap();
            let candidates =
                ball_quotient_candidates(&pair, GeneralTypeCondition::Strong).unwrap();
            assert!(candidates.is_empty(), "polyhedral k={k}: {candidates:?}");
        }
    });
}

#[test]
fn criterion_07_dominant_profiles() {
    criterion(7, "dominant profiles: (-3, 5/2) and (-4, 8/3) with slope 3 at order 3", || {
        let p3 = dominant_profile(3, rat(1)).unwrap();
        assert_eq!(p3.asymptotic_harbourne().unwrap(), rat(-3));
        assert_eq!(p3.kn_chern_slope().unwrap(), frac(5, 2));

        let p4 = dominant_profile(4, rat(1)).unwrap();
        assert_eq!(p4.asymptotic_harbourne().unwrap(), rat(-4));
        assert_eq!(p4.kn_chern_slope().unwrap(), frac(8, 3));
        let slope = p4.k_chern_slope().unwrap();
        let target = RationalFunction::new(
            Poly::from_coeffs(vec![rat(1), rat(-4), frac(8, 3)]),
            Poly::from_coeffs(vec![frac(4, 3), rat(-2), rat(1)]),
        )
        .unwrap();
        assert_eq!(slope, target);
        assert_eq!(slope.eval_i64(3).unwrap(), rat(3));

        // density does not change the limits
        let p4b = dominant_profile(4, frac(7, 3)).unwrap();
        assert_eq!(p4b.k_chern_slope().unwrap(), target);
    });
}

#[test]
fn criterion_08_characteristic_numbers() {
    criterion(8, "gamma of the conic examples and the general closed form", || {
        let ap = curves(2, 6, &[(5, 6)]);
        assert_eq!(
            characteristic_number(&chern_pair(&ap).unwrap()).unwrap(),
            frac(9, 5)
        );
        let hesse = curves(2, 12, &[(2, 12), (8, 9)]);
        assert_eq!(
            characteristic_number(&chern_pair(&hesse).unwrap()).unwrap(),
            frac(13, 6)
        );
        for d in 2u64..=4 {
            for k in 4u64..=10 {
                let cfg = curves(d as u32, k, &[(2, d * d * (k * k - k) / 2)]);
                let gamma = characteristic_number(&chern_pair(&cfg).unwrap()).unwrap();
                let dk = rat((d * k) as i64);
                let denom = rat((d * d * k * k) as i64)
                    + rat((d * d) as i64 - 6 * d as i64) * rat(k as i64)
                    + rat(6);
                assert_eq!(gamma, rat(2) * (&dk - rat(3)) * (&dk - rat(3)) / denom);
            }
            // k -> infinity limit of the closed form is 2, for every d
            let di = d as i64;
            let f = RationalFunction::new(
                Poly::from_coeffs(vec![rat(18), rat(-12 * di), rat(2 * di * di)]),
                Poly::from_coeffs(vec![rat(6), rat(di * di - 6 * di), rat(di * di)]),
            )
            .unwrap();
            assert_eq!(f.limit_at_infinity(), Some(rat(2)));
        }
    });
}

#[test]
fn criterion_09_property_suites() {
    criterion(9, "identity, gamma bound, line reduction, closed form, numeric spectra", || {
        // (a) combinatorial identity on 500 seeded random arrangements
        let mut rng = ChaCha8Rng::seed_from_u64(1009);
        for i in 0..500usize {
            let k = 2 + (i % 7);
            let arr = random_arrangement(&mut rng, k, 3);
            assert!(spectrum_of(&arr).unwrap().validate().passes);
        }

        // (b) gamma < 8/3 on 10^4 random validated spectra passing the
        // applicable inequality
        let mut rng = ChaCha8Rng::seed_from_u64(1010);
        let mut accepted = 0;
        while accepted < 10_000 {
            let d = rng.random_range(2..=4u32);
            let k = rng.random_range(5..=20u64);
            let cfg = random_validated_spectrum(&mut rng, d, k, k - 1);
            let verdict = if d == 2 {
                tang_conics(&cfg).unwrap()
            } else {
                hirzebruch_dconfig(&cfg).unwrap()
            };
            if verdict.holds != Some(true) {
                continue;
            }
            let Ok(gamma) = characteristic_number(&chern_pair(&cfg).unwrap()) else {
                continue;
            };
            assert!(gamma < frac(8, 3), "d={d} k={k}: gamma = {gamma}");
            accepted += 1;
        }

        // (c) the general formulas reduce to the line formulas on 10^3
        // random spectra (independent re-evaluation)
        let mut rng = ChaCha8Rng::seed_from_u64(1011);
        for _ in 0..1000 {
            let k = rng.random_range(4..=40u64);
            let cfg = random_validated_spectrum(&mut rng, 1, k, k - 1);
            let pair = chern_pair(&cfg).unwrap();
            let f0 = rat_big(cfg.f0());
            let f1 = rat_big(cfg.f1());
            let t2 = rat(cfg.t(2) as i64);
            let kq = rat(k as i64);
            assert_eq!(
                pair.c2,
                QuadraticInN::new(
                    rat(3) - rat(2) * &kq + &f1 - &f0,
                    rat(2) * (&kq - &f1 + &f0),
                    &f1 - &t2
                )
            );
            assert_eq!(
                pair.c1sq,
                QuadraticInN::new(
                    rat(-5) * &kq + rat(9) + rat(3) * &f1 - rat(4) * &f0,
                    rat(4) * (&kq - &f1 + &f0),
                    &f1 - &f0 + &kq + &t2
                )
            );
        }

        // (d) the closed form for gamma wherever its denominator is positive
        let mut rng = ChaCha8Rng::seed_from_u64(1012);
        let mut checked = 0;
        while checked < 10_000 {
            let k = rng.random_range(4..=30u64);
            let cfg = random_validated_spectrum(&mut rng, 1, k, k - 1);
            let Ok(gamma) = characteristic_number(&chern_pair(&cfg).unwrap()) else {
                continue;
            };
            let f0 = rat_big(cfg.f0());
            let f1 = rat_big(cfg.f1());
            let kq = rat(k as i64);
            let closed = frac(5, 2)
                - (rat(3) * &f0 - &f1 - rat(3))
                    / (rat(2) * (rat(3) - rat(2) * &kq + &f1 - &f0));
            assert_eq!(gamma, closed);
            checked += 1;
        }

        // (e) certified-numeric spectra match the closed-form families
        let polyhedral = builtin_family(BuiltinFamily::Polyhedral);
        for k in 3..=12u64 {
            let numeric =
                generate_regular_polygon_family(PolygonFamily::Polyhedral, k, 64).unwrap();
            assert_eq!(
                numeric.datum.spectrum(),
                polyhedral.instantiate(k as i64).unwrap().spectrum(),
                "polyhedral k={k}"
            );
        }
        let boroczky = builtin_family(BuiltinFamily::Boroczky);
        for k in (6..=16u64).step_by(2) {
            let numeric =
                generate_regular_polygon_family(PolygonFamily::Boroczky, k, 64).unwrap();
            assert_eq!(
                numeric.datum.spectrum(),
                boroczky.instantiate(k as i64).unwrap().spectrum(),
                "boroczky k={k}"
            );
        }
    });
}

#[test]
fn criterion_10_sommese_bounds() {
    criterion(10, "dual Hesse attains 8/3; general position attains the lower bound", || {
        let dual_hesse = lines(9, &[(3, 12)]);
        let gamma = characteristic_number(&chern_pair(&dual_hesse).unwrap()).unwrap();
        assert_eq!(gamma, frac(8, 3));
        let (_, upper) = sommese_bounds(9).unwrap();
        assert_eq!(gamma, upper);

        for k in 6..=20u64 {
            let cfg = lines(k, &[(2, k * (k - 1) / 2)]);
            let gamma = characteristic_number(&chern_pair(&cfg).unwrap()).unwrap();
            let (lower, _) = sommese_bounds(k).unwrap();
            assert_eq!(gamma, lower, "k={k}");
            assert_eq!(gamma, rat(2) * rat(k as i64 - 3) / rat(k as i64 - 2), "k={k}");
        }
    });
}

/// The reproduction table (what the CLI `reproduce` command runs) agrees
/// with its frozen expectations.
#[test]
fn reproduction_report_matches() {
    let report = curveconf::reproduce::run();
    for claim in &report.claims {
        assert!(
            claim.matches(),
            "{}: expected {:?}, computed {:?}",
            claim.id,
            claim.expected,
            claim.computed
        );
    }
    assert!(report.all_match());
}
