use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;
use pgq_core::cyclotomic::q;
use pgq_core::fixtures;
use pgq_core::help::lp::{LinearProgram, LpResult};
use pgq_core::help::pa::element_multiplicities_by_fourier;
use pgq_core::help::*;
use pgq_core::CyclotomicElement;
use proptest::prelude::*;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn thompson_order_35_is_infeasible() {
    let th = fixtures::thompson();
    let report = feasible_partial_augmentations(&th, 35, &[]).unwrap();
    assert_eq!(report.outcome, HelpOutcome::Infeasible);
    assert_eq!(report.variables, names(&["5a", "7a"]));
}

#[test]
fn thompson_multiplicity_forms() {
    let th = fixtures::thompson();
    let lower = BTreeMap::from([
        (5, Distribution::from([("7a".to_string(), 1)])),
        (7, Distribution::from([("5a".to_string(), 1)])),
    ]);
    let vars = names(&["5a", "7a"]);
    let one = multiplicity_form(&th, "chi2", 35, &lower, &vars, 0).unwrap().eliminate_last();
    let z5 = multiplicity_form(&th, "chi2", 35, &lower, &vars, 7).unwrap().eliminate_last();
    for e in -20..=20i64 {
        assert_eq!(one.eval(&[e]), q(330 - 120 * e, 35), "mu(1) at {e}");
        assert_eq!(z5.eval(&[e]), q(250 + 30 * e, 35), "mu(z5) at {e}");
    }
    // Non-negativity of the two forms bounds ε_5a to [−8, 2]; integrality
    // forces ε ≡ 1 mod 7 and the congruence on the 5-part ε ≡ 0 mod 5,
    // which no value in range meets.
    let ok = |e: i64| {
        let a = 330 - 120 * e;
        let b = 250 + 30 * e;
        a >= 0 && b >= 0 && a % 35 == 0 && b % 35 == 0 && e.rem_euclid(5) == 0
    };
    assert!(ok(-6) == false && (330 + 720) % 35 == 0 && (250 - 180) % 35 == 0);
    let range: Vec<i64> = (-100..=100).filter(|&e| 330 - 120 * e >= 0 && 250 + 30 * e >= 0).collect();
    assert_eq!((range[0], *range.last().unwrap()), (-8, 2));
    assert!((-100..=100).all(|e| !ok(e)));
}

#[test]
fn lupa_matches_fourier_on_group_elements() {
    for slice in [fixtures::s5(), fixtures::c3xd10()] {
        for class in slice.classes.iter().filter(|c| c.order > 1) {
            let pa = PartialAugmentationVector::from_element(&slice, &class.name).unwrap();
            for chi in &slice.characters {
                let fourier = element_multiplicities_by_fourier(&slice, &chi.name, &class.name).unwrap();
                let mut total = BigRational::zero();
                for (j, expected) in fourier.iter().enumerate() {
                    let mu = lupa_multiplicity(&slice, &chi.name, &pa, j as i64).unwrap();
                    assert_eq!(&mu, expected, "{} {} {} j={j}", slice.group, chi.name, class.name);
                    assert!(mu.is_integer() && mu >= rat(0));
                    total += mu;
                }
                assert_eq!(total, rat(chi.degree as i64));
            }
        }
    }
}

#[test]
fn group_elements_survive_help() {
    for slice in [fixtures::s5(), fixtures::c3xd10()] {
        let orders: BTreeSet<u64> = slice.classes.iter().map(|c| c.order).filter(|&o| o > 1).collect();
        for n in orders {
            let report = feasible_partial_augmentations(&slice, n, &[]).unwrap();
            let HelpOutcome::Feasible { vectors } = &report.outcome else {
                panic!("{} order {n}: {:?}", slice.group, report.outcome);
            };
            let vectors: Vec<_> = vectors.iter().map(|v| v.normalized()).collect();
            for c in slice.classes.iter().filter(|c| c.order == n) {
                let pa = PartialAugmentationVector::from_element(&slice, &c.name).unwrap();
                assert!(vectors.contains(&pa), "{} class {}: {pa:?} not in {vectors:?}", slice.group, c.name);
            }
        }
    }
}

#[test]
fn orders_outside_the_spectrum_are_excluded() {
    // S5 has no element of order 10 or 15; C3×D10 none of order 10.
    let s5 = fixtures::s5();
    for n in [10, 15] {
        let r = feasible_partial_augmentations(&s5, n, &[]).unwrap();
        assert_eq!(r.outcome, HelpOutcome::Infeasible, "S5 order {n}");
    }
    let r = feasible_partial_augmentations(&fixtures::c3xd10(), 10, &[]).unwrap();
    assert_eq!(r.outcome, HelpOutcome::Infeasible);
}

#[test]
fn fewer_characters_never_shrink_the_feasible_set() {
    let s5 = fixtures::s5();
    let full = feasible_partial_augmentations(&s5, 6, &[]).unwrap();
    let HelpOutcome::Feasible { vectors: all } = full.outcome else { panic!() };
    let chars: Vec<String> = s5.characters.iter().map(|c| c.name.clone()).collect();
    for skip in 0..chars.len() {
        let subset: Vec<String> = chars.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, c)| c.clone()).collect();
        match feasible_partial_augmentations(&s5, 6, &subset) {
            Ok(r) => match r.outcome {
                HelpOutcome::Feasible { vectors } => {
                    assert!(all.iter().all(|v| vectors.contains(v)), "dropping {}", chars[skip])
                }
                other => panic!("dropping {} gave {other:?}", chars[skip]),
            },
            Err(HelpError::Unbounded(_)) | Err(HelpError::SearchTooLarge(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn onan_order_21_keeps_a_point() {
    let sys = fixtures::onan();
    let r = sys.solve().unwrap();
    assert!(r.feasible.contains(&vec![-6, 7]));
    assert!(!r.feasible.is_empty());
    for p in &r.feasible {
        assert!(onan_inequalities(p[0], p[1]).iter().all(|&b| b));
        assert_eq!(p[0].rem_euclid(3), 0);
        assert_eq!(p[1].rem_euclid(7), 0);
    }
    assert_eq!(onan_inequalities(-6, 7), [true; 3]);
    assert!(!onan_inequalities(0, 1).iter().all(|&b| b));
}

#[test]
fn column_orthogonality_with_class_sizes() {
    for slice in [fixtures::s5(), fixtures::c3xd10()] {
        let total: u64 = slice.classes.iter().map(|c| c.size.unwrap()).sum();
        assert_eq!(total, slice.order);
        for a in &slice.characters {
            for b in &slice.characters {
                let mut acc = CyclotomicElement::zero(1);
                for c in &slice.classes {
                    let term = slice.value(&a.name, &c.name).unwrap() * &slice.value(&b.name, &c.name).unwrap().conj();
                    acc = &acc + &term.scale(&rat(c.size.unwrap() as i64));
                }
                let expect = if a.name == b.name { slice.order as i64 } else { 0 };
                assert_eq!(acc.as_rational(), Some(rat(expect)), "{} <{}, {}>", slice.group, a.name, b.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The exact LP optimum dominates every integer point of a bounded region
    // and an infeasible relaxation has no integer points at all.
    #[test]
    fn lp_bounds_dominate_integer_points(
        rows in prop::collection::vec((-5i64..=5, -5i64..=5, -12i64..=12), 1..5),
        c in (-4i64..=4, -4i64..=4),
    ) {
        let mut lp = LinearProgram::new(2);
        for i in 0..2 {
            let mut e = vec![rat(0), rat(0)];
            e[i] = rat(1);
            lp.add_le(e.clone(), rat(6));
            lp.add_ge(e, rat(-6));
        }
        for (a, b, r) in &rows {
            lp.add_le(vec![rat(*a), rat(*b)], rat(*r));
        }
        let pts: Vec<(i64, i64)> = (-6..=6)
            .flat_map(|x| (-6..=6).map(move |y| (x, y)))
            .filter(|(x, y)| rows.iter().all(|(a, b, r)| a * x + b * y <= *r))
            .collect();
        let obj = vec![rat(c.0), rat(c.1)];
        match (lp.maximize(&obj), lp.minimize(&obj)) {
            (LpResult::Optimal(hi), LpResult::Optimal(lo)) => {
                prop_assert!(lo <= hi);
                for (x, y) in pts {
                    let v = rat(c.0 * x + c.1 * y);
                    prop_assert!(lo <= v && v <= hi);
                }
            }
            (LpResult::Infeasible, LpResult::Infeasible) => prop_assert!(pts.is_empty()),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}

#[test]
fn selftest_is_green() {
    let all = pgq_core::selftest::run_all();
    let failed: Vec<_> = all.iter().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(all.len(), pgq_core::selftest::check_names().len());
}
