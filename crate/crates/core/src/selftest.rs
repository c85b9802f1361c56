//! Independent-oracle checks over every module plus validation of the
//! bundled fixtures. A green run is the release gate of the command line.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::is_prime_small;
use crate::brauer::{
    gamma_bounds, gamma_bounds_closed_form, group_verdict_table, main_inequality_for_unit,
    signed_vertex_sum, vertex_values, MultiplicityAssignment,
};
use crate::cyclotomic::CyclotomicElement;
use crate::fixtures;
use crate::help::pa::element_multiplicities_by_fourier;
use crate::help::{feasible_partial_augmentations, lupa_multiplicity, HelpOutcome, PartialAugmentationVector};
use crate::numtheory::{
    constant_c, count_n, count_n_by_sieve, li, li_by_series, lie_order, Condition, LieFamily, LieSeriesSpec,
};
use crate::numtheory::density::rho_by_enumeration;
use crate::numtheory::lie::lie_order_direct;
use crate::numtheory::rho;
use crate::tableaux::{jordan, lr_coefficient, submodule_quotient_exists, verify_all, ModulePartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const CHECKS: &[(&str, fn() -> Outcome)] = &[
    ("fixtures", fixture_validation),
    ("cyclotomic-float", cyclotomic_against_floats),
    ("cyclotomic-trace", trace_two_routes),
    ("tableaux-lemmas", tableau_lemmas),
    ("tableaux-lr-symmetry", lr_symmetry),
    ("tableaux-jordan", jordan_oracle),
    ("help-fourier", help_fourier),
    ("help-thompson", help_thompson),
    ("help-onan", help_onan),
    ("brauer-signed-sum", brauer_signed_sum),
    ("brauer-main-inequality", brauer_main_inequality),
    ("brauer-gamma", brauer_gamma),
    ("brauer-verdicts", brauer_verdicts),
    ("numtheory-census", census_routes),
    ("numtheory-rho", rho_routes),
    ("numtheory-constant", constant_truncations),
    ("numtheory-li", li_routes),
    ("numtheory-lie", lie_orders),
];

/// Runs every check; the order of the result is fixed.
pub fn run_all() -> Vec<SelfCheck> {
    CHECKS
        .par_iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SelfCheck { name: name.to_string(), passed, detail }
        })
        .collect()
}

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

fn fixture_validation() -> Outcome {
    let all = fixtures::validate_all();
    let bad: Vec<String> =
        all.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}"))).collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} fixtures valid", all.len()))
}

fn cyclotomic_against_floats() -> Outcome {
    let mut n_checked = 0;
    for (a, b) in [(2u64, 3u64), (4, 6), (5, 7), (9, 12), (15, 10)] {
        for i in 0..a as i64 {
            for j in 0..b as i64 {
                let x = CyclotomicElement::from_int_terms(a, &[(i, 2), (0, -1)]).map_err(|e| e.to_string())?;
                let y = CyclotomicElement::from_int_terms(b, &[(j, 1), (1, 3)]).map_err(|e| e.to_string())?;
                let exact = (&x * &y).to_complex();
                let approx = x.to_complex() * y.to_complex();
                ensure((exact - approx).norm() < 1e-9, || format!("product mismatch at ({a},{i})·({b},{j})"))?;
                let sum = (&x + &y).to_complex();
                ensure((sum - x.to_complex() - y.to_complex()).norm() < 1e-9, || "sum mismatch".into())?;
                let w = CyclotomicElement::from_int_terms(35, &[(i * j, 1), (i + j, -2), (0, 3)]).map_err(|e| e.to_string())?;
                let g = w.galois(2).and_then(|z| z.galois(3)).map_err(|e| e.to_string())?;
                ensure(g == w.galois(6).map_err(|e| e.to_string())?, || "galois composition".into())?;
                n_checked += 1;
            }
        }
    }
    Ok(format!("{n_checked} products, sums and Galois compositions"))
}

fn trace_two_routes() -> Outcome {
    let primes: Vec<u64> = (2..=100).filter(|&p| is_prime_small(p)).collect();
    let minus_one = -BigRational::one();
    for &p in &primes {
        let z = CyclotomicElement::root_of_unity(p, 1).map_err(|e| e.to_string())?;
        ensure(z.trace_to_q() == minus_one, || format!("Tr ζ_{p} by the Möbius formula"))?;
        ensure(z.trace_by_galois_sum() == Some(minus_one.clone()), || format!("Tr ζ_{p} by the Galois sum"))?;
    }
    let mut pairs = 0;
    for &p in primes.iter().filter(|&&p| p <= 30) {
        for &q in primes.iter().filter(|&&q| q <= 30 && q != p) {
            let x = CyclotomicElement::root_of_unity(p * q, -(q as i64)).map_err(|e| e.to_string())?;
            let want = BigRational::from_integer((1 - q as i64).into());
            ensure(x.trace_to_q() == want, || format!("Tr ζ_{p}^-1 in Q(ζ_{}) (Möbius)", p * q))?;
            ensure(x.trace_by_galois_sum() == Some(want), || format!("Tr ζ_{p}^-1 in Q(ζ_{}) (Galois)", p * q))?;
            pairs += 1;
        }
    }
    Ok(format!("{} primes, {pairs} ordered pairs", primes.len()))
}

fn tableau_lemmas() -> Outcome {
    let reports = verify_all(8).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for r in &reports {
        ensure(r.passed(), || format!("{}: {} violations", r.lemma, r.violations.len()))?;
        parts.push(format!("{} {}", r.lemma, r.checked));
    }
    Ok(parts.join(", "))
}

fn lr_symmetry() -> Outcome {
    let mut count = 0u64;
    for n in 0..=8 {
        for lambda in Partition::all_of_size(n, n.max(1)) {
            let subs = lambda.subpartitions();
            ensure(lr_coefficient(&lambda, &Partition::empty(), &lambda) == 1, || format!("c^{lambda}_(∅,{lambda})"))?;
            for mu in &subs {
                for nu in subs.iter().filter(|nu| nu.size() + mu.size() == n) {
                    let a = lr_coefficient(&lambda, mu, nu);
                    ensure(a == lr_coefficient(&lambda, nu, mu), || format!("c^{lambda}_({mu},{nu}) not symmetric"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} coefficients symmetric"))
}

fn jordan_oracle() -> Outcome {
    let p = 3;
    let mut count = 0;
    for n in 1..=6 {
        for m in ModulePartition::all_of_dim(p, n) {
            let oracle = jordan::realizable_pairs(p, &m.partition);
            for k in 0..=n {
                for u in ModulePartition::all_of_dim(p, k) {
                    for q in ModulePartition::all_of_dim(p, n - k) {
                        let lr = submodule_quotient_exists(&m, &u, &q).exists();
                        let lin = oracle.contains(&(u.partition.clone(), q.partition.clone()));
                        ensure(lr == lin, || format!("M={} U={} Q={}", m.partition, u.partition, q.partition))?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} triples agree"))
}

fn help_fourier() -> Outcome {
    let mut count = 0;
    for slice in [fixtures::s5(), fixtures::c3xd10()] {
        for class in slice.classes.iter().filter(|c| c.order > 1) {
            let pa = PartialAugmentationVector::from_element(&slice, &class.name).map_err(|e| e.to_string())?;
            for chi in &slice.characters {
                let oracle =
                    element_multiplicities_by_fourier(&slice, &chi.name, &class.name).map_err(|e| e.to_string())?;
                for (j, want) in oracle.iter().enumerate() {
                    let got = lupa_multiplicity(&slice, &chi.name, &pa, j as i64).map_err(|e| e.to_string())?;
                    ensure(&got == want, || format!("{} {} {} j={j}", slice.group, chi.name, class.name))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} multiplicities agree"))
}

fn help_thompson() -> Outcome {
    let th = fixtures::thompson();
    let r = feasible_partial_augmentations(&th, 35, &[]).map_err(|e| e.to_string())?;
    ensure(r.outcome == HelpOutcome::Infeasible, || format!("outcome {:?}", r.outcome))?;
    Ok("no unit of order 35".into())
}

fn help_onan() -> Outcome {
    let r = fixtures::onan().solve().map_err(|e| e.to_string())?;
    ensure(r.feasible.contains(&vec![-6, 7]), || format!("feasible set {:?}", r.feasible))?;
    Ok(format!("{} feasible points", r.feasible.len()))
}

fn brauer_signed_sum() -> Outcome {
    let mut count = 0;
    for (tree, slice) in fixtures::trees_with_tables() {
        for c in slice.classes.iter().filter(|c| c.order % tree.prime != 0) {
            let vals = vertex_values(&tree, &slice, &c.name).map_err(|e| e.to_string())?;
            let s = signed_vertex_sum(&tree, &vals).map_err(|e| e.to_string())?;
            ensure(s.is_zero(), || format!("{tree} at {}", c.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} p-regular sums vanish"))
}

fn unit_classes(slice: &crate::help::CharacterTableSlice, p: u64) -> Vec<String> {
    slice
        .classes
        .iter()
        .filter(|c| c.order % p == 0 && (c.order / p) % p != 0)
        .map(|c| c.name.clone())
        .collect()
}

fn brauer_main_inequality() -> Outcome {
    let mut count = 0;
    for (tree, slice) in fixtures::trees_with_tables() {
        for class in unit_classes(&slice, tree.prime) {
            let pa = PartialAugmentationVector::from_element(&slice, &class).map_err(|e| e.to_string())?;
            for r in main_inequality_for_unit(&tree, &slice, &pa).map_err(|e| e.to_string())? {
                ensure(r.holds, || format!("{tree} at {class}: slack {}", r.slack))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances hold"))
}

fn brauer_gamma() -> Outcome {
    let mut count = 0;
    for (tree, slice) in fixtures::trees_with_tables() {
        for class in unit_classes(&slice, tree.prime) {
            let a = MultiplicityAssignment::from_element(&tree, &slice, &class, 0, 1).map_err(|e| e.to_string())?;
            for e in &tree.edges {
                for (x, y) in [(&e.0, &e.1), (&e.1, &e.0)] {
                    let rec = gamma_bounds(&tree, x, y, &a, None);
                    let closed = gamma_bounds_closed_form(&tree, x, y, &a, None);
                    ensure(rec == closed, || format!("{tree} edge {x}-{y}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} sides agree"))
}

fn brauer_verdicts() -> Outcome {
    let th = group_verdict_table(&fixtures::profile("thompson.json").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(th.open == vec![(5, 7)], || format!("Th open {:?}", th.open))?;
    let m = group_verdict_table(&fixtures::profile("monster.json").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(m.open == vec![(5, 13), (7, 11), (7, 13), (11, 13)], || format!("M open {:?}", m.open))?;
    Ok("Th and M open pairs as expected".into())
}

fn census_routes() -> Outcome {
    for cond in [Condition::Thm51, Condition::Cor13] {
        let a = count_n(10_000, cond).map_err(|e| e.to_string())?;
        let b = count_n_by_sieve(10_000, cond).map_err(|e| e.to_string())?;
        ensure(a.log == b.log, || format!("{cond}: factoring and sieve disagree"))?;
    }
    let c = count_n(1000, Condition::Cor13).map_err(|e| e.to_string())?;
    ensure((c.count, c.total_primes) == (124, 168), || format!("cor13 gives {} of {}", c.count, c.total_primes))?;
    Ok("routes agree to 10^4; 124 of 168".into())
}

fn rho_routes() -> Outcome {
    for d in 1..=60u64 {
        ensure(rho(d) == rho_by_enumeration(d), || format!("ρ({d})"))?;
    }
    let big: Vec<u64> = (5..=1000).filter(|&q| is_prime_small(q)).collect();
    for &q in &big {
        ensure(rho(q) <= 8, || format!("ρ({q}) = {}", rho(q)))?;
    }
    ensure(rho(5) == 4, || "ρ(5)".into())?;
    Ok(format!("ρ agrees to 60, bounded on {} primes", big.len()))
}

fn constant_truncations() -> Outcome {
    let mut prev: Option<BigRational> = None;
    for q in [5u64, 7, 11, 13, 50, 100, 500] {
        let c = constant_c(q).map_err(|e| e.to_string())?;
        ensure(c.exact > BigRational::zero(), || format!("truncation {q} not positive"))?;
        if let Some(p) = &prev {
            ensure(&c.exact <= p, || format!("truncation {q} increases"))?;
        }
        prev = Some(c.exact);
    }
    let five = constant_c(5).map_err(|e| e.to_string())?.exact;
    ensure(five == BigRational::new(4.into(), 5.into()), || format!("Q = 5 gives {five}"))?;
    Ok("positive, non-increasing, 4/5 at Q = 5".into())
}

fn li_routes() -> Outcome {
    for x in [10.0, 1e3, 1e4, 1e5, 1e6] {
        let a = li(x).map_err(|e| e.to_string())?;
        let b = li_by_series(x).map_err(|e| e.to_string())?;
        ensure((a - b).abs() <= 1e-8 * b.abs().max(1.0), || format!("Li({x}): {a} vs {b}"))?;
    }
    Ok("quadrature matches series".into())
}

fn lie_orders() -> Outcome {
    let mut count = 0;
    let qs: BTreeSet<u64> = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81, 101].into();
    for fam in LieFamily::ALL {
        for &q in &qs {
            let spec = LieSeriesSpec::new(fam, q).map_err(|e| e.to_string())?;
            let f = lie_order(&spec).map_err(|e| e.to_string())?;
            ensure(f.value() == &lie_order_direct(&spec) && f.is_consistent(), || format!("{fam} q={q}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} orders agree"))
}
