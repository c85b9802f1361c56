//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the lines; the test fails if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use pgq_core::brauer::{main_inequality_for_unit, surviving_nu_values};
use pgq_core::cyclotomic::q;
use pgq_core::fixtures;
use pgq_core::help::{multiplicity_form, onan_inequalities, Distribution, PartialAugmentationVector};
use pgq_core::numtheory::density::rho_by_enumeration;
use pgq_core::numtheory::primes::primes_up_to;
use pgq_core::numtheory::{constant_c, rho};
use pgq_core::tableaux::{
    jordan, lr_coefficient, submodule_quotient_exists, verify_lemma_columns_between_lines,
    verify_lemma_divided_tableau, verify_lemma_full_rectangle, verify_lemma_small_branch, ModulePartition, Partition,
};
use pgq_core::CyclotomicElement;
use serde_json::Value;

type Verdict = Result<String, String>;

fn pgq(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_pgq")).args(args).output().expect("binary runs");
    (o, start.elapsed())
}

fn parse(o: &Output) -> Result<Value, String> {
    serde_json::from_slice(&o.stdout).map_err(|e| format!("unparseable output: {e}"))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census() -> Verdict {
    let (o, t) = pgq(&["sieve", "--bound", "1000", "--condition", "cor13", "--format", "json"]);
    let j = parse(&o)?;
    check(o.status.code() == Some(0), || format!("exit {:?}", o.status.code()))?;
    check(j["count"] == 124 && j["total_primes"] == 168, || format!("{} of {}", j["count"], j["total_primes"]))?;
    check(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("124 of 168 in {t:.2?}"))
}

fn thompson() -> Verdict {
    let (o, t) = pgq(&["help-check", "--table", "thompson.json", "--order", "35", "--format", "json"]);
    let j = parse(&o)?;
    check(o.status.code() == Some(0), || format!("exit {:?}", o.status.code()))?;
    check(j["outcome"]["status"] == "infeasible", || format!("outcome {}", j["outcome"]))?;
    let bounds = &j["branches"][0]["bounds"];
    check(*bounds == serde_json::json!([["5a", -8, 2]]), || format!("bounds {bounds}"))?;
    let congruences: Vec<(Vec<String>, u64, u64)> = j["congruences"]
        .as_array()
        .ok_or("no congruences")?
        .iter()
        .map(|c| serde_json::from_value::<(Vec<String>, u64, u64)>(serde_json::json!([c["classes"], c["residue"], c["modulus"]])).unwrap())
        .collect();
    for want in [(vec!["5a".to_string()], 0, 5), (vec!["5a".to_string()], 1, 7)] {
        check(congruences.contains(&want), || format!("missing congruence {want:?}"))?;
    }
    // The two multiplicities, computed apart from the search.
    let th = fixtures::thompson();
    let lower = BTreeMap::from([
        (5, Distribution::from([("7a".to_string(), 1)])),
        (7, Distribution::from([("5a".to_string(), 1)])),
    ]);
    let vars = vec!["5a".to_string(), "7a".to_string()];
    let one = multiplicity_form(&th, "chi2", 35, &lower, &vars, 0).map_err(|e| e.to_string())?.eliminate_last();
    let z5 = multiplicity_form(&th, "chi2", 35, &lower, &vars, 7).map_err(|e| e.to_string())?.eliminate_last();
    for e in -10..=10i64 {
        check(one.eval(&[e]) == q(330 - 120 * e, 35), || format!("mu(1) at {e}"))?;
        check(z5.eval(&[e]) == q(250 + 30 * e, 35), || format!("mu(z5) at {e}"))?;
    }
    check(t < Duration::from_secs(1), || format!("took {t:?}"))?;
    Ok(format!("-8 <= e[5a] <= 2, congruences mod 5 and 7, empty, {t:.2?}"))
}

fn onan() -> Verdict {
    let (o, _) = pgq(&["help-check", "--table", "onan.json"]);
    let s = String::from_utf8_lossy(&o.stdout);
    check(o.status.code() == Some(1), || format!("exit {:?}", o.status.code()))?;
    check(s.contains("feasible point exists"), || "no feasible-point message".into())?;
    check(s.contains("= (-6, 7)"), || "(-6, 7) not listed".into())?;
    check(onan_inequalities(-6, 7) == [true; 3], || "rows reject (-6, 7)".into())?;
    Ok("(-6, 7) admitted, exit 1".into())
}

fn traces() -> Verdict {
    let primes = primes_up_to(100);
    for &p in &primes {
        let z = CyclotomicElement::root_of_unity(p, 1).map_err(|e| e.to_string())?;
        check(z.trace_to_q() == q(-1, 1), || format!("Möbius route at p = {p}"))?;
        check(z.trace_by_galois_sum() == Some(q(-1, 1)), || format!("Galois route at p = {p}"))?;
    }
    let mut pairs = 0;
    for &p in primes.iter().filter(|&&p| p <= 30) {
        for &r in primes.iter().filter(|&&r| r <= 30 && r != p) {
            // ζ_p^{-1} = ζ_{pr}^{-r}
            let x = CyclotomicElement::root_of_unity(p * r, -(r as i64)).map_err(|e| e.to_string())?;
            let want = q(1 - r as i64, 1);
            check(x.trace_to_q() == want, || format!("Möbius route at ({p}, {r})"))?;
            check(x.trace_by_galois_sum() == Some(want), || format!("Galois route at ({p}, {r})"))?;
            pairs += 1;
        }
    }
    Ok(format!("{} primes, {pairs} pairs, both routes", primes.len()))
}

fn lemmas() -> Verdict {
    let start = Instant::now();
    let mut total = 0;
    for r in [
        verify_lemma_small_branch(8),
        verify_lemma_full_rectangle(8),
        verify_lemma_columns_between_lines(8),
        verify_lemma_divided_tableau(8),
    ] {
        let r = r.map_err(|e| e.to_string())?;
        check(r.passed(), || format!("{}: {} violations", r.lemma, r.violations.len()))?;
        check(r.checked > 0, || format!("{} checked nothing", r.lemma))?;
        total += r.checked;
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{total} tableau checks, 0 violations, {t:.2?}"))
}

fn lr_properties() -> Verdict {
    let mut symmetric = 0;
    for n in 0..=8 {
        for lambda in Partition::all_of_size(n, n.max(1)) {
            check(lr_coefficient(&lambda, &Partition::empty(), &lambda) == 1, || format!("empty inner at {lambda}"))?;
            let subs = lambda.subpartitions();
            for mu in &subs {
                for nu in subs.iter().filter(|nu| nu.size() + mu.size() == n) {
                    check(lr_coefficient(&lambda, mu, nu) == lr_coefficient(&lambda, nu, mu), || {
                        format!("asymmetric at {lambda}/{mu},{nu}")
                    })?;
                    symmetric += 1;
                }
            }
        }
    }
    let mut triples = 0;
    for n in 1..=6 {
        for m in ModulePartition::all_of_dim(3, n) {
            let oracle = jordan::realizable_pairs(3, &m.partition);
            for k in 0..=n {
                for u in ModulePartition::all_of_dim(3, k) {
                    for qq in ModulePartition::all_of_dim(3, n - k) {
                        let a = submodule_quotient_exists(&m, &u, &qq).exists();
                        let b = oracle.contains(&(u.partition.clone(), qq.partition.clone()));
                        check(a == b, || format!("M={} U={} Q={}", m.partition, u.partition, qq.partition))?;
                        triples += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{symmetric} symmetric pairs, {triples} module triples agree"))
}

fn density() -> Verdict {
    check(rho_by_enumeration(5) == 4, || format!("ρ(5) = {}", rho_by_enumeration(5)))?;
    let big = primes_up_to(1000);
    for &p in &big {
        check(rho(p) <= 8, || format!("ρ({p}) = {}", rho(p)))?;
    }
    let mut prev = None;
    for t in [5u64, 7, 11, 13, 17, 100, 1000] {
        let c = constant_c(t).map_err(|e| e.to_string())?;
        check(c.exact > q(0, 1), || format!("truncation {t} not positive"))?;
        if let Some(p) = &prev {
            check(&c.exact <= p, || format!("truncation {t} increases"))?;
        }
        prev = Some(c.exact);
    }
    let five = constant_c(5).map_err(|e| e.to_string())?.exact;
    check(five == q(4, 5), || format!("Q = 5 gives {five}"))?;
    Ok("ρ(5) = 4, ρ(q) <= 8 for q <= 1000, truncations positive and non-increasing, 4/5".into())
}

fn genuine_units() -> Verdict {
    let mut count = 0;
    let mut composite = 0;
    for (tree, slice) in fixtures::trees_with_tables() {
        let p = tree.prime;
        if slice.order % (p * p) == 0 {
            continue;
        }
        for c in slice.classes.iter().filter(|c| c.order % p == 0) {
            let pa = PartialAugmentationVector::from_element(&slice, &c.name).map_err(|e| e.to_string())?;
            let all = main_inequality_for_unit(&tree, &slice, &pa).map_err(|e| e.to_string())?;
            let m = c.order / p;
            check(all.len() as u64 >= m * (p - 1), || format!("{tree} at {}: too few instances", c.name))?;
            for r in all {
                check(r.holds, || format!("{tree} at {}: slack {}", c.name, r.slack))?;
                count += 1;
                if m > 1 {
                    composite += 1;
                }
            }
        }
    }
    check(composite > 0, || "no element of composite order was tested".into())?;
    Ok(format!("{count} instances hold, {composite} at composite order"))
}

fn verdicts() -> Verdict {
    let open = |name: &str| -> Result<Vec<(u64, u64)>, String> {
        let (o, _) = pgq(&["verdict", "--profile", name, "--format", "json"]);
        serde_json::from_value(parse(&o)?["open"].clone()).map_err(|e| e.to_string())
    };
    let th = open("thompson.json")?;
    check(th == vec![(5, 7)], || format!("Th: {th:?}"))?;
    let m = open("monster.json")?;
    check(m == vec![(5, 13), (7, 11), (7, 13), (11, 13)], || format!("M: {m:?}"))?;
    check(surviving_nu_values(5, 7).is_empty(), || "ν survives for (5, 7)".into())?;
    Ok("Th {5·7}; M {5·13, 7·11, 7·13, 11·13}".into())
}

fn trend() -> Verdict {
    let (o, t) = pgq(&["sieve", "--bound", "100000", "--condition", "thm51", "--verify", "--format", "json"]);
    let j = parse(&o)?;
    check(j["verified"] == true, || "factoring and square sieve disagree".into())?;
    let rows = j["trend"].as_array().ok_or("no trend")?;
    let xs: Vec<u64> = rows.iter().filter_map(|r| r["x"].as_u64()).collect();
    check(xs == vec![1000, 10_000, 100_000], || format!("trend points {xs:?}"))?;
    let mut parts = Vec::new();
    for r in rows {
        let (n, li, ratio) = (r["count"].as_u64(), r["li_x"].as_f64(), r["count_over_li"].as_f64());
        let (Some(n), Some(li), Some(ratio)) = (n, li, ratio) else { return Err(format!("bad row {r}")) };
        check(li > 0.0 && ratio > 0.0, || format!("bad row {r}"))?;
        parts.push(format!("N({})={n} Li={li:.1} N/Li={ratio:.4}", r["x"]));
    }
    check(t < Duration::from_secs(600), || format!("took {t:?}"))?;
    Ok(format!("{}; {t:.2?}", parts.join(", ")))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("squarefree census", census),
        ("Thompson order 35", thompson),
        ("O'Nan order 21", onan),
        ("trace identities", traces),
        ("tableau lemmas", lemmas),
        ("LR properties", lr_properties),
        ("rho and c", density),
        ("eigenvalue inequality at group elements", genuine_units),
        ("verdict tables", verdicts),
        ("census trend", trend),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {} {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
