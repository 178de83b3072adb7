//! The eight acceptance criteria, each at its time budget. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use idemring::checkers::{
    check_si3, check_si_props, check_two_element, crosscheck, enumerate_small, mv_basic_witness, rational,
    tropical_witness,
};
use idemring::constructions::mv_product;
use idemring::{
    adjoin_least, adjoin_unity, gen_boolean, gen_l2, gen_lukasiewicz, is_congruence_simple, is_subdirectly_irreducible,
    monolith, principal_congruence, verify_axioms, FiniteSemiring, LexGroupElement, MatrixSemiring, Tables,
};
use num_rational::BigRational;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: idemring::Error) -> String {
    e.to_string()
}

fn luk3() -> FiniteSemiring {
    FiniteSemiring::from_json(&std::fs::read_to_string(common::data("luk3.json")).unwrap()).unwrap()
}

fn m2(s: &FiniteSemiring) -> Result<MatrixSemiring, String> {
    MatrixSemiring::materialized(s, 2).map_err(err)
}

/// M_2(L_2) is simple, every principal congruence is full.
fn criterion_1() -> Outcome {
    let l2 = gen_l2();
    let ms = m2(&l2)?;
    let m = ms.semiring().unwrap();
    ensure(m.size() == 16, || format!("|M_2(L_2)| = {}", m.size()))?;
    ensure(is_congruence_simple(m).map_err(err)?, || "M_2(L_2) not simple".into())?;
    let mut full = 0;
    for a in m.elements() {
        for b in a + 1..m.size() {
            ensure(principal_congruence(m, a, b).is_full(), || {
                format!("Cg({}, {}) is not full", m.label(a), m.label(b))
            })?;
            full += 1;
        }
    }
    ensure(full == 120, || format!("{full} pairs"))?;
    ensure(check_two_element(&l2).map_err(err)?.is_l2(), || {
        "two-element verdict".into()
    })?;
    Ok(format!("16 elements, simple, {full}/120 principal congruences full"))
}

/// Luk3 and M_2(Luk3).
fn criterion_2() -> Outcome {
    let s = luk3();
    ensure(!is_congruence_simple(&s).map_err(err)?, || "Luk3 simple".into())?;
    let mono = monolith(&s).map_err(err)?.ok_or("Luk3 not SI")?;
    let blocks = mono.partition.labeled_blocks(&s);
    ensure(blocks == [vec!["0", "e"], vec!["u"]], || format!("monolith {blocks:?}"))?;

    let ms = m2(&s)?;
    let m = ms.semiring().unwrap();
    ensure(m.size() == 81, || format!("|M_2| = {}", m.size()))?;
    ensure(!is_congruence_simple(m).map_err(err)?, || "M_2(Luk3) simple".into())?;
    let mm = monolith(m).map_err(err)?.ok_or("M_2(Luk3) not SI")?;
    let (zero, e) = (s.index_of("0").unwrap(), s.index_of("e").unwrap());
    let cg = principal_congruence(m, ms.const_index(zero), ms.const_index(e));
    ensure(mm.partition == cg, || "monolith differs from Cg(0, e)".into())?;
    Ok(format!(
        "monolith {blocks:?}; M_2: 81 elements, SI, not simple, monolith = Cg(0,e) with {} blocks",
        cg.num_blocks()
    ))
}

/// The least-element extension of B_2 and its unity extension.
fn criterion_3() -> Outcome {
    let b2e = adjoin_least(&gen_boolean(2).map_err(err)?).map_err(err)?;
    ensure(is_subdirectly_irreducible(&b2e).map_err(err)?, || "B2+e not SI".into())?;
    ensure(!check_si3(&b2e).map_err(err)?.holds, || {
        "zero separation in S holds on B2+e".into()
    })?;
    let ms = m2(&b2e)?;
    let m = ms.semiring().unwrap();
    ensure(m.size() == 625, || format!("|M_2(B2+e)| = {}", m.size()))?;
    ensure(!is_subdirectly_irreducible(m).map_err(err)?, || {
        "M_2(B2+e) is SI".into()
    })?;

    let b2e1 = adjoin_unity(&b2e).map_err(err)?;
    ensure(check_si3(&b2e1).map_err(err)?.holds, || {
        "zero separation in S fails on B2+e+1".into()
    })?;
    let ms = m2(&b2e1)?;
    let m = ms.semiring().unwrap();
    ensure(m.size() == 1296, || format!("|M_2(B2+e+1)| = {}", m.size()))?;
    ensure(is_subdirectly_irreducible(m).map_err(err)?, || {
        "M_2(B2+e+1) not SI".into()
    })?;
    Ok("B2+e SI, M_2 (625) not SI; B2+e+1 M_2 (1296) SI".into())
}

/// Every table pair on two elements; simple M_2 exactly for copies of L_2.
fn criterion_4() -> Outcome {
    let l2 = gen_l2();
    let mut seen = 0;
    let mut simple_count = 0;
    for code in 0..256u32 {
        let bit = |i: u32| ((code >> i) & 1) as usize;
        let t = Tables {
            name: format!("T{code}"),
            elements: vec!["p".into(), "q".into()],
            add: vec![vec![bit(0), bit(1)], vec![bit(2), bit(3)]],
            mul: vec![vec![bit(4), bit(5)], vec![bit(6), bit(7)]],
        };
        let idem = t.add[0][0] == 0 && t.add[1][1] == 1;
        if !idem || !verify_axioms(&t).map_err(err)?.passed() {
            continue;
        }
        seen += 1;
        let s = FiniteSemiring::from_tables(t).map_err(err)?;
        let iso = [vec![0, 1], vec![1, 0]].iter().any(|p| {
            s.elements().all(|a| {
                s.elements()
                    .all(|b| p[s.add(a, b)] == l2.add(p[a], p[b]) && p[s.mul(a, b)] == l2.mul(p[a], p[b]))
            })
        });
        let ms = m2(&s)?;
        let simple = is_congruence_simple(ms.semiring().unwrap()).map_err(err)?;
        let verdict = check_two_element(&s).map_err(err)?;
        ensure(simple == iso && verdict.is_l2() == iso, || {
            format!("{}: simple={simple}, L2={iso}, verdict={verdict:?}", s.name())
        })?;
        simple_count += simple as usize;
    }
    ensure(simple_count == 2, || {
        format!("{simple_count} labeled tables give simple M_2")
    })?;
    Ok(format!(
        "{seen} labeled tables, simple M_2 only for the 2 labelings of L2"
    ))
}

/// Brute-force sweep of every semiring with 2 or 3 elements.
fn criterion_5() -> Outcome {
    let required = [
        "translated-separation-criterion",
        "zero-unity-si-transfer",
        "almost-integral-matrix-simple-iff-l2",
        "almost-integral-simple-has-two-elements",
        "almost-integral-matrix-si",
        "almost-integral-si-criterion",
        "almost-integral-monolith-form",
        "unity-adjunction-preserves-si",
        "matrix-simple-necessary",
        "matrix-simple-greatest-not-absorbing",
    ];
    let all: Vec<_> = enumerate_small(3)
        .map_err(err)?
        .into_iter()
        .filter(|s| s.size() >= 2)
        .collect();
    let mut applied = BTreeSet::new();
    let mut checked = 0;
    for s in &all {
        let r = crosscheck(s, 2).map_err(err)?;
        if let Some(d) = r.discrepancies().first() {
            return Err(format!("{}: {} ({})", s.name(), d.theorem, d.detail));
        }
        checked += r.agreements.len();
        applied.extend(r.agreements.iter().map(|a| a.theorem));
    }
    let missing: Vec<_> = required.iter().filter(|t| !applied.contains(*t)).collect();
    ensure(missing.is_empty(), || format!("never applied: {missing:?}"))?;
    Ok(format!(
        "{} semirings, {checked} agreements, 0 discrepancies",
        all.len()
    ))
}

/// e^2 = 0 and the commutative consequences.
fn criterion_6() -> Outcome {
    let mut list: Vec<FiniteSemiring> = (2..=4).map(|u| gen_lukasiewicz(u).unwrap()).collect();
    for base in [gen_boolean(1), gen_boolean(2), gen_boolean(3), gen_lukasiewicz(1)] {
        list.push(adjoin_least(&base.map_err(err)?).map_err(err)?);
    }
    for s in &list {
        let r = check_si_props(s).map_err(err)?;
        ensure(r.e_squared_zero, || format!("{}: e^2 != 0", s.name()))?;
        ensure(
            s.is_commutative() && r.nonzero_multiple_is_greatest == Some(true),
            || format!("{}: non-zero multiple of e below the top", s.name()),
        )?;
        ensure(r.unity_join_irreducible != Some(false), || {
            format!("{}: unity join-reducible", s.name())
        })?;
        ensure(r.holds(), || format!("{}: {:?}", s.name(), r.counterexamples))?;
    }
    Ok(format!("{} instances", list.len()))
}

/// Rational spot checks.
fn criterion_7() -> Outcome {
    let el = |an, ad, bn, bd, k| LexGroupElement::from_ratios(an, ad, bn, bd, k).unwrap();
    let u = el(3, 1, 0, 1, 0);
    let (a, b) = (el(2, 1, 0, 1, 0), el(2, 1, 1, 1, 0));
    let ab = mv_product(&a, &b, &u).map_err(err)?;
    let ba = mv_product(&b, &a, &u).map_err(err)?;
    ensure(
        ab.to_string() == "((4/3,2/3),0)" && ba.to_string() == "((4/3,1),0)",
        || format!("ab = {ab}, ba = {ba}"),
    )?;

    let mut pairs = 0;
    for h in 1..=6 {
        let s = gen_lukasiewicz(h).map_err(err)?;
        for x in s.elements() {
            for y in s.elements().filter(|&y| y < x) {
                let (c, d) = mv_basic_witness(&s, x, y).map_err(err)?;
                let sep = |z| s.mul(s.mul(c, z), d);
                ensure(sep(x) != 0 && sep(y) == 0, || format!("Luk{}: ({x}, {y})", h + 1))?;
                pairs += 1;
            }
        }
    }

    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let mut cases = 0;
    for i in 0..100i64 {
        let a = q(i % 7 - 3, 1 + i % 3);
        let b = q(i % 5 - 2, 1 + i % 4) + q(1, 7);
        let e = q(i % 11 - 5, 2);
        let fp = -q(1 + i % 6, 1 + i % 5);
        ensure(a != b, || format!("case {i}: a = b"))?;
        let (c, f) = tropical_witness(&a, &b, &e, &fp).map_err(err)?;
        let k = &f / &fp;
        let lhs = (&c + &a).max(&f + &e);
        let rhs = (&c + &b).max(&f + &e);
        ensure(k.is_integer() && k >= rational(1) && lhs != rhs, || {
            format!("case {i}: c = {c}, f = {f}")
        })?;
        cases += 1;
    }
    Ok(format!(
        "products exact, {pairs} Lukasiewicz pairs, {cases} tropical cases"
    ))
}

fn full_suite_json() -> Vec<String> {
    let lu = common::data("luk3.json").display().to_string();
    let b2 = common::data("b2_least.json").display().to_string();
    let b2u = common::data("b2_least_unity.json").display().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["analyze", &lu, "--matrix", "2"],
        vec!["analyze", &b2],
        vec!["check", "zero-separation-in-s", &b2],
        vec!["check", "translated-separation", &b2u],
        vec!["check", "si-props", &b2u],
        vec!["matrix", &lu, "--n", "2", "--extract", "[[0,u],[e,0]]", "[[0,u],[0,0]]"],
        vec!["experiment", "hat-monolith", &lu, "--n", "2"],
        vec!["crosscheck", "--max-size", "3", "--n", "2"],
    ];
    runs.into_iter()
        .map(|args| {
            let mut full = vec!["--format", "json"];
            full.extend(args);
            let (code, out, e) = common::cli(&full);
            format!("{code}\n{out}{e}")
        })
        .collect()
}

/// Two runs give byte-identical JSON.
fn criterion_8() -> Outcome {
    let first = full_suite_json();
    let second = full_suite_json();
    let bytes: usize = first.iter().map(|s| s.len()).sum();
    ensure(first == second, || "reports differ between runs".into())?;
    ensure(first.iter().all(|r| r.starts_with("0\n")), || {
        "a report run failed".into()
    })?;
    Ok(format!("{} reports, {bytes} bytes identical", first.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "M_2(L_2) simple", Duration::from_secs(1), criterion_1),
        (2, "Luk3 and M_2(Luk3) monoliths", Duration::from_secs(10), criterion_2),
        (
            3,
            "least-element and unity extensions of B_2",
            Duration::from_secs(300),
            criterion_3,
        ),
        (4, "two-element exhaustion", Duration::from_secs(1), criterion_4),
        (
            5,
            "cross-validation sweep up to 3 elements",
            Duration::from_secs(600),
            criterion_5,
        ),
        (
            6,
            "subdirectly irreducible properties",
            Duration::from_secs(1),
            criterion_6,
        ),
        (
            7,
            "MV, lex and tropical spot checks",
            Duration::from_secs(1),
            criterion_7,
        ),
        (8, "byte-identical JSON reports", Duration::from_secs(600), criterion_8),
    ];
    let mut failed = 0;
    for (n, name, budget, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(e) => (false, e),
        };
        failed += !ok as u32;
        println!(
            "criterion {n} {}: {name} ({:.3}s / {:?}): {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
