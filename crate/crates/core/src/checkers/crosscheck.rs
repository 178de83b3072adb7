//! Brute-force congruence verdicts for `S` and `M_n(S)`, compared against
//! every characterization whose hypotheses `S` satisfies.

use serde::Serialize;
use serde_json::Value;

use crate::checkers::special::{check_si_props, check_two_element};
use crate::checkers::{
    check_downward_directed, check_integral_main, check_omega, check_p71, check_prop61, check_si3,
    check_two_sided_separation, ConditionId, ConditionVerdict,
};
use crate::congruence::{is_congruence_simple, monolith};
use crate::constructions::{adjoin_unity, end0, gen_l2, gen_lukasiewicz, small_lattices, MAX_END0_LATTICE};
use crate::error::{Error, Result};
use crate::matrix::{MatrixSemiring, Mode, DEFAULT_THRESHOLD};
use crate::semiring::{classify, element_profile, is_isomorphic, natural_order, ClassFlags, FiniteSemiring, Tables};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BruteForce {
    pub simple: bool,
    pub subdirectly_irreducible: bool,
    pub monolith: Option<Vec<Vec<String>>>,
    pub matrix_size: usize,
    pub matrix_simple: bool,
    pub matrix_subdirectly_irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportedCondition {
    pub condition_id: ConditionId,
    pub holds: bool,
    pub witness: Option<Value>,
}

impl ReportedCondition {
    fn new(v: &ConditionVerdict, s: &FiniteSemiring) -> Self {
        ReportedCondition {
            condition_id: v.condition_id,
            holds: v.holds,
            witness: v.witness.as_ref().map(|w| w.to_value(s)),
        }
    }
}

/// One applicable characterization: `holds` is false exactly when the
/// brute-force side and the condition side disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub theorem: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// A verdict recorded outside every hypothesis, never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub topic: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub semiring: String,
    pub size: usize,
    pub n: usize,
    pub flags: ClassFlags,
    pub brute_force: BruteForce,
    pub conditions: Vec<ReportedCondition>,
    pub agreements: Vec<Agreement>,
    pub observations: Vec<Observation>,
    /// The tables of `S`, attached when some agreement fails.
    pub counterexample: Option<Tables>,
}

impl CrossCheckReport {
    pub fn discrepancies(&self) -> Vec<&Agreement> {
        self.agreements.iter().filter(|a| !a.holds).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.agreements.iter().all(|a| a.holds)
    }

    pub fn agreement(&self, theorem: &str) -> Option<&Agreement> {
        self.agreements.iter().find(|a| a.theorem == theorem)
    }
}

/// A lattice `L` and the elements of `End_0(L)` forming a subsemiring
/// `R ⊇ X(L)` isomorphic to `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct End0Match {
    pub lattice_size: usize,
    pub lattice_labels: Vec<String>,
    /// Image vectors of the maps in `R`, in the order matching `S`.
    pub maps: Vec<Vec<usize>>,
}

/// Searches for `L` and `X(L) ⊆ R ⊆ End_0(L)` with `R ≅ S`.
///
/// `X(L)` contains `0` and every map `x -> (q if x is not below p else 0)`
/// with `p` not the top and `q` non-zero, so `|X(L)| >= 1 + (|L| - 1)^2` and
/// only lattices with `1 + (|L| - 1)^2 <= |S|` can qualify.
pub fn end0_family_match(s: &FiniteSemiring) -> Result<Option<End0Match>> {
    let k = s.size();
    let mut max_lattice = 2;
    while max_lattice * max_lattice < k {
        max_lattice += 1;
    }
    if max_lattice > MAX_END0_LATTICE {
        return Err(Error::Size {
            what: "End0 family search".into(),
            size: k as u128,
            bound: 1 + (MAX_END0_LATTICE - 1) * (MAX_END0_LATTICE - 1),
        });
    }
    for lattice in small_lattices(max_lattice)? {
        let e = end0(&lattice)?;
        let t = &e.semiring;
        if e.xl.len() > k || t.size() < k {
            continue;
        }
        let rest: Vec<usize> = t.elements().filter(|x| !e.xl.contains(x)).collect();
        let need = k - e.xl.len();
        for mask in 0u64..(1u64 << rest.len()) {
            if mask.count_ones() as usize != need {
                continue;
            }
            let mut members = e.xl.clone();
            members.extend(
                rest.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &x)| x),
            );
            members.sort_unstable();
            let closed = members.iter().all(|&x| {
                members.iter().all(|&y| {
                    members.binary_search(&t.add(x, y)).is_ok() && members.binary_search(&t.mul(x, y)).is_ok()
                })
            });
            if !closed {
                continue;
            }
            let pos = |x: usize| members.binary_search(&x).expect("closed");
            let r = FiniteSemiring::from_fn(
                "R",
                members.iter().map(|&x| t.label(x).to_owned()).collect(),
                |a, b| pos(t.add(members[a], members[b])),
                |a, b| pos(t.mul(members[a], members[b])),
            );
            if let Some(iso) = is_isomorphic(s, &r) {
                return Ok(Some(End0Match {
                    lattice_size: lattice.size(),
                    lattice_labels: lattice.labels().to_vec(),
                    maps: iso.iter().map(|&i| e.maps[members[i]].image.clone()).collect(),
                }));
            }
        }
    }
    Ok(None)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct Collector {
    agreements: Vec<Agreement>,
}

impl Collector {
    fn push(&mut self, theorem: &'static str, holds: bool, detail: String) {
        self.agreements.push(Agreement { theorem, holds, detail });
    }

    fn iff(&mut self, theorem: &'static str, lhs: (&str, bool), rhs: (&str, bool)) {
        self.push(
            theorem,
            lhs.1 == rhs.1,
            format!("{}: {}; {}: {}", lhs.0, yes(lhs.1), rhs.0, yes(rhs.1)),
        );
    }

    fn implies(&mut self, theorem: &'static str, lhs: (&str, bool), rhs: (&str, bool)) {
        self.push(
            theorem,
            !lhs.1 || rhs.1,
            format!("{}: {}; {}: {}", lhs.0, yes(lhs.1), rhs.0, yes(rhs.1)),
        );
    }
}

/// Runs the harness for `S` and `M_n(S)`, `n >= 2`.
pub fn crosscheck(s: &FiniteSemiring, n: usize) -> Result<CrossCheckReport> {
    crosscheck_with_threshold(s, n, DEFAULT_THRESHOLD)
}

pub fn crosscheck_with_threshold(s: &FiniteSemiring, n: usize, threshold: usize) -> Result<CrossCheckReport> {
    if n < 2 {
        return Err(Error::Input(format!("cross-checking needs n >= 2, got {n}")));
    }
    let k = s.size();
    if k < 2 {
        return Err(Error::Degenerate(format!("`{}` has a single element", s.name())));
    }
    let ms = MatrixSemiring::new(s, n, Mode::Materialized, threshold)?;
    let m = ms.require_materialized()?;

    let flags = classify(s);
    let profile = element_profile(s);
    let simple = is_congruence_simple(s)?;
    let mono = monolith(s)?;
    let si = mono.is_some();
    let m_simple = is_congruence_simple(m)?;
    let m_si = if m_simple { true } else { monolith(m)?.is_some() };
    let brute_force = BruteForce {
        simple,
        subdirectly_irreducible: si,
        monolith: mono.as_ref().map(|x| x.partition.labeled_blocks(s)),
        matrix_size: m.size(),
        matrix_simple: m_simple,
        matrix_subdirectly_irreducible: m_si,
    };

    let ss2 = flags.ss_size >= 2;
    let no_bi = profile.bi_absorbing.is_none();
    let prop61 = check_prop61(s);
    let two_sided = check_two_sided_separation(s);
    let mut verdicts = vec![prop61.clone(), two_sided.clone()];
    let mut c = Collector { agreements: Vec::new() };
    let mut observations = Vec::new();

    // necessary conditions for simple / SI matrix semirings
    c.implies(
        "matrix-simple-necessary",
        ("M_n(S) simple", m_simple),
        ("S simple, no bi-absorbing element, |SS| >= 2", simple && no_bi && ss2),
    );
    c.implies(
        "matrix-si-necessary",
        ("M_n(S) SI", m_si),
        ("S SI, no bi-absorbing element, |SS| >= 2", si && no_bi && ss2),
    );
    c.implies(
        "matrix-simple-one-sided-separation",
        ("M_n(S) simple", m_simple),
        ("one-sided separation", prop61.holds),
    );
    if simple && ss2 {
        let small_case = k == 2
            && flags.additively_idempotent
            && s.elements().all(|a| s.mul(a, a) == a)
            && profile.multiplicatively_absorbing().is_none();
        c.push(
            "simple-dichotomy",
            small_case || prop61.holds,
            format!(
                "two-element idempotent case: {}; one-sided separation: {}",
                yes(small_case),
                yes(prop61.holds)
            ),
        );
    }
    if let Some(w) = profile.multiplicatively_absorbing() {
        let rhs = simple && no_bi && ss2;
        let zero_ok = !m_simple || profile.zero == Some(w);
        c.push(
            "absorbing-element-criterion",
            m_simple == rhs && zero_ok,
            format!(
                "M_n(S) simple: {}; S simple, no bi-absorbing element, |SS| >= 2: {}; absorbing element {} is the zero: {}",
                yes(m_simple),
                yes(rhs),
                s.label(w),
                yes(profile.zero == Some(w))
            ),
        );
    }

    if flags.additively_idempotent {
        let p71 = check_p71(s)?;
        let directed = check_downward_directed(s)?;
        verdicts.push(p71.clone());
        verdicts.push(directed.clone());
        c.implies(
            "matrix-simple-translated-separation",
            ("M_n(S) simple", m_simple),
            ("translated separation", p71.holds),
        );
        if directed.holds {
            c.iff(
                "translated-separation-criterion",
                ("M_n(S) simple", m_simple),
                ("S simple and translated separation", simple && p71.holds),
            );
        } else {
            observations.push(Observation {
                topic: "translated-separation-without-directedness",
                detail: format!(
                    "M_n(S) simple: {}; S simple and translated separation: {}",
                    yes(m_simple),
                    yes(simple && p71.holds)
                ),
            });
        }
        if p71.holds {
            c.iff("translated-separation-si-transfer", ("M_n(S) SI", m_si), ("S SI", si));
        }
        if profile.zero.is_some() && profile.unity.is_some() {
            c.iff("zero-unity-si-transfer", ("M_n(S) SI", m_si), ("S SI", si));
        }
        if let Some(omega) = profile.greatest {
            let v = check_omega(s)?;
            verdicts.push(v.clone());
            c.implies(
                "matrix-simple-greatest-not-absorbing",
                ("M_n(S) simple", m_simple),
                (&format!("{} not one-sided absorbing", s.label(omega)), v.holds),
            );
        }
        if k == 2 {
            let verdict = check_two_element(s)?;
            c.iff(
                "two-element-matrix-simple-is-l2",
                ("M_n(S) simple", m_simple),
                ("S is L2", verdict.is_l2()),
            );
        }
        if flags.commutative {
            let l2 = is_isomorphic(s, &gen_l2()).is_some();
            let rhs = simple && flags.ss_size != 1 && no_bi;
            c.push(
                "commutative-matrix-simple-iff-l2",
                m_simple == rhs && rhs == l2,
                format!(
                    "M_n(S) simple: {}; S simple, |SS| != 1, no bi-absorbing element: {}; S is L2: {}",
                    yes(m_simple),
                    yes(rhs),
                    yes(l2)
                ),
            );
        }
        let family = end0_family_match(s)?;
        c.iff(
            "finite-matrix-simple-iff-end0-subsemiring",
            ("M_n(S) simple", m_simple),
            ("S embeds as X(L) <= R <= End0(L)", family.is_some()),
        );
        if let Ok(chain) = gen_lukasiewicz(k - 1) {
            if is_isomorphic(s, &chain).is_some() {
                let order = natural_order(s)?;
                let zero = profile.zero.expect("a Lukasiewicz chain has a zero");
                let has_least = crate::checkers::least_nonzero(&order, zero).is_ok();
                c.iff(
                    "mv-chain-matrix-si-iff-least-non-zero",
                    ("M_n(S) SI", m_si),
                    ("least non-zero element", has_least),
                );
                c.iff(
                    "mv-chain-matrix-simple-iff-two-elements",
                    ("M_n(S) simple", m_simple),
                    ("|S| = 2", k == 2),
                );
                c.implies(
                    "mv-chain-si-is-chain",
                    ("S SI", si),
                    ("S totally ordered", order.is_chain()),
                );
            }
        }
    }

    if flags.almost_integral {
        let main = check_integral_main(s)?;
        let si3 = check_si3(s)?;
        verdicts.push(main.clone());
        verdicts.push(si3.clone());
        let l2 = is_isomorphic(s, &gen_l2()).is_some();
        c.push(
            "almost-integral-matrix-simple-iff-l2",
            m_simple == (simple && ss2) && m_simple == l2,
            format!(
                "M_n(S) simple: {}; S simple and |SS| >= 2: {}; S is L2: {}",
                yes(m_simple),
                yes(simple && ss2),
                yes(l2)
            ),
        );
        c.implies(
            "almost-integral-simple-has-two-elements",
            ("S simple", simple),
            ("|S| = 2", k == 2),
        );
        c.push(
            "almost-integral-matrix-si",
            m_si == (si && two_sided.holds) && m_si == si3.holds,
            format!(
                "M_n(S) SI: {}; S SI and two-sided separation: {}; zero separation in S: {}",
                yes(m_si),
                yes(si && two_sided.holds),
                yes(si3.holds)
            ),
        );
        c.iff(
            "almost-integral-si-criterion",
            ("S SI", si),
            ("zero separation", main.holds),
        );
        if let Some(mono) = &mono {
            let order = natural_order(s)?;
            let form = profile.zero.and_then(|zero| {
                let e = crate::checkers::least_nonzero(&order, zero).ok()?;
                let mut blocks: Vec<Vec<usize>> = vec![vec![zero.min(e), zero.max(e)]];
                blocks.extend(s.elements().filter(|&x| x != zero && x != e).map(|x| vec![x]));
                blocks.sort();
                Some(blocks)
            });
            let matches = form.as_ref() == Some(&mono.partition.blocks());
            c.push(
                "almost-integral-monolith-form",
                matches,
                format!("monolith {:?}", mono.partition.labeled_blocks(s)),
            );
        }
        if profile.unity.is_none() {
            let extended = adjoin_unity(s)?;
            let ext_si = monolith(&extended)?.is_some();
            c.iff(
                "unity-adjunction-preserves-si",
                ("S SI", si),
                ("S with unity adjoined SI", ext_si),
            );
        }
        if si && k >= 3 {
            let r = check_si_props(s)?;
            c.push(
                "si-almost-integral-properties",
                r.holds(),
                format!(
                    "e^2 = 0: {}; commutative consequences: {:?}, {:?}",
                    yes(r.e_squared_zero),
                    r.nonzero_multiple_is_greatest,
                    r.unity_join_irreducible
                ),
            );
        }
    }

    let agreements = c.agreements;
    let counterexample = agreements.iter().any(|a| !a.holds).then(|| s.to_tables());
    Ok(CrossCheckReport {
        semiring: s.name().to_owned(),
        size: k,
        n,
        flags,
        brute_force,
        conditions: verdicts.iter().map(|v| ReportedCondition::new(v, s)).collect(),
        agreements,
        observations,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoin_least, chain, gen_boolean, gen_end0, gen_lukasiewicz};

    #[test]
    fn l2() {
        let r = crosscheck(&gen_l2(), 2).unwrap();
        assert!(r.is_consistent(), "{:?}", r.discrepancies());
        assert!(r.brute_force.matrix_simple);
        assert!(r.agreement("almost-integral-matrix-simple-iff-l2").is_some());
        assert!(r.agreement("two-element-matrix-simple-is-l2").is_some());
    }

    #[test]
    fn luk3() {
        let r = crosscheck(&gen_lukasiewicz(2).unwrap(), 2).unwrap();
        assert!(r.is_consistent(), "{:?}", r.discrepancies());
        assert!(r.brute_force.matrix_subdirectly_irreducible && !r.brute_force.matrix_simple);
        assert!(r.agreement("almost-integral-matrix-si").is_some());
        assert!(r.agreement("mv-chain-matrix-si-iff-least-non-zero").is_some());
    }

    #[test]
    fn extension_of_b2() {
        let s = adjoin_least(&gen_boolean(2).unwrap()).unwrap();
        let r = crosscheck(&s, 2).unwrap();
        assert!(r.is_consistent(), "{:?}", r.discrepancies());
        assert!(r.brute_force.subdirectly_irreducible);
        assert!(!r.brute_force.matrix_subdirectly_irreducible);
    }

    #[test]
    fn end0_family() {
        assert!(end0_family_match(&gen_l2()).unwrap().is_some());
        assert!(end0_family_match(&gen_lukasiewicz(2).unwrap()).unwrap().is_none());
        let m = end0_family_match(&gen_end0(&chain(3).unwrap()).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(m.lattice_size, 3);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(crosscheck(&gen_l2(), 1).is_err());
        let one = FiniteSemiring::from_fn("1", vec!["x".into()], |_, _| 0, |_, _| 0);
        assert!(matches!(crosscheck(&one, 2), Err(Error::Degenerate(_))));
    }
}
