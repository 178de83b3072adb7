use rayon::prelude::*;

use crate::checkers::{ConditionId, ConditionVerdict, Witness};
use crate::error::{Error, Result};
use crate::semiring::{element_profile, is_almost_integral, natural_order, FiniteSemiring, NaturalOrder};

/// Elements of `S^1`: `None` is the adjoined identity.
pub type S1 = Option<usize>;

/// Multipliers `c, d` in `S^1` with `cad != 0 = cbd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Separator {
    pub c: S1,
    pub d: S1,
}

impl Separator {
    pub fn apply(self, s: &FiniteSemiring, x: usize) -> usize {
        let x = self.c.map_or(x, |c| s.mul(c, x));
        self.d.map_or(x, |d| s.mul(x, d))
    }
}

fn ordered_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |a| (0..k).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// First `(c, d)` with `ca != cb` and `ad != bd`.
pub fn find_one_sided_separation(s: &FiniteSemiring, a: usize, b: usize) -> Option<(usize, usize)> {
    let c = s.elements().find(|&c| s.mul(c, a) != s.mul(c, b))?;
    let d = s.elements().find(|&d| s.mul(a, d) != s.mul(b, d))?;
    Some((c, d))
}

pub fn check_prop61(s: &FiniteSemiring) -> ConditionVerdict {
    let bad = ordered_pairs(s.size())
        .filter(|&(a, b)| a < b)
        .find(|&(a, b)| find_one_sided_separation(s, a, b).is_none());
    ConditionVerdict::from_counterexample(
        ConditionId::OneSidedSeparation,
        bad.map(|(a, b)| Witness::new("no-separating-multipliers", &[("a", a), ("b", b)])),
    )
}

/// First `(c, f, d, g)` with `ca + fe != cb + fe` and `ad + eg != bd + eg`.
pub fn find_translated_separation(s: &FiniteSemiring, a: usize, b: usize, e: usize) -> Option<[usize; 4]> {
    let k = s.size();
    let pairs = || (0..k).flat_map(move |x| (0..k).map(move |y| (x, y)));
    let (c, f) = pairs().find(|&(c, f)| {
        let fe = s.mul(f, e);
        s.add(s.mul(c, a), fe) != s.add(s.mul(c, b), fe)
    })?;
    let (d, g) = pairs().find(|&(d, g)| {
        let eg = s.mul(e, g);
        s.add(s.mul(a, d), eg) != s.add(s.mul(b, d), eg)
    })?;
    Some([c, f, d, g])
}

pub fn check_p71(s: &FiniteSemiring) -> Result<ConditionVerdict> {
    natural_order(s)?;
    let k = s.size();
    let bad = (0..k * k * k).into_par_iter().find_map_first(|t| {
        let (a, b, e) = (t / (k * k), (t / k) % k, t % k);
        (a != b && find_translated_separation(s, a, b, e).is_none()).then_some((a, b, e))
    });
    Ok(ConditionVerdict::from_counterexample(
        ConditionId::TranslatedSeparation,
        bad.map(|(a, b, e)| Witness::new("no-separating-translation", &[("a", a), ("b", b), ("e", e)])),
    ))
}

pub fn check_downward_directed(s: &FiniteSemiring) -> Result<ConditionVerdict> {
    let order = natural_order(s)?;
    let k = s.size();
    let bad = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .find(|&(a, b)| !(0..k).any(|c| order.leq(c, a) && order.leq(c, b)));
    Ok(ConditionVerdict::from_counterexample(
        ConditionId::DownwardDirected,
        bad.map(|(a, b)| Witness::new("no-common-lower-bound", &[("a", a), ("b", b)])),
    ))
}

/// First `c, d` (identity first when `allow_s1`) with `cad != 0 = cbd`.
pub fn find_zero_separator(s: &FiniteSemiring, zero: usize, a: usize, b: usize, allow_s1: bool) -> Option<Separator> {
    let mut choices: Vec<S1> = Vec::with_capacity(s.size() + 1);
    if allow_s1 {
        choices.push(None);
    }
    choices.extend(s.elements().map(Some));
    choices.iter().find_map(|&c| {
        choices.iter().find_map(|&d| {
            let sep = Separator { c, d };
            (sep.apply(s, a) != zero && sep.apply(s, b) == zero).then_some(sep)
        })
    })
}

/// For all `a` not below `b`: some `c, d` with `cad != 0 = cbd`, with `c, d`
/// ranging over `S^1` or over `S`.
pub fn zero_separation(s: &FiniteSemiring, zero: usize, allow_s1: bool) -> ConditionVerdict {
    let id = if allow_s1 {
        ConditionId::ZeroSeparation
    } else {
        ConditionId::ZeroSeparationInS
    };
    let bad = ordered_pairs(s.size())
        .filter(|&(a, b)| s.add(a, b) != b)
        .find(|&(a, b)| find_zero_separator(s, zero, a, b, allow_s1).is_none());
    ConditionVerdict::from_counterexample(
        id,
        bad.map(|(a, b)| Witness::new("no-zero-separator", &[("a", a), ("b", b)])),
    )
}

/// The least element of `S \ {0}`, or two distinct minimal ones.
pub fn least_nonzero(order: &NaturalOrder, zero: usize) -> std::result::Result<usize, (usize, usize)> {
    let k = order.size();
    let minimal: Vec<usize> = (0..k)
        .filter(|&a| a != zero && (0..k).all(|x| x == zero || x == a || !order.lt(x, a)))
        .collect();
    match minimal.as_slice() {
        [e] => Ok(*e),
        [x, y, ..] => Err((*x, *y)),
        [] => Err((zero, zero)),
    }
}

fn zero_and_least(
    s: &FiniteSemiring,
    id: ConditionId,
) -> Result<std::result::Result<(usize, usize), ConditionVerdict>> {
    if !is_almost_integral(s) {
        return Err(Error::condition(
            "almost-integral",
            format!("`{}` is not almost integral", s.name()),
        ));
    }
    let order = natural_order(s)?;
    let Some(zero) = element_profile(s).zero else {
        return Ok(Err(ConditionVerdict::fail(id, Witness::new("no-zero", &[]))));
    };
    match least_nonzero(&order, zero) {
        Ok(e) => Ok(Ok((zero, e))),
        Err((x, y)) if x != y => Ok(Err(ConditionVerdict::fail(
            id,
            Witness::new("two-minimal-non-zero", &[("x", x), ("y", y)]),
        ))),
        Err(_) => Ok(Err(ConditionVerdict::fail(id, Witness::new("no-non-zero", &[])))),
    }
}

/// Zero, least non-zero element and zero separation over `S^1`. The
/// characterization of subdirect irreducibility for almost integral
/// semirings.
pub fn check_integral_main(s: &FiniteSemiring) -> Result<ConditionVerdict> {
    Ok(match zero_and_least(s, ConditionId::ZeroSeparation)? {
        Ok((zero, _)) => zero_separation(s, zero, true),
        Err(v) => v,
    })
}

/// As [`check_integral_main`] with multipliers from `S` only. The
/// characterization of subdirectly irreducible matrix semirings over almost
/// integral semirings.
pub fn check_si3(s: &FiniteSemiring) -> Result<ConditionVerdict> {
    Ok(match zero_and_least(s, ConditionId::ZeroSeparationInS)? {
        Ok((zero, _)) => zero_separation(s, zero, false),
        Err(v) => v,
    })
}

pub fn find_two_sided_separation(s: &FiniteSemiring, a: usize, b: usize) -> Option<(usize, usize)> {
    s.elements()
        .flat_map(|c| s.elements().map(move |d| (c, d)))
        .find(|&(c, d)| s.mul(s.mul(c, a), d) != s.mul(s.mul(c, b), d))
}

/// For all `a != b` some `c, d` with `cad != cbd`.
pub fn check_two_sided_separation(s: &FiniteSemiring) -> ConditionVerdict {
    let bad = ordered_pairs(s.size())
        .filter(|&(a, b)| a < b)
        .find(|&(a, b)| find_two_sided_separation(s, a, b).is_none());
    ConditionVerdict::from_counterexample(
        ConditionId::TwoSidedSeparation,
        bad.map(|(a, b)| Witness::new("no-separating-multipliers", &[("a", a), ("b", b)])),
    )
}

/// The greatest element must be neither left nor right absorbing.
pub fn check_omega(s: &FiniteSemiring) -> Result<ConditionVerdict> {
    let order = natural_order(s)?;
    let omega = order
        .greatest()
        .ok_or_else(|| Error::condition("greatest", format!("`{}` has no greatest element", s.name())))?;
    let left = s.elements().all(|a| s.mul(omega, a) == omega);
    let right = s.elements().all(|a| s.mul(a, omega) == omega);
    let id = ConditionId::GreatestNotAbsorbing;
    Ok(match (left, right) {
        (false, false) => ConditionVerdict::pass(id),
        (true, _) => ConditionVerdict::fail(id, Witness::new("left-absorbing", &[("omega", omega)])),
        (false, true) => ConditionVerdict::fail(id, Witness::new("right-absorbing", &[("omega", omega)])),
    })
}

/// Runs the named condition.
pub fn check_condition(s: &FiniteSemiring, id: ConditionId) -> Result<ConditionVerdict> {
    match id {
        ConditionId::OneSidedSeparation => Ok(check_prop61(s)),
        ConditionId::TranslatedSeparation => check_p71(s),
        ConditionId::DownwardDirected => check_downward_directed(s),
        ConditionId::ZeroSeparation => check_integral_main(s),
        ConditionId::ZeroSeparationInS => check_si3(s),
        ConditionId::TwoSidedSeparation => Ok(check_two_sided_separation(s)),
        ConditionId::GreatestNotAbsorbing => check_omega(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoin_least, adjoin_unity, gen_boolean, gen_l2, gen_lukasiewicz};

    fn b2e() -> FiniteSemiring {
        adjoin_least(&gen_boolean(2).unwrap()).unwrap()
    }

    #[test]
    fn one_sided_separation() {
        assert!(check_prop61(&gen_l2()).holds);
        assert!(check_prop61(&gen_lukasiewicz(2).unwrap()).holds);
        let s = b2e();
        let v = check_prop61(&s);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.get("a"), w.get("b")), (Some(0), s.index_of("e")));
    }

    #[test]
    fn translated_separation() {
        assert!(check_p71(&gen_l2()).unwrap().holds);
        assert!(check_p71(&gen_lukasiewicz(2).unwrap()).unwrap().holds);
        let v = check_p71(&b2e()).unwrap();
        assert!(!v.holds);
        assert_eq!(find_translated_separation(&gen_l2(), 0, 1, 0), Some([1, 0, 1, 0]));
    }

    #[test]
    fn directedness() {
        assert!(check_downward_directed(&gen_boolean(2).unwrap()).unwrap().holds);
        // {a, b, top} with a, b incomparable and no bottom
        let s = FiniteSemiring::from_fn(
            "V",
            vec!["a".into(), "b".into(), "t".into()],
            |x, y| if x == y { x } else { 2 },
            |_, _| 2,
        );
        let v = check_downward_directed(&s).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().elements, vec![("a", 0), ("b", 1)]);
    }

    #[test]
    fn zero_separation_conditions() {
        let l3 = gen_lukasiewicz(2).unwrap();
        assert!(check_integral_main(&l3).unwrap().holds);
        assert!(check_si3(&l3).unwrap().holds);
        assert!(check_integral_main(&b2e()).unwrap().holds);
        assert!(!check_si3(&b2e()).unwrap().holds);
        assert!(check_si3(&adjoin_unity(&b2e()).unwrap()).unwrap().holds);
        let v = check_integral_main(&gen_boolean(2).unwrap()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().kind, "two-minimal-non-zero");
    }

    #[test]
    fn omega() {
        assert!(check_omega(&gen_l2()).unwrap().holds);
        assert!(check_omega(&gen_lukasiewicz(2).unwrap()).unwrap().holds);
        let c = FiniteSemiring::from_fn("c", vec!["0".into(), "1".into()], |a, b| a.max(b), |_, _| 1);
        let v = check_omega(&c).unwrap();
        assert_eq!(v.witness.unwrap().kind, "left-absorbing");
    }

    #[test]
    fn condition_names_round_trip() {
        for id in ConditionId::ALL {
            assert_eq!(ConditionId::parse(id.name()), Some(id));
            assert_eq!(serde_json::to_value(id).unwrap(), id.name());
        }
    }
}
