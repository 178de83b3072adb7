use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::checkers::conditions::least_nonzero;
use crate::checkers::Witness;
use crate::congruence::is_subdirectly_irreducible;
use crate::error::{Error, Result};
use crate::semiring::{element_profile, is_almost_integral, natural_order, FiniteSemiring};

/// Case analysis of a two-element additively idempotent semiring
/// `{a < b}`: only the lattice case can have simple matrix semirings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "element")]
pub enum TwoElementVerdict {
    IsL2,
    /// `b` is bi-absorbing (from `aa = b`, or `ab = ba = b`).
    BiAbsorbing(usize),
    /// `bb = a`, so every product is `a`.
    SsSingleton,
    /// `ab = b`, `ba = a`: `ax = bx` for every `x`.
    LeftCancellation,
    /// `ab = a`, `ba = b`: `xa = xb` for every `x`.
    RightCancellation,
}

impl TwoElementVerdict {
    pub fn is_l2(self) -> bool {
        self == TwoElementVerdict::IsL2
    }
}

pub fn check_two_element(s: &FiniteSemiring) -> Result<TwoElementVerdict> {
    if s.size() != 2 {
        return Err(Error::Input(format!(
            "expected 2 elements, `{}` has {}",
            s.name(),
            s.size()
        )));
    }
    let order = natural_order(s)?;
    let (a, b) = if order.leq(0, 1) { (0, 1) } else { (1, 0) };
    let m = |x, y| s.mul(x, y);
    Ok(if m(a, a) == b {
        TwoElementVerdict::BiAbsorbing(b)
    } else if m(b, b) == a {
        TwoElementVerdict::SsSingleton
    } else {
        match (m(a, b) == a, m(b, a) == a) {
            (false, false) => TwoElementVerdict::BiAbsorbing(b),
            (false, true) => TwoElementVerdict::LeftCancellation,
            (true, false) => TwoElementVerdict::RightCancellation,
            (true, true) => TwoElementVerdict::IsL2,
        }
    })
}

/// Consequences of subdirect irreducibility for almost integral semirings
/// with at least three elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiPropsReport {
    pub zero: usize,
    pub least_nonzero: usize,
    pub e_squared_zero: bool,
    /// Commutative case: `ae != 0` only for the greatest element `a`.
    pub nonzero_multiple_is_greatest: Option<bool>,
    /// Commutative case with unity: `x + y = 1` forces `x = 1` or `y = 1`.
    pub unity_join_irreducible: Option<bool>,
    pub counterexamples: Vec<Witness>,
}

impl SiPropsReport {
    pub fn holds(&self) -> bool {
        self.e_squared_zero
            && self.nonzero_multiple_is_greatest != Some(false)
            && self.unity_join_irreducible != Some(false)
    }
}

pub fn check_si_props(s: &FiniteSemiring) -> Result<SiPropsReport> {
    if s.size() < 3 {
        return Err(Error::condition(
            "three-elements",
            format!("`{}` has fewer than 3 elements", s.name()),
        ));
    }
    if !is_almost_integral(s) {
        return Err(Error::condition(
            "almost-integral",
            format!("`{}` is not almost integral", s.name()),
        ));
    }
    if !is_subdirectly_irreducible(s)? {
        return Err(Error::condition(
            "subdirectly-irreducible",
            format!("`{}` is not subdirectly irreducible", s.name()),
        ));
    }
    let order = natural_order(s)?;
    let profile = element_profile(s);
    let zero = profile.zero.expect("an SI almost integral semiring has a zero");
    let e = least_nonzero(&order, zero).expect("an SI almost integral semiring has a least non-zero element");
    let mut counterexamples = Vec::new();

    let e_squared_zero = s.mul(e, e) == zero;
    if !e_squared_zero {
        counterexamples.push(Witness::new("e-squared-non-zero", &[("e", e)]));
    }
    let (mut greatest_ok, mut join_irr) = (None, None);
    if s.is_commutative() {
        let bad = s.elements().find(|&a| s.mul(a, e) != zero && !order.is_greatest(a));
        if let Some(a) = bad {
            counterexamples.push(Witness::new(
                "non-greatest-with-nonzero-multiple",
                &[("a", a), ("e", e)],
            ));
        }
        greatest_ok = Some(bad.is_none());
        if let Some(one) = profile.unity {
            let bad = s
                .elements()
                .flat_map(|x| s.elements().map(move |y| (x, y)))
                .find(|&(x, y)| s.add(x, y) == one && x != one && y != one);
            if let Some((x, y)) = bad {
                counterexamples.push(Witness::new("unity-join-reducible", &[("x", x), ("y", y)]));
            }
            join_irr = Some(bad.is_none());
        }
    }
    Ok(SiPropsReport {
        zero,
        least_nonzero: e,
        e_squared_zero,
        nonzero_multiple_is_greatest: greatest_ok,
        unity_join_irreducible: join_irr,
        counterexamples,
    })
}

/// Height `u` when `s` has exactly the tables of the Lukasiewicz chain on
/// `{0, ..., u}` (element `i` is the value `i`).
pub fn lukasiewicz_height(s: &FiniteSemiring) -> Option<usize> {
    let u = s.size().checked_sub(1).filter(|&u| u >= 1)?;
    let ok = s.elements().all(|a| {
        s.elements()
            .all(|b| s.add(a, b) == a.max(b) && s.mul(a, b) == (a + b).saturating_sub(u))
    });
    ok.then_some(u)
}

/// For `a > b` in a Lukasiewicz chain, the multipliers `c = u - b`, `d = u`
/// with `cad != 0 = cbd`.
pub fn mv_basic_witness(s: &FiniteSemiring, a: usize, b: usize) -> Result<(usize, usize)> {
    let u = lukasiewicz_height(s).ok_or_else(|| {
        Error::condition(
            "lukasiewicz-chain",
            format!("`{}` is not a Lukasiewicz chain", s.name()),
        )
    })?;
    if a >= s.size() || b >= s.size() {
        return Err(Error::Input(format!("element out of range for `{}`", s.name())));
    }
    if a <= b {
        return Err(Error::condition(
            "a-not-below-b",
            format!("{} <= {}", s.label(a), s.label(b)),
        ));
    }
    let (c, d) = (u - b, u);
    let sep = |x| s.mul(s.mul(c, x), d);
    if sep(a) == 0 || sep(b) != 0 {
        return Err(Error::condition(
            "a-not-below-b",
            format!("c = {c}, d = {d} do not separate ({a}, {b})"),
        ));
    }
    Ok((c, d))
}

/// For `a != b` in `R(max, +)` and a negative `f'`: `c = a` and `f = k f'`
/// with the least positive integer `k` such that
/// `f <= min(c + a - e, c + b - e)`. Then
/// `max(c + a, f + e) != max(c + b, f + e)`.
pub fn tropical_witness(
    a: &BigRational,
    b: &BigRational,
    e: &BigRational,
    fprime: &BigRational,
) -> Result<(BigRational, BigRational)> {
    if a == b {
        return Err(Error::condition("distinct", format!("a = b = {a}")));
    }
    if !fprime.is_negative() {
        return Err(Error::condition("negative-f", format!("f' = {fprime} is not negative")));
    }
    let c = a.clone();
    let bound = (&c + a - e).min(&c + b - e);
    // k f' <= bound  <=>  k >= bound / f'
    let k = (&bound / fprime).ceil().max(BigRational::one());
    let f = &k * fprime;
    debug_assert!(k.is_integer() && f <= bound);
    let lhs = (&c + a).max(&f + e);
    let rhs = (&c + b).max(&f + e);
    if lhs == rhs {
        return Err(Error::condition("separation", format!("max terms agree at {lhs}")));
    }
    Ok((c, f))
}

/// Integer shorthand for [`tropical_witness`] arguments.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoin_least, gen_boolean, gen_l2, gen_lukasiewicz};

    fn two(mul: [[usize; 2]; 2]) -> FiniteSemiring {
        FiniteSemiring::from_fn(
            "T",
            vec!["a".into(), "b".into()],
            |x, y| x.max(y),
            move |x, y| mul[x][y],
        )
    }

    #[test]
    fn two_element_cases() {
        assert_eq!(check_two_element(&gen_l2()).unwrap(), TwoElementVerdict::IsL2);
        assert_eq!(
            check_two_element(&two([[0, 1], [1, 1]])).unwrap(),
            TwoElementVerdict::BiAbsorbing(1)
        );
        assert_eq!(
            check_two_element(&two([[0, 1], [0, 1]])).unwrap(),
            TwoElementVerdict::LeftCancellation
        );
        assert_eq!(
            check_two_element(&two([[0, 0], [1, 1]])).unwrap(),
            TwoElementVerdict::RightCancellation
        );
        assert_eq!(
            check_two_element(&two([[0, 0], [0, 0]])).unwrap(),
            TwoElementVerdict::SsSingleton
        );
        assert_eq!(
            check_two_element(&two([[1, 1], [1, 1]])).unwrap(),
            TwoElementVerdict::BiAbsorbing(1)
        );
        assert!(check_two_element(&gen_lukasiewicz(2).unwrap()).is_err());
    }

    #[test]
    fn si_props() {
        for u in 2..=4 {
            let r = check_si_props(&gen_lukasiewicz(u).unwrap()).unwrap();
            assert!(r.holds(), "u = {u}: {r:?}");
            assert_eq!((r.zero, r.least_nonzero), (0, 1));
            assert_eq!(r.unity_join_irreducible, Some(true));
        }
        let s = adjoin_least(&gen_boolean(2).unwrap()).unwrap();
        let r = check_si_props(&s).unwrap();
        assert!(r.e_squared_zero && r.holds());
        assert!(check_si_props(&gen_boolean(2).unwrap()).is_err());
        assert!(check_si_props(&gen_l2()).is_err());
    }

    #[test]
    fn mv_basic() {
        let s = gen_lukasiewicz(3).unwrap();
        assert_eq!(mv_basic_witness(&s, 2, 1).unwrap(), (2, 3));
        assert_eq!(mv_basic_witness(&s, 3, 0).unwrap(), (3, 3));
        assert!(mv_basic_witness(&s, 1, 2).is_err());
        assert!(mv_basic_witness(&gen_boolean(2).unwrap(), 1, 0).is_err());
    }

    #[test]
    fn tropical() {
        let r = rational;
        assert_eq!(tropical_witness(&r(1), &r(2), &r(5), &r(-1)).unwrap(), (r(1), r(-3)));
        assert_eq!(tropical_witness(&r(0), &r(1), &r(0), &r(-1)).unwrap(), (r(0), r(-1)));
        assert!(tropical_witness(&r(1), &r(1), &r(0), &r(-1)).is_err());
        assert!(tropical_witness(&r(1), &r(2), &r(0), &r(0)).is_err());
    }
}
