use crate::checkers::zero_separation;
use crate::error::{Error, Result};
use crate::semiring::{element_profile, is_almost_integral, natural_order, FiniteSemiring};

/// The two-element lattice `{0, 1}` with join and meet.
pub fn gen_l2() -> FiniteSemiring {
    FiniteSemiring::from_fn("L2", vec!["0".into(), "1".into()], |a, b| a.max(b), |a, b| a.min(b))
}

/// Powerset of `atoms` atoms under union and intersection. Element `i` is
/// the subset with bitmask `i`, labeled by its atom letters (`0` for the
/// empty set).
pub fn gen_boolean(atoms: usize) -> Result<FiniteSemiring> {
    if !(1..=4).contains(&atoms) {
        return Err(Error::Input(format!("boolean algebra needs 1..=4 atoms, got {atoms}")));
    }
    let labels = (0..1usize << atoms)
        .map(|mask| {
            if mask == 0 {
                "0".to_owned()
            } else {
                (0..atoms)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| (b'a' + i as u8) as char)
                    .collect()
            }
        })
        .collect();
    Ok(FiniteSemiring::from_fn(
        format!("B{atoms}"),
        labels,
        |a, b| a | b,
        |a, b| a & b,
    ))
}

/// Lukasiewicz chain `{0, ..., u}` with `max` and `max(a + b - u, 0)`.
pub fn gen_lukasiewicz(u: usize) -> Result<FiniteSemiring> {
    if u < 1 {
        return Err(Error::Input("Lukasiewicz chain needs u >= 1".into()));
    }
    Ok(FiniteSemiring::from_fn(
        format!("Luk{}", u + 1),
        (0..=u).map(|i| i.to_string()).collect(),
        |a, b| a.max(b),
        move |a, b| (a + b).saturating_sub(u),
    ))
}

fn fresh_label(s: &FiniteSemiring, wanted: &str) -> String {
    let mut label = wanted.to_owned();
    while s.index_of(&label).is_some() {
        label.push('\'');
    }
    label
}

/// Adds a new element that is both unity and greatest.
pub fn adjoin_unity(s: &FiniteSemiring) -> Result<FiniteSemiring> {
    if !is_almost_integral(s) {
        return Err(Error::condition(
            "almost-integral",
            format!("`{}` is not almost integral", s.name()),
        ));
    }
    let u = s.size();
    let mut labels = s.labels().to_vec();
    labels.push(fresh_label(s, "1"));
    Ok(FiniteSemiring::from_fn(
        format!("{}+1", s.name()),
        labels,
        |a, b| if a == u || b == u { u } else { s.add(a, b) },
        |a, b| match (a == u, b == u) {
            (true, _) => b,
            (false, true) => a,
            _ => s.mul(a, b),
        },
    ))
}

/// The corner `{uau : uau <= u}` of an idempotent `u`, with inherited
/// operations. Its unity and greatest element is `u`.
pub fn corner(s: &FiniteSemiring, u: usize) -> Result<FiniteSemiring> {
    let order = natural_order(s)?;
    if s.mul(u, u) != u {
        return Err(Error::condition(
            "idempotent-corner",
            format!("{} * {} != {}", s.label(u), s.label(u), s.label(u)),
        ));
    }
    let mut members: Vec<usize> = s
        .elements()
        .map(|a| s.mul(s.mul(u, a), u))
        .filter(|&x| order.leq(x, u))
        .collect();
    members.sort_unstable();
    members.dedup();
    let mut index = vec![usize::MAX; s.size()];
    for (i, &x) in members.iter().enumerate() {
        index[x] = i;
    }
    for &x in &members {
        for &y in &members {
            if index[s.add(x, y)] == usize::MAX || index[s.mul(x, y)] == usize::MAX {
                return Err(Error::condition(
                    "closed-corner",
                    format!("corner is not closed at ({}, {})", s.label(x), s.label(y)),
                ));
            }
        }
    }
    let labels = members.iter().map(|&x| s.label(x).to_owned()).collect();
    Ok(FiniteSemiring::from_fn(
        format!("{}_{}", s.name(), s.label(u)),
        labels,
        |a, b| index[s.add(members[a], members[b])],
        |a, b| index[s.mul(members[a], members[b])],
    ))
}

/// Adds a new element `e` just above the zero and below every other
/// non-zero element, with `e * a = a * e = 0` for all `a`.
///
/// The preconditions are re-checked: almost integral with a zero, every
/// `a` not below `b` separated from zero by some `c, d` in `S^1`, and every
/// minimal non-zero element multiplicatively idempotent.
pub fn adjoin_least(s: &FiniteSemiring) -> Result<FiniteSemiring> {
    if !is_almost_integral(s) {
        return Err(Error::condition(
            "almost-integral",
            format!("`{}` is not almost integral", s.name()),
        ));
    }
    let zero = element_profile(s)
        .zero
        .ok_or_else(|| Error::condition("zero", format!("`{}` has no zero element", s.name())))?;
    let sep = zero_separation(s, zero, true);
    if !sep.holds {
        return Err(Error::condition(
            "zero-separation",
            format!("no c, d in S^1 separate {}", sep.describe_witness(s)),
        ));
    }
    let order = natural_order(s)?;
    for a in s.elements().filter(|&a| a != zero) {
        let minimal = s.elements().all(|x| x == zero || !order.lt(x, a));
        if minimal && s.mul(a, a) != a {
            return Err(Error::condition(
                "idempotent-minimal",
                format!("minimal non-zero element {} is not idempotent", s.label(a)),
            ));
        }
    }

    let e = s.size();
    let mut labels = s.labels().to_vec();
    labels.push(fresh_label(s, "e"));
    Ok(FiniteSemiring::from_fn(
        format!("{}+e", s.name()),
        labels,
        |a, b| match (a == e, b == e) {
            (true, true) => e,
            (true, false) => {
                if b == zero {
                    e
                } else {
                    b
                }
            }
            (false, true) => {
                if a == zero {
                    e
                } else {
                    a
                }
            }
            (false, false) => s.add(a, b),
        },
        |a, b| if a == e || b == e { zero } else { s.mul(a, b) },
    ))
}
