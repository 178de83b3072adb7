//! Exact arithmetic in the lexicographically ordered group `G x Z`, where
//! `G` is the group of rational matrices `[[alpha, beta], [0, 1]]` with
//! `alpha > 0`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The element `((alpha, beta), k)`. Field order matches the total order:
/// compare `alpha`, then `beta`, then `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexGroupElement {
    alpha: BigRational,
    beta: BigRational,
    k: i64,
}

impl LexGroupElement {
    pub fn new(alpha: BigRational, beta: BigRational, k: i64) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::Input(format!("alpha must be positive, got {alpha}")));
        }
        Ok(LexGroupElement { alpha, beta, k })
    }

    /// Integer-fraction shorthand: `alpha = an/ad`, `beta = bn/bd`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64, k: i64) -> Result<Self> {
        if ad == 0 || bd == 0 {
            return Err(Error::Input("zero denominator".into()));
        }
        Self::new(ratio(an, ad), ratio(bn, bd), k)
    }

    /// The group unity `o = (E, 0)`.
    pub fn unity() -> Self {
        LexGroupElement {
            alpha: BigRational::one(),
            beta: BigRational::zero(),
            k: 0,
        }
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl fmt::Display for LexGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),{})", self.alpha, self.beta, self.k)
    }
}

impl Serialize for LexGroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `((a, b), k) * ((a', b'), k') = ((a a', a b' + b), k + k')`.
pub fn lex_mul(x: &LexGroupElement, y: &LexGroupElement) -> LexGroupElement {
    LexGroupElement {
        alpha: &x.alpha * &y.alpha,
        beta: &x.alpha * &y.beta + &x.beta,
        k: x.k + y.k,
    }
}

pub fn lex_inv(x: &LexGroupElement) -> LexGroupElement {
    LexGroupElement {
        alpha: x.alpha.recip(),
        beta: -(&x.beta / &x.alpha),
        k: -x.k,
    }
}

pub fn lex_cmp(x: &LexGroupElement, y: &LexGroupElement) -> Ordering {
    x.cmp(y)
}

pub fn lex_join(x: &LexGroupElement, y: &LexGroupElement) -> LexGroupElement {
    x.max(y).clone()
}

pub fn lex_meet(x: &LexGroupElement, y: &LexGroupElement) -> LexGroupElement {
    x.min(y).clone()
}

/// The product `(a * u^-1 * b) v o` of the interval `[o, u]`.
pub fn mv_product(a: &LexGroupElement, b: &LexGroupElement, u: &LexGroupElement) -> Result<LexGroupElement> {
    let o = LexGroupElement::unity();
    if *u <= o {
        return Err(Error::condition("interval", format!("u = {u} is not above o")));
    }
    for x in [a, b] {
        if *x < o || x > u {
            return Err(Error::condition("interval", format!("{x} is outside [o, {u}]")));
        }
    }
    Ok(lex_join(&lex_mul(&lex_mul(a, &lex_inv(u)), b), &o))
}

/// Grid points of `[o, u]`: `alpha = p/q` with `1 <= p, q <= q_max`, `beta`
/// in `{0} U {+-p/q}` on the same grid, `k` in `-k_max..=k_max`. Sorted and
/// deduplicated.
pub fn sample_interval(u: &LexGroupElement, q_max: i64, k_max: i64) -> Vec<LexGroupElement> {
    let o = LexGroupElement::unity();
    let mut fracs: Vec<BigRational> = (1..=q_max)
        .flat_map(|p| (1..=q_max).map(move |q| ratio(p, q)))
        .collect();
    fracs.sort();
    fracs.dedup();
    let mut betas = vec![BigRational::zero()];
    betas.extend(fracs.iter().cloned());
    betas.extend(fracs.iter().map(|f| -f));
    betas.sort();

    let mut out = Vec::new();
    for alpha in &fracs {
        for beta in &betas {
            for k in -k_max..=k_max {
                let x = LexGroupElement {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    k,
                };
                if x >= o && x <= *u {
                    out.push(x);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
