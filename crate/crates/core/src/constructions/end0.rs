use std::collections::BTreeMap;

use crate::constructions::FiniteLattice;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

/// Largest lattice accepted by [`gen_end0`]; all `|L|^|L|` self-maps are
/// enumerated.
pub const MAX_END0_LATTICE: usize = 6;

/// A self-map of a lattice given by its image vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JoinEndomorphism {
    pub image: Vec<usize>,
}

impl JoinEndomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Number of distinct values.
    pub fn rank(&self) -> usize {
        let mut v = self.image.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }

    pub fn is_join_endomorphism(&self, lattice: &FiniteLattice) -> bool {
        let k = lattice.size();
        self.image[lattice.bottom()] == lattice.bottom()
            && (0..k)
                .all(|x| (0..k).all(|y| self.image[lattice.join(x, y)] == lattice.join(self.image[x], self.image[y])))
    }

    fn label(&self, lattice: &FiniteLattice) -> String {
        let parts: Vec<&str> = self.image.iter().map(|&v| lattice.label(v)).collect();
        format!("({})", parts.join(","))
    }
}

/// `End_0(L)` together with its maps and the marker of `X(L)`.
#[derive(Clone, Debug)]
pub struct End0 {
    pub semiring: FiniteSemiring,
    /// `maps[i]` is element `i` of `semiring`.
    pub maps: Vec<JoinEndomorphism>,
    /// Indices of the maps with at most two values.
    pub xl: Vec<usize>,
}

/// Enumerates the bottom-preserving join endomorphisms of `lattice` in
/// lexicographic order of their image vectors; addition is the pointwise
/// join and multiplication is composition, `(f g)(x) = f(g(x))`.
pub fn end0(lattice: &FiniteLattice) -> Result<End0> {
    let k = lattice.size();
    if k > MAX_END0_LATTICE {
        return Err(Error::Size {
            what: "End0 enumeration".into(),
            size: (k as u128).pow(k as u32),
            bound: MAX_END0_LATTICE.pow(MAX_END0_LATTICE as u32),
        });
    }
    let mut maps = Vec::new();
    let mut image = vec![0usize; k];
    loop {
        let f = JoinEndomorphism { image: image.clone() };
        if f.is_join_endomorphism(lattice) {
            maps.push(f);
        }
        // odometer, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            image[pos] += 1;
            if image[pos] < k {
                break;
            }
            image[pos] = 0;
        }
        if image.iter().all(|&v| v == 0) {
            break;
        }
    }
    let index: BTreeMap<&[usize], usize> = maps.iter().enumerate().map(|(i, f)| (f.image.as_slice(), i)).collect();
    let lookup = |img: Vec<usize>| index[img.as_slice()];
    let labels = maps.iter().map(|f| f.label(lattice)).collect();
    let semiring = FiniteSemiring::from_fn(
        format!("End0(L{k})"),
        labels,
        |a, b| {
            lookup(
                (0..k)
                    .map(|x| lattice.join(maps[a].image[x], maps[b].image[x]))
                    .collect(),
            )
        },
        |a, b| lookup((0..k).map(|x| maps[a].image[maps[b].image[x]]).collect()),
    );
    let xl = (0..maps.len()).filter(|&i| maps[i].rank() <= 2).collect();
    Ok(End0 { semiring, maps, xl })
}

pub fn gen_end0(lattice: &FiniteLattice) -> Result<FiniteSemiring> {
    Ok(end0(lattice)?.semiring)
}

/// Indices of `X(L)` inside [`gen_end0`]'s element order.
pub fn gen_xl(lattice: &FiniteLattice) -> Result<Vec<usize>> {
    Ok(end0(lattice)?.xl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain, gen_l2, small_lattices};
    use crate::semiring::{element_profile, is_isomorphic};

    #[test]
    fn end0_of_three_chain() {
        let c3 = chain(3).unwrap();
        let e = end0(&c3).unwrap();
        assert_eq!(e.semiring.size(), 6);
        assert_eq!(e.xl.len(), 5);
        let excluded: Vec<_> = (0..6).filter(|i| !e.xl.contains(i)).collect();
        assert_eq!(excluded.len(), 1);
        assert_eq!(e.maps[excluded[0]].image, vec![0, 1, 2]);
        assert!(e.semiring.verify().passed());
    }

    #[test]
    fn end0_of_l2_is_l2() {
        let s = gen_end0(&chain(2).unwrap()).unwrap();
        assert!(is_isomorphic(&s, &gen_l2()).is_some());
    }

    #[test]
    fn zero_and_unity_are_the_expected_maps() {
        for lat in small_lattices(4).unwrap() {
            let e = end0(&lat).unwrap();
            let p = element_profile(&e.semiring);
            let zero = p.zero.expect("constant-bottom map is a zero");
            assert!(e.maps[zero].image.iter().all(|&v| v == lat.bottom()));
            let unity = p.unity.expect("identity map is the unity");
            assert_eq!(e.maps[unity].image, (0..lat.size()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn xl_is_an_ideal() {
        for lat in small_lattices(4).unwrap() {
            let e = end0(&lat).unwrap();
            let s = &e.semiring;
            for &x in &e.xl {
                for &y in &e.xl {
                    assert!(e.maps[s.add(x, y)].is_join_endomorphism(&lat));
                }
                for g in s.elements() {
                    assert!(e.xl.contains(&s.mul(x, g)) && e.xl.contains(&s.mul(g, x)));
                }
            }
        }
    }

    #[test]
    fn oversized_lattice_is_rejected() {
        assert!(matches!(end0(&chain(7).unwrap()), Err(Error::Size { .. })));
    }
}
