//! Congruences as partitions of the element set.
//!
//! Principal congruences are generated by union-find with a FIFO worklist:
//! whenever two elements `x, y` are merged, the pairs `(x+c, y+c)`,
//! `(cx, cy)` and `(xc, yc)` are merged for every `c`. Iterating these
//! elementary translations to a fixpoint gives the least congruence
//! containing the seed.
//!
//! For additively idempotent semirings every non-identity congruence
//! contains a covering pair `z < y` of the natural order (if `(a, b)` is
//! related then so is `(a, a + b)`, and then `(z, a + b)` for any `z` with
//! `a <= z < a + b`). Simplicity and the monolith are therefore decided from
//! the principal congruences of covering pairs only.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::MatrixSemiring;
use crate::semiring::{natural_order, FiniteSemiring};

/// Disjoint-set forest with union by size and path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    classes: usize,
}

impl UnionFind {
    pub(crate) fn new(k: usize) -> Self {
        UnionFind {
            parent: (0..k as u32).collect(),
            size: vec![1; k],
            classes: k,
        }
    }

    #[inline]
    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Returns true when `x` and `y` were in different classes.
    #[inline]
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx as u32;
        self.size[rx] += self.size[ry];
        self.classes -= 1;
        true
    }

    pub(crate) fn classes(&self) -> usize {
        self.classes
    }

    pub(crate) fn into_partition(mut self) -> Partition {
        let k = self.parent.len();
        let roots: Vec<usize> = (0..k).map(|x| self.find(x)).collect();
        Partition::from_keys(&roots)
    }
}

/// An equivalence relation on `0..k`, stored as canonical block ids
/// (blocks numbered by their least member).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    block: Vec<u32>,
    blocks: usize,
}

impl Partition {
    pub fn identity(k: usize) -> Self {
        Partition {
            block: (0..k as u32).collect(),
            blocks: k,
        }
    }

    pub fn full(k: usize) -> Self {
        Partition {
            block: vec![0; k],
            blocks: k.min(1),
        }
    }

    /// Partition whose blocks are the fibres of `keys`.
    pub fn from_keys<K: Ord + Clone>(keys: &[K]) -> Self {
        let mut ids: BTreeMap<K, u32> = BTreeMap::new();
        let block = keys
            .iter()
            .map(|key| {
                let next = ids.len() as u32;
                *ids.entry(key.clone()).or_insert(next)
            })
            .collect();
        Partition {
            block,
            blocks: ids.len(),
        }
    }

    /// Builds a partition of `0..k` from explicit blocks; elements not
    /// mentioned become singletons.
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut key: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for block in blocks {
            let Some(&first) = block.first() else { continue };
            for &x in block {
                if x >= k || seen[x] {
                    return Err(Error::Input(format!(
                        "element {x} is out of range or appears twice in the blocks"
                    )));
                }
                seen[x] = true;
                key[x] = first;
            }
        }
        Ok(Partition::from_keys(&key))
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.block[a] as usize
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn is_identity(&self) -> bool {
        self.blocks == self.block.len()
    }

    pub fn is_full(&self) -> bool {
        self.blocks <= 1
    }

    /// Blocks as sorted index lists, ordered by least member.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (x, &b) in self.block.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    pub fn intersect(&self, other: &Partition) -> Partition {
        assert_eq!(self.size(), other.size());
        let keys: Vec<(u32, u32)> = self.block.iter().copied().zip(other.block.iter().copied()).collect();
        Partition::from_keys(&keys)
    }

    /// `self` is contained in `other` as a relation.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        let mut image = vec![u32::MAX; self.blocks];
        self.block.iter().zip(&other.block).all(|(&b, &o)| {
            let slot = &mut image[b as usize];
            if *slot == u32::MAX {
                *slot = o;
            }
            *slot == o
        })
    }

    /// Least related pair `(a, b)` with `a < b`, if any.
    pub fn first_nontrivial_pair(&self) -> Option<(usize, usize)> {
        let mut first_of = vec![usize::MAX; self.blocks];
        let mut best: Option<(usize, usize)> = None;
        for (x, &b) in self.block.iter().enumerate() {
            let f = &mut first_of[b as usize];
            if *f == usize::MAX {
                *f = x;
            } else {
                let cand = (*f, x);
                if best.is_none_or(|p| cand < p) {
                    best = Some(cand);
                }
            }
        }
        best
    }

    /// Blocks as label lists; the serialized form of a partition.
    pub fn labeled_blocks(&self, s: &FiniteSemiring) -> Vec<Vec<String>> {
        self.blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|x| s.label(x).to_owned()).collect())
            .collect()
    }

    pub fn to_json(&self, s: &FiniteSemiring) -> String {
        serde_json::to_string(&self.labeled_blocks(s)).expect("blocks serialize")
    }

    pub fn from_json(s: &FiniteSemiring, text: &str) -> Result<Self> {
        let blocks: Vec<Vec<String>> = serde_json::from_str(text).map_err(|source| Error::Json {
            context: "partition".into(),
            source,
        })?;
        let blocks = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|l| {
                        s.index_of(l)
                            .ok_or_else(|| Error::Input(format!("unknown element label {l:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(s.size(), &blocks)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Never,
    /// Halt once every element is in one class.
    Full,
    /// Halt once the two elements are related.
    Related(usize, usize),
}

/// Least congruence containing `seeds`. The flag is true when the closure
/// halted early because `stop` was reached.
pub(crate) fn close(s: &FiniteSemiring, seeds: &[(usize, usize)], stop: Stop) -> (UnionFind, bool) {
    let k = s.size();
    let mut uf = UnionFind::new(k);
    let mut queue: VecDeque<(u32, u32)> = VecDeque::new();

    let reached = |uf: &mut UnionFind| match stop {
        Stop::Never => false,
        Stop::Full => uf.classes() == 1,
        Stop::Related(c, d) => uf.find(c) == uf.find(d),
    };
    if reached(&mut uf) {
        return (uf, true);
    }
    for &(a, b) in seeds {
        if uf.union(a, b) {
            queue.push_back((a as u32, b as u32));
            if reached(&mut uf) {
                return (uf, true);
            }
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        let (x, y) = (x as usize, y as usize);
        let (ax, ay) = (s.add_row(x), s.add_row(y));
        let (lx, ly) = (s.mul_col(x), s.mul_col(y));
        let (rx, ry) = (s.mul_row(x), s.mul_row(y));
        for c in 0..k {
            for (p, q) in [(ax[c], ay[c]), (lx[c], ly[c]), (rx[c], ry[c])] {
                if p != q && uf.union(p as usize, q as usize) {
                    queue.push_back((p, q));
                    if reached(&mut uf) {
                        return (uf, true);
                    }
                }
            }
        }
    }
    (uf, false)
}

/// The least congruence containing `(a, b)`.
pub fn principal_congruence(s: &FiniteSemiring, a: usize, b: usize) -> Partition {
    close(s, &[(a, b)], Stop::Never).0.into_partition()
}

/// The least congruence containing every pair in `pairs`.
pub fn generated_congruence(s: &FiniteSemiring, pairs: &[(usize, usize)]) -> Partition {
    close(s, pairs, Stop::Never).0.into_partition()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "by")]
pub enum Translation {
    /// `x -> x + c`
    Add(usize),
    /// `x -> c * x`
    LeftMul(usize),
    /// `x -> x * c`
    RightMul(usize),
}

impl Translation {
    pub fn apply(self, s: &FiniteSemiring, x: usize) -> usize {
        match self {
            Translation::Add(c) => s.add(x, c),
            Translation::LeftMul(c) => s.mul(c, x),
            Translation::RightMul(c) => s.mul(x, c),
        }
    }
}

/// A related pair whose image under a translation is not related.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub pair: (usize, usize),
    pub translation: Translation,
    pub images: (usize, usize),
}

/// Exhaustive compatibility check. Each element is compared with the least
/// member of its block, which suffices by transitivity; the first violation
/// in element-then-translation order is returned.
pub fn is_congruence(s: &FiniteSemiring, p: &Partition) -> Result<(), Violation> {
    let k = s.size();
    if p.size() != k {
        // a partition of the wrong set compares as a violation at (0, 0)
        return Err(Violation {
            pair: (0, 0),
            translation: Translation::Add(0),
            images: (0, 0),
        });
    }
    let mut rep = vec![usize::MAX; p.num_blocks()];
    for x in 0..k {
        let b = p.block_of(x);
        if rep[b] == usize::MAX {
            rep[b] = x;
            continue;
        }
        let r = rep[b];
        for c in 0..k {
            for t in [Translation::Add(c), Translation::LeftMul(c), Translation::RightMul(c)] {
                let (u, v) = (t.apply(s, r), t.apply(s, x));
                if !p.same(u, v) {
                    return Err(Violation {
                        pair: (r, x),
                        translation: t,
                        images: (u, v),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Seed pairs whose principal congruences lie below every non-identity
/// congruence: covering pairs for additively idempotent semirings, all
/// pairs otherwise.
fn seed_pairs(s: &FiniteSemiring) -> Vec<(usize, usize)> {
    match natural_order(s) {
        Ok(order) => order.covering_pairs(),
        Err(_) => s
            .elements()
            .flat_map(|a| (a + 1..s.size()).map(move |b| (a, b)))
            .collect(),
    }
}

fn require_nontrivial(s: &FiniteSemiring) -> Result<()> {
    if s.size() < 2 {
        return Err(Error::Degenerate(format!(
            "`{}` has a single element; simplicity and subdirect irreducibility need at least two",
            s.name()
        )));
    }
    Ok(())
}

/// True iff the only congruences are the identity and the full relation.
pub fn is_congruence_simple(s: &FiniteSemiring) -> Result<bool> {
    require_nontrivial(s)?;
    Ok(seed_pairs(s)
        .par_iter()
        .all(|&(a, b)| close(s, &[(a, b)], Stop::Full).1))
}

/// The least non-identity congruence of a subdirectly irreducible semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monolith {
    pub partition: Partition,
    /// Least pair whose principal congruence is the monolith.
    pub generating_pair: (usize, usize),
}

const CHUNK: usize = 64;

/// Intersection of all non-identity congruences, or `None` when it is the
/// identity.
pub fn monolith(s: &FiniteSemiring) -> Result<Option<Monolith>> {
    require_nontrivial(s)?;
    let seeds = seed_pairs(s);

    // `running` is the exact intersection of the principal congruences seen
    // so far. When it is itself principal, generated by `generator`, a seed
    // congruence contains it iff the closure relates the generator pair, so
    // that closure can halt early.
    let mut running: Option<Partition> = None;
    let mut generator: Option<(usize, usize)> = None;
    for chunk in seeds.chunks(CHUNK) {
        let gen = generator;
        let results: Vec<Option<Partition>> = chunk
            .par_iter()
            .map(|&(a, b)| match gen {
                Some((c, d)) => {
                    let (uf, halted) = close(s, &[(a, b)], Stop::Related(c, d));
                    (!halted).then(|| uf.into_partition())
                }
                None => Some(principal_congruence(s, a, b)),
            })
            .collect();
        for p in results.into_iter().flatten() {
            let next = match running.take() {
                None => p,
                Some(m) => m.intersect(&p),
            };
            if next.is_identity() {
                return Ok(None);
            }
            if running.as_ref() != Some(&next) {
                generator = principal_generator(s, &next);
            }
            running = Some(next);
        }
    }
    let partition = running.expect("a semiring with two elements has a seed pair");
    let generating_pair = partition
        .first_nontrivial_pair()
        .expect("non-identity partition has a related pair");
    debug_assert_eq!(principal_congruence(s, generating_pair.0, generating_pair.1), partition);
    Ok(Some(Monolith {
        partition,
        generating_pair,
    }))
}

fn principal_generator(s: &FiniteSemiring, m: &Partition) -> Option<(usize, usize)> {
    let (a, b) = m.first_nontrivial_pair()?;
    (principal_congruence(s, a, b) == *m).then_some((a, b))
}

pub fn is_subdirectly_irreducible(s: &FiniteSemiring) -> Result<bool> {
    Ok(monolith(s)?.is_some())
}

/// `(lambda, rho)`: `a lambda b` iff `ax = bx` for all `x`, and `a rho b`
/// iff `xa = xb` for all `x`.
pub fn lambda_rho(s: &FiniteSemiring) -> (Partition, Partition) {
    let rows: Vec<&[u32]> = s.elements().map(|a| s.mul_row(a)).collect();
    let cols: Vec<&[u32]> = s.elements().map(|a| s.mul_col(a)).collect();
    (Partition::from_keys(&rows), Partition::from_keys(&cols))
}

/// Pulls a congruence on `M_n(S)` back to `S` along the constant embedding:
/// `x ~ y` iff the constant matrices of `x` and `y` are related.
pub fn hat_congruence(ms: &MatrixSemiring, rho: &Partition) -> Result<Partition> {
    let base = ms.base();
    natural_order(base)?;
    let m = ms.require_materialized()?;
    if let Err(v) = is_congruence(m, rho) {
        return Err(Error::Input(format!(
            "partition is not a congruence on {}: ({}, {}) under {:?}",
            m.name(),
            m.label(v.pair.0),
            m.label(v.pair.1),
            v.translation
        )));
    }
    let keys: Vec<usize> = base.elements().map(|x| rho.block_of(ms.const_index(x))).collect();
    let hat = Partition::from_keys(&keys);
    debug_assert!(is_congruence(base, &hat).is_ok());
    Ok(hat)
}

/// Lifts a congruence on `S` entrywise to `M_n(S)`.
pub fn tilde_congruence(ms: &MatrixSemiring, rho: &Partition) -> Result<Partition> {
    let base = ms.base();
    if let Err(v) = is_congruence(base, rho) {
        return Err(Error::Input(format!(
            "partition is not a congruence on {}: ({}, {}) under {:?}",
            base.name(),
            base.label(v.pair.0),
            base.label(v.pair.1),
            v.translation
        )));
    }
    let m = ms.require_materialized()?;
    let keys: Vec<Vec<u32>> = m
        .elements()
        .map(|x| ms.decode(x).entries().iter().map(|&e| rho.block_of(e) as u32).collect())
        .collect();
    let tilde = Partition::from_keys(&keys);
    debug_assert!(is_congruence(m, &tilde).is_ok());
    Ok(tilde)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{adjoin_least, gen_boolean, gen_l2, gen_lukasiewicz};

    /// Independent oracle: enumerate every partition of the element set and
    /// keep the congruences.
    fn all_congruences(s: &FiniteSemiring) -> Vec<Partition> {
        fn rec(k: usize, x: usize, key: &mut Vec<usize>, next: usize, out: &mut Vec<Partition>) {
            if x == k {
                out.push(Partition::from_keys(key));
                return;
            }
            for b in 0..=next {
                key.push(b);
                rec(k, x + 1, key, next.max(b + 1), out);
                key.pop();
            }
        }
        let mut parts = Vec::new();
        rec(s.size(), 0, &mut Vec::new(), 0, &mut parts);
        parts.into_iter().filter(|p| is_congruence(s, p).is_ok()).collect()
    }

    fn luk3() -> FiniteSemiring {
        gen_lukasiewicz(2).unwrap()
    }

    #[test]
    fn principal_examples() {
        let l = luk3();
        assert!(principal_congruence(&l, 1, 1).is_identity());
        assert!(principal_congruence(&gen_l2(), 0, 1).is_full());
        assert_eq!(principal_congruence(&l, 0, 1).blocks(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn principal_matches_enumeration_oracle() {
        for s in [
            luk3(),
            gen_lukasiewicz(3).unwrap(),
            gen_boolean(2).unwrap(),
            adjoin_least(&gen_boolean(2).unwrap()).unwrap(),
        ] {
            let congs = all_congruences(&s);
            for a in s.elements() {
                for b in s.elements() {
                    let p = principal_congruence(&s, a, b);
                    let least = congs
                        .iter()
                        .filter(|c| c.same(a, b))
                        .find(|c| congs.iter().filter(|d| d.same(a, b)).all(|d| c.is_finer_than(d)))
                        .expect("least congruence exists");
                    assert_eq!(&p, least, "{} ({a},{b})", s.name());
                }
            }
        }
    }

    #[test]
    fn is_congruence_examples() {
        let l = luk3();
        assert!(is_congruence(&l, &Partition::identity(3)).is_ok());
        assert!(is_congruence(&l, &Partition::from_blocks(3, &[vec![0, 1]]).unwrap()).is_ok());
        let v = is_congruence(&l, &Partition::from_blocks(3, &[vec![0, 2]]).unwrap()).unwrap_err();
        assert_eq!(v.pair, (0, 2));
        assert_eq!(v.translation, Translation::Add(1));
        assert_eq!(v.images, (1, 2));
    }

    #[test]
    fn simplicity() {
        assert!(is_congruence_simple(&gen_l2()).unwrap());
        assert!(!is_congruence_simple(&luk3()).unwrap());
        let one = FiniteSemiring::from_fn("one", vec!["x".into()], |_, _| 0, |_, _| 0);
        assert!(matches!(is_congruence_simple(&one), Err(Error::Degenerate(_))));
        assert!(matches!(monolith(&one), Err(Error::Degenerate(_))));
    }

    #[test]
    fn monolith_examples() {
        let m = monolith(&luk3()).unwrap().unwrap();
        assert_eq!(m.partition.blocks(), vec![vec![0, 1], vec![2]]);
        assert_eq!(m.generating_pair, (0, 1));

        assert!(monolith(&gen_l2()).unwrap().unwrap().partition.is_full());
        assert!(monolith(&gen_boolean(2).unwrap()).unwrap().is_none());
        assert!(is_subdirectly_irreducible(&adjoin_least(&gen_boolean(2).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn monolith_matches_enumeration_oracle() {
        for s in [
            luk3(),
            gen_lukasiewicz(4).unwrap(),
            gen_boolean(2).unwrap(),
            gen_boolean(3).unwrap(),
            adjoin_least(&gen_boolean(2).unwrap()).unwrap(),
        ] {
            let nonid: Vec<_> = all_congruences(&s).into_iter().filter(|c| !c.is_identity()).collect();
            let meet = nonid.iter().skip(1).fold(nonid[0].clone(), |m, c| m.intersect(c));
            let expected = (!meet.is_identity()).then_some(meet);
            assert_eq!(monolith(&s).unwrap().map(|m| m.partition), expected, "{}", s.name());
        }
    }

    #[test]
    fn lambda_rho_examples() {
        let (l, r) = lambda_rho(&gen_l2());
        assert!(l.is_identity() && r.is_identity());

        let s = adjoin_least(&gen_boolean(2).unwrap()).unwrap();
        let (l, r) = lambda_rho(&s);
        let e = s.index_of("e").unwrap();
        assert!(l.same(0, e) && r.same(0, e));
        assert!(is_congruence(&s, &l).is_ok() && is_congruence(&s, &r).is_ok());
    }

    #[test]
    fn partition_json_round_trip() {
        let s = luk3();
        let p = Partition::from_blocks(3, &[vec![0, 1]]).unwrap();
        assert_eq!(p.to_json(&s), r#"[["0","1"],["2"]]"#);
        assert_eq!(Partition::from_json(&s, &p.to_json(&s)).unwrap(), p);
    }
}
