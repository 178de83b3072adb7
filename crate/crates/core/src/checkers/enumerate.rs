//! Every additively idempotent semiring with at most four elements, up to
//! isomorphism.
//!
//! A finite join-semilattice becomes a lattice when a bottom is adjoined, so
//! the additive reducts are the lattices with one more element, bottom
//! removed. For each one, the multiplication is built row by row: every row
//! `x -> ax` must be a join endomorphism, and after each row the
//! associativity and right distributivity instances that are already fully
//! determined are checked. Tables are kept only if they are the least in
//! their orbit under the automorphisms of the addition, which picks one
//! representative per isomorphism class.

use rayon::prelude::*;

use crate::constructions::small_lattices;
use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

pub const MAX_ENUMERATION_SIZE: usize = 4;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Join tables of all join-semilattices with exactly `k` elements.
fn semilattices(k: usize) -> Result<Vec<Vec<usize>>> {
    Ok(small_lattices(k + 1)?
        .into_iter()
        .filter(|l| l.size() == k + 1)
        .map(|l| {
            debug_assert_eq!(l.bottom(), 0);
            let mut add = vec![0; k * k];
            for a in 0..k {
                for b in 0..k {
                    add[a * k + b] = l.join(a + 1, b + 1) - 1;
                }
            }
            add
        })
        .collect())
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..k)
                    .filter(|x| !p.contains(x))
                    .map(|x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn automorphisms(k: usize, add: &[usize]) -> Vec<Vec<usize>> {
    permutations(k)
        .into_iter()
        .filter(|p| (0..k).all(|a| (0..k).all(|b| p[add[a * k + b]] == add[p[a] * k + p[b]])))
        .collect()
}

/// All maps `f` with `f(x + y) = f(x) + f(y)`.
fn join_endomorphisms(k: usize, add: &[usize]) -> Vec<Vec<usize>> {
    let total = k.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let mut f = vec![0; k];
            for slot in f.iter_mut().rev() {
                *slot = code % k;
                code /= k;
            }
            f
        })
        .filter(|f| (0..k).all(|x| (0..k).all(|y| f[add[x * k + y]] == add[f[x] * k + f[y]])))
        .collect()
}

struct Search<'a> {
    k: usize,
    add: &'a [usize],
    rows: Vec<Vec<usize>>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Checks the instances that involve only the first `filled` rows.
    fn consistent(&self, mul: &[Vec<usize>], filled: usize) -> bool {
        let k = self.k;
        for a in 0..filled {
            for b in 0..k {
                let ab = mul[a][b];
                for c in 0..k {
                    // (a + b) c = ac + bc
                    if b < filled {
                        let sum = self.add[a * k + b];
                        if sum < filled && mul[sum][c] != self.add[mul[a][c] * k + mul[b][c]] {
                            return false;
                        }
                    }
                    // (ab) c = a (bc)
                    if ab < filled && b < filled && mul[ab][c] != mul[a][mul[b][c]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn is_orbit_least(&self, mul: &[Vec<usize>]) -> bool {
        let k = self.k;
        let flat: Vec<usize> = mul.iter().flatten().copied().collect();
        self.autos.iter().all(|p| {
            let mut inv = vec![0; k];
            for (x, &px) in p.iter().enumerate() {
                inv[px] = x;
            }
            // permuted table, read in row-major order of the new labels
            let image = (0..k * k).map(|i| p[mul[inv[i / k]][inv[i % k]]]);
            image.cmp(flat.iter().copied()) != std::cmp::Ordering::Less
        })
    }

    fn run(&self, mul: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let filled = mul.len();
        if filled == self.k {
            if self.is_orbit_least(mul) {
                out.push(mul.clone());
            }
            return;
        }
        for row in &self.rows {
            mul.push(row.clone());
            if self.consistent(mul, filled + 1) {
                self.run(mul, out);
            }
            mul.pop();
        }
    }
}

/// All additively idempotent semirings with `1..=max_size` elements, one per
/// isomorphism class, ordered by size, then by addition, then by
/// multiplication table.
pub fn enumerate_small(max_size: usize) -> Result<Vec<FiniteSemiring>> {
    if !(1..=MAX_ENUMERATION_SIZE).contains(&max_size) {
        return Err(Error::Input(format!(
            "enumeration size must be in 1..={MAX_ENUMERATION_SIZE}, got {max_size}"
        )));
    }
    let mut out = Vec::new();
    for k in 1..=max_size {
        let adds = semilattices(k)?;
        let per_add: Vec<Vec<Vec<Vec<usize>>>> = adds
            .par_iter()
            .map(|add| {
                let search = Search {
                    k,
                    add,
                    rows: join_endomorphisms(k, add),
                    autos: automorphisms(k, add),
                };
                let mut found = Vec::new();
                search.run(&mut Vec::with_capacity(k), &mut found);
                found
            })
            .collect();
        let mut index = 0;
        for (ai, (add, muls)) in adds.iter().zip(per_add).enumerate() {
            for mul in muls {
                index += 1;
                let labels = NAMES[..k].iter().map(|s| s.to_string()).collect();
                let s = FiniteSemiring::from_fn(
                    format!("S{k}.{}.{index}", ai + 1),
                    labels,
                    |a, b| add[a * k + b],
                    |a, b| mul[a][b],
                );
                debug_assert!(s.verify().passed());
                out.push(s);
            }
        }
    }
    Ok(out)
}
