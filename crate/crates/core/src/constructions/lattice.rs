use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lattice file contents: labels plus the order as a boolean matrix,
/// `leq[i][j]` meaning `elements[i] <= elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    k: usize,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    pub fn size(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.k + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.k + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.k + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            elements: self.labels.clone(),
            leq: self.leq.chunks(self.k).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn from_file(file: &LatticeFile) -> Result<Self> {
        lattice_from_order(file.elements.clone(), &file.leq)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: LatticeFile = serde_json::from_str(text).map_err(|source| Error::Json {
            context: "lattice file".into(),
            source,
        })?;
        Self::from_file(&file)
    }
}

/// Validates a partial order and computes joins and meets.
pub fn lattice_from_order(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<FiniteLattice> {
    let k = labels.len();
    if k == 0 {
        return Err(Error::Input("lattice has no elements".into()));
    }
    if leq.len() != k || leq.iter().any(|r| r.len() != k) {
        return Err(Error::Input(format!("`leq` must be a {k}x{k} matrix")));
    }
    let l = |i: usize| labels[i].as_str();
    for a in 0..k {
        if !leq[a][a] {
            return Err(Error::Input(format!("order is not reflexive at {}", l(a))));
        }
        for b in 0..k {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::Input(format!(
                    "order is not antisymmetric at ({}, {})",
                    l(a),
                    l(b)
                )));
            }
            for c in 0..k {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::Input(format!(
                        "order is not transitive at ({}, {}, {})",
                        l(a),
                        l(b),
                        l(c)
                    )));
                }
            }
        }
    }

    let bound = |a: usize, b: usize, upper: bool| -> Option<usize> {
        let rel = |x: usize, y: usize| if upper { leq[x][y] } else { leq[y][x] };
        let bounds: Vec<usize> = (0..k).filter(|&z| rel(a, z) && rel(b, z)).collect();
        bounds.iter().copied().find(|&z| bounds.iter().all(|&w| rel(z, w)))
    };
    let mut join = vec![0; k * k];
    let mut meet = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            join[a * k + b] = bound(a, b, true).ok_or_else(|| {
                Error::condition("lattice", format!("{} and {} have no least upper bound", l(a), l(b)))
            })?;
            meet[a * k + b] = bound(a, b, false).ok_or_else(|| {
                Error::condition("lattice", format!("{} and {} have no greatest lower bound", l(a), l(b)))
            })?;
        }
    }
    let bottom = (0..k).find(|&a| (0..k).all(|b| leq[a][b])).expect("finite lattice");
    let top = (0..k).find(|&a| (0..k).all(|b| leq[b][a])).expect("finite lattice");
    Ok(FiniteLattice {
        labels,
        k,
        leq: leq.iter().flatten().copied().collect(),
        join,
        meet,
        bottom,
        top,
    })
}

/// The chain `0 < 1 < ... < m-1`.
pub fn chain(m: usize) -> Result<FiniteLattice> {
    let leq: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| i <= j).collect()).collect();
    lattice_from_order((0..m).map(|i| i.to_string()).collect(), &leq)
}

/// All lattices with `2..=max` elements up to isomorphism. Element 0 is the
/// bottom and the last element the top; the middle elements are labeled
/// `x1, x2, ...`.
pub fn small_lattices(max: usize) -> Result<Vec<FiniteLattice>> {
    if max > 6 {
        return Err(Error::Input(format!(
            "small_lattices supports at most 6 elements, got {max}"
        )));
    }
    let mut out = Vec::new();
    for m in 2..=max {
        let mid = m - 2;
        let pairs: Vec<(usize, usize)> = (0..mid)
            .flat_map(|i| (0..mid).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let perms = permutations(mid);
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut rel = vec![vec![false; mid]; mid];
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                rel[i][j] = mask & (1 << bit) != 0;
            }
            // canonical form: least relabeling of the middle relation
            let canon = perms
                .iter()
                .map(|p| {
                    let mut r = vec![false; mid * mid];
                    for i in 0..mid {
                        for j in 0..mid {
                            r[p[i] * mid + p[j]] = rel[i][j];
                        }
                    }
                    r
                })
                .min()
                .unwrap_or_default();
            if !seen.insert(canon) {
                continue;
            }
            let leq: Vec<Vec<bool>> = (0..m)
                .map(|a| {
                    (0..m)
                        .map(|b| {
                            a == b
                                || a == 0
                                || b == m - 1
                                || (a > 0 && b > 0 && a < m - 1 && b < m - 1 && rel[a - 1][b - 1])
                        })
                        .collect()
                })
                .collect();
            let mut labels = vec!["0".to_owned()];
            labels.extend((1..=mid).map(|i| format!("x{i}")));
            labels.push("1".to_owned());
            if let Ok(lat) = lattice_from_order(labels, &leq) {
                out.push(lat);
            }
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
