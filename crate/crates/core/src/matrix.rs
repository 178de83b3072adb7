//! Matrix semirings `M_n(S)` over a finite semiring.
//!
//! A matrix is a row-major vector of base-element indices. In materialized
//! mode every matrix is also an element of a [`FiniteSemiring`] whose index
//! is the mixed-radix value of that vector, most significant entry first, so
//! index order is lexicographic order on entries.

use serde::{Deserialize, Serialize};

use crate::checkers::check_p71;
use crate::error::{Error, Result};
use crate::semiring::{natural_order, FiniteSemiring};

/// Default cap on the number of elements of a materialized matrix semiring.
pub const DEFAULT_THRESHOLD: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matrix {
    n: usize,
    entries: Vec<usize>,
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Input(format!(
                "a {n}x{n} matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let entries = (0..n * n).map(|p| f(p / n, p % n)).collect();
        Matrix { n, entries }
    }

    pub fn constant(n: usize, a: usize) -> Self {
        Matrix {
            n,
            entries: vec![a; n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The common entry when all entries are equal.
    pub fn constant_value(&self) -> Option<usize> {
        let first = self.entries[0];
        self.entries.iter().all(|&e| e == first).then_some(first)
    }

    /// Matrix literal: `n` rows of `n` labels.
    pub fn to_labels(&self, base: &FiniteSemiring) -> Vec<Vec<String>> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().map(|&e| base.label(e).to_owned()).collect())
            .collect()
    }

    pub fn from_labels(base: &FiniteSemiring, rows: &[Vec<String>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!(
                    "matrix row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for label in row {
                entries.push(
                    base.index_of(label)
                        .ok_or_else(|| Error::Input(format!("unknown element label {label:?}")))?,
                );
            }
        }
        Matrix::new(n, entries)
    }

    /// Compact literal used as an element label, e.g. `[[0,e],[u,0]]`.
    pub fn literal(&self, base: &FiniteSemiring) -> String {
        let rows: Vec<String> = self
            .to_labels(base)
            .iter()
            .map(|r| format!("[{}]", r.join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }

    /// Parses either a JSON array of label arrays or the compact
    /// [`Matrix::literal`] form.
    pub fn parse_literal(base: &FiniteSemiring, text: &str) -> Result<Self> {
        if let Ok(rows) = serde_json::from_str::<Vec<Vec<String>>>(text) {
            return Matrix::from_labels(base, &rows);
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Input(format!("matrix literal {text:?} must look like [[a,b],[c,d]]")))?;
        let rows: Vec<Vec<String>> = inner
            .split("],[")
            .map(|row| row.split(',').map(str::to_owned).collect())
            .collect();
        Matrix::from_labels(base, &rows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Materialized,
    Lazy,
}

/// Handle for `M_n(S)`.
#[derive(Clone, Debug)]
pub struct MatrixSemiring {
    base: FiniteSemiring,
    n: usize,
    materialized: Option<FiniteSemiring>,
}

impl MatrixSemiring {
    pub fn new(base: &FiniteSemiring, n: usize, mode: Mode, threshold: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("matrix dimension must be at least 1".into()));
        }
        let mut ms = MatrixSemiring {
            base: base.clone(),
            n,
            materialized: None,
        };
        if mode == Mode::Materialized {
            let size = (base.size() as u128).checked_pow((n * n) as u32).unwrap_or(u128::MAX);
            if size > threshold as u128 {
                return Err(Error::Size {
                    what: format!("M_{n}({})", base.name()),
                    size,
                    bound: threshold,
                });
            }
            ms.materialized = Some(ms.materialize(size as usize));
        }
        Ok(ms)
    }

    /// Materialized `M_n(S)` under [`DEFAULT_THRESHOLD`].
    pub fn materialized(base: &FiniteSemiring, n: usize) -> Result<Self> {
        Self::new(base, n, Mode::Materialized, DEFAULT_THRESHOLD)
    }

    pub fn lazy(base: &FiniteSemiring, n: usize) -> Result<Self> {
        Self::new(base, n, Mode::Lazy, DEFAULT_THRESHOLD)
    }

    fn materialize(&self, size: usize) -> FiniteSemiring {
        let labels = (0..size).map(|x| self.decode(x).literal(&self.base)).collect();
        FiniteSemiring::from_fn(
            format!("M{}({})", self.n, self.base.name()),
            labels,
            |x, y| self.encode(&self.add(&self.decode(x), &self.decode(y))),
            |x, y| self.encode(&self.mul(&self.decode(x), &self.decode(y))),
        )
    }

    pub fn base(&self) -> &FiniteSemiring {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        if self.materialized.is_some() {
            Mode::Materialized
        } else {
            Mode::Lazy
        }
    }

    pub fn semiring(&self) -> Option<&FiniteSemiring> {
        self.materialized.as_ref()
    }

    pub fn require_materialized(&self) -> Result<&FiniteSemiring> {
        self.materialized.as_ref().ok_or_else(|| {
            Error::Input(format!(
                "M_{}({}) is lazy; this analysis needs the materialized semiring",
                self.n,
                self.base.name()
            ))
        })
    }

    pub fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        Matrix {
            n: self.n,
            entries: a
                .entries
                .iter()
                .zip(&b.entries)
                .map(|(&x, &y)| self.base.add(x, y))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let n = self.n;
        let s = &self.base;
        Matrix::from_fn(n, |i, j| {
            (1..n).fold(s.mul(a.get(i, 0), b.get(0, j)), |acc, k| {
                s.add(acc, s.mul(a.get(i, k), b.get(k, j)))
            })
        })
    }

    /// Mixed-radix index of a matrix.
    pub fn encode(&self, m: &Matrix) -> usize {
        let k = self.base.size();
        m.entries.iter().fold(0usize, |acc, &e| acc * k + e)
    }

    pub fn decode(&self, mut index: usize) -> Matrix {
        let k = self.base.size();
        let len = self.n * self.n;
        let mut entries = vec![0; len];
        for slot in entries.iter_mut().rev() {
            *slot = index % k;
            index /= k;
        }
        Matrix { n: self.n, entries }
    }

    /// The constant matrix with every entry `a`.
    pub fn const_embed(&self, a: usize) -> Matrix {
        Matrix::constant(self.n, a)
    }

    pub fn const_index(&self, a: usize) -> usize {
        self.encode(&self.const_embed(a))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `(A, B) -> (A + E, B + E)`
    Add,
    /// `(A, B) -> (EA, EB)`
    Left,
    /// `(A, B) -> (AE, BE)`
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessStep {
    pub side: Side,
    pub matrix: Matrix,
}

/// Translations carrying a related pair of matrices to a pair of distinct
/// constant matrices. Every intermediate pair lies in any congruence that
/// contains the starting pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChain {
    pub steps: Vec<WitnessStep>,
}

impl WitnessChain {
    /// All pairs visited, starting with `(a, b)`.
    pub fn replay(&self, ms: &MatrixSemiring, a: &Matrix, b: &Matrix) -> Vec<(Matrix, Matrix)> {
        let mut out = vec![(a.clone(), b.clone())];
        for step in &self.steps {
            let (x, y) = out.last().expect("non-empty");
            let next = match step.side {
                Side::Add => (ms.add(x, &step.matrix), ms.add(y, &step.matrix)),
                Side::Left => (ms.mul(&step.matrix, x), ms.mul(&step.matrix, y)),
                Side::Right => (ms.mul(x, &step.matrix), ms.mul(y, &step.matrix)),
            };
            out.push(next);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantPair {
    pub a: usize,
    pub b: usize,
    pub chain: WitnessChain,
}

/// From a pair `A != B` of matrices, derives distinct `a', b'` such that the
/// constant matrices of `a'` and `b'` lie in every congruence containing
/// `(A, B)`.
///
/// Three steps: add a matrix that collapses every entry except the first
/// differing one `(i0, j0)` to a common value `e'`; multiply on the left by a
/// matrix with `c` in column `i0` and `f` elsewhere, which spreads the
/// difference over column `j0`; multiply on the right by a matrix with `d`
/// in row `j0` and `g` elsewhere, which makes both sides constant. All
/// witnesses are the lexicographically first ones.
pub fn extract_constant_pair(ms: &MatrixSemiring, a: &Matrix, b: &Matrix) -> Result<ConstantPair> {
    let s = ms.base();
    let n = ms.n();
    if a.dim() != n || b.dim() != n {
        return Err(Error::Input(format!("matrices must be {n}x{n}")));
    }
    if a == b {
        return Err(Error::condition("distinct-matrices", "A and B are equal"));
    }
    if let (Some(x), Some(y)) = (a.constant_value(), b.constant_value()) {
        return Ok(ConstantPair {
            a: x,
            b: y,
            chain: WitnessChain::default(),
        });
    }
    natural_order(s)?;
    let p71 = check_p71(s)?;
    if !p71.holds {
        return Err(Error::condition(
            "translated-separation",
            format!("no separating witnesses for {}", p71.describe_witness(s)),
        ));
    }

    let k = s.size();
    let pos = (0..n * n).find(|&p| a.entries[p] != b.entries[p]).expect("A != B");
    let (i0, j0) = (pos / n, pos % n);
    let (x0, y0) = (a.entries[pos], b.entries[pos]);
    let mut steps = Vec::with_capacity(3);

    // collapse every other entry to e'
    let e1 = (0..k)
        .find(|&e| {
            (0..n * n)
                .filter(|&p| p != pos)
                .all(|p| s.add(a.entries[p], e) == e && s.add(b.entries[p], e) == e)
        })
        .expect("the sum of all elements absorbs every entry");
    let g = (0..k)
        .find(|&g| s.add(x0, g) != s.add(y0, g))
        .expect("x0 or y0 separates the pair");
    let add_e = Matrix::from_fn(n, |i, j| if (i, j) == (i0, j0) { g } else { e1 });
    let (x1, y1) = (s.add(x0, g), s.add(y0, g));
    steps.push(WitnessStep {
        side: Side::Add,
        matrix: add_e,
    });

    // spread the difference over column j0
    let (c, f) = first_pair(k, |c, f| {
        s.add(s.mul(c, x1), s.mul(f, e1)) != s.add(s.mul(c, y1), s.mul(f, e1))
    })
    .ok_or_else(|| no_witness(s, x1, y1, e1))?;
    let left = Matrix::from_fn(n, |_, j| if j == i0 { c } else { f });
    let (x2, y2) = (s.add(s.mul(c, x1), s.mul(f, e1)), s.add(s.mul(c, y1), s.mul(f, e1)));
    let e2 = s.add(s.mul(c, e1), s.mul(f, e1));
    steps.push(WitnessStep {
        side: Side::Left,
        matrix: left,
    });

    // make both sides constant
    let (d, g2) = first_pair(k, |d, g| {
        s.add(s.mul(x2, d), s.mul(e2, g)) != s.add(s.mul(y2, d), s.mul(e2, g))
    })
    .ok_or_else(|| no_witness(s, x2, y2, e2))?;
    let right = Matrix::from_fn(n, |i, _| if i == j0 { d } else { g2 });
    steps.push(WitnessStep {
        side: Side::Right,
        matrix: right,
    });
    let chain = WitnessChain { steps };

    let (last_a, last_b) = chain.replay(ms, a, b).pop().expect("non-empty");
    let (ca, cb) = match (last_a.constant_value(), last_b.constant_value()) {
        (Some(ca), Some(cb)) if ca != cb => (ca, cb),
        _ => unreachable!("the final pair is constant and separated"),
    };
    Ok(ConstantPair { a: ca, b: cb, chain })
}

fn first_pair(k: usize, pred: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..k)
        .flat_map(|x| (0..k).map(move |y| (x, y)))
        .find(|&(x, y)| pred(x, y))
}

fn no_witness(s: &FiniteSemiring, a: usize, b: usize, e: usize) -> Error {
    Error::condition(
        "translated-separation",
        format!(
            "no witnesses for (a, b, e) = ({}, {}, {})",
            s.label(a),
            s.label(b),
            s.label(e)
        ),
    )
}
