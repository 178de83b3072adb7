//! Finite semirings as operation tables.
//!
//! Elements are the indices `0..k`; labels only matter for printing and
//! parsing. A [`FiniteSemiring`] is immutable once built and can be shared
//! freely between threads.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw operation tables, exactly as stored in a semiring file.
///
/// `add[i][j]` is the index of `elements[i] + elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub name: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl Tables {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|source| Error::Json {
            context: "semiring file".into(),
            source,
        })
    }

    /// Checks shape only: square tables of equal size with in-range entries
    /// and pairwise distinct labels.
    pub fn check_shape(&self) -> Result<()> {
        let k = self.elements.len();
        if k == 0 {
            return Err(Error::Input("`elements` is empty".into()));
        }
        let mut seen = BTreeSet::new();
        for label in &self.elements {
            if !seen.insert(label.as_str()) {
                return Err(Error::Input(format!("duplicate element label {label:?}")));
            }
        }
        for (field, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != k {
                return Err(Error::Input(format!(
                    "`{field}` has {} rows, expected {k}",
                    table.len()
                )));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != k {
                    return Err(Error::Input(format!(
                        "`{field}` row {i} has {} entries, expected {k}",
                        row.len()
                    )));
                }
                if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= k) {
                    return Err(Error::Input(format!(
                        "`{field}`[{i}][{j}] = {v} is out of range 0..{k}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The five axiom families checked by [`verify_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::MulAssociative,
        Axiom::LeftDistributive,
        Axiom::RightDistributive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::RightDistributive => "right-distributive",
        }
    }
}

/// First failing triple `(a, b, c)` of one axiom family. For commutativity
/// only `a` and `b` matter and `c == b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: [usize; 3],
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Flat row-major view used by the axiom checker, so it can run on raw
/// tables and on built semirings alike.
trait Ops: Sync {
    fn k(&self) -> usize;
    fn a(&self, x: usize, y: usize) -> usize;
    fn m(&self, x: usize, y: usize) -> usize;
}

impl Ops for Tables {
    fn k(&self) -> usize {
        self.elements.len()
    }
    fn a(&self, x: usize, y: usize) -> usize {
        self.add[x][y]
    }
    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }
}

impl Ops for FiniteSemiring {
    fn k(&self) -> usize {
        self.k
    }
    fn a(&self, x: usize, y: usize) -> usize {
        self.add(x, y)
    }
    fn m(&self, x: usize, y: usize) -> usize {
        self.mul(x, y)
    }
}

fn first_failure<O: Ops + ?Sized>(ops: &O, axiom: Axiom) -> Option<[usize; 3]> {
    let k = ops.k();
    let holds = |x: usize, y: usize, z: usize| -> bool {
        match axiom {
            Axiom::AddAssociative => ops.a(ops.a(x, y), z) == ops.a(x, ops.a(y, z)),
            Axiom::AddCommutative => ops.a(x, y) == ops.a(y, x),
            Axiom::MulAssociative => ops.m(ops.m(x, y), z) == ops.m(x, ops.m(y, z)),
            Axiom::LeftDistributive => ops.m(x, ops.a(y, z)) == ops.a(ops.m(x, y), ops.m(x, z)),
            Axiom::RightDistributive => ops.m(ops.a(x, y), z) == ops.a(ops.m(x, z), ops.m(y, z)),
        }
    };
    if axiom == Axiom::AddCommutative {
        return (0..k)
            .flat_map(|x| (0..k).map(move |y| (x, y)))
            .find(|&(x, y)| !holds(x, y, y))
            .map(|(x, y)| [x, y, y]);
    }
    (0..k).into_par_iter().find_map_first(|x| {
        for y in 0..k {
            for z in 0..k {
                if !holds(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
        None
    })
}

fn axiom_report<O: Ops + ?Sized>(ops: &O) -> AxiomReport {
    let failures = Axiom::ALL
        .iter()
        .filter_map(|&axiom| first_failure(ops, axiom).map(|witness| AxiomFailure { axiom, witness }))
        .collect();
    AxiomReport { failures }
}

/// Exhaustively checks the semiring axioms on candidate tables.
///
/// Malformed tables are an `Err`; axiom violations are reported in the
/// returned [`AxiomReport`].
pub fn verify_axioms(tables: &Tables) -> Result<AxiomReport> {
    tables.check_shape()?;
    Ok(axiom_report(tables))
}

/// A finite semiring given by its addition and multiplication tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    labels: Vec<String>,
    k: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    // column-major copy of `mul`, for left translations x -> c*x
    mul_t: Vec<u32>,
}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("size", &self.k)
            .finish()
    }
}

impl FiniteSemiring {
    /// Builds a semiring from validated tables, rejecting malformed tables
    /// and axiom violations.
    pub fn from_tables(tables: Tables) -> Result<Self> {
        let report = verify_axioms(&tables)?;
        if let Some(failure) = report.failures.first() {
            let [a, b, c] = failure.witness;
            let l = |i: usize| tables.elements[i].clone();
            return Err(Error::Axiom {
                axiom: failure.axiom.name(),
                witness: (l(a), l(b), l(c)),
            });
        }
        Ok(Self::from_fn(
            tables.name,
            tables.elements,
            |a, b| tables.add[a][b],
            |a, b| tables.mul[a][b],
        ))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_tables(Tables::from_json(text)?)
    }

    /// Builds a semiring from operation closures without checking axioms.
    /// Callers are generators whose output is a semiring by construction.
    pub(crate) fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        add: impl Fn(usize, usize) -> usize + Sync,
        mul: impl Fn(usize, usize) -> usize + Sync,
    ) -> Self {
        let k = labels.len();
        let fill = |op: &(dyn Fn(usize, usize) -> usize + Sync)| -> Vec<u32> {
            let mut table = vec![0u32; k * k];
            table.par_chunks_mut(k.max(1)).enumerate().for_each(|(a, row)| {
                for (b, slot) in row.iter_mut().enumerate() {
                    let v = op(a, b);
                    debug_assert!(v < k);
                    *slot = v as u32;
                }
            });
            table
        };
        let add = fill(&add);
        let mul = fill(&mul);
        let mut mul_t = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                mul_t[b * k + a] = mul[a * k + b];
            }
        }
        FiniteSemiring {
            name: name.into(),
            labels,
            k,
            add,
            mul,
            mul_t,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.k
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.k + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.k + b] as usize
    }

    /// Row `a` of the addition table: `b -> a + b`.
    #[inline]
    pub(crate) fn add_row(&self, a: usize) -> &[u32] {
        &self.add[a * self.k..(a + 1) * self.k]
    }

    /// Row `a` of the multiplication table: `b -> a * b`.
    #[inline]
    pub(crate) fn mul_row(&self, a: usize) -> &[u32] {
        &self.mul[a * self.k..(a + 1) * self.k]
    }

    /// Column `b` of the multiplication table: `a -> a * b`.
    #[inline]
    pub(crate) fn mul_col(&self, b: usize) -> &[u32] {
        &self.mul_t[b * self.k..(b + 1) * self.k]
    }

    /// Re-runs the axiom check on the stored tables.
    pub fn verify(&self) -> AxiomReport {
        axiom_report(self)
    }

    pub fn to_tables(&self) -> Tables {
        let k = self.k;
        let rows = |t: &[u32]| -> Vec<Vec<usize>> {
            (0..k)
                .map(|a| t[a * k..(a + 1) * k].iter().map(|&v| v as usize).collect())
                .collect()
        };
        Tables {
            name: self.name.clone(),
            elements: self.labels.clone(),
            add: rows(&self.add),
            mul: rows(&self.mul),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_tables()).expect("tables serialize")
    }

    pub fn is_additively_idempotent(&self) -> bool {
        self.first_non_idempotent().is_none()
    }

    fn first_non_idempotent(&self) -> Option<usize> {
        self.elements().find(|&a| self.add(a, a) != a)
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.k).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `|SS|`, the number of distinct products.
    pub fn products_size(&self) -> usize {
        self.mul.iter().collect::<BTreeSet<_>>().len()
    }

    /// Applies a relabeling `perm[old] = new` to both tables.
    pub fn permuted(&self, perm: &[usize]) -> FiniteSemiring {
        let k = self.k;
        let mut inv = vec![0; k];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let labels = (0..k).map(|new| self.labels[inv[new]].clone()).collect();
        FiniteSemiring::from_fn(
            self.name.clone(),
            labels,
            |a, b| perm[self.add(inv[a], inv[b])],
            |a, b| perm[self.mul(inv[a], inv[b])],
        )
    }
}

impl Serialize for FiniteSemiring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_tables().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteSemiring {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let tables = Tables::deserialize(deserializer)?;
        FiniteSemiring::from_tables(tables).map_err(serde::de::Error::custom)
    }
}

/// Per-element flags of [`ElementProfile`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementFlags {
    pub is_zero: bool,
    pub is_unity: bool,
    pub is_bi_absorbing: bool,
    pub is_left_mult_absorbing: bool,
    pub is_right_mult_absorbing: bool,
    pub is_minimal: bool,
    pub is_greatest: bool,
}

/// Distinguished elements of a semiring.
///
/// Left multiplicatively absorbing means `wS = {w}`, right means `Sw = {w}`.
/// Minimality and greatest refer to the natural order and are only computed
/// for additively idempotent semirings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementProfile {
    pub flags: Vec<ElementFlags>,
    pub zero: Option<usize>,
    pub unity: Option<usize>,
    pub bi_absorbing: Option<usize>,
    pub greatest: Option<usize>,
}

impl ElementProfile {
    pub fn multiplicatively_absorbing(&self) -> Option<usize> {
        self.flags
            .iter()
            .position(|f| f.is_left_mult_absorbing && f.is_right_mult_absorbing)
    }
}

pub fn element_profile(s: &FiniteSemiring) -> ElementProfile {
    let order = natural_order(s).ok();
    let mut flags: Vec<ElementFlags> = s
        .elements()
        .map(|w| {
            let left_abs = s.elements().all(|a| s.mul(w, a) == w);
            let right_abs = s.elements().all(|a| s.mul(a, w) == w);
            let absorbing = left_abs && right_abs;
            ElementFlags {
                is_zero: absorbing && s.elements().all(|a| s.add(a, w) == a),
                is_unity: s.elements().all(|a| s.mul(a, w) == a && s.mul(w, a) == a),
                is_bi_absorbing: absorbing && s.elements().all(|a| s.add(a, w) == w),
                is_left_mult_absorbing: left_abs,
                is_right_mult_absorbing: right_abs,
                is_minimal: false,
                is_greatest: false,
            }
        })
        .collect();
    let mut greatest = None;
    if let Some(order) = &order {
        for w in s.elements() {
            flags[w].is_minimal = order.is_minimal(w);
            flags[w].is_greatest = order.is_greatest(w);
        }
        greatest = order.greatest();
    }
    let unique = |pred: fn(&ElementFlags) -> bool| flags.iter().position(pred);
    ElementProfile {
        zero: unique(|f| f.is_zero),
        unity: unique(|f| f.is_unity),
        bi_absorbing: unique(|f| f.is_bi_absorbing),
        greatest,
        flags,
    }
}

/// The order `a <= b  <=>  a + b = b` of an additively idempotent semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalOrder {
    k: usize,
    leq: Vec<bool>,
}

impl NaturalOrder {
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.k + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn is_minimal(&self, a: usize) -> bool {
        (0..self.k).all(|x| !self.lt(x, a))
    }

    pub fn is_greatest(&self, a: usize) -> bool {
        (0..self.k).all(|x| self.leq(x, a))
    }

    pub fn is_least(&self, a: usize) -> bool {
        (0..self.k).all(|x| self.leq(a, x))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.k).find(|&a| self.is_greatest(a))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.k).filter(|&a| self.is_minimal(a)).collect()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between them.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.k {
            for b in 0..self.k {
                if self.lt(a, b) && !(0..self.k).any(|z| self.lt(a, z) && self.lt(z, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_chain(&self) -> bool {
        (0..self.k).all(|a| (0..self.k).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// Raw `k x k` table as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.k).map(|r| r.to_vec()).collect()
    }
}

/// Natural order of `s`; fails with the first element `a` such that
/// `a + a != a`.
pub fn natural_order(s: &FiniteSemiring) -> Result<NaturalOrder> {
    if let Some(a) = s.first_non_idempotent() {
        return Err(Error::NotAdditivelyIdempotent {
            element: s.label(a).to_owned(),
        });
    }
    let k = s.size();
    let mut leq = vec![false; k * k];
    for a in 0..k {
        for b in 0..k {
            leq[a * k + b] = s.add(a, b) == b;
        }
    }
    Ok(NaturalOrder { k, leq })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub additively_idempotent: bool,
    pub commutative: bool,
    pub almost_integral: bool,
    pub integral: bool,
    pub downward_directed: bool,
    pub ss_size: usize,
}

/// `ab <= a` and `ba <= a` for all `a, b`, plus additive idempotency.
pub fn is_almost_integral(s: &FiniteSemiring) -> bool {
    s.is_additively_idempotent()
        && s.elements().all(|a| {
            s.elements()
                .all(|b| s.add(s.mul(a, b), a) == a && s.add(s.mul(b, a), a) == a)
        })
}

pub fn classify(s: &FiniteSemiring) -> ClassFlags {
    let additively_idempotent = s.is_additively_idempotent();
    let almost_integral = is_almost_integral(s);
    let downward_directed = natural_order(s)
        .map(|o| {
            s.elements()
                .all(|a| s.elements().all(|b| s.elements().any(|c| o.leq(c, a) && o.leq(c, b))))
        })
        .unwrap_or(false);
    let has_unity = s
        .elements()
        .any(|w| s.elements().all(|a| s.mul(a, w) == a && s.mul(w, a) == a));
    ClassFlags {
        additively_idempotent,
        commutative: s.is_commutative(),
        almost_integral,
        integral: almost_integral && has_unity,
        downward_directed,
        ss_size: s.products_size(),
    }
}

/// Cheap relabeling-invariant signature of an element, used to prune the
/// isomorphism search.
fn element_signature(s: &FiniteSemiring, profile: &ElementProfile, a: usize) -> [usize; 6] {
    let f = profile.flags[a];
    let bits = [
        f.is_zero,
        f.is_unity,
        f.is_bi_absorbing,
        f.is_left_mult_absorbing,
        f.is_right_mult_absorbing,
        f.is_minimal,
        f.is_greatest,
    ]
    .iter()
    .enumerate()
    .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i));
    [
        bits,
        (s.add(a, a) == a) as usize,
        (s.mul(a, a) == a) as usize,
        s.elements().filter(|&x| s.add(x, a) == a).count(),
        s.elements().filter(|&x| s.mul(x, a) == a).count(),
        s.elements().filter(|&x| s.mul(a, x) == a).count(),
    ]
}

/// Searches for an isomorphism `s -> t`. Returns `map` with `map[a]` the
/// image of `a`.
pub fn is_isomorphic(s: &FiniteSemiring, t: &FiniteSemiring) -> Option<Vec<usize>> {
    let k = s.size();
    if k != t.size() {
        return None;
    }
    let (ps, pt) = (element_profile(s), element_profile(t));
    let sig_s: Vec<_> = s.elements().map(|a| element_signature(s, &ps, a)).collect();
    let sig_t: Vec<_> = t.elements().map(|a| element_signature(t, &pt, a)).collect();
    let mut ms: Vec<_> = sig_s.clone();
    let mut mt: Vec<_> = sig_t.clone();
    ms.sort();
    mt.sort();
    if ms != mt {
        return None;
    }

    fn extend(
        s: &FiniteSemiring,
        t: &FiniteSemiring,
        sig_s: &[[usize; 6]],
        sig_t: &[[usize; 6]],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let a = map.len();
        if a == s.size() {
            return true;
        }
        for b in 0..t.size() {
            if used[b] || sig_s[a] != sig_t[b] {
                continue;
            }
            map.push(b);
            // check each pair once, at the step where the last of `p`, `q`
            // and the result gets its image
            let consistent = (0..=a).all(|p| {
                (0..=a).all(|q| {
                    let sum = s.add(p, q);
                    let prod = s.mul(p, q);
                    let fresh = |r: usize| r <= a && (p == a || q == a || r == a);
                    (!fresh(sum) || t.add(map[p], map[q]) == map[sum])
                        && (!fresh(prod) || t.mul(map[p], map[q]) == map[prod])
                })
            });
            if consistent {
                used[b] = true;
                if extend(s, t, sig_s, sig_t, map, used) {
                    return true;
                }
                used[b] = false;
            }
            map.pop();
        }
        false
    }

    let mut map = Vec::with_capacity(k);
    let mut used = vec![false; k];
    if !extend(s, t, &sig_s, &sig_t, &mut map, &mut used) {
        return None;
    }
    Some(map)
}
