//! Kostant's partition function `℘` and its q-analog `℘_q`.
//!
//! Two independent algorithms are provided:
//!
//! * [`partition_tree_count`] walks the partition tree depth first: level `k`
//!   chooses how many copies of the `k`-th positive root to subtract. The tree
//!   is never materialized; dead branches contribute nothing, and subtrees
//!   found dead are remembered so they are not walked twice.
//! * [`partition_genfunc`] extracts the coefficient of `A^ξ` from
//!   `∏_{β∈Φ⁺} 1/(1 - q A^β)`, truncated to the box `∏ [0, ξ_i]`, as a
//!   bounded-knapsack dynamic program over exponent vectors.
//!
//! Both return a [`QPolynomial`] whose `i`-th coefficient counts partitions
//! using exactly `i` positive roots.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::qpoly::QPolynomial;
use crate::rootsys::RootSystem;
use crate::weight::Weight;

/// Which partition algorithm to run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Tree,
    #[default]
    Genfunc,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "tree" => Ok(Method::Tree),
            "genfunc" => Ok(Method::Genfunc),
            other => Err(format!(
                "unknown method {other:?} (expected tree or genfunc)"
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Tree => "tree",
            Method::Genfunc => "genfunc",
        })
    }
}

/// One partition: `mults[k]` copies of the `k`-th positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionMultiset {
    pub mults: Vec<u32>,
}

impl PartitionMultiset {
    /// Total number of roots used, i.e. the q-degree of this partition.
    pub fn roots_used(&self) -> u32 {
        self.mults.iter().sum()
    }

    /// `Σ mults[k] · root_k`
    pub fn total(&self, rs: &RootSystem) -> Weight {
        let mut sum = vec![0i64; rs.rank()];
        for (root, &n) in rs.root_coords().iter().zip(&self.mults) {
            for (s, &c) in sum.iter_mut().zip(root) {
                *s += i64::from(n) * i64::from(c);
            }
        }
        Weight::from_ints(sum)
    }

    /// Renders as e.g. `1(α_2) + 1(2α_1 + α_2)`; the empty partition is `0`.
    pub fn render(&self, rs: &RootSystem) -> String {
        let terms: Vec<String> = self
            .mults
            .iter()
            .zip(rs.positive_roots())
            .filter(|(&n, _)| n > 0)
            .map(|(n, root)| format!("{n}({root})"))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

fn natural_coords(rs: &RootSystem, xi: &Weight) -> Option<Vec<u32>> {
    if xi.rank() != rs.rank() {
        return None;
    }
    xi.to_naturals()
}

/// For each depth `k`, the coordinates touched by some root at index `>= k`.
fn suffix_support(rs: &RootSystem) -> Vec<u64> {
    let roots = rs.root_coords();
    let mut masks = vec![0u64; roots.len() + 1];
    for k in (0..roots.len()).rev() {
        let own = roots[k]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        masks[k] = masks[k + 1] | own;
    }
    masks
}

struct TreeWalk<'a> {
    roots: &'a [Vec<u32>],
    reachable: Vec<u64>,
    residual: Vec<u32>,
    /// Mixed-radix strides over the box `∏ [0, ξ_i]`, used to key `dead`.
    strides: Option<Vec<u64>>,
    /// `(depth, residual)` states whose subtree holds no successful branch.
    dead: HashSet<u64>,
}

impl TreeWalk<'_> {
    fn new(rs: &RootSystem, xi: Vec<u32>) -> TreeWalk<'_> {
        let depth_radix = rs.root_coords().len() as u64 + 1;
        let mut strides = vec![0u64; xi.len()];
        let mut acc = Some(depth_radix);
        for (s, &c) in strides.iter_mut().zip(&xi).rev() {
            *s = acc.unwrap_or(0);
            acc = acc.and_then(|a| a.checked_mul(u64::from(c) + 1));
        }
        TreeWalk {
            roots: rs.root_coords(),
            reachable: suffix_support(rs),
            residual: xi,
            strides: acc.map(|_| strides),
            dead: HashSet::new(),
        }
    }

    fn residual_mask(&self) -> u64 {
        self.residual
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    fn state_key(&self, k: usize) -> Option<u64> {
        let strides = self.strides.as_ref()?;
        Some(
            self.residual
                .iter()
                .zip(strides)
                .map(|(&c, &s)| u64::from(c) * s)
                .sum::<u64>()
                + k as u64,
        )
    }

    /// Visits every successful branch below depth `k`, passing the chosen
    /// multiplicities to `leaf`. Returns whether any branch succeeded.
    fn walk(&mut self, k: usize, mults: &mut Vec<u32>, leaf: &mut dyn FnMut(&[u32])) -> bool {
        let mask = self.residual_mask();
        if mask == 0 {
            leaf(mults);
            return true;
        }
        if k == self.roots.len() || mask & !self.reachable[k] != 0 {
            return false;
        }
        let key = self.state_key(k);
        if key.is_some_and(|key| self.dead.contains(&key)) {
            return false;
        }
        let root = &self.roots[k];
        let saved = self.residual.clone();
        let mut found = false;
        let mut n = 0;
        loop {
            mults.push(n);
            found |= self.walk(k + 1, mults, leaf);
            mults.pop();
            let fits = self.residual.iter().zip(root).all(|(&r, &c)| r >= c);
            if !fits {
                break;
            }
            for (r, &c) in self.residual.iter_mut().zip(root) {
                *r -= c;
            }
            n += 1;
        }
        self.residual = saved;
        if !found {
            if let Some(key) = key {
                self.dead.insert(key);
            }
        }
        found
    }
}

/// `℘_q(ξ)` by depth-first traversal of the partition tree.
pub fn partition_tree_count(rs: &RootSystem, xi: &Weight) -> QPolynomial {
    let Some(target) = natural_coords(rs, xi) else {
        return QPolynomial::zero();
    };
    let height: u32 = target.iter().sum();
    let mut coeffs = vec![0u128; height as usize + 1];
    let mut walk = TreeWalk::new(rs, target);
    let mut mults = Vec::with_capacity(rs.root_coords().len());
    walk.walk(0, &mut mults, &mut |m| {
        let used: u32 = m.iter().sum();
        coeffs[used as usize] += 1;
    });
    QPolynomial::new(coeffs)
}

/// The explicit partitions of `ξ`, in depth-first order (fewer copies of
/// earlier roots first).
pub fn partition_tree_list(rs: &RootSystem, xi: &Weight) -> Vec<PartitionMultiset> {
    let Some(target) = natural_coords(rs, xi) else {
        return Vec::new();
    };
    let n_roots = rs.root_coords().len();
    let mut out = Vec::new();
    let mut walk = TreeWalk::new(rs, target);
    let mut mults = Vec::with_capacity(n_roots);
    walk.walk(0, &mut mults, &mut |m| {
        let mut full = m.to_vec();
        full.resize(n_roots, 0);
        out.push(PartitionMultiset { mults: full });
    });
    out
}

/// Table of `℘_q(v)` for every exponent vector `v` in a box `∏ [0, bound_i]`.
///
/// Built once, then read-only; any `ξ` inside the box is a lookup.
#[derive(Debug, Clone)]
pub struct GenFuncTable {
    bound: Vec<u32>,
    strides: Vec<usize>,
    slots: usize,
    data: Vec<u128>,
}

impl GenFuncTable {
    pub fn build(rs: &RootSystem, bound: &[u32]) -> Self {
        assert_eq!(bound.len(), rs.rank(), "box dimension must equal the rank");
        let r = bound.len();
        let mut strides = vec![1usize; r];
        for i in (0..r.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bound[i + 1] as usize + 1);
        }
        let cells = strides[0] * (bound[0] as usize + 1);
        let slots = bound.iter().sum::<u32>() as usize + 1;
        let mut data = vec![0u128; cells * slots];
        data[0] = 1;

        let mut cursor = vec![0u32; r];
        for root in rs.root_coords() {
            if root.iter().zip(bound).any(|(c, b)| c > b) {
                continue;
            }
            let root_height: u32 = root.iter().sum();
            let offset: usize = root
                .iter()
                .zip(&strides)
                .map(|(&c, s)| c as usize * s)
                .sum();

            // forward scan over every cell v >= root; v - root precedes v, so
            // arbitrarily many copies of the root are folded in
            cursor.copy_from_slice(root);
            loop {
                let cell: usize = cursor
                    .iter()
                    .zip(&strides)
                    .map(|(&c, s)| c as usize * s)
                    .sum();
                let height: u32 = cursor.iter().sum();
                let src_top = (height - root_height) as usize;
                let (lo, hi) = data.split_at_mut(cell * slots);
                let src = &lo[(cell - offset) * slots..][..=src_top];
                let dst = &mut hi[1..=src_top + 1];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = d.checked_add(s).expect("partition count overflows u128");
                }
                if !advance(&mut cursor, root, bound) {
                    break;
                }
            }
        }
        GenFuncTable {
            bound: bound.to_vec(),
            strides,
            slots,
            data,
        }
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    /// `℘_q(ξ)` if `ξ` is nonnegative integral and inside the box.
    pub fn get(&self, xi: &Weight) -> Option<QPolynomial> {
        let v = xi.to_naturals()?;
        if v.len() != self.bound.len() || v.iter().zip(&self.bound).any(|(c, b)| c > b) {
            return None;
        }
        let cell: usize = v
            .iter()
            .zip(&self.strides)
            .map(|(&c, s)| c as usize * s)
            .sum();
        Some(QPolynomial::new(
            self.data[cell * self.slots..][..self.slots].to_vec(),
        ))
    }
}

/// Odometer step over `lo[i]..=hi[i]`, last coordinate fastest.
fn advance(cursor: &mut [u32], lo: &[u32], hi: &[u32]) -> bool {
    for i in (0..cursor.len()).rev() {
        if cursor[i] < hi[i] {
            cursor[i] += 1;
            return true;
        }
        cursor[i] = lo[i];
    }
    false
}

/// `℘_q(ξ)` as a coefficient of the truncated generating function.
pub fn partition_genfunc(rs: &RootSystem, xi: &Weight) -> QPolynomial {
    let Some(target) = natural_coords(rs, xi) else {
        return QPolynomial::zero();
    };
    GenFuncTable::build(rs, &target)
        .get(xi)
        .expect("ξ lies in its own box")
}

pub fn partition_q(rs: &RootSystem, xi: &Weight, method: Method) -> QPolynomial {
    match method {
        Method::Tree => partition_tree_count(rs, xi),
        Method::Genfunc => partition_genfunc(rs, xi),
    }
}

/// `℘(ξ)`: the q-analog evaluated at `q = 1`.
pub fn kostant_partition(rs: &RootSystem, xi: &Weight, method: Method) -> u128 {
    partition_q(rs, xi, method).eval_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn both(sys: &RootSystem, xi: &[i64]) -> QPolynomial {
        let w = Weight::from_ints(xi.iter().copied());
        let a = partition_tree_count(sys, &w);
        let b = partition_genfunc(sys, &w);
        assert_eq!(a, b, "methods disagree on {w}");
        a
    }

    #[test]
    fn g2_values() {
        let g2 = rs("G2");
        assert_eq!(both(&g2, &[2, 2]), QPolynomial::new(vec![0, 0, 2, 1, 1]));
        assert_eq!(both(&g2, &[3, 2]), QPolynomial::new(vec![0, 1, 2, 2, 1, 1]));
        assert_eq!(both(&g2, &[3, 0]), QPolynomial::monomial(3));
        assert_eq!(both(&g2, &[0, 0]), QPolynomial::one());
        assert_eq!(both(&g2, &[-1, 0]), QPolynomial::zero());
        assert_eq!(
            kostant_partition(&g2, &Weight::from_ints([2, 2]), Method::Tree),
            4
        );
        assert_eq!(
            kostant_partition(&g2, &Weight::from_ints([3, 0]), Method::Genfunc),
            1
        );
    }

    #[test]
    fn fractional_and_mismatched_inputs_are_zero() {
        let a1 = rs("A1");
        let half = a1.rho().clone();
        assert!(partition_tree_count(&a1, &half).is_zero());
        assert!(partition_genfunc(&a1, &half).is_zero());
        assert!(partition_tree_list(&a1, &half).is_empty());
        assert!(partition_genfunc(&a1, &Weight::from_ints([1, 1])).is_zero());
    }

    #[test]
    fn f4_row() {
        let f4 = rs("F4");
        assert_eq!(
            both(&f4, &[0, 3, 2, 0]),
            QPolynomial::new(vec![0, 0, 0, 2, 1, 1])
        );
    }

    #[test]
    fn listing_matches_count() {
        let g2 = rs("G2");
        let xi = Weight::from_ints([2, 2]);
        let parts = partition_tree_list(&g2, &xi);
        assert_eq!(parts.len(), 4);
        for p in &parts {
            assert_eq!(p.total(&g2), xi);
        }
        let mut used: Vec<u32> = parts.iter().map(PartitionMultiset::roots_used).collect();
        used.sort_unstable();
        assert_eq!(used, [2, 2, 3, 4]);

        let zero = partition_tree_list(&g2, &Weight::zero(2));
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].roots_used(), 0);
        assert_eq!(zero[0].render(&g2), "0");

        let single = partition_tree_list(&g2, &Weight::from_ints([1, 0]));
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].mults, [1, 0, 0, 0, 0, 0]);
        assert_eq!(single[0].render(&g2), "1(α_1)");
    }

    #[test]
    fn shared_table_lookups() {
        let g2 = rs("G2");
        let table = GenFuncTable::build(&g2, &[3, 2]);
        assert_eq!(
            table.get(&Weight::from_ints([2, 2])),
            Some(QPolynomial::new(vec![0, 0, 2, 1, 1]))
        );
        assert_eq!(
            table.get(&Weight::from_ints([3, 0])),
            Some(QPolynomial::monomial(3))
        );
        assert_eq!(table.get(&Weight::from_ints([4, 0])), None);
        assert_eq!(table.get(&Weight::from_ints([-1, 0])), None);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("tree".parse::<Method>(), Ok(Method::Tree));
        assert_eq!("GenFunc".parse::<Method>(), Ok(Method::Genfunc));
        assert!("series".parse::<Method>().is_err());
        assert_eq!(Method::default(), Method::Genfunc);
    }
}
