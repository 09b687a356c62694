//! Weyl group elements acting on α-basis coordinates, full-group enumeration
//! and the alternation-set search.
//!
//! Every column of a Weyl group element's matrix is the image of a simple
//! root, hence a root, so all entries fit comfortably in an `i8` (the largest
//! root coefficient of any simple type is 6, in E8).

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::QPolynomial;
use crate::rootsys::{Family, LieType, RootSystem};
use crate::weight::Weight;

/// Default cap for [`enumerate_group`]; admits everything up to and including
/// E7 and refuses E8.
pub const DEFAULT_MAX_ORDER: u128 = 3_000_000;

/// A Weyl group element as an integer matrix on simple-root coordinates,
/// together with its canonical reduced word and length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Box<[i8]>,
    word: Box<[u8]>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0i8; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            matrix: matrix.into(),
            word: Box::new([]),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major matrix entries; this is also the deduplication key.
    pub fn matrix(&self) -> &[i8] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        i64::from(self.matrix[row * self.rank + col])
    }

    /// Canonical reduced word, 1-based simple-reflection indices, leftmost
    /// factor first.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(-1)^length`
    pub fn sign(&self) -> i8 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Word rendered as `s_3s_4s_3s_1`; the identity renders as `1`.
    pub fn word_string(&self) -> String {
        format_word(&self.word)
    }

    pub fn determinant(&self) -> i64 {
        let n = self.rank;
        let m: Vec<Vec<Rational64>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| Rational64::from_integer(self.entry(r, c)))
                    .collect()
            })
            .collect();
        rational_det(m).to_integer()
    }

    /// Matrix-vector product over the rationals.
    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: w.rank(),
            });
        }
        let n = self.rank;
        let coeffs = (0..n)
            .map(|r| {
                w.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(c, x)| x * Rational64::from_integer(self.entry(r, c)))
                    .sum()
            })
            .collect();
        Ok(Weight::new(coeffs))
    }

    /// `self * other`, with length and word recomputed from the product.
    pub fn compose(&self, other: &WeylElement, rs: &RootSystem) -> Result<WeylElement> {
        if other.rank != self.rank || rs.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                actual: other.rank,
            });
        }
        let n = self.rank;
        let mut m = vec![0i8; n * n];
        for r in 0..n {
            for c in 0..n {
                let s: i64 = (0..n).map(|k| self.entry(r, k) * other.entry(k, c)).sum();
                m[r * n + c] = s as i8;
            }
        }
        Ok(from_matrix(rs, m))
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.root_coords()
            .iter()
            .filter(|root| self.sends_negative(root))
            .count()
    }

    fn sends_negative(&self, root: &[u32]) -> bool {
        let n = self.rank;
        // the image is a root, so one negative coordinate decides the sign
        (0..n).any(|r| {
            (0..n)
                .map(|c| self.entry(r, c) * i64::from(root[c]))
                .sum::<i64>()
                < 0
        })
    }

    /// True if `self(α_i)` is a negative root (`i` 0-based), i.e. `s_i` is a
    /// right descent.
    fn has_right_descent(&self, i: usize) -> bool {
        (0..self.rank).any(|r| self.matrix[r * self.rank + i] < 0)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|i| format!("s_{i}")).collect()
    }
}

/// Parses `s_3s_4s_3s_1` (or `1` for the identity) into reflection indices.
pub fn parse_word(s: &str) -> Option<Vec<u8>> {
    let t = s.trim();
    if t == "1" || t.is_empty() {
        return Some(Vec::new());
    }
    t.split("s_")
        .skip(1)
        .map(|d| d.trim().parse::<u8>().ok())
        .collect::<Option<Vec<_>>>()
        .filter(|w| !w.is_empty() && t.starts_with("s_"))
}

fn rational_det(mut m: Vec<Vec<Rational64>>) -> Rational64 {
    let n = m.len();
    let mut det = Rational64::from_integer(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != Rational64::from_integer(0)) else {
            return Rational64::from_integer(0);
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= m[col][col];
        let (upper, lower) = m.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower {
            let f = row[col] / pivot_row[col];
            for (x, &t) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * t;
            }
        }
    }
    det
}

/// Right multiplication by `s_i` (0-based `i`) in place:
/// column `j` becomes `col_j - a_ij col_i`.
fn right_multiply_simple(rs: &RootSystem, rank: usize, m: &mut [i8], i: usize) {
    let row = &rs.cartan()[i];
    for r in 0..rank {
        let ci = m[r * rank + i];
        for (j, &aij) in row.iter().enumerate() {
            if aij != 0 {
                m[r * rank + j] -= (aij as i8) * ci;
            }
        }
    }
}

/// Builds an element from its matrix, recovering the canonical reduced word
/// by repeatedly stripping the smallest right descent.
fn from_matrix(rs: &RootSystem, matrix: Vec<i8>) -> WeylElement {
    let rank = rs.rank();
    let mut m = matrix.clone();
    let mut reversed = Vec::new();
    let probe = |m: &[i8], i: usize| (0..rank).any(|r| m[r * rank + i] < 0);
    while let Some(i) = (0..rank).find(|&i| probe(&m, i)) {
        right_multiply_simple(rs, rank, &mut m, i);
        reversed.push((i + 1) as u8);
    }
    reversed.reverse();
    WeylElement {
        rank,
        matrix: matrix.into(),
        word: reversed.into(),
    }
}

/// The simple reflection `s_i` (1-based): `α_j ↦ α_j - a_ij α_i`.
pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    let rank = rs.rank();
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange { index: i, rank });
    }
    let mut m = WeylElement::identity(rank).matrix.into_vec();
    right_multiply_simple(rs, rank, &mut m, i - 1);
    Ok(WeylElement {
        rank,
        matrix: m.into(),
        word: vec![i as u8].into(),
    })
}

/// Element represented by an arbitrary (not necessarily reduced) word.
pub fn element_from_word(rs: &RootSystem, word: &[u8]) -> Result<WeylElement> {
    let rank = rs.rank();
    let mut m = WeylElement::identity(rank).matrix.into_vec();
    for &i in word {
        let i = usize::from(i);
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange { index: i, rank });
        }
        right_multiply_simple(rs, rank, &mut m, i - 1);
    }
    Ok(from_matrix(rs, m))
}

/// `|W|` from the classical closed forms.
pub fn group_order(t: LieType) -> u128 {
    let r = t.rank() as u128;
    let fact = |n: u128| (1..=n).product::<u128>();
    match t.family() {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1u128 << r) * fact(r),
        Family::D => (1u128 << (r - 1)) * fact(r),
        Family::E => match r {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// Every element of `W`, in breadth-first (= length) order.
///
/// Layers are grown by right multiplication with ascents only, so each layer
/// needs deduplicating against itself alone. The canonical word of a new
/// element is its parent's word followed by the smallest generating index,
/// which is exactly its smallest right descent.
pub fn enumerate_group(rs: &RootSystem, max_order: u128) -> Result<Vec<WeylElement>> {
    let order = group_order(rs.lie_type());
    if order > max_order {
        return Err(Error::OrderExceeded {
            lie_type: rs.lie_type().to_string(),
            order,
            max_order,
        });
    }
    let rank = rs.rank();
    let mut all = vec![WeylElement::identity(rank)];
    let mut layer_start = 0;
    loop {
        let layer_end = all.len();
        let mut next: HashMap<Box<[i8]>, (usize, u8)> = HashMap::new();
        for (p, parent) in all[layer_start..layer_end].iter().enumerate() {
            for i in 0..rank {
                if parent.has_right_descent(i) {
                    continue;
                }
                let mut m = parent.matrix.to_vec();
                right_multiply_simple(rs, rank, &mut m, i);
                let entry = next.entry(m.into()).or_insert((layer_start + p, i as u8));
                if (i as u8) < entry.1 {
                    *entry = (layer_start + p, i as u8);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let mut fresh: Vec<WeylElement> = next
            .into_iter()
            .map(|(matrix, (parent, i))| {
                let mut word = all[parent].word.to_vec();
                word.push(i + 1);
                WeylElement {
                    rank,
                    matrix,
                    word: word.into(),
                }
            })
            .collect();
        fresh.sort_by(|a, b| a.word.cmp(&b.word));
        all.extend(fresh);
        layer_start = layer_end;
    }
    debug_assert_eq!(all.len() as u128, order);
    Ok(all)
}

/// One member of a Weyl alternation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationRecord {
    pub element: WeylElement,
    /// `σ(λ+ρ) - (ρ+μ)`, always nonnegative integral.
    pub xi: Weight,
    /// `℘_q(ξ)`; empty until filled in by the multiplicity computation.
    pub pq: Option<QPolynomial>,
}

impl AlternationRecord {
    pub fn sign(&self) -> i8 {
        self.element.sign()
    }
}

/// Serializable view of one record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub index: usize,
    pub word: String,
    pub length: usize,
    pub xi: Vec<i64>,
    pub pq: Option<QPolynomial>,
    pub sign: i8,
}

impl RecordRow {
    pub fn new(index: usize, record: &AlternationRecord) -> Self {
        RecordRow {
            index,
            word: record.element.word_string(),
            length: record.element.length(),
            xi: record.xi.to_integers().expect("ξ is integral"),
            pq: record.pq.clone(),
            sign: record.sign(),
        }
    }
}

fn shifted(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<(Weight, Weight)> {
    rs.check_weight(lambda)?;
    rs.check_weight(mu)?;
    Ok((lambda + rs.rho(), mu + rs.rho()))
}

fn sort_records(records: &mut [AlternationRecord]) {
    records.sort_by(|a, b| {
        a.element
            .length()
            .cmp(&b.element.length())
            .then_with(|| a.element.word.cmp(&b.element.word))
    });
}

/// The Weyl alternation set `{σ : ℘(σ(λ+ρ) - (ρ+μ)) > 0}`.
///
/// Worklist search: start from the identity (if its ξ is nonnegative
/// integral), extend every member on the right by each simple reflection,
/// and admit an unseen product whenever its ξ is nonnegative integral.
/// Sorted by length, then by reduced word.
pub fn alternation_set(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Vec<AlternationRecord>> {
    let (lr, mr) = shifted(rs, lambda, mu)?;
    let rank = rs.rank();
    let xi_of = |m: &[i8]| -> Weight {
        let coeffs = (0..rank)
            .map(|r| {
                let image: Rational64 = (0..rank)
                    .map(|c| lr.coeff(c) * Rational64::from_integer(i64::from(m[r * rank + c])))
                    .sum();
                image - mr.coeff(r)
            })
            .collect();
        Weight::new(coeffs)
    };

    let identity = WeylElement::identity(rank);
    let xi0 = xi_of(&identity.matrix);
    if !xi0.is_nonnegative_integral() {
        return Ok(Vec::new());
    }
    let mut members: Vec<(Box<[i8]>, Weight)> = vec![(identity.matrix.clone(), xi0)];
    let mut seen: HashSet<Box<[i8]>> = HashSet::new();
    seen.insert(identity.matrix.clone());

    let mut cursor = 0;
    while cursor < members.len() {
        for i in 0..rank {
            let mut m = members[cursor].0.to_vec();
            right_multiply_simple(rs, rank, &mut m, i);
            if seen.contains(m.as_slice()) {
                continue;
            }
            let xi = xi_of(&m);
            if xi.is_nonnegative_integral() {
                let key: Box<[i8]> = m.into();
                seen.insert(key.clone());
                members.push((key, xi));
            }
        }
        cursor += 1;
    }

    let mut records: Vec<AlternationRecord> = members
        .into_iter()
        .map(|(m, xi)| AlternationRecord {
            element: from_matrix(rs, m.into_vec()),
            xi,
            pq: None,
        })
        .collect();
    sort_records(&mut records);
    Ok(records)
}

/// Definition-level alternation set: filter the whole group by the
/// membership condition. Used to cross-check [`alternation_set`].
pub fn exhaustive_alternation_set(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    max_order: u128,
) -> Result<Vec<AlternationRecord>> {
    let (lr, mr) = shifted(rs, lambda, mu)?;
    let mut records = Vec::new();
    for element in enumerate_group(rs, max_order)? {
        let xi = &element.apply(&lr)? - &mr;
        if xi.is_nonnegative_integral() {
            records.push(AlternationRecord {
                element,
                xi,
                pq: None,
            });
        }
    }
    sort_records(&mut records);
    Ok(records)
}
