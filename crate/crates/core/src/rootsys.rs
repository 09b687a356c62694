//! Root-system data for the simple Lie algebras, expressed in the simple-root
//! basis.
//!
//! Node numbering follows Bourbaki:
//!
//! ```text
//! A_r   1 - 2 - ... - r
//! B_r   1 - 2 - ... - (r-1) => r        (α_r short)
//! C_r   1 - 2 - ... - (r-1) <= r        (α_r long)
//! D_r   1 - 2 - ... - (r-2) - (r-1)
//!                        \
//!                         r
//! E_r   1 - 3 - 4 - 5 - ... - r
//!               |
//!               2
//! F_4   1 - 2 => 3 - 4                  (α_1, α_2 long)
//! G_2   1 <= 2                          (α_1 short)
//! ```
//!
//! The Cartan matrix is `a_ij = 2(α_i, α_j) / (α_i, α_i)`, so the simple
//! reflection `s_i` sends `α_j` to `α_j - a_ij α_i`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie type such as `A3` or `E8`. Only admissible pairs can be
/// constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reason = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B if rank < 2 => Some("type B needs rank >= 2"),
            Family::C if rank < 2 => Some("type C needs rank >= 2"),
            Family::D if rank < 3 => Some("type D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => Some("type E exists only in ranks 6, 7, 8"),
            Family::F if rank != 4 => Some("type F exists only in rank 4"),
            Family::G if rank != 2 => Some("type G exists only in rank 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
                reason,
            }),
            None => Ok(LieType { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// The exceptional types G2, F4, E6, E7, E8.
    pub fn exceptional() -> Vec<LieType> {
        ["G2", "F4", "E6", "E7", "E8"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnparsableType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnparsableType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Cartan matrix of `t` (row-major, `a[i][j] = 2(α_i,α_j)/(α_i,α_i)`).
pub fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank();
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match t.family() {
        Family::A => (1..r).for_each(|i| bond(i, i + 1, -1, -1)),
        Family::B => {
            (1..r - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(r - 1, r, -1, -2);
        }
        Family::C => {
            (1..r - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(r - 1, r, -2, -1);
        }
        Family::D => {
            (1..r - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(r - 2, r, -1, -1);
        }
        Family::E => {
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            (3..r).for_each(|i| bond(i, i + 1, -1, -1));
        }
        Family::F => {
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);
            bond(3, 4, -1, -1);
        }
        Family::G => bond(1, 2, -3, -1),
    }
    a
}

/// Immutable root-system data for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Weight>,
    root_coords: Vec<Vec<u32>>,
    rho: Weight,
    highest_root: Weight,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let cartan = cartan_matrix(t);
        let root_coords = generate_positive_roots(&cartan);
        let positive_roots: Vec<Weight> = root_coords
            .iter()
            .map(|v| Weight::from_ints(v.iter().map(|&c| i64::from(c))))
            .collect();
        let rank = t.rank();
        let mut sum = Weight::zero(rank);
        for root in &positive_roots {
            sum = &sum + root;
        }
        let rho = sum.scale(Rational64::new(1, 2));
        // roots are sorted by height, so the last one has maximal height
        let highest_root = positive_roots
            .last()
            .cloned()
            .expect("nonempty root system");
        RootSystem {
            lie_type: t,
            cartan,
            positive_roots,
            root_coords,
            rho,
            highest_root,
        }
    }

    /// Parses a type string such as `"F4"` and builds its root system.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then by coefficient vector in
    /// descending lexicographic order, so `α_1, ..., α_r` come first.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// The positive roots as nonnegative integer coordinate vectors, parallel
    /// to [`positive_roots`](Self::positive_roots).
    pub fn root_coords(&self) -> &[Vec<u32>] {
        &self.root_coords
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: w.rank(),
            })
        }
    }

    /// Pairing `<w, α_i^∨>` for 1-based `i`.
    pub fn coroot_pairing(&self, w: &Weight, i: usize) -> Rational64 {
        w.coeffs()
            .iter()
            .zip(&self.cartan[i - 1])
            .map(|(c, &a)| c * Rational64::from_integer(a))
            .sum()
    }

    /// Converts α-basis coordinates to fundamental-weight coordinates
    /// `m_i = <w, α_i^∨>`.
    pub fn alpha_to_omega(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        Ok(Weight::new(
            (1..=self.rank())
                .map(|i| self.coroot_pairing(w, i))
                .collect(),
        ))
    }

    /// Converts `Σ m_i ω_i` to α-basis coordinates by solving `A x = m`
    /// exactly.
    pub fn omega_to_alpha(&self, m: &Weight) -> Result<Weight> {
        self.check_weight(m)?;
        let a: Vec<Vec<Rational64>> = self
            .cartan
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        Ok(Weight::new(solve_exact(a, m.coeffs().to_vec())))
    }

    /// The fundamental weight `ω_i` (1-based) in α-coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        let r = self.rank();
        if i == 0 || i > r {
            return Err(Error::IndexOutOfRange { index: i, rank: r });
        }
        self.omega_to_alpha(&Weight::simple_root(r, i))
    }
}

/// Gaussian elimination over the rationals for a nonsingular system.
fn solve_exact(mut a: Vec<Vec<Rational64>>, mut b: Vec<Rational64>) -> Vec<Rational64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational64::one() / a[col][col];
        for x in &mut a[col][col..] {
            *x *= inv;
        }
        b[col] *= inv;
        let pivot_row = a[col].clone();
        let pivot_b = b[col];
        for (r, (row, rhs)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            let f = row[col];
            if r != col && !f.is_zero() {
                for (x, &t) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * t;
                }
                *rhs -= f * pivot_b;
            }
        }
    }
    b
}

/// Height-by-height generation of Φ⁺ from root strings: for a positive root
/// β and simple root α_i, β + α_i is a root iff `p - <β, α_i^∨> > 0` where
/// `p` is the largest `k` with `β - k α_i` a root.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<u32>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    seen.extend(layer.iter().cloned());
    let mut all = layer.clone();

    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[i][j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }

    let mut roots: Vec<Vec<u32>> = all
        .into_iter()
        .map(|v| v.into_iter().map(|c| c as u32).collect())
        .collect();
    roots.sort_by(|a, b| {
        let ha: u32 = a.iter().sum();
        let hb: u32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}
