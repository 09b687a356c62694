//! Weights expressed in the simple-root basis.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight `c_1 α_1 + ... + c_r α_r` stored as its exact rational
/// coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct Weight(Vec<Rational64>);

/// How a weight relates to the cone of nonnegative integral combinations of
/// simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightClass {
    NonnegativeIntegral,
    HasNegative,
    HasFraction,
}

impl Weight {
    pub fn new(coeffs: Vec<Rational64>) -> Self {
        Weight(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational64::zero(); rank])
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Weight(coeffs.into_iter().map(Rational64::from_integer).collect())
    }

    /// The simple root `α_i` (1-based index) in a rank-`rank` system.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = Rational64::one();
        w
    }

    /// Parses a comma separated coefficient list such as `"2,2"` or `"1/2,0"`.
    pub fn parse_list(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Rational64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rational64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> Rational64 {
        self.0.iter().copied().sum()
    }

    pub fn classify(&self) -> WeightClass {
        if self.0.iter().any(|c| !c.is_integer()) {
            WeightClass::HasFraction
        } else if self.0.iter().any(Signed::is_negative) {
            WeightClass::HasNegative
        } else {
            WeightClass::NonnegativeIntegral
        }
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.classify() == WeightClass::NonnegativeIntegral
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients of a nonnegative integral weight.
    pub fn to_naturals(&self) -> Option<Vec<u32>> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    u32::try_from(c.to_integer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() == other.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: other.rank(),
            })
        }
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(Weight(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, k: Rational64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// LaTeX rendering as used in the alternation-set tables, e.g.
    /// `2\alpha_{1} + \alpha_{3}`.
    pub fn to_latex(&self) -> String {
        self.render(
            |i| format!("\\alpha_{{{i}}}"),
            |c| format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
        )
    }

    /// Plain-text rendering, e.g. `3α_1 + 2α_2`.
    pub fn to_text(&self) -> String {
        self.render(|i| format!("α_{i}"), |c| format!("({c})"))
    }

    fn render(
        &self,
        symbol: impl Fn(usize) -> String,
        fraction: impl Fn(&Rational64) -> String,
    ) -> String {
        let mut out = String::new();
        for (idx, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if !magnitude.is_one() {
                if magnitude.is_integer() {
                    out.push_str(&magnitude.to_integer().to_string());
                } else {
                    out.push_str(&fraction(&magnitude));
                }
            }
            out.push_str(&symbol(idx + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let t = s.trim();
    let bad = || Error::UnparsableCoefficient(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => t
            .parse::<i64>()
            .map(Rational64::from_integer)
            .map_err(|_| bad()),
    }
}

impl From<Weight> for Vec<String> {
    fn from(w: Weight) -> Self {
        w.0.iter().map(ToString::to_string).collect()
    }
}

impl TryFrom<Vec<String>> for Weight {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        v.iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator forms panic on rank mismatch; use `checked_*` when ranks are not
// known to agree.
impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.checked_add(rhs).expect("weights of different rank")
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.checked_sub(rhs).expect("weights of different rank")
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn height_is_coefficient_sum() {
        assert_eq!(Weight::from_ints([2, 2]).height(), r(4, 1));
        assert_eq!(Weight::zero(3).height(), r(0, 1));
        assert_eq!(Weight::from_ints([3, 2]).height(), r(5, 1));
    }

    #[test]
    fn classification() {
        assert_eq!(
            Weight::from_ints([2, 2]).classify(),
            WeightClass::NonnegativeIntegral
        );
        assert_eq!(
            Weight::from_ints([-1, 0]).classify(),
            WeightClass::HasNegative
        );
        assert_eq!(
            Weight::new(vec![r(1, 2)]).classify(),
            WeightClass::HasFraction
        );
        // fraction wins over negativity
        assert_eq!(
            Weight::new(vec![r(-1, 2), r(-3, 1)]).classify(),
            WeightClass::HasFraction
        );
        assert_eq!(Weight::zero(2).classify(), WeightClass::NonnegativeIntegral);
    }

    #[test]
    fn parse_and_render() {
        let w = Weight::parse_list("3, 0,1/2").unwrap();
        assert_eq!(w.coeffs(), &[r(3, 1), r(0, 1), r(1, 2)]);
        assert_eq!(w.to_text(), "3α_1 + (1/2)α_3");
        assert_eq!(
            Weight::from_ints([0, 3, 2, 0]).to_latex(),
            "3\\alpha_{2} + 2\\alpha_{3}"
        );
        assert_eq!(
            Weight::from_ints([1, 2]).to_latex(),
            "\\alpha_{1} + 2\\alpha_{2}"
        );
        assert_eq!(Weight::from_ints([-1, 1]).to_text(), "-α_1 + α_2");
        assert_eq!(Weight::zero(2).to_text(), "0");
        assert!(Weight::parse_list("1,x").is_err());
        assert!(Weight::parse_list("1/0").is_err());
    }

    #[test]
    fn arithmetic_checks_rank() {
        let a = Weight::from_ints([1, 2]);
        let b = Weight::from_ints([1, 2, 3]);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::DimensionMismatch {
                expected: 2,
                actual: 3
            })
        );
        assert_eq!(&a - &a, Weight::zero(2));
    }

    #[test]
    fn serde_uses_string_coefficients() {
        let w = Weight::new(vec![r(1, 2), r(3, 1)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"["1/2","3"]"#);
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
