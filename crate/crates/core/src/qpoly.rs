//! Polynomials in `q` with nonnegative integer coefficients, and their signed
//! arbitrary-precision counterpart used when folding alternating sums.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `c_0 + c_1 q + c_2 q^2 + ...` with trailing zeros trimmed; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u128>", into = "Vec<u128>")]
pub struct QPolynomial {
    coeffs: Vec<u128>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<u128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial { coeffs: vec![1] }
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> u128 {
        self.coeffs.iter().sum()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_signed(&self) -> SignedQPolynomial {
        SignedQPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Table rendering with every exponent written, e.g.
    /// `q^1 + 2q^2 + q^5`.
    pub fn to_table_text(&self) -> String {
        render_terms(self.terms(), Style::TextExplicit)
    }

    /// LaTeX table rendering, e.g. `q^{1} + 2q^{2} + q^{5}`.
    pub fn to_latex(&self) -> String {
        render_terms(self.terms(), Style::LatexTable)
    }

    fn terms(&self) -> impl Iterator<Item = (usize, String, bool)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c.to_string(), false))
    }
}

impl From<Vec<u128>> for QPolynomial {
    fn from(v: Vec<u128>) -> Self {
        QPolynomial::new(v)
    }
}

impl From<QPolynomial> for Vec<u128> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs
    }
}

/// Compact rendering: `q + q^5`, with the constant term written as a number.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms(), Style::TextCompact))
    }
}

/// Polynomial in `q` with signed arbitrary-precision coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedQPolynomial {
    coeffs: Vec<BigInt>,
}

impl SignedQPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SignedQPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `sign * p` in place.
    pub fn add_signed(&mut self, p: &QPolynomial, negative: bool) {
        if self.coeffs.len() < p.coeffs().len() {
            self.coeffs.resize(p.coeffs().len(), BigInt::zero());
        }
        for (acc, &c) in self.coeffs.iter_mut().zip(p.coeffs()) {
            if negative {
                *acc -= c;
            } else {
                *acc += c;
            }
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Converts to a [`QPolynomial`] if every coefficient is nonnegative and
    /// fits in `u128`.
    pub fn to_unsigned(&self) -> Option<QPolynomial> {
        self.coeffs
            .iter()
            .map(|c| if c.is_negative() { None } else { c.to_u128() })
            .collect::<Option<Vec<_>>>()
            .map(QPolynomial::new)
    }

    fn signed_terms(&self) -> impl Iterator<Item = (usize, String, bool)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.abs().to_string(), c.is_negative()))
    }

    /// LaTeX rendering in the compact style used for table footers, e.g.
    /// `q + q^5 + q^{11}`.
    pub fn to_latex_compact(&self) -> String {
        render_terms(self.signed_terms(), Style::LatexCompact)
    }
}

impl fmt::Display for SignedQPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.signed_terms(), Style::TextCompact))
    }
}

#[derive(Clone, Copy)]
enum Style {
    /// `q + 2q^2`
    TextCompact,
    /// `q^1 + 2q^2`
    TextExplicit,
    /// `q^{1} + 2q^{2}`
    LatexTable,
    /// `q + q^5 + q^{11}`
    LatexCompact,
}

fn render_terms(terms: impl Iterator<Item = (usize, String, bool)>, style: Style) -> String {
    let mut out = String::new();
    for (exp, magnitude, negative) in terms {
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = magnitude == "1";
        if exp == 0 {
            out.push_str(&magnitude);
            continue;
        }
        if !unit {
            out.push_str(&magnitude);
        }
        out.push('q');
        match style {
            Style::TextCompact if exp == 1 => {}
            Style::TextCompact | Style::TextExplicit => {
                out.push('^');
                out.push_str(&exp.to_string());
            }
            Style::LatexTable => out.push_str(&format!("^{{{exp}}}")),
            Style::LatexCompact if exp == 1 => {}
            Style::LatexCompact if exp < 10 => out.push_str(&format!("^{exp}")),
            Style::LatexCompact => out.push_str(&format!("^{{{exp}}}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
