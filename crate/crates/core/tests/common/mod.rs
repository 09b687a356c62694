//! Oracles and fixture parsing shared by the integration tests.
#![allow(dead_code)]

use kostant::{QPolynomial, RootSystem, Weight};

/// One row of a LaTeX alternation table.
#[derive(Debug, Clone)]
pub struct FixtureRow {
    pub index: usize,
    pub word: Vec<u8>,
    pub length: usize,
    pub xi: Vec<i64>,
    pub pq: Vec<u128>,
    pub raw: String,
}

fn strip_math(s: &str) -> &str {
    s.trim()
        .trim_start_matches('$')
        .trim_end_matches('$')
        .trim()
}

/// Parses `2\alpha_{1} + \alpha_{3}` into coordinates.
pub fn parse_latex_weight(s: &str, rank: usize) -> Vec<i64> {
    let mut out = vec![0i64; rank];
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coef, idx) = term.split_once("\\alpha_{").expect("alpha term");
        let i: usize = idx.trim_end_matches('}').parse().unwrap();
        out[i - 1] = if coef.is_empty() {
            1
        } else {
            coef.parse().unwrap()
        };
    }
    out
}

/// Parses `q^{1} + 7q^{2}` into coefficients.
pub fn parse_latex_poly(s: &str) -> Vec<u128> {
    let mut out = Vec::new();
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coef, exp) = term.split_once("q^{").expect("q term");
        let e: usize = exp.trim_end_matches('}').parse().unwrap();
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] = if coef.is_empty() {
            1
        } else {
            coef.parse().unwrap()
        };
    }
    out
}

pub fn load_fixture(text: &str, rank: usize) -> Vec<FixtureRow> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let body = line
                .trim_end()
                .trim_end_matches("\\hline")
                .trim_end_matches("\\\\");
            let cols: Vec<&str> = body.split(" & ").collect();
            assert_eq!(cols.len(), 5, "bad fixture row {line}");
            FixtureRow {
                index: cols[0].trim().parse().unwrap(),
                word: kostant::weyl::parse_word(strip_math(cols[1])).unwrap(),
                length: cols[2].trim().parse().unwrap(),
                xi: parse_latex_weight(strip_math(cols[3]), rank),
                pq: parse_latex_poly(strip_math(cols[4])),
                raw: line.trim_end().to_string(),
            }
        })
        .collect()
}

/// Counts partitions by brute force over every multiplicity vector in the
/// box `n_β ≤ min_i ξ_i / β_i`, with no pruning at all.
pub fn naive_partition(rs: &RootSystem, xi: &[u32]) -> Vec<u128> {
    let roots = rs.root_coords();
    let caps: Vec<u32> = roots
        .iter()
        .map(|b| {
            b.iter()
                .zip(xi)
                .filter(|(&c, _)| c > 0)
                .map(|(&c, &x)| x / c)
                .min()
                .unwrap()
        })
        .collect();
    let height: u32 = xi.iter().sum();
    let mut coeffs = vec![0u128; height as usize + 1];
    let mut n = vec![0u32; roots.len()];
    loop {
        let mut sum = vec![0u32; xi.len()];
        for (b, &k) in roots.iter().zip(&n) {
            for (s, &c) in sum.iter_mut().zip(b) {
                *s += c * k;
            }
        }
        if sum == xi {
            coeffs[n.iter().sum::<u32>() as usize] += 1;
        }
        let mut k = 0;
        loop {
            if k == n.len() {
                return trim(coeffs);
            }
            if n[k] < caps[k] {
                n[k] += 1;
                break;
            }
            n[k] = 0;
            k += 1;
        }
    }
}

fn trim(mut v: Vec<u128>) -> Vec<u128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn weight(coords: &[u32]) -> Weight {
    Weight::from_ints(coords.iter().map(|&c| i64::from(c)))
}

pub fn coeffs(p: &QPolynomial) -> Vec<u128> {
    p.coeffs().to_vec()
}

/// `|Φ⁺|` from the closed forms.
pub fn positive_root_count(family: char, r: usize) -> usize {
    match family {
        'A' => r * (r + 1) / 2,
        'B' | 'C' => r * r,
        'D' => r * (r - 1),
        'E' => [36, 63, 120][r - 6],
        'F' => 24,
        'G' => 6,
        _ => unreachable!(),
    }
}

/// Every admissible type of rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<String> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(format!("A{r}"));
        if r >= 2 {
            out.push(format!("B{r}"));
            out.push(format!("C{r}"));
        }
        if r >= 3 {
            out.push(format!("D{r}"));
        }
        if (6..=8).contains(&r) {
            out.push(format!("E{r}"));
        }
        if r == 4 {
            out.push("F4".into());
        }
        if r == 2 {
            out.push("G2".into());
        }
    }
    out
}
