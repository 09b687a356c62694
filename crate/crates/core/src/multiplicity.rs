//! Weight multiplicities `m(λ,μ)` and their q-analogs `m_q(λ,μ)` from the
//! Kostant alternating sum, restricted to the Weyl alternation set.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::partition::{partition_q, GenFuncTable, Method};
use crate::qpoly::SignedQPolynomial;
use crate::rootsys::{Family, LieType, RootSystem};
use crate::weight::Weight;
use crate::weyl::{alternation_set, enumerate_group, group_order, AlternationRecord, RecordRow};

#[derive(Debug, Clone)]
pub struct MultiplicityResult {
    pub lie_type: LieType,
    pub lambda: Weight,
    pub mu: Weight,
    /// `Σ_σ (-1)^ℓ(σ) ℘_q(σ(λ+ρ) - (ρ+μ))`
    pub mq: SignedQPolynomial,
    /// `mq` at `q = 1`.
    pub m: BigInt,
    /// Alternation-set records with `pq` filled in.
    pub records: Vec<AlternationRecord>,
    pub method: Method,
}

impl MultiplicityResult {
    pub fn rows(&self) -> Vec<RecordRow> {
        self.records
            .iter()
            .enumerate()
            .map(|(i, r)| RecordRow::new(i + 1, r))
            .collect()
    }
}

/// Serializable summary of a [`MultiplicityResult`].
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityReport {
    pub lie_type: LieType,
    pub lambda: Weight,
    pub mu: Weight,
    pub method: Method,
    pub mq: Vec<String>,
    pub mq_text: String,
    pub m: String,
    pub records: Vec<RecordRow>,
}

impl From<&MultiplicityResult> for MultiplicityReport {
    fn from(r: &MultiplicityResult) -> Self {
        MultiplicityReport {
            lie_type: r.lie_type,
            lambda: r.lambda.clone(),
            mu: r.mu.clone(),
            method: r.method,
            mq: r.mq.coeffs().iter().map(ToString::to_string).collect(),
            mq_text: r.mq.to_string(),
            m: r.m.to_string(),
            records: r.rows(),
        }
    }
}

/// True if `<w, α_i^∨> >= 0` for every `i`.
pub fn is_dominant(rs: &RootSystem, w: &Weight) -> bool {
    (1..=rs.rank()).all(|i| rs.coroot_pairing(w, i) >= 0.into())
}

/// Fills `pq` for every record. With the generating-function method one table
/// is built for the componentwise maximum of all ξ and shared by every record.
pub fn fill_partitions(rs: &RootSystem, records: &mut [AlternationRecord], method: Method) {
    match method {
        Method::Tree => {
            for rec in records.iter_mut() {
                rec.pq = Some(partition_q(rs, &rec.xi, Method::Tree));
            }
        }
        Method::Genfunc => {
            if records.is_empty() {
                return;
            }
            let mut bound = vec![0u32; rs.rank()];
            for rec in records.iter() {
                let v = rec
                    .xi
                    .to_naturals()
                    .expect("alternation ξ is nonnegative integral");
                for (b, c) in bound.iter_mut().zip(v) {
                    *b = (*b).max(c);
                }
            }
            let table = GenFuncTable::build(rs, &bound);
            for rec in records.iter_mut() {
                rec.pq = table.get(&rec.xi);
            }
        }
    }
}

fn fold(records: &[AlternationRecord]) -> SignedQPolynomial {
    let mut acc = SignedQPolynomial::default();
    for rec in records {
        let pq = rec.pq.as_ref().expect("pq filled");
        acc.add_signed(pq, rec.sign() < 0);
    }
    acc
}

/// `m_q(λ, μ)` together with the contributing alternation records.
///
/// For dominant `λ, μ` the result is a genuine weight multiplicity and a
/// negative coefficient would indicate a bug; this is asserted.
pub fn compute_mq(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    method: Method,
) -> Result<MultiplicityResult> {
    let mut records = alternation_set(rs, lambda, mu)?;
    fill_partitions(rs, &mut records, method);
    let mq = fold(&records);
    if is_dominant(rs, lambda) && is_dominant(rs, mu) {
        assert!(
            mq.is_nonnegative(),
            "negative q-multiplicity {mq} for dominant weights"
        );
    }
    let m = mq.eval_one();
    Ok(MultiplicityResult {
        lie_type: rs.lie_type(),
        lambda: lambda.clone(),
        mu: mu.clone(),
        mq,
        m,
        records,
        method,
    })
}

/// `m_q(α̃, 0)`, the zero-weight space of the adjoint representation.
pub fn compute_adjoint_zero(rs: &RootSystem, method: Method) -> Result<MultiplicityResult> {
    compute_mq(
        rs,
        &rs.highest_root().clone(),
        &Weight::zero(rs.rank()),
        method,
    )
}

pub fn compute_m(rs: &RootSystem, lambda: &Weight, mu: &Weight, method: Method) -> Result<BigInt> {
    compute_mq(rs, lambda, mu, method).map(|r| r.m)
}

/// The unrestricted alternating sum over every element of `W`.
pub fn compute_mq_over_group(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    method: Method,
    max_order: u128,
) -> Result<SignedQPolynomial> {
    let lr = lambda.checked_add(rs.rho())?;
    let mr = mu.checked_add(rs.rho())?;
    let mut acc = SignedQPolynomial::default();
    for sigma in enumerate_group(rs, max_order)? {
        let xi = &sigma.apply(&lr)? - &mr;
        let pq = partition_q(rs, &xi, method);
        acc.add_signed(&pq, sigma.sign() < 0);
    }
    Ok(acc)
}

/// Classical exponents of a simple type.
pub fn reference_exponents(t: LieType) -> Vec<usize> {
    let r = t.rank();
    let mut e: Vec<usize> = match (t.family(), r) {
        (Family::A, _) => (1..=r).collect(),
        (Family::B | Family::C, _) => (0..r).map(|k| 2 * k + 1).collect(),
        (Family::D, _) => (0..r - 1).map(|k| 2 * k + 1).chain([r - 1]).collect(),
        (Family::E, 6) => vec![1, 4, 5, 7, 8, 11],
        (Family::E, 7) => vec![1, 5, 7, 9, 11, 13, 17],
        (Family::E, _) => vec![1, 7, 11, 13, 17, 19, 23, 29],
        (Family::F, _) => vec![1, 5, 7, 11],
        (Family::G, _) => vec![1, 5],
    };
    e.sort_unstable();
    e
}

/// Published `(|W|, |A(α̃,0)|)` for the exceptional types, kept to flag
/// disagreements with what is computed here.
pub fn published_exceptional_counts(t: LieType) -> Option<(u128, usize)> {
    match (t.family(), t.rank()) {
        (Family::G, 2) => Some((12, 2)),
        (Family::F, 4) => Some((1152, 25)),
        (Family::E, 6) => Some((25_920, 58)),
        (Family::E, 7) => Some((2_903_040, 258)),
        (Family::E, 8) => Some((696_729_600, 2318)),
        _ => None,
    }
}

/// Outcome of checking `m_q(α̃, 0) = Σ q^{e_i}` for one type.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentReport {
    pub lie_type: LieType,
    pub mq: String,
    /// Exponents read off `m_q(α̃, 0)`, with multiplicity.
    pub exponents: Vec<usize>,
    pub reference_exponents: Vec<usize>,
    pub multiplicity_free: bool,
    pub exponents_match: bool,
    /// `Σ e_i = |Φ⁺|` for the reference exponents.
    pub sum_identity: bool,
    /// `Π (e_i + 1) = |W|` for the reference exponents.
    pub product_identity: bool,
    /// `m(α̃, 0)` equals the rank.
    pub rank_identity: bool,
    pub positive_roots: usize,
    pub group_order: u128,
    pub alternation_set_size: usize,
    pub published_group_order: Option<u128>,
    pub published_alternation_set_size: Option<usize>,
    pub discrepancies: Vec<String>,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ExponentReport {
    /// All identities hold. Disagreements with published table values are
    /// informational and do not affect this.
    pub fn passed(&self) -> bool {
        self.exponents_match && self.sum_identity && self.product_identity && self.rank_identity
    }
}

/// Computes `m_q(α̃, 0)` and compares it with the exponents of `rs`.
pub fn verify_exponents(rs: &RootSystem, method: Method) -> Result<ExponentReport> {
    let start = Instant::now();
    let t = rs.lie_type();
    let result = compute_adjoint_zero(rs, method)?;
    let elapsed = start.elapsed();

    let mut exponents = Vec::new();
    let mut multiplicity_free = true;
    let mut nonnegative = true;
    for (e, c) in result.mq.coeffs().iter().enumerate() {
        match u32::try_from(c) {
            Ok(c) => {
                multiplicity_free &= c <= 1;
                exponents.extend(std::iter::repeat_n(e, c as usize));
            }
            Err(_) => nonnegative = false,
        }
    }
    let reference = reference_exponents(t);
    let order = group_order(t);
    let n_pos = rs.positive_roots().len();
    let sum_identity = reference.iter().sum::<usize>() == n_pos;
    let product_identity = reference.iter().map(|&e| e as u128 + 1).product::<u128>() == order;
    let rank_identity = result.m == BigInt::from(rs.rank());

    let published = published_exceptional_counts(t);
    let mut discrepancies = Vec::new();
    if let Some((w, a)) = published {
        if w != order {
            discrepancies.push(format!(
                "published |W| = {w}, but the product of degrees gives {order}"
            ));
        }
        if a != result.records.len() {
            discrepancies.push(format!(
                "published |A(α̃,0)| = {a}, computed {} ({})",
                result.records.len(),
                result
                    .records
                    .iter()
                    .map(|r| r.element.word_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    }

    Ok(ExponentReport {
        lie_type: t,
        mq: result.mq.to_string(),
        exponents_match: nonnegative && exponents == reference,
        exponents,
        reference_exponents: reference,
        multiplicity_free,
        sum_identity,
        product_identity,
        rank_identity,
        positive_roots: n_pos,
        group_order: order,
        alternation_set_size: result.records.len(),
        published_group_order: published.map(|p| p.0),
        published_alternation_set_size: published.map(|p| p.1),
        discrepancies,
        elapsed,
    })
}
