//! `m_q(λ, μ)` for a few representations, with weights given in the
//! fundamental-weight basis.

use kostant::{compute_mq, Method, RootSystem, Weight};

fn show(name: &str, lambda: &[i64], mu: &[i64]) -> kostant::Result<()> {
    let rs = RootSystem::from_name(name)?;
    let l = rs.omega_to_alpha(&Weight::from_ints(lambda.iter().copied()))?;
    let m = rs.omega_to_alpha(&Weight::from_ints(mu.iter().copied()))?;
    let result = compute_mq(&rs, &l, &m, Method::Genfunc)?;
    println!(
        "{name}  λ = {lambda:?}ω  μ = {mu:?}ω  |A| = {:<3} m_q = {}  m = {}",
        result.records.len(),
        result.mq,
        result.m
    );
    Ok(())
}

fn main() -> kostant::Result<()> {
    show("A2", &[1, 1], &[0, 0])?;
    show("A2", &[3, 0], &[0, 0])?;
    show("A3", &[2, 0, 0], &[0, 1, 0])?;
    show("B2", &[2, 0], &[0, 0])?;
    show("C3", &[0, 2, 0], &[0, 0, 0])?;
    show("G2", &[2, 0], &[1, 0])?;
    show("D4", &[0, 1, 0, 0], &[0, 0, 0, 0])?;
    Ok(())
}
