//! `m_q(α̃, 0)` for G2 step by step: one reflection, its ξ, the partitions
//! of ξ, and the signed sum over the alternation set.

use kostant::render::table_latex;
use kostant::{compute_adjoint_zero, partition_tree_list, simple_reflection, Method, RootSystem};

fn main() -> kostant::Result<()> {
    let g2 = RootSystem::from_name("G2")?;
    let shifted = g2.highest_root() + g2.rho();
    println!("α̃ + ρ = {}", shifted.to_text());

    let s1 = simple_reflection(&g2, 1)?;
    let xi = &s1.apply(&shifted)? - g2.rho();
    println!("s_1(α̃ + ρ) - ρ = {}", xi.to_text());
    for p in partition_tree_list(&g2, &xi) {
        println!("  {}  uses {} roots", p.render(&g2), p.roots_used());
    }

    let result = compute_adjoint_zero(&g2, Method::Tree)?;
    for rec in &result.records {
        let sign = if rec.sign() < 0 { '-' } else { '+' };
        println!(
            "{sign} ℘_q({}) = {}",
            rec.xi.to_text(),
            rec.pq.as_ref().unwrap()
        );
    }
    println!("m_q(α̃, 0) = {}", result.mq);
    println!();
    print!(
        "{}",
        table_latex(
            &g2,
            &result.lambda,
            &result.mu,
            &result.records,
            Some(&result.mq)
        )
    );
    Ok(())
}
