//! Enumerate a Weyl group and look at lengths, signs and reduced words.
//!
//! ```bash
//! cargo run --example weyl_group -- B3
//! ```

use std::collections::BTreeMap;

use kostant::weyl::{element_from_word, DEFAULT_MAX_ORDER};
use kostant::{enumerate_group, group_order, RootSystem};

fn main() -> kostant::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::from_name(&name)?;

    let group = enumerate_group(&rs, DEFAULT_MAX_ORDER)?;
    println!(
        "|W({})| = {} (closed form {})",
        rs.lie_type(),
        group.len(),
        group_order(rs.lie_type())
    );

    // Poincaré polynomial: how many elements have each length.
    let mut by_length = BTreeMap::new();
    for sigma in &group {
        *by_length.entry(sigma.length()).or_insert(0usize) += 1;
    }
    println!("elements per length: {by_length:?}");

    let longest = group.last().unwrap();
    println!(
        "longest element: {} (length {})",
        longest.word_string(),
        longest.length()
    );

    // Words are canonical, so the same element always prints the same way.
    let sigma = element_from_word(&rs, &[1, 2, 1])?;
    let tau = element_from_word(&rs, &[2, 1, 2])?;
    println!(
        "s_1s_2s_1 -> {}, s_2s_1s_2 -> {}",
        sigma.word_string(),
        tau.word_string()
    );
    println!("sign of s_1s_2s_1: {}", sigma.sign());
    println!(
        "s_1s_2s_1 applied to ρ: {}",
        sigma.apply(rs.rho())?.to_text()
    );
    Ok(())
}
