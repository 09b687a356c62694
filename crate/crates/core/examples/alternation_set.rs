//! The Weyl alternation set `A(λ, μ)` compared with brute force.
//!
//! ```bash
//! cargo run --release --example alternation_set -- E6
//! ```

use kostant::multiplicity::fill_partitions;
use kostant::render::table_text;
use kostant::weyl::DEFAULT_MAX_ORDER;
use kostant::{
    alternation_set, exhaustive_alternation_set, group_order, Method, RootSystem, Weight,
};

fn main() -> kostant::Result<()> {
    let rs = RootSystem::from_name(&std::env::args().nth(1).unwrap_or_else(|| "F4".into()))?;
    let lambda = rs.highest_root().clone();
    let mu = Weight::zero(rs.rank());

    let mut records = alternation_set(&rs, &lambda, &mu)?;
    fill_partitions(&rs, &mut records, Method::Genfunc);
    println!(
        "|A(α̃, 0)| = {} out of |W| = {}",
        records.len(),
        group_order(rs.lie_type())
    );
    print!("{}", table_text(&records));

    if group_order(rs.lie_type()) <= 100_000 {
        let all = exhaustive_alternation_set(&rs, &lambda, &mu, DEFAULT_MAX_ORDER)?;
        println!("filtering the whole group finds {} elements", all.len());
    }
    Ok(())
}
