//! `℘_q(ξ)` by both algorithms, with timings.
//!
//! ```bash
//! cargo run --release --example partition_function -- E6 1,2,2,3,2,1
//! ```

use std::time::Instant;

use kostant::{partition_genfunc, partition_tree_count, RootSystem, Weight};

fn main() -> kostant::Result<()> {
    let mut args = std::env::args().skip(1);
    let rs = RootSystem::from_name(&args.next().unwrap_or_else(|| "F4".into()))?;
    let xi = match args.next() {
        Some(s) => Weight::parse_list(&s)?,
        None => rs.highest_root().clone(),
    };
    rs.check_weight(&xi)?;

    let start = Instant::now();
    let tree = partition_tree_count(&rs, &xi);
    let tree_time = start.elapsed();

    let start = Instant::now();
    let gf = partition_genfunc(&rs, &xi);
    let gf_time = start.elapsed();

    println!("ξ = {}", xi.to_text());
    println!("℘_q(ξ) = {gf}");
    println!("℘(ξ)   = {}", gf.eval_one());
    println!("tree walk {tree_time:?}, generating function {gf_time:?}");
    assert_eq!(tree, gf);
    Ok(())
}
