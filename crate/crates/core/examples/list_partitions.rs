//! Print every partition of ξ into positive roots.

use kostant::{partition_tree_list, RootSystem, Weight};

fn main() -> kostant::Result<()> {
    let g2 = RootSystem::from_name("G2")?;
    let xi = Weight::from_ints([2, 2]);
    for (i, p) in partition_tree_list(&g2, &xi).iter().enumerate() {
        println!("{}: {}  ({} roots)", i + 1, p.render(&g2), p.roots_used());
    }

    let b3 = RootSystem::from_name("B3")?;
    let xi = Weight::from_ints([1, 2, 2]);
    let parts = partition_tree_list(&b3, &xi);
    println!("\n{} partitions of {} in B3", parts.len(), xi.to_text());
    for p in parts.iter().filter(|p| p.roots_used() <= 2) {
        println!("  {}", p.render(&b3));
    }
    Ok(())
}
