//! Cartan matrices, positive roots, ρ and the highest root.
//!
//! ```bash
//! cargo run --example root_systems -- F4
//! ```

use kostant::RootSystem;

fn main() -> kostant::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::from_name(&name)?;

    println!("{} (rank {})", rs.lie_type(), rs.rank());
    println!("Cartan matrix:");
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>3}")).collect();
        println!("  {}", cells.join(""));
    }

    println!("{} positive roots, by height:", rs.positive_roots().len());
    for beta in rs.positive_roots() {
        println!("  {:>2}  {}", beta.height(), beta.to_text());
    }
    println!("ρ = {}", rs.rho().to_text());
    println!("α̃ = {}", rs.highest_root().to_text());
    println!(
        "α̃ in fundamental weights: {:?}",
        rs.alpha_to_omega(rs.highest_root())?.to_integers()
    );
    Ok(())
}
