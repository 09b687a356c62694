//! Check `m_q(α̃, 0) = Σ q^{e_i}` for every exceptional type.
//!
//! ```bash
//! cargo run --release --example verify_exponents
//! ```

use kostant::{verify_exponents, LieType, Method, RootSystem};

fn main() -> kostant::Result<()> {
    for t in LieType::exceptional() {
        let report = verify_exponents(&RootSystem::new(t), Method::Genfunc)?;
        println!(
            "{t}: {}  m_q = {}  |A| = {}  ({:.3}s)",
            if report.passed() { "PASS" } else { "FAIL" },
            report.mq,
            report.alternation_set_size,
            report.elapsed.as_secs_f64()
        );
        for note in &report.discrepancies {
            println!("    note: {note}");
        }
    }
    Ok(())
}
