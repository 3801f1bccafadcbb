//! The charge basis C_μ, the shuffle construction, and their Hilbert series.

use charge_basis::basis::{cc_shuffle_basis, charge_basis, hilbert_series};
use charge_basis::perm::format_word;
use charge_basis::Partition;

fn main() -> charge_basis::Result<()> {
    let mu: Partition = std::env::args().nth(1).unwrap_or_else(|| "3,1".into()).parse()?;
    let c = charge_basis(&mu);
    let d = cc_shuffle_basis(&mu);
    println!("C_{mu} has {} monomials in R_{}:", c.len(), mu.transpose());
    for m in c.monomials() {
        println!("  {}", format_word(m));
    }
    println!("equal to the shuffle set: {}", c.to_set() == d.to_set());
    println!("Hilbert series {}", hilbert_series(&c));
    Ok(())
}
