//! RSK insertion of a permutation and its inverse.

use charge_basis::perm::{rsk_inverse, Permutation};

fn main() -> charge_basis::Result<()> {
    let w: Permutation = std::env::args().nth(1).unwrap_or_else(|| "3516247".into()).parse()?;
    let (p, q) = w.rsk();
    println!("w = {w}, shape {}", p.shape());
    println!("P (bottom row first):\n{p}");
    println!("Q:\n{q}");
    assert_eq!(rsk_inverse(&p, &q)?, w);
    Ok(())
}
