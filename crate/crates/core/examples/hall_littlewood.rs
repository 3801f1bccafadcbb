//! Modified Hall-Littlewood functions and their e-coefficients.

use charge_basis::partition::enumerate_compositions;
use charge_basis::symfun::{e_coeff_combinatorial, modified_hl, SymBasis};
use charge_basis::Partition;

fn main() -> charge_basis::Result<()> {
    let mu: Partition = "2,1,1".parse()?;
    let h = modified_hl(&mu);
    println!("H~_{mu} = {h}");
    println!("in the m basis: {}", h.to_basis(SymBasis::M));
    let index = mu.transpose();
    for gamma in enumerate_compositions(mu.size()) {
        println!("<e_{gamma}, H~_{mu}> = {}", e_coeff_combinatorial(&index, &gamma)?);
    }
    Ok(())
}
