//! Gröbner basis of a Tanisaki ideal and certification of C_μ in the quotient.

use charge_basis::basis::charge_basis;
use charge_basis::partition::enumerate_partitions;
use charge_basis::quotient::certify::{certify_basis, CertifyOptions, QuotientRing};

fn main() -> charge_basis::Result<()> {
    let opts = CertifyOptions::default();
    let ring = QuotientRing::new(&"2,1,1".parse()?, &opts)?;
    println!("Gröbner basis of I_(2,1,1):");
    for g in ring.gb.polys() {
        println!("  {g}");
    }
    println!("graded dimension {:?}\n", ring.graded_dimension());
    for mu in enumerate_partitions(5) {
        let r = certify_basis(&charge_basis(&mu), &mu, &opts)?;
        println!(
            "C_{:<12} rank {:>3} / dim {:>3}  {}",
            mu.to_string(),
            r.rank,
            r.dimension,
            if r.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
