//! Antisymmetrized charge monomials as a basis of N_γ R_{μᵗ}.

use charge_basis::basis::antisym_index_set;
use charge_basis::quotient::certify::{certify_antisym_basis, CertifyOptions};
use charge_basis::{Composition, Partition};

fn main() -> charge_basis::Result<()> {
    let mu: Partition = "3,1".parse()?;
    let gamma: Composition = "2,2".parse()?;
    let set = antisym_index_set(&mu, &gamma)?;
    println!(
        "index set {:?}, graded count {}",
        set.permutations().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        set.graded_count()
    );
    let report = certify_antisym_basis(&mu, &gamma, &CertifyOptions::default())?;
    for (w, p) in report.words.iter().zip(&report.polynomials) {
        println!("  {w}: {p}");
    }
    println!("rank {} of {}, graded {:?}, pass {}", report.rank, report.candidates, report.graded_ranks, report.pass);
    Ok(())
}
