//! Cocharge and charge words, and the charge monomial of a permutation.

use charge_basis::charge::{charge, charge_word, cocharge, cocharge_word};
use charge_basis::perm::{format_word, Permutation};
use charge_basis::quotient::{MVPolynomial, MonomialOrder};

fn main() -> charge_basis::Result<()> {
    for s in ["3516247", "7426153", "634125"] {
        let w: Permutation = s.parse()?;
        let cw = charge_word(&w);
        println!(
            "{w}: cc = {}, cocharge {}, cw = {}, charge {}, monomial {}",
            format_word(&cocharge_word(&w)),
            cocharge(&w),
            format_word(&cw),
            charge(&w),
            MVPolynomial::monomial(&cw, MonomialOrder::Grevlex)
        );
    }
    Ok(())
}
