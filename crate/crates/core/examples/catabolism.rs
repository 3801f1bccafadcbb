//! Catabolism and the catabolizability type by three routes.

use charge_basis::catabolism::{blasiak_ctype, catabolize, ctype_cat, ctype_direct};
use charge_basis::charge::{cocharge_word, tableau_cocharge};
use charge_basis::{Permutation, Tableau};

fn main() -> charge_basis::Result<()> {
    let t = Tableau::new(vec![vec![1, 3, 4], vec![2, 5], vec![6]])?;
    let k = catabolize(&t);
    println!("T:\n{t}\ncocharge {}\n", tableau_cocharge(&t));
    println!("K(T):\n{k}\ncocharge {}\n", tableau_cocharge(&k));

    let t = Tableau::new(vec![vec![1, 2, 3, 7], vec![4, 5], vec![6, 8]])?;
    let word = cocharge_word(&Permutation::new(t.reading_word())?);
    println!("ctype by definition:     {}", ctype_direct(&t)?);
    println!("ctype by m-catabolism:   {}", ctype_cat(&t)?);
    println!("ctype by Blasiak insert: {}", blasiak_ctype(&word)?.shape);
    Ok(())
}
