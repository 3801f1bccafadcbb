//! Blasiak insertion on a cocharge word, with its recording filling.

use charge_basis::catabolism::blasiak_ctype;
use charge_basis::perm::parse_word;

fn main() -> charge_basis::Result<()> {
    let z = parse_word(&std::env::args().nth(1).unwrap_or_else(|| "211001".into()))?;
    let out = blasiak_ctype(&z)?;
    println!("shape {}", out.shape);
    println!("T_w:\n{}", out.filling);
    println!("passes {:?}", out.passes);
    println!("rows   {:?}", out.rows);
    Ok(())
}
