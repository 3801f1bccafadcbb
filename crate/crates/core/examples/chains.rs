//! The chains algorithm on a shuffle of two cocharge words.

use charge_basis::chains::{build_seed_filling, chains_run};
use charge_basis::perm::parse_word;

fn main() -> charge_basis::Result<()> {
    let z = parse_word("1200112010")?;
    let blocks = [vec![1, 2, 3, 4, 6, 7], vec![5, 8, 9, 10]];
    let seed = build_seed_filling(&z, &blocks)?;
    println!("seed shape {}", seed.shape());
    let out = chains_run(&z, &seed)?;
    for (i, step) in out.steps.iter().enumerate() {
        let moved = step.moved_from.map_or(String::new(), |r| format!(" from row {r}"));
        println!("{:>2}: read {:?} into row {}{moved}, shape {}", i + 1, step.read, step.row, step.shape);
    }
    println!("ctype {}", out.ctype);
    Ok(())
}
