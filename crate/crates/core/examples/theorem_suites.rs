//! Runs every verification suite at a small size.

use charge_basis::theorems::{run_suite, Suite, SuiteOptions};

fn main() -> charge_basis::Result<()> {
    let opts = SuiteOptions::default();
    for suite in Suite::ALL {
        let r = run_suite(suite, suite.default_n().min(5), &opts)?;
        println!("{:<18} n={} {:>7} checks  {}", suite.name(), r.n, r.checked, if r.pass { "pass" } else { "FAIL" });
    }
    Ok(())
}
