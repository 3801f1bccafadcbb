fn main() {
    std::process::exit(charge_basis::cli::run(std::env::args_os()));
}
