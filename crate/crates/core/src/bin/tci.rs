fn main() {
    std::process::exit(tci_core::cli::run(std::env::args_os()));
}
