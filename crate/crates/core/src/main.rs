fn main() {
    std::process::exit(sufperm::cli::main());
}
