fn main() {
    std::process::exit(extremal_sites::cli::main());
}
