fn main() {
    std::process::exit(kclique::cli::run());
}
