fn main() {
    std::process::exit(schurq::cli::run());
}
