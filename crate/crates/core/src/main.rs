fn main() {
    std::process::exit(kbalance::cli::run());
}
