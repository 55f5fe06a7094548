fn main() {
    std::process::exit(hexforce::cli::run());
}
