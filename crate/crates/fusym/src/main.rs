fn main() {
    std::process::exit(fusym::cli::run());
}
