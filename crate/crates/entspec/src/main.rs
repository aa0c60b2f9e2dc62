fn main() {
    std::process::exit(entspec::cli::run());
}
