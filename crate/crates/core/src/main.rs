fn main() {
    std::process::exit(tetrad::cli::main_with_env());
}
