fn main() {
    std::process::exit(semireflex::cli::main_with_args(std::env::args_os()));
}
