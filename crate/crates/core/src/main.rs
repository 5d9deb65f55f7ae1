fn main() {
    std::process::exit(eisenstein_elements::cli::main_with_args(std::env::args_os()));
}
