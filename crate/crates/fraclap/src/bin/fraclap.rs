fn main() {
    std::process::exit(fraclap::cli::main_with_args(std::env::args_os()));
}
