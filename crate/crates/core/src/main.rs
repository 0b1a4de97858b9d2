fn main() {
    std::process::exit(homalg::cli::main_with_args(std::env::args_os()));
}
