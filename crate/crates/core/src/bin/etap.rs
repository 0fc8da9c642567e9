fn main() {
    std::process::exit(etap::cli::main_with_args(std::env::args_os()));
}
