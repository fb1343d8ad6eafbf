fn main() {
    std::process::exit(tentfield::cli::main_with_args(std::env::args_os()));
}
