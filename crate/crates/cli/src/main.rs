fn main() {
    std::process::exit(clustertilt_cli::main_with_args(std::env::args_os()));
}
