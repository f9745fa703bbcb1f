fn main() {
    std::process::exit(logsine::cli::main_with_args(std::env::args_os()));
}
