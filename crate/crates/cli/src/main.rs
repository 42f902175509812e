fn main() {
    std::process::exit(normality_cli::run_from_args(std::env::args_os()));
}
