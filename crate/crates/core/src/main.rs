fn main() {
    std::process::exit(covprune::cli::run(std::env::args_os()));
}
