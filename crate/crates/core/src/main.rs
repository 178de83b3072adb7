fn main() {
    std::process::exit(idemring::cli::run(std::env::args_os()));
}
