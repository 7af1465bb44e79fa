fn main() {
    std::process::exit(altperm::cli::run(std::env::args_os()));
}
