fn main() {
    std::process::exit(simplicial_cert::cli::run(std::env::args_os()));
}
