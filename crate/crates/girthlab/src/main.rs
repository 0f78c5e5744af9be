fn main() {
    std::process::exit(girthlab::cli::run(std::env::args_os()));
}
