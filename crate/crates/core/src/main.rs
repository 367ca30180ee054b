fn main() {
    std::process::exit(g2forms::cli::run(std::env::args_os()));
}
