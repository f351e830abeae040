fn main() {
    std::process::exit(goldman::cli::run(std::env::args_os()));
}
