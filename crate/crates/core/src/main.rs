fn main() {
    std::process::exit(gapsort::cli::run(std::env::args_os()));
}
