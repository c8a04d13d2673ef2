fn main() {
    std::process::exit(liehodge::cli::run(std::env::args_os()));
}
