fn main() {
    std::process::exit(hartogs::cli::run(std::env::args_os()));
}
