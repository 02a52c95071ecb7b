fn main() {
    std::process::exit(idcode::cli::run(std::env::args_os()));
}
