fn main() {
    std::process::exit(miop::cli::run(std::env::args_os()));
}
