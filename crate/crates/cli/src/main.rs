fn main() {
    std::process::exit(robin_rod_cli::run(std::env::args_os()));
}
