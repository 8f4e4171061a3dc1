fn main() {
    std::process::exit(monogamy_cli::run(std::env::args_os()));
}
