fn main() {
    std::process::exit(paraspec_cli::run(std::env::args_os()));
}
