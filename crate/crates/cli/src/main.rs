fn main() {
    std::process::exit(spechtkit_cli::main_with(std::env::args_os()));
}
