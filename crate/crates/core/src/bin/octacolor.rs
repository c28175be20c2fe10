fn main() {
    std::process::exit(octacolor::cli::main_with(std::env::args_os()));
}
