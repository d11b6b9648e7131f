fn main() {
    std::process::exit(horn_enum::cli::main_with(std::env::args_os()));
}
