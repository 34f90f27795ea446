fn main() {
    std::process::exit(reflexive_forge::cli::run(std::env::args_os()));
}
