fn main() {
    std::process::exit(tgl::cli::main_with_args(std::env::args_os()));
}
