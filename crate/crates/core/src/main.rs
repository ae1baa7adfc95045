fn main() {
    let code = nilgeo::cli::run(std::env::args_os());
    std::process::exit(code);
}
