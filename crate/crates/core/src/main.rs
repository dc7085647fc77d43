fn main() {
    std::process::exit(hgchow::cli::run(std::env::args_os()));
}
