fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(berge_cli::run(&argv));
}
