fn main() {
    std::process::exit(ore_elim_cli::run(std::env::args_os()));
}
