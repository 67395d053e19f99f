fn main() {
    std::process::exit(bwtgr::cli::run(std::env::args_os()));
}
