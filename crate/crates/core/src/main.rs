fn main() {
    std::process::exit(rbforest::cli::dispatch(std::env::args_os()));
}
