fn main() {
    std::process::exit(distspec::cli::run());
}
