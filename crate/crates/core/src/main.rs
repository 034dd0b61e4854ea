fn main() {
    std::process::exit(facenum::cli::run());
}
