//! Binary entry point for the hermite5 command-line interface.

fn main() {
    std::process::exit(hermite5::cli::run());
}
