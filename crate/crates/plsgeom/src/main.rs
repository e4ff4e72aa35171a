fn main() {
    std::process::exit(plsgeom::cli::commands::run());
}
