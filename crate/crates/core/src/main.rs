fn main() -> std::process::ExitCode {
    qgolden::cli::run()
}
