fn main() -> std::process::ExitCode {
    qir_cli::main_with_args()
}
