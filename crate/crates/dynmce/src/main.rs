fn main() -> std::process::ExitCode {
    dynmce::cli::main_process()
}
