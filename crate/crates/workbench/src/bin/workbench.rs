fn main() {
    // behave like a standard pipeline tool when stdout closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(crystal_workbench::cli::cli_main(&argv));
}
