fn main() {
    // Die quietly on a closed pipe (`ricperp ... | head`) like other CLI
    // tools instead of panicking in println!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(ricperp::cli::run(std::env::args_os()));
}
