//! The binary must behave like other Unix CLI tools when its stdout pipe
//! closes early (`ricperp ... | head`): die on SIGPIPE without a panic
//! message rather than unwinding out of `println!`.

#[cfg(unix)]
#[test]
fn closing_the_output_pipe_does_not_panic() {
    use std::os::unix::process::ExitStatusExt;
    use std::process::{Command, Stdio};

    // Roughly 180 KB of output — far more than the default pipe buffer, so
    // the child is guaranteed to write after the read end is gone.
    let mut child = Command::new(env!("CARGO_BIN_EXE_ricperp"))
        .args(["cspace", "table", "--families", "B,C,D", "--max-rank", "25"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("failed to spawn ricperp");
    drop(child.stdout.take());
    let out = child.wait_with_output().expect("failed to wait for ricperp");

    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(!stderr.contains("panicked"), "child panicked: {stderr}");
    assert_eq!(out.status.signal(), Some(libc::SIGPIPE));
}
