//! Every example builds with the test suite; run each and require success.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 6] = [
    "padic_basics",
    "domb_numbers",
    "quadratic_form",
    "special_functions",
    "congruence_sweep",
    "identity_catalog",
];

fn example_dir() -> PathBuf {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn examples_run() {
    let dir = example_dir();
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        assert!(path.exists(), "example binary missing: {}", path.display());
        let out = Command::new(&path).output().unwrap();
        assert!(
            out.status.success(),
            "{name} failed:\n{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
