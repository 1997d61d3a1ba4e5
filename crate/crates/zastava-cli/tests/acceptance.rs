//! Acceptance criterion 12: byte-identical output of `verify` and `stalks`
//! across repeated runs and across worker-thread settings.

use std::process::Command;

fn run(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_zastava"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

#[test]
fn criterion_12_determinism() {
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", "--type", "B2", "--mu", "2,1"],
        vec!["verify", "--type", "A2", "--mu", "2,2", "--seed", "7"],
        vec!["stalks", "zastava", "--type", "B2", "--mu", "2,2"],
        vec![
            "stalks", "drinfeld", "--type", "A2", "--lambda", "1,1", "--genus", "2",
            "--torus-rank", "2", "--cutoff", "2,1",
        ],
        vec!["costalks", "zastava", "--type", "G2", "--mu", "1,1"],
    ];
    for base in &commands {
        let (first, code_first) = run(base);
        let (second, code_second) = run(base);
        assert_eq!(code_first, Some(0), "{base:?}");
        assert_eq!(code_first, code_second);
        assert_eq!(first, second, "{base:?}: repeated runs differ");

        for jobs in ["1", "4"] {
            let mut with_jobs = base.clone();
            with_jobs.extend(["--jobs", jobs]);
            let (out, code) = run(&with_jobs);
            assert_eq!(code, Some(0), "{with_jobs:?}");
            assert_eq!(out, first, "{with_jobs:?}: differs from the default run");
        }
    }
    println!("criterion 12 (byte-identical output across runs and --jobs settings): PASS");
}
