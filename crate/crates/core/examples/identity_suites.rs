//! Run every polynomial identity suite at small bounds.
//!
//! `cargo run --release --example identity_suites -- 6`

use jackleaf::closedforms::{identity_suite, Caps, SUITES};

fn main() -> jackleaf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for name in SUITES {
        let rep = identity_suite(name, Caps::new(n, n))?;
        println!("{name:<16} {:>4} / {:<4} {}", rep.passed(), rep.entries.len(), if rep.all_pass() { "PASS" } else { "FAIL" });
        for note in &rep.notes {
            println!("  {note}");
        }
    }
    Ok(())
}
