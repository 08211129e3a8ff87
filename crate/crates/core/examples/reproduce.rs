//! Checks every recorded claim of the built-in corpus and prints a table.
//!
//! `cargo run --release --example reproduce -- [FILTER] [--skip-slow]`

use simplicial_cert::corpus::{corpus_verify_all, VerifyOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let skip_slow = args.iter().any(|a| a == "--skip-slow");
    let filter = args.iter().find(|a| !a.starts_with("--")).map_or("", String::as_str);
    let options = VerifyOptions { skip_slow, ..VerifyOptions::default() };
    for r in corpus_verify_all(filter, &options) {
        println!("{:<10} {:<22} {:<8} {:>9.3}s  {}", r.entry, r.check, r.status.to_string(), r.elapsed.as_secs_f64(), r.detail);
    }
}
