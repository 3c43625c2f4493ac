//! Every property check over all connected graphs of one order.
//!
//! `cargo run --release --example verify -- 6`

use distspec::cli::verify::verify_order;

fn main() -> distspec::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let jobs = std::thread::available_parallelism().map_or(1, |j| j.get());
    let r = verify_order(n, jobs)?;
    println!("{}", r.to_text());
    std::process::exit(if r.ok() { 0 } else { 2 });
}
