// A small census of random hexahedra.

use gr24::cli::cmd_census;
use gr24::io::to_sorted_json;

pub fn run_example() -> (String, serde_json::Value) {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let (csv, summary) = cmd_census(samples, 7);
    print!("{csv}");
    eprint!("{}", to_sorted_json(&summary));
    (csv, summary)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
