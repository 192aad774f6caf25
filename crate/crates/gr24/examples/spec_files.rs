// Reading spec files, parsing adjoints and running the verify subcommand.

use gr24::cli::{cmd_verify, load, Outcome};
use gr24::io::parse_poly;

pub const QUADRIC_ADJOINT: &str = "2p12^2 + p12p13 + 5p12p23 + 16p12p14 + 4p12p24 - 34p12p34 + 5p13p14 + 32p13p24 \
    + 2p13p34 + 7p23p24 + 10p23p34 + 8p14p34 + 2p24p34 + 2p34^2";

pub struct FilesSummary {
    pub certified: Outcome,
    pub perturbed: Outcome,
}

pub fn run_example() -> FilesSummary {
    let path = format!("{}/data/hexahedron_quadric.json", env!("CARGO_MANIFEST_DIR"));
    let spec = load(&path).expect("valid spec");
    let a = QUADRIC_ADJOINT;
    let certified = cmd_verify(&spec, Some(&parse_poly(a).expect("polynomial"))).expect("verify");
    let perturbed = cmd_verify(&spec, Some(&parse_poly(&format!("{a} + p34^2")).expect("polynomial"))).expect("verify");
    let verdict = |o: &Outcome| {
        let v: serde_json::Value = serde_json::from_str(&o.output).expect("json");
        v["certificate"]["verdict"].as_str().unwrap_or("").to_string()
    };
    println!("given adjoint: {} (exit {})", verdict(&certified), certified.code);
    println!("perturbed:     {} (exit {})", verdict(&perturbed), perturbed.code);
    FilesSummary { certified, perturbed }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
