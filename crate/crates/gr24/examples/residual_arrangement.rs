// Residual arrangements of hexahedra, with their incidence graphs.

use gr24::io::SpecFile;
use gr24::region::{residual_arrangement, residual_arrangement_polytope, RegionSpec, ResidualArrangement};

fn fixture(name: &str) -> RegionSpec {
    let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    SpecFile::read(&path).and_then(|f| f.to_spec()).expect("fixture")
}

pub struct ArrangementSummary {
    pub name: &'static str,
    pub region: ResidualArrangement,
    pub polytope: ResidualArrangement,
}

fn show(name: &str, ra: &ResidualArrangement) {
    println!("{name}: {} items out of {} candidates", ra.items.len(), ra.candidates);
    for it in &ra.items {
        println!("  {:<3} {:<24} {{{}}}", it.label, it.kind.label(), it.equations().join(", "));
    }
    let edges: Vec<String> =
        ra.incidence.iter().map(|&(a, b)| format!("{}-{}", ra.items[a].label, ra.items[b].label)).collect();
    println!("  incidence: {}", edges.join(" "));
}

pub fn run_example() -> Vec<ArrangementSummary> {
    let mut out = Vec::new();
    for name in ["hexahedron_quadric", "hexahedron_conic", "hexahedron_planes", "hexahedron_net"] {
        let spec = fixture(name);
        let region = residual_arrangement(&spec).expect("decidable");
        let polytope = residual_arrangement_polytope(&spec);
        show(name, &region);
        show("  associated polytope", &polytope);
        out.push(ArrangementSummary { name, region, polytope });
    }
    println!("{}", out[0].region.to_dot("hexahedron_quadric"));
    out
}

#[allow(dead_code)]
fn main() {
    run_example();
}
