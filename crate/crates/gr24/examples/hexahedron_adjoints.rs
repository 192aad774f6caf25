// Quadratic adjoints of hexahedra: the region, its associated polytope and the positroid
// planes.

use gr24::adjoint::{adjoint_space, format_poly, interpolation_space, quadrics_through_v_cap_rp, AdjointBasis};
use gr24::io::SpecFile;
use gr24::region::{check_prop_v_intersection, residual_arrangement_polytope, RegionSpec};

fn fixture(name: &str) -> RegionSpec {
    let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    SpecFile::read(&path).and_then(|f| f.to_spec()).expect("fixture")
}

pub struct HexahedronSummary {
    pub name: &'static str,
    pub region: AdjointBasis,
    pub polytope: AdjointBasis,
    /// Whether the positroid planes meet both residual arrangements in the same set.
    pub same_v_trace: bool,
    pub quadrics_through_v_trace: usize,
    pub plucker_among_them: bool,
}

pub fn run_example() -> Vec<HexahedronSummary> {
    let mut out = Vec::new();
    for name in ["hexahedron_quadric", "hexahedron_conic", "hexahedron_net"] {
        let spec = fixture(name);
        let region = adjoint_space(&spec).expect("decidable");
        let polytope = interpolation_space(&residual_arrangement_polytope(&spec), 2).expect("quadrics");
        let trace = check_prop_v_intersection(&spec).expect("decidable");
        let count = quadrics_through_v_cap_rp(&spec);
        let (raw, modd) = region.dims();
        println!("{name}: {raw} quadrics through R(S), {modd} modulo qq");
        for p in &region.modulo {
            println!("  a = {}", format_poly(p));
        }
        for p in &polytope.raw {
            println!("  polytope adjoint {}", format_poly(p));
        }
        println!("  V-trace equal: {}, quadrics through it: {}", trace.holds, count.dim());
        out.push(HexahedronSummary {
            name,
            region,
            polytope,
            same_v_trace: trace.holds,
            quadrics_through_v_trace: count.dim(),
            plucker_among_them: count.contains_plucker(),
        });
    }
    out
}

#[allow(dead_code)]
fn main() {
    run_example();
}
