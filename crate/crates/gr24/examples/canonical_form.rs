// Boundary skeletons, canonical adjoint selection and residue certificates.

use gr24::adjoint::{adjoint_space, pentahedron_adjoint, to_surd_poly};
use gr24::canonical::{boundary_skeleton, certify, select_canonical_adjoint, CanonicalAssignment, CertVerdict};
use gr24::io::SpecFile;
use gr24::region::RegionSpec;

fn fixture(name: &str) -> RegionSpec {
    let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    SpecFile::read(&path).and_then(|f| f.to_spec()).expect("fixture")
}

pub struct CertificateSummary {
    pub name: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub degrees: Vec<usize>,
    pub line_segments: usize,
    pub conic_segments: usize,
    pub assignment: CanonicalAssignment,
}

pub fn run_example() -> Vec<CertificateSummary> {
    let mut out = Vec::new();
    for name in ["pentahedron", "hexahedron_quadric", "hexahedron_conic", "hexahedron_planes", "hexahedron_net"] {
        let spec = fixture(name);
        let sk = boundary_skeleton(&spec).expect("simple");
        let assignment = if spec.m() == 1 {
            let a = pentahedron_adjoint(&spec.hyperplanes()[0]).expect("pentahedron");
            certify(&spec, &sk, &to_surd_poly(&a.poly()))
        } else {
            select_canonical_adjoint(&spec, &sk, &adjoint_space(&spec).expect("decidable"))
        };
        println!(
            "{name}: {} vertices, {} segments ({} on lines, {} on conics), connected {}",
            sk.vertices.len(),
            sk.edges.len(),
            sk.line_segments(),
            sk.conic_segments(),
            sk.is_connected()
        );
        println!("  adjoint {}", assignment.adjoint);
        println!("  verdict {:?}", assignment.verdict);
        out.push(CertificateSummary {
            name,
            vertices: sk.vertices.len(),
            edges: sk.edges.len(),
            degrees: sk.degrees(),
            line_segments: sk.line_segments(),
            conic_segments: sk.conic_segments(),
            assignment,
        });
    }
    out
}

#[allow(dead_code)]
fn main() {
    let all = run_example();
    assert!(all.iter().all(|s| s.assignment.verdict == CertVerdict::PositiveGeometryCertified));
}
