// Quadric symmetries, pairing counts, signatures and combinatorial equivalence.

use gr24::combinatorics::{equivalent, pairing_table, quadric_symmetries, signature, Equivalence, PairingCounts, TypeSignature};
use gr24::io::SpecFile;
use gr24::region::{residual_arrangement, RegionSpec};

fn fixture(name: &str) -> RegionSpec {
    let path = format!("{}/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    SpecFile::read(&path).and_then(|f| f.to_spec()).expect("fixture")
}

pub struct TypesSummary {
    pub symmetries: usize,
    pub pairings: PairingCounts,
    pub signatures: Vec<(&'static str, TypeSignature)>,
    /// The conic hexahedron against its sign-switched variant.
    pub conic_vs_planes: Equivalence,
    /// The conic hexahedron against a relabeled copy.
    pub conic_vs_relabeled: Equivalence,
}

pub fn run_example() -> TypesSummary {
    let syms = quadric_symmetries();
    println!("{} coordinate permutations fix qq", syms.len());
    let pairings = pairing_table();
    println!("{pairings:?}");

    let mut signatures = Vec::new();
    for name in ["hexahedron_conic", "hexahedron_planes", "hexahedron_net"] {
        let sig = signature(&residual_arrangement(&fixture(name)).expect("decidable"));
        println!("{name}: {} ({} isolated)", sig.describe(), sig.isolated_points);
        signatures.push((name, sig));
    }

    let conic = fixture("hexahedron_conic");
    let planes = fixture("hexahedron_planes");
    let conic_vs_planes = equivalent(&conic, &planes);
    let relabeled = conic.permuted(&syms[syms.len() - 1].perm).swapped();
    let conic_vs_relabeled = equivalent(&conic, &relabeled);
    println!("conic vs planes: {}", conic_vs_planes.equivalent);
    println!("conic vs relabeled: {:?}", conic_vs_relabeled);

    TypesSummary { symmetries: syms.len(), pairings, signatures, conic_vs_planes, conic_vs_relabeled }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
