//! Subcommands behind the `gr24` binary. Each returns the text to print and an exit code.

use crate::adjoint::{adjoint_space, format_poly, pentahedron_adjoint, to_surd_poly, AdjointError};
use crate::canonical::{boundary_skeleton, certify, select_canonical_adjoint, CanonicalError, CertVerdict};
use crate::combinatorics::{equivalent, signature};
use crate::exact::{MultiPoly, Surd};
use crate::io::{to_sorted_json, InputError, SpecFile};
use crate::region::{residual_arrangement, RegionError, RegionSpec};
use rand::SeedableRng;
use serde_json::json;

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub const CENSUS_HEADER: &str = "spec,signature,raw_dim,mod_dim,verdict";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("invalid region:\n  {}", .0.join("\n  "))]
    Invalid(Vec<String>),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Adjoint(#[from] AdjointError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error("{0}: {1}")]
    Write(String, String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Region(RegionError::Undetermined(_))
            | CliError::Adjoint(AdjointError::Region(RegionError::Undetermined(_)))
            | CliError::Canonical(CanonicalError::Region(RegionError::Undetermined(_))) => EXIT_UNDETERMINED,
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

/// Reads a spec file and checks validity.
pub fn load(path: &str) -> Result<RegionSpec, CliError> {
    let spec = SpecFile::read(path)?.to_spec()?;
    check(&spec)?;
    Ok(spec)
}

pub fn check(spec: &RegionSpec) -> Result<(), CliError> {
    let v = spec.validate();
    if v.is_valid() {
        Ok(())
    } else {
        Err(CliError::Invalid(v.problems()))
    }
}

fn write(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Write(path.to_string(), e.to_string()))
}

pub fn cmd_residual(spec: &RegionSpec, dot: Option<&str>) -> Result<Outcome, CliError> {
    let ra = residual_arrangement(spec)?;
    if let Some(p) = dot {
        write(p, &ra.to_dot("residual"))?;
    }
    let note = ra.is_empty().then_some("simplex-like: empty residual arrangement");
    let out = json!({
        "spec": SpecFile::from_spec(spec),
        "arrangement": ra.report(),
        "signature": signature(&ra),
        "candidates": ra.candidates,
        "note": note,
    });
    Ok(Outcome::ok(to_sorted_json(&out)))
}

pub fn cmd_adjoint(spec: &RegionSpec) -> Result<Outcome, CliError> {
    let basis = adjoint_space(spec)?;
    let mut out = serde_json::to_value(basis.report()).expect("json");
    if spec.m() == 1 {
        let closed = pentahedron_adjoint(&spec.hyperplanes()[0])?;
        let p = to_surd_poly(&closed.poly());
        out["closed_form"] = json!(format_poly(&closed.poly()));
        out["agreement"] = json!(basis.modulo.len() == 1 && basis.contains(&p));
    }
    Ok(Outcome::ok(to_sorted_json(&out)))
}

pub fn cmd_pentahedron(spec: &RegionSpec) -> Result<Outcome, CliError> {
    if spec.m() != 1 {
        return Err(CliError::Usage(format!("pentahedron needs exactly one hyperplane, got {}", spec.m())));
    }
    let p = pentahedron_adjoint(&spec.hyperplanes()[0])?;
    let out = json!({ "adjoint": format_poly(&p.poly()), "details": p });
    Ok(Outcome::ok(to_sorted_json(&out)))
}

pub fn cmd_verify(spec: &RegionSpec, adjoint: Option<&MultiPoly<Surd>>) -> Result<Outcome, CliError> {
    let sk = boundary_skeleton(spec)?;
    let assignment = match adjoint {
        Some(a) => certify(spec, &sk, a),
        None => select_canonical_adjoint(spec, &sk, &adjoint_space(spec)?),
    };
    let vertices: Vec<serde_json::Value> = sk
        .vertices
        .iter()
        .zip(sk.degrees())
        .map(|(v, d)| json!({ "point": v.point, "vanishing": v.vanishing, "degree": d }))
        .collect();
    let out = json!({
        "skeleton": {
            "vertices": vertices,
            "edges": sk.edges.len(),
            "line_segments": sk.line_segments(),
            "conic_segments": sk.conic_segments(),
            "connected": sk.is_connected(),
        },
        "adjoint_source": if adjoint.is_some() { "file" } else { "selected" },
        "certificate": assignment,
    });
    let code = match assignment.verdict {
        CertVerdict::PositiveGeometryCertified => 0,
        CertVerdict::Undetermined => EXIT_UNDETERMINED,
        CertVerdict::Inconsistent => EXIT_INCONSISTENT,
    };
    Ok(Outcome { output: to_sorted_json(&out), code })
}

pub fn cmd_compare(a: &RegionSpec, b: &RegionSpec) -> Result<Outcome, CliError> {
    let eq = equivalent(a, b);
    let sa = signature(&residual_arrangement(a)?);
    let sb = signature(&residual_arrangement(b)?);
    let out = json!({
        "equivalence": eq,
        "signatures": [sa.describe(), sb.describe()],
        "same_signature": sa == sb,
    });
    Ok(Outcome::ok(to_sorted_json(&out)))
}

/// One census row for a spec.
pub fn census_row(spec: &RegionSpec) -> String {
    let coeffs: Vec<String> =
        spec.hyperplanes().iter().map(|h| h.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect();
    let key = coeffs.join(" | ");
    let Ok(ra) = residual_arrangement(spec) else {
        return format!("{key},,,,undetermined");
    };
    let sig = signature(&ra).describe();
    let Ok(basis) = adjoint_space(spec) else {
        return format!("{key},{sig},,,undetermined");
    };
    let (raw, modd) = basis.dims();
    let verdict = match boundary_skeleton(spec) {
        Ok(sk) => serde_json::to_value(select_canonical_adjoint(spec, &sk, &basis).verdict).expect("json"),
        Err(_) => json!("undetermined"),
    };
    format!("{key},{sig},{raw},{modd},{}", verdict.as_str().unwrap_or(""))
}

/// Random valid hexahedra with their signature, adjoint dimensions and certification verdict.
/// Returns the CSV and a summary.
pub fn cmd_census(samples: usize, seed: u64) -> (String, serde_json::Value) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut csv = String::from(CENSUS_HEADER) + "\n";
    let mut max_mod = 0usize;
    let mut exceeding = 0usize;
    let mut undetermined = 0usize;
    let mut signatures = std::collections::BTreeMap::<String, usize>::new();
    for _ in 0..samples {
        let spec = crate::adjoint::random_valid_spec(&mut rng, 2, 9);
        let row = census_row(&spec);
        let cols: Vec<&str> = row.split(',').collect();
        if let Ok(d) = cols[3].parse::<usize>() {
            max_mod = max_mod.max(d);
            exceeding += usize::from(d > 3);
        }
        undetermined += usize::from(cols[4] == "undetermined");
        *signatures.entry(cols[1].to_string()).or_default() += 1;
        csv.push_str(&row);
        csv.push('\n');
    }
    let summary = json!({
        "samples": samples,
        "seed": seed,
        "max_mod_dim": max_mod,
        "exceeding_three": exceeding,
        "undetermined": undetermined,
        "signatures": signatures,
    });
    (csv, summary)
}
