// Closed-form adjoint of a positive pentahedron against the interpolation solver.

use gr24::adjoint::{adjoint_space, format_poly, pentahedron_adjoint, to_surd_poly};
use gr24::exact::Rat;
use gr24::region::{residual_arrangement, RegionSpec};

pub struct PentahedronSummary {
    pub closed_form: String,
    pub interpolated: Vec<String>,
    pub agrees: bool,
    pub residual: Vec<String>,
}

pub fn run_example() -> PentahedronSummary {
    let h: Vec<Rat> = [1, -3, 1, -8, 2, 2].into_iter().map(Rat::int).collect();
    let spec = RegionSpec::new(vec![h.clone()]).expect("six coefficients");
    let closed = pentahedron_adjoint(&h).expect("simple pentahedron");
    let basis = adjoint_space(&spec).expect("decidable");
    let agrees = basis.modulo.len() == 1 && basis.contains(&to_surd_poly(&closed.poly()));
    let ra = residual_arrangement(&spec).expect("decidable");
    let residual: Vec<String> = ra.items.iter().map(|it| format!("{{{}}}", it.equations().join(", "))).collect();

    println!("h = {}", format_poly(&gr24::grassmann::linear_form(&h)));
    println!("residual lines: {}", residual.join(" "));
    println!("closed form  {}", format_poly(&closed.poly()));
    for p in &basis.raw {
        println!("interpolated {}", format_poly(p));
    }
    println!("agreement {agrees}");

    PentahedronSummary {
        closed_form: format_poly(&closed.poly()),
        interpolated: basis.raw.iter().map(format_poly).collect(),
        agrees,
        residual,
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
