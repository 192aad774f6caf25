// Exact rationals, RREF kernels and Sturm root isolation.

use gr24::exact::{Matrix, Rat, Sturm, UniPoly};

pub struct ExactSummary {
    pub rank: usize,
    pub kernel: Vec<Vec<Rat>>,
    pub positive_roots: usize,
    pub negative_roots: usize,
    /// The positive root of `11t^2 - 46t - 13`, refined to width `1e-9`.
    pub positive_root: (Rat, Rat),
}

pub fn run_example() -> ExactSummary {
    let rows = [[1, 2, 0, -1, 3, 0], [0, 1, 1, 2, -1, 4], [2, 5, 1, 0, 5, 4]];
    let m = Matrix::from_rows(6, rows.iter().map(|r| r.iter().map(|&c| Rat::int(c)).collect()).collect());
    let kernel = m.nullspace();
    println!("rank {} + kernel {} = {} columns", m.rank(), kernel.len(), m.ncols());
    for v in &kernel {
        println!("  {:?}", v);
    }

    let p = UniPoly::from_ints(&[-13, -46, 11]);
    let s = Sturm::new(&p).expect("squarefree");
    let big = Rat::int(1_000_000);
    let pos = s.isolate(&Rat::zero(), &big);
    let neg = s.isolate(&-&big, &Rat::zero());
    let r = s.refine(&pos[0], &Rat::new(1, 1_000_000_000));
    println!("{p}: {} positive, {} negative root(s)", pos.len(), neg.len());
    println!("positive root in [{}, {}] ~ {:.9}", r.lo, r.hi, r.lo.to_f64());

    ExactSummary {
        rank: m.rank(),
        kernel,
        positive_roots: pos.len(),
        negative_roots: neg.len(),
        positive_root: (r.lo, r.hi),
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
