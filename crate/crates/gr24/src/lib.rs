pub mod exact;
pub mod grassmann;
pub mod region;
pub mod adjoint;
pub mod canonical;
pub mod combinatorics;
pub mod io;
pub mod cli;
