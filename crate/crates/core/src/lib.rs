pub mod algebra;
pub mod cli;
pub mod coalgebra;
pub mod coeff;
pub mod element;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod models;
pub mod syntax;
