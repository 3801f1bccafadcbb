//! Exact certification in the Garsia-Procesi quotient `Q[x1..xn] / I_μ`.

pub mod antisym;
pub mod certify;
pub mod groebner;
pub mod mvpoly;
pub mod tanisaki;

pub use groebner::GroebnerBasis;
pub use mvpoly::{MVPolynomial, Monomial, MonomialOrder};
