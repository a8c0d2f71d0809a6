pub mod arith;
pub mod catalogue;
pub mod charclass;
pub mod cli;
pub mod dsl;
pub mod riemann_roch;
pub mod rigidity;
pub mod ring;
