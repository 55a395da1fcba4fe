//! Text front end: generators, scalar atoms, rationals, `+ - * / ^`,
//! juxtaposition for products and a glued postfix `*` for the involution
//! (`a*` is α*, `a * b` is a product).

pub mod ast;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;

pub use ast::Expr;
pub use error::ExprError;
pub use eval::Env;
pub use parser::parse;

/// Names that only occur in U_μ(su(2)) expressions.
pub const UQ_NAMES: [&str; 4] = ["E", "F", "K", "Kinv"];

/// True when the expression mentions a U_μ(su(2)) generator.
pub fn mentions_uq(e: &Expr) -> bool {
    e.identifiers().iter().any(|n| UQ_NAMES.contains(n))
}
