use std::fmt;

use qiso_scalars::BigRational;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Ident { name: String, pos: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64, usize),
    Star(Box<Expr>),
    Sqrt(Box<Expr>, usize),
}

impl Expr {
    /// Identifiers in order of appearance.
    pub fn identifiers(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let Expr::Ident { name, .. } = e {
                out.push(name.as_str());
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match self {
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
                a.walk(f);
                b.walk(f);
            }
            Expr::Neg(a) | Expr::Pow(a, _, _) | Expr::Star(a) | Expr::Sqrt(a, _) => a.walk(f),
            Expr::Num(_) | Expr::Ident { .. } => {}
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(n) if !n.is_integer() => 2,
            _ => 5,
        }
    }
}

/// Fully bracketed where precedence needs it; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &Expr, min: u8| if e.prec() < min { format!("({e})") } else { e.to_string() };
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Ident { name, .. } => f.write_str(name),
            Expr::Add(a, b) => write!(f, "{} + {}", wrap(a, 1), wrap(b, 2)),
            Expr::Sub(a, b) => write!(f, "{} - {}", wrap(a, 1), wrap(b, 2)),
            Expr::Mul(a, b) => write!(f, "{} {}", wrap(a, 2), wrap(b, 3)),
            Expr::Div(a, b, _) => write!(f, "{} / {}", wrap(a, 2), wrap(b, 3)),
            Expr::Neg(a) => write!(f, "-{}", wrap(a, 4)),
            Expr::Pow(a, k, _) => write!(f, "{}^{k}", wrap(a, 5)),
            Expr::Star(a) => write!(f, "{}*", wrap(a, 5)),
            Expr::Sqrt(a, _) => write!(f, "sqrt({a})"),
        }
    }
}
