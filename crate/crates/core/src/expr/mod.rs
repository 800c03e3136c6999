//! Single-variable arithmetic expressions.
//!
//! An [`Expr`] is an immutable tree over the variable `x`. Trees come from
//! [`parse`] (or are built directly), evaluate with [`Expr::eval`], and
//! differentiate symbolically with [`Expr::derivative`]. [`Expr`] implements
//! `Display`, which renders text that parses back to an equivalent tree.

mod deriv;
mod parse;
mod simplify;

use std::fmt;

use thiserror::Error;

pub use parse::{parse, ParseError, ParseErrorKind};

/// Binary operators, in the order they appear in the grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

/// Built-in functions of one argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Abs,
}

impl Func {
    pub const ALL: [Func; 6] = [
        Func::Sqrt,
        Func::Exp,
        Func::Ln,
        Func::Sin,
        Func::Cos,
        Func::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Abs => "abs",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Expression tree over the single variable `x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Why an expression could not be evaluated at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainErrorKind {
    DivisionByZero,
    LogOfNonPositive,
    SqrtOfNegative,
    ZeroToNegativePower,
    /// Negative base raised to a non-integer power.
    ComplexPower,
    /// The result overflowed or is otherwise not a finite real.
    NonFinite,
}

impl fmt::Display for DomainErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            DomainErrorKind::DivisionByZero => "division by zero",
            DomainErrorKind::LogOfNonPositive => "logarithm of a non-positive number",
            DomainErrorKind::SqrtOfNegative => "square root of a negative number",
            DomainErrorKind::ZeroToNegativePower => "zero raised to a negative power",
            DomainErrorKind::ComplexPower => "negative base raised to a non-integer power",
            DomainErrorKind::NonFinite => "non-finite result",
        };
        f.write_str(msg)
    }
}

/// Evaluation failure, carrying the rendered sub-expression that failed.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind} in `{subexpr}` at x = {x}")]
pub struct DomainError {
    pub kind: DomainErrorKind,
    pub subexpr: String,
    pub x: f64,
}

// plain constructors; operator overloading would hide the boxing
#[allow(clippy::should_implement_trait)]
impl Expr {
    pub fn constant(value: f64) -> Expr {
        Expr::Const(value)
    }

    pub fn var() -> Expr {
        Expr::Var
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::Neg(Box::new(e))
    }

    pub fn binary(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn add(l: Expr, r: Expr) -> Expr {
        Expr::binary(BinOp::Add, l, r)
    }

    pub fn sub(l: Expr, r: Expr) -> Expr {
        Expr::binary(BinOp::Sub, l, r)
    }

    pub fn mul(l: Expr, r: Expr) -> Expr {
        Expr::binary(BinOp::Mul, l, r)
    }

    pub fn div(l: Expr, r: Expr) -> Expr {
        Expr::binary(BinOp::Div, l, r)
    }

    pub fn pow(l: Expr, r: Expr) -> Expr {
        Expr::binary(BinOp::Pow, l, r)
    }

    pub fn call(func: Func, arg: Expr) -> Expr {
        Expr::Call(func, Box::new(arg))
    }

    /// True when the tree does not mention `x`.
    pub fn is_constant(&self) -> bool {
        match self {
            Expr::Const(_) => true,
            Expr::Var => false,
            Expr::Neg(e) | Expr::Call(_, e) => e.is_constant(),
            Expr::Binary(_, l, r) => l.is_constant() && r.is_constant(),
        }
    }

    pub fn as_const(&self) -> Option<f64> {
        match self {
            Expr::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var => 1,
            Expr::Neg(e) | Expr::Call(_, e) => 1 + e.size(),
            Expr::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Evaluates the expression at `x`.
    ///
    /// Domain violations are reported with the innermost offending
    /// sub-expression rather than propagated as NaN.
    pub fn eval(&self, x: f64) -> Result<f64, DomainError> {
        let fail = |kind| DomainError {
            kind,
            subexpr: self.to_string(),
            x,
        };
        let v = match self {
            Expr::Const(c) => *c,
            Expr::Var => x,
            Expr::Neg(e) => -e.eval(x)?,
            Expr::Binary(op, l, r) => {
                let a = l.eval(x)?;
                let b = r.eval(x)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(fail(DomainErrorKind::DivisionByZero));
                        }
                        a / b
                    }
                    BinOp::Pow => power(a, b).map_err(fail)?,
                }
            }
            Expr::Call(func, arg) => {
                let a = arg.eval(x)?;
                match func {
                    Func::Sqrt => {
                        if a < 0.0 {
                            return Err(fail(DomainErrorKind::SqrtOfNegative));
                        }
                        a.sqrt()
                    }
                    Func::Exp => a.exp(),
                    Func::Ln => {
                        if a <= 0.0 {
                            return Err(fail(DomainErrorKind::LogOfNonPositive));
                        }
                        a.ln()
                    }
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Abs => a.abs(),
                }
            }
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(fail(DomainErrorKind::NonFinite))
        }
    }

    /// Symbolic derivative with respect to `x`, simplified.
    pub fn derivative(&self) -> Expr {
        deriv::derivative(self).simplify()
    }

    /// Applies identity-element rules and constant folding until the tree
    /// stops changing.
    pub fn simplify(&self) -> Expr {
        simplify::simplify(self)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Const(_) | Expr::Var | Expr::Call(..) => 5,
            Expr::Neg(_) => 3,
            Expr::Binary(op, ..) => op.precedence(),
        }
    }
}

fn power(base: f64, exp: f64) -> Result<f64, DomainErrorKind> {
    if base == 0.0 && exp < 0.0 {
        return Err(DomainErrorKind::ZeroToNegativePower);
    }
    if base < 0.0 && exp.fract() != 0.0 {
        return Err(DomainErrorKind::ComplexPower);
    }
    if exp.fract() == 0.0 && exp.abs() <= i32::MAX as f64 {
        Ok(base.powi(exp as i32))
    } else {
        Ok(base.powf(exp))
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `{}` on f64 is the shortest string that reads back to the same value.
            Expr::Const(c) if c.is_sign_negative() => write!(f, "(-{})", -c),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var => f.write_str("x"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                write_child(f, e, e.precedence() < 3)
            }
            Expr::Binary(op, l, r) => {
                let p = op.precedence();
                if *op == BinOp::Pow {
                    // right-associative: only the base needs guarding
                    write_child(f, l, l.precedence() <= p)?;
                    write!(f, "^")?;
                    write_child(f, r, r.precedence() < p)
                } else {
                    write_child(f, l, l.precedence() < p)?;
                    write!(f, " {} ", op.symbol())?;
                    write_child(f, r, r.precedence() <= p)
                }
            }
            Expr::Call(func, arg) => write!(f, "{}({arg})", func.name()),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
