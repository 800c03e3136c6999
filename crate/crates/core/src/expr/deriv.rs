use super::{BinOp, Expr, Func};

/// Unsimplified derivative; `Expr::derivative` runs `simplify` on the result.
pub(super) fn derivative(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) => Expr::Const(0.0),
        Expr::Var => Expr::Const(1.0),
        Expr::Neg(u) => Expr::neg(derivative(u)),
        Expr::Binary(op, u, v) => {
            let (u, v) = (u.as_ref(), v.as_ref());
            match op {
                BinOp::Add => Expr::add(derivative(u), derivative(v)),
                BinOp::Sub => Expr::sub(derivative(u), derivative(v)),
                BinOp::Mul => Expr::add(
                    Expr::mul(derivative(u), v.clone()),
                    Expr::mul(u.clone(), derivative(v)),
                ),
                BinOp::Div => Expr::div(
                    Expr::sub(
                        Expr::mul(derivative(u), v.clone()),
                        Expr::mul(u.clone(), derivative(v)),
                    ),
                    Expr::pow(v.clone(), Expr::Const(2.0)),
                ),
                BinOp::Pow => power_rule(u, v),
            }
        }
        Expr::Call(func, u) => {
            let du = derivative(u);
            let u = u.as_ref().clone();
            let outer = match func {
                // 1 / (2 sqrt(u))
                Func::Sqrt => Expr::div(
                    Expr::Const(1.0),
                    Expr::mul(Expr::Const(2.0), Expr::call(Func::Sqrt, u)),
                ),
                Func::Exp => Expr::call(Func::Exp, u),
                Func::Ln => Expr::div(Expr::Const(1.0), u),
                Func::Sin => Expr::call(Func::Cos, u),
                Func::Cos => Expr::neg(Expr::call(Func::Sin, u)),
                // sign(u), undefined at u = 0
                Func::Abs => Expr::div(Expr::call(Func::Abs, u.clone()), u),
            };
            Expr::mul(outer, du)
        }
    }
}

fn power_rule(base: &Expr, exp: &Expr) -> Expr {
    if exp.is_constant() {
        // d(u^c) = c * u^(c - 1) * u'
        let reduced = Expr::sub(exp.clone(), Expr::Const(1.0));
        return Expr::mul(
            Expr::mul(exp.clone(), Expr::pow(base.clone(), reduced)),
            derivative(base),
        );
    }
    if base.is_constant() {
        // d(a^v) = a^v * ln(a) * v'
        return Expr::mul(
            Expr::mul(
                Expr::pow(base.clone(), exp.clone()),
                Expr::call(Func::Ln, base.clone()),
            ),
            derivative(exp),
        );
    }
    // u^v = exp(v ln u)  =>  u^v * (v' ln u + v u' / u)
    Expr::mul(
        Expr::pow(base.clone(), exp.clone()),
        Expr::add(
            Expr::mul(derivative(exp), Expr::call(Func::Ln, base.clone())),
            Expr::div(Expr::mul(exp.clone(), derivative(base)), base.clone()),
        ),
    )
}
