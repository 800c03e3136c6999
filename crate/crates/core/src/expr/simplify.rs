use super::{BinOp, Expr};

const MAX_PASSES: usize = 32;

pub(super) fn simplify(e: &Expr) -> Expr {
    let mut cur = e.clone();
    for _ in 0..MAX_PASSES {
        let next = pass(&cur);
        if next == cur {
            break;
        }
        cur = next;
    }
    cur
}

fn is_zero(e: &Expr) -> bool {
    e.as_const() == Some(0.0)
}

fn is_one(e: &Expr) -> bool {
    e.as_const() == Some(1.0)
}

fn negative_const(e: &Expr) -> Option<f64> {
    e.as_const().filter(|c| *c < 0.0)
}

/// Folds a node whose children are all constants, keeping it as-is when the
/// value is undefined (e.g. `1/0`) so the error still surfaces at evaluation.
fn fold(e: Expr) -> Expr {
    match e.eval(0.0) {
        Ok(v) => Expr::Const(if v == 0.0 { 0.0 } else { v }),
        Err(_) => e,
    }
}

/// One bottom-up rewrite sweep.
fn pass(e: &Expr) -> Expr {
    match e {
        Expr::Const(_) | Expr::Var => e.clone(),
        Expr::Neg(u) => {
            let u = pass(u);
            match u {
                Expr::Const(_) => fold(Expr::neg(u)),
                Expr::Neg(inner) => *inner,
                // -(a - b) = b - a
                Expr::Binary(BinOp::Sub, a, b) => Expr::Binary(BinOp::Sub, b, a),
                u => Expr::neg(u),
            }
        }
        Expr::Call(func, u) => {
            let u = pass(u);
            let node = Expr::call(*func, u);
            if node.is_constant() {
                fold(node)
            } else {
                node
            }
        }
        Expr::Binary(op, l, r) => {
            let l = pass(l);
            let r = pass(r);
            if l.as_const().is_some() && r.as_const().is_some() {
                return fold(Expr::binary(*op, l, r));
            }
            rewrite(*op, l, r)
        }
    }
}

fn rewrite(op: BinOp, l: Expr, r: Expr) -> Expr {
    match op {
        BinOp::Add => {
            if is_zero(&r) {
                return l;
            }
            if is_zero(&l) {
                return r;
            }
            if let Expr::Neg(b) = r {
                return Expr::Binary(BinOp::Sub, Box::new(l), b);
            }
            if let Expr::Neg(a) = l {
                return Expr::Binary(BinOp::Sub, Box::new(r), a);
            }
            if let Some(c) = negative_const(&r) {
                return Expr::sub(l, Expr::Const(-c));
            }
            Expr::add(l, r)
        }
        BinOp::Sub => {
            if is_zero(&r) {
                return l;
            }
            if is_zero(&l) {
                return Expr::neg(r);
            }
            if let Expr::Neg(b) = r {
                return Expr::Binary(BinOp::Add, Box::new(l), b);
            }
            if let Some(c) = negative_const(&r) {
                return Expr::add(l, Expr::Const(-c));
            }
            Expr::sub(l, r)
        }
        BinOp::Mul => {
            if is_zero(&l) || is_zero(&r) {
                return Expr::Const(0.0);
            }
            if is_one(&l) {
                return r;
            }
            if is_one(&r) {
                return l;
            }
            if let Expr::Neg(a) = l {
                return Expr::neg(Expr::mul(*a, r));
            }
            if let Expr::Neg(b) = r {
                return Expr::neg(Expr::mul(l, *b));
            }
            if let Some(c) = negative_const(&l) {
                return Expr::neg(Expr::mul(Expr::Const(-c), r));
            }
            // constants go on the left
            if r.as_const().is_some() {
                return Expr::mul(r, l);
            }
            if let (Some(a), Expr::Binary(BinOp::Mul, inner_l, inner_r)) = (l.as_const(), &r) {
                if let Some(b) = inner_l.as_const() {
                    let product = a * b;
                    if product.is_finite() {
                        return Expr::mul(Expr::Const(product), inner_r.as_ref().clone());
                    }
                }
            }
            Expr::mul(l, r)
        }
        BinOp::Div => {
            if is_one(&r) {
                return l;
            }
            if is_zero(&l) {
                return Expr::Const(0.0);
            }
            if let Expr::Neg(a) = l {
                return Expr::neg(Expr::div(*a, r));
            }
            if let Expr::Neg(b) = r {
                return Expr::neg(Expr::div(l, *b));
            }
            if let Some(c) = negative_const(&l) {
                return Expr::neg(Expr::div(Expr::Const(-c), r));
            }
            Expr::div(l, r)
        }
        BinOp::Pow => {
            if is_one(&r) {
                return l;
            }
            // x^0 = 1 except at x = 0 with a negative-power history; accepted caveat
            if is_zero(&r) || is_one(&l) {
                return Expr::Const(1.0);
            }
            Expr::pow(l, r)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::parse;

    use super::*;

    fn s(text: &str) -> Expr {
        parse(text).unwrap().simplify()
    }

    #[test]
    fn identity_elements() {
        assert_eq!(Expr::mul(Expr::Const(1.0), Expr::Var).simplify(), Expr::Var);
        assert_eq!(s("x*1"), Expr::Var);
        assert_eq!(s("x+0"), Expr::Var);
        assert_eq!(s("0+x"), Expr::Var);
        assert_eq!(s("x-0"), Expr::Var);
        assert_eq!(s("x/1"), Expr::Var);
        assert_eq!(s("x^1"), Expr::Var);
        assert_eq!(s("x^0"), Expr::Const(1.0));
        assert_eq!(s("x*0"), Expr::Const(0.0));
        assert_eq!(s("0*sin(x)"), Expr::Const(0.0));
    }

    #[test]
    fn constant_folding() {
        assert_eq!(
            Expr::add(Expr::Const(2.0), Expr::Const(3.0)).simplify(),
            Expr::Const(5.0)
        );
        assert_eq!(s("2*3 + 4^0.5"), Expr::Const(8.0));
        assert_eq!(s("x + (2 - 5)"), parse("x - 3").unwrap());
    }

    #[test]
    fn undefined_constants_are_not_folded() {
        assert_eq!(s("1/0"), parse("1/0").unwrap());
        assert!(s("1/0 + x").eval(1.0).is_err());
    }

    #[test]
    fn sign_normalization() {
        assert_eq!(s("--x"), Expr::Var);
        assert_eq!(s("x + -x"), parse("x - x").unwrap());
        assert_eq!(s("(0 - 3)*x"), parse("-(3*x)").unwrap());
        assert_eq!(s("x*3*2"), parse("(3*x)*2").unwrap().simplify());
        assert_eq!(s("2*(3*x)"), parse("6*x").unwrap());
    }

    #[test]
    fn fixpoint_is_stable() {
        let e = s("(x*1 + 0)*(1*x) - 0/x");
        assert_eq!(e.simplify(), e);
    }
}
