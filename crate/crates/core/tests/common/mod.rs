use deskcalc_core::expr::{BinOp, Func};
use deskcalc_core::Expr;
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        2 => Just(Expr::var()),
        1 => (-40i32..=40).prop_map(|k| Expr::constant(k as f64 / 4.0)),
    ]
}

/// Random expression trees with at most `depth` levels of nesting.
pub fn arb_expr(depth: u32) -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(depth, 48, 2, |inner| {
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
        ];
        let func = proptest::sample::select(Func::ALL.to_vec());
        prop_oneof![
            1 => inner.clone().prop_map(Expr::neg),
            4 => (op, inner.clone(), inner.clone()).prop_map(|(op, l, r)| Expr::binary(op, l, r)),
            1 => (inner.clone(), 0i32..=4).prop_map(|(b, k)| Expr::pow(b, Expr::constant(k as f64))),
            1 => (inner.clone(), inner.clone()).prop_map(|(b, e)| Expr::pow(b, e)),
            2 => (func, inner).prop_map(|(f, a)| Expr::call(f, a)),
        ]
    })
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
