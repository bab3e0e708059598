use frontal_helicoid::expr::{parse, BinOp, Expr, Func};
use proptest::prelude::*;

const CORPUS: &str = include_str!("data/dsl_corpus.txt");

fn same_value(a: f64, b: f64) -> bool {
    a == b || (a.is_nan() && b.is_nan())
}

#[test]
fn corpus_round_trips() {
    let lines: Vec<&str> = CORPUS.lines().filter(|l| !l.trim().is_empty()).collect();
    assert_eq!(lines.len(), 50);
    for src in lines {
        let e = parse(src).unwrap_or_else(|err| panic!("`{src}`: {err}"));
        let printed = e.to_string();
        let back = parse(&printed).unwrap_or_else(|err| panic!("`{printed}`: {err}"));
        assert_eq!(back, e, "`{src}` printed as `{printed}`");
        assert_eq!(back.to_string(), printed);
        for u in [-0.7, 0.2, 0.9] {
            let (x, y) = (e.eval(u).unwrap_or(f64::NAN), back.eval(u).unwrap_or(f64::NAN));
            assert!(same_value(x, y), "`{src}` at {u}");
        }
    }
}

#[test]
fn unary_minus_binds_looser_than_power() {
    assert_eq!(parse("-u^2").unwrap().eval(3.0).unwrap(), -9.0);
    assert_eq!(parse("(-u)^2").unwrap().eval(3.0).unwrap(), 9.0);
    assert_eq!(parse("2^-u^2").unwrap().eval(1.0).unwrap(), 0.5);
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::Var),
        (-5.0..5.0f64).prop_map(|x| Expr::Number((x * 8.0).round() / 8.0)),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let op = prop_oneof![
            Just(BinOp::Add),
            Just(BinOp::Sub),
            Just(BinOp::Mul),
            Just(BinOp::Div),
            Just(BinOp::Pow)
        ];
        let func = prop_oneof![
            Just(Func::Sin),
            Just(Func::Cos),
            Just(Func::Exp),
            Just(Func::Sqrt),
            Just(Func::Ln),
            Just(Func::Tanh),
            Just(Func::Abs)
        ];
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (op, inner.clone(), inner.clone()).prop_map(|(op, a, b)| Expr::Binary(op, Box::new(a), Box::new(b))),
            (func, inner).prop_map(|(f, e)| Expr::Call(f, Box::new(e))),
        ]
    })
}

proptest! {
    #[test]
    fn printed_trees_reparse_to_the_same_value(e in expr_tree(), u in -2.0..2.0f64) {
        let printed = e.to_string();
        let back = parse(&printed).unwrap();
        prop_assert_eq!(back.to_string(), printed.clone());
        let (x, y) = (e.eval(u).unwrap_or(f64::NAN), back.eval(u).unwrap_or(f64::NAN));
        prop_assert!(same_value(x, y), "`{}`: {} vs {}", printed, x, y);
    }
}
