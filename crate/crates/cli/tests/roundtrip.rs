use std::path::Path;

use proptest::prelude::*;

use cmw_cli::ast::*;
use cmw_cli::{load, parse_syntax};
use cmw_core::StatementId;

fn sp<T>(node: T) -> Spanned<T> {
    Spanned::new(node, Pos::default())
}

fn ident() -> impl Strategy<Value = Ident> {
    prop::sample::select(vec!["x", "y", "z", "M", "N_2", "R.q", "t0"]).prop_map(|s| sp(s.to_string()))
}

fn number() -> impl Strategy<Value = ExprKind> {
    (0u32..1000, prop::option::of(1u32..50)).prop_map(|(n, d)| ExprKind::Num {
        num: n.to_string(),
        den: d.map(|d| d.to_string()),
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![number().prop_map(sp), ident().prop_map(|v| sp(ExprKind::Var(v.node)))];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| sp(ExprKind::Neg(Box::new(a)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sp(ExprKind::Add(Box::new(a), Box::new(b)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sp(ExprKind::Sub(Box::new(a), Box::new(b)))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| sp(ExprKind::Mul(Box::new(a), Box::new(b)))),
            (inner, 0u32..6).prop_map(|(a, k)| sp(ExprKind::Pow(Box::new(a), k))),
        ]
    })
}

fn stmt_id() -> impl Strategy<Value = Ident> {
    prop::sample::select(StatementId::ALL.to_vec()).prop_map(|id| sp(id.to_string()))
}

fn command() -> impl Strategy<Value = Command> {
    let opts = (
        prop::option::of(0u64..1 << 40),
        prop::option::of(1usize..100),
        prop::option::of(1usize..5),
        prop::option::of(1u32..5),
        prop::option::of(prop::sample::select(vec!["monomial", "binomial", "zero"]).prop_map(String::from)),
    )
        .prop_map(|(seed, count, vars, degree, style)| CampaignOptions { seed, count, vars, degree, style });
    prop_oneof![
        (ident(), prop::option::of(ident())).prop_map(|(m, vs)| Command::Invariants { m, vs }),
        (0usize..6, ident(), ident()).prop_map(|(i, m, n)| Command::Ext { i, m, n }),
        (0usize..6, ident(), ident()).prop_map(|(i, m, n)| Command::Tor { i, m, n }),
        (ident(), ident()).prop_map(|(m, n)| Command::Grade { m, n }),
        (ident(), 0usize..4).prop_map(|(m, k)| Command::Serre { m, k }),
        ident().prop_map(|m| Command::Gdim { m }),
        ident().prop_map(|ring| Command::Canonical { ring }),
        (stmt_id(), ident(), prop::option::of(ident()), prop::option::of(0usize..4))
            .prop_map(|(id, m, n, param_n)| Command::Check { id, m, n, param_n }),
        (prop::collection::vec(stmt_id(), 1..4), opts).prop_map(|(ids, options)| Command::Campaign { ids, options }),
    ]
}

fn statement() -> impl Strategy<Value = Statement> {
    let field = prop_oneof![Just(FieldSpec::Q), prop::sample::select(vec![2u64, 3, 101, 32003]).prop_map(FieldSpec::Fp)];
    let order = prop::option::of(prop::sample::select(vec![OrderSpec::Lex, OrderSpec::Grlex, OrderSpec::Grevlex]));
    prop_oneof![
        (ident(), field, prop::collection::vec(ident(), 1..4), order, prop::option::of(prop::collection::vec(1u32..6, 1..4)))
            .prop_map(|(name, field, vars, order, weights)| Statement::PolyRing { name, field, vars, order, weights }),
        (ident(), ident(), ident()).prop_map(|(name, base, ideal)| Statement::QuotientRing { name, base, ideal }),
        (ident(), prop::collection::vec(expr(), 1..4)).prop_map(|(name, gens)| Statement::Ideal { name, gens }),
        (
            ident(),
            ident(),
            prop::collection::vec(prop::collection::vec(expr(), 1..3), 1..3),
            prop::option::of(prop::collection::vec(-3i64..4, 1..3)),
        )
            .prop_map(|(name, ring, rows, degrees)| Statement::Module { name, ring, rows, degrees }),
        command().prop_map(Statement::Command),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printed_scripts_reparse_to_the_same_tree(stmts in prop::collection::vec(statement(), 0..6)) {
        let script = Script { statements: stmts.into_iter().map(sp).collect() };
        let text = script.to_string();
        let back = parse_syntax(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &script);
        prop_assert_eq!(back.to_string(), text);
    }
}

#[test]
fn corpus_scripts_round_trip_and_compile() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "cmw") {
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let a = parse_syntax(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let printed = a.to_string();
        let b = parse_syntax(&printed).unwrap();
        assert_eq!(a, b, "{}", path.display());
        assert_eq!(b.to_string(), printed);
        let p1 = load(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let p2 = load(&printed).unwrap();
        let texts = |p: &cmw_cli::compile::Program| p.steps.iter().map(|s| s.text.clone()).collect::<Vec<_>>();
        assert_eq!(texts(&p1), texts(&p2));
        seen += 1;
    }
    assert!(seen >= 5, "corpus too small: {seen}");
}
