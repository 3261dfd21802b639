//! Name binding and semantic checks: turns a syntax tree into executable
//! steps over concrete rings and modules.

use std::collections::HashMap;
use std::sync::Arc;

use cmw_core::generate::IdealStyle;
use cmw_core::{
    CoefficientField, Matrix, MonomialOrder, PolyRingDesc, Polynomial, PresentedModule, QuotientRing, StatementId,
};

use crate::ast::*;
use crate::parser::{ErrorKind, ParseError};

#[derive(Clone, Debug)]
pub enum Action {
    Invariants { m: PresentedModule, vs: Option<PresentedModule> },
    Ext { i: usize, m: PresentedModule, n: PresentedModule },
    Tor { i: usize, m: PresentedModule, n: PresentedModule },
    Grade { m: PresentedModule, n: PresentedModule },
    Serre { m: PresentedModule, k: usize },
    Gdim { m: PresentedModule },
    Canonical { ring: Arc<QuotientRing> },
    Check { id: StatementId, m: PresentedModule, n: Option<PresentedModule>, param_n: Option<usize> },
    Campaign { ids: Vec<StatementId>, options: CampaignOptions, style: IdealStyle },
}

#[derive(Clone, Debug)]
pub struct Step {
    /// Position among the script's commands, from 0.
    pub index: usize,
    /// The command in canonical printed form.
    pub text: String,
    pub action: Action,
}

#[derive(Clone, Debug, Default)]
pub struct Program {
    pub steps: Vec<Step>,
}

#[derive(Clone)]
enum Value {
    Ring(Arc<QuotientRing>),
    Ideal(Arc<PolyRingDesc>, Vec<Polynomial>),
    Module(PresentedModule),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Ring(_) => "a ring",
            Value::Ideal(..) => "an ideal",
            Value::Module(_) => "a module",
        }
    }
}

fn semantic(pos: Pos, msg: impl Into<String>) -> ParseError {
    ParseError::new(ErrorKind::Semantic, pos, msg)
}

#[derive(Default)]
struct Env {
    names: HashMap<String, Value>,
    /// Most recently declared ring; ideals are read in its ambient ring.
    current: Option<Arc<QuotientRing>>,
}

impl Env {
    fn lookup(&self, id: &Ident) -> Result<&Value, ParseError> {
        self.names
            .get(&id.node)
            .ok_or_else(|| ParseError::new(ErrorKind::Binding, id.pos, format!("undefined name `{}`", id.node)))
    }

    fn ring(&self, id: &Ident) -> Result<Arc<QuotientRing>, ParseError> {
        match self.lookup(id)? {
            Value::Ring(r) => Ok(r.clone()),
            v => Err(semantic(id.pos, format!("`{}` is {}, expected a ring", id.node, v.kind()))),
        }
    }

    fn module(&self, id: &Ident) -> Result<PresentedModule, ParseError> {
        match self.lookup(id)? {
            Value::Module(m) => Ok(m.clone()),
            v => Err(semantic(id.pos, format!("`{}` is {}, expected a module", id.node, v.kind()))),
        }
    }

    fn pair(&self, a: &Ident, b: &Ident) -> Result<(PresentedModule, PresentedModule), ParseError> {
        let (m, n) = (self.module(a)?, self.module(b)?);
        if !m.ring().same_ring(n.ring()) {
            return Err(semantic(b.pos, format!("`{}` and `{}` live over different rings", a.node, b.node)));
        }
        Ok((m, n))
    }
}

/// Evaluates an expression in `desc`.
pub fn eval(desc: &PolyRingDesc, e: &Expr) -> Result<Polynomial, ParseError> {
    Ok(match &e.node {
        ExprKind::Num { num, den } => {
            let text = match den {
                Some(d) => format!("{num}/{d}"),
                None => num.clone(),
            };
            let c = desc
                .field
                .parse(&text)
                .ok_or_else(|| semantic(e.pos, format!("`{text}` is not an element of {}", desc.field)))?;
            desc.constant(c)
        }
        ExprKind::Var(v) => match desc.variables.iter().position(|x| x == v) {
            Some(i) => desc.var(i),
            None => return Err(ParseError::new(ErrorKind::Binding, e.pos, format!("unknown variable `{v}`"))),
        },
        ExprKind::Neg(a) => desc.neg(&eval(desc, a)?),
        ExprKind::Add(a, b) => desc.add(&eval(desc, a)?, &eval(desc, b)?),
        ExprKind::Sub(a, b) => desc.sub(&eval(desc, a)?, &eval(desc, b)?),
        ExprKind::Mul(a, b) => desc.mul(&eval(desc, a)?, &eval(desc, b)?),
        ExprKind::Pow(a, k) => desc.pow(&eval(desc, a)?, *k),
    })
}

/// Degree of a homogeneous polynomial, or the first two distinct term degrees.
fn degree_of(desc: &PolyRingDesc, p: &Polynomial) -> Result<Option<i64>, (i64, i64)> {
    let mut degs = p.terms().iter().map(|(e, _)| desc.exp_degree(e));
    let Some(d) = degs.next() else { return Ok(None) };
    match degs.find(|&x| x != d) {
        Some(other) => Err((d, other)),
        None => Ok(Some(d)),
    }
}

fn poly_ring(
    field: FieldSpec,
    vars: &[Ident],
    order: Option<OrderSpec>,
    weights: &Option<Vec<u32>>,
    pos: Pos,
) -> Result<Arc<QuotientRing>, ParseError> {
    let field = match field {
        FieldSpec::Q => CoefficientField::Rationals,
        FieldSpec::Fp(p) => CoefficientField::prime(p).map_err(|e| semantic(pos, e.to_string()))?,
    };
    let order = match order.unwrap_or(OrderSpec::Grevlex) {
        OrderSpec::Lex => MonomialOrder::Lex,
        OrderSpec::Grlex => MonomialOrder::GradedLex,
        OrderSpec::Grevlex => MonomialOrder::GradedReverseLex,
    };
    let names: Vec<String> = vars.iter().map(|v| v.node.clone()).collect();
    let weights = weights.clone().unwrap_or_else(|| vec![1; names.len()]);
    let desc = PolyRingDesc::with_weights(field, names, order, weights).map_err(|e| semantic(pos, e.to_string()))?;
    Ok(QuotientRing::polynomial(desc))
}

fn module(env: &Env, ring: &Ident, rows: &[Vec<Expr>], degrees: &Option<Vec<i64>>, pos: Pos) -> Result<PresentedModule, ParseError> {
    let r = env.ring(ring)?;
    let desc = r.ambient().clone();
    let ncols = rows.first().map_or(0, |row| row.len());
    if let Some(bad) = rows.iter().find(|row| row.len() != ncols) {
        let at = bad.first().map_or(pos, |e| e.pos);
        return Err(semantic(at, format!("row has {} entries, expected {ncols}", bad.len())));
    }
    let row_degrees = match degrees {
        Some(d) if d.len() != rows.len() => {
            return Err(semantic(pos, format!("{} degrees given for {} rows", d.len(), rows.len())));
        }
        Some(d) => d.clone(),
        None => vec![0; rows.len()],
    };
    let mut columns = vec![Vec::with_capacity(rows.len()); ncols];
    let mut col_degrees = vec![None; ncols];
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let p = eval(&desc, e)?;
            match degree_of(&desc, &p) {
                Err((a, b)) => return Err(semantic(e.pos, format!("inhomogeneous entry (degree {a} vs {b})"))),
                Ok(Some(d)) => {
                    let want = row_degrees[i] + d;
                    match col_degrees[j] {
                        Some(c) if c != want => {
                            return Err(semantic(
                                e.pos,
                                format!("entry degree {d} makes column {j} degree {want}, but it is {c}"),
                            ));
                        }
                        _ => col_degrees[j] = Some(want),
                    }
                }
                Ok(None) => {}
            }
            columns[j].push(p);
        }
    }
    let top = row_degrees.iter().copied().max().unwrap_or(0);
    let col_degrees: Vec<i64> = col_degrees.into_iter().map(|c| c.unwrap_or(top)).collect();
    let mat = Matrix::new(&desc, row_degrees, col_degrees, columns).map_err(|e| semantic(pos, e.to_string()))?;
    PresentedModule::new(r, mat).map_err(|e| semantic(pos, e.to_string()))
}

fn command(env: &Env, c: &Command) -> Result<Action, ParseError> {
    Ok(match c {
        Command::Invariants { m, vs } => match vs {
            Some(n) => {
                let (m, n) = env.pair(m, n)?;
                Action::Invariants { m, vs: Some(n) }
            }
            None => Action::Invariants { m: env.module(m)?, vs: None },
        },
        Command::Ext { i, m, n } => {
            let (m, n) = env.pair(m, n)?;
            Action::Ext { i: *i, m, n }
        }
        Command::Tor { i, m, n } => {
            let (m, n) = env.pair(m, n)?;
            Action::Tor { i: *i, m, n }
        }
        Command::Grade { m, n } => {
            let (m, n) = env.pair(m, n)?;
            Action::Grade { m, n }
        }
        Command::Serre { m, k } => Action::Serre { m: env.module(m)?, k: *k },
        Command::Gdim { m } => Action::Gdim { m: env.module(m)? },
        Command::Canonical { ring } => Action::Canonical { ring: env.ring(ring)? },
        Command::Check { id, m, n, param_n } => {
            let sid: StatementId = id.node.parse().map_err(|e: cmw_core::Error| semantic(id.pos, e.to_string()))?;
            let (mm, nn) = match n {
                Some(n) => {
                    let (a, b) = env.pair(m, n)?;
                    (a, Some(b))
                }
                None => (env.module(m)?, None),
            };
            if sid.needs_second() && nn.is_none() {
                return Err(semantic(id.pos, format!("statement {sid} needs a second module")));
            }
            if sid.needs_n() && param_n.is_none() {
                return Err(semantic(id.pos, format!("statement {sid} needs the parameter n=<k>")));
            }
            Action::Check { id: sid, m: mm, n: nn, param_n: *param_n }
        }
        Command::Campaign { ids, options } => {
            let mut sids = Vec::new();
            for id in ids {
                if id.node == "all" {
                    sids.extend(StatementId::ALL);
                } else {
                    sids.push(id.node.parse().map_err(|e: cmw_core::Error| semantic(id.pos, e.to_string()))?);
                }
            }
            let pos = ids[0].pos;
            if options.vars.is_some_and(|v| !(1..=4).contains(&v)) {
                return Err(semantic(pos, "vars must lie in 1..=4"));
            }
            if options.degree.is_some_and(|v| !(1..=4).contains(&v)) {
                return Err(semantic(pos, "degree must lie in 1..=4"));
            }
            if options.count == Some(0) {
                return Err(semantic(pos, "count must be at least 1"));
            }
            let style = match &options.style {
                Some(s) => s.parse().map_err(|e: cmw_core::Error| semantic(pos, e.to_string()))?,
                None => IdealStyle::Monomial,
            };
            Action::Campaign { ids: sids, options: options.clone(), style }
        }
    })
}

/// Binds every name in order and lowers commands to steps.
pub fn compile(script: &Script) -> Result<Program, ParseError> {
    let mut env = Env::default();
    let mut steps = Vec::new();
    for st in &script.statements {
        match &st.node {
            Statement::PolyRing { name, field, vars, order, weights } => {
                let r = poly_ring(*field, vars, *order, weights, st.pos)?;
                env.current = Some(r.clone());
                env.names.insert(name.node.clone(), Value::Ring(r));
            }
            Statement::QuotientRing { name, base, ideal } => {
                let b = env.ring(base)?;
                let (desc, gens) = match env.lookup(ideal)? {
                    Value::Ideal(d, g) => (d.clone(), g.clone()),
                    v => return Err(semantic(ideal.pos, format!("`{}` is {}, expected an ideal", ideal.node, v.kind()))),
                };
                if *desc != **b.ambient() {
                    return Err(semantic(ideal.pos, format!("`{}` lives in a different polynomial ring", ideal.node)));
                }
                let mut all = b.defining().to_vec();
                all.extend(gens);
                let r = QuotientRing::new(desc, &all).map_err(|e| semantic(st.pos, e.to_string()))?;
                if r.is_zero_ring() {
                    return Err(semantic(ideal.pos, "the quotient is the zero ring"));
                }
                env.current = Some(r.clone());
                env.names.insert(name.node.clone(), Value::Ring(r));
            }
            Statement::Ideal { name, gens } => {
                let r = env
                    .current
                    .clone()
                    .ok_or_else(|| ParseError::new(ErrorKind::Binding, st.pos, "no ring declared before this ideal"))?;
                let desc = r.ambient().clone();
                let mut polys = Vec::with_capacity(gens.len());
                for g in gens {
                    let p = eval(&desc, g)?;
                    match degree_of(&desc, &p) {
                        Err((a, b)) => {
                            return Err(semantic(g.pos, format!("inhomogeneous generator (degree {a} vs {b})")));
                        }
                        Ok(None) => return Err(semantic(g.pos, "generator is zero")),
                        Ok(Some(_)) => polys.push(p),
                    }
                }
                env.names.insert(name.node.clone(), Value::Ideal(desc, polys));
            }
            Statement::Module { name, ring, rows, degrees } => {
                let m = module(&env, ring, rows, degrees, st.pos)?;
                env.names.insert(name.node.clone(), Value::Module(m));
            }
            Statement::Command(c) => {
                let action = command(&env, c)?;
                steps.push(Step { index: steps.len(), text: c.to_string(), action });
            }
        }
    }
    Ok(Program { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{load, ErrorKind};

    fn semantic(text: &str) -> String {
        let e = load(text).unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic, "{e}");
        e.message
    }

    #[test]
    fn steps_carry_canonical_text() {
        let p = load("ring S = poly(Q; x, y); module M = coker S [[x]];\n  ext   1 M   M ;").unwrap();
        assert_eq!(p.steps.len(), 1);
        assert_eq!(p.steps[0].text, "ext 1 M M");
    }

    #[test]
    fn pair_commands_need_a_common_ring() {
        let m = semantic(
            "ring S = poly(Q; x, y); ring T = poly(Q; u, v); module M = coker S [[x]]; module N = coker T [[u]]; grade M N;",
        );
        assert!(m.contains("ring"), "{m}");
    }

    #[test]
    fn statement_arguments_are_checked() {
        let base = "ring S = poly(Q; x, y); module M = coker S [[x]];";
        semantic(&format!("{base} check nonsense M;"));
        semantic(&format!("{base} check thm1.8 M;"));
        semantic(&format!("{base} check thm2.1 M M;"));
        assert!(load(&format!("{base} check thm2.1 M M n=1;")).is_ok());
    }

    #[test]
    fn campaign_options_are_validated() {
        semantic("campaign T2 vars=9;");
        semantic("campaign T2 count=0;");
        semantic("campaign T2 style=cubic;");
        let p = load("campaign all seed=1;").unwrap();
        match &p.steps[0].action {
            Action::Campaign { ids, .. } => assert_eq!(ids.len(), StatementId::ALL.len()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn zero_quotient_is_rejected() {
        semantic("ring S = poly(Q; x); ideal I = (1); ring R = S / I;");
    }

    #[test]
    fn names_must_have_the_right_kind() {
        let e = load("ring S = poly(Q; x); module M = coker S [[x]]; canonical M;").unwrap_err();
        assert!(matches!(e.kind, ErrorKind::Binding | ErrorKind::Semantic), "{e}");
    }
}
