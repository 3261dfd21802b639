//! Syntax tree of a script. Positions are carried for diagnostics but are
//! ignored by equality, so a printed and re-parsed script compares equal.

use std::fmt;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug)]
pub struct Spanned<T> {
    pub node: T,
    pub pos: Pos,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl<T: Eq> Eq for Spanned<T> {}

impl<T> Spanned<T> {
    pub fn new(node: T, pos: Pos) -> Self {
        Spanned { node, pos }
    }
}

pub type Ident = Spanned<String>;
pub type Expr = Spanned<ExprKind>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// Integer or `n/d` literal, kept as written.
    Num { num: String, den: Option<String> },
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    Grlex,
    Grevlex,
}

impl OrderSpec {
    pub fn keyword(self) -> &'static str {
        match self {
            OrderSpec::Lex => "lex",
            OrderSpec::Grlex => "grlex",
            OrderSpec::Grevlex => "grevlex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    PolyRing {
        name: Ident,
        field: FieldSpec,
        vars: Vec<Ident>,
        order: Option<OrderSpec>,
        weights: Option<Vec<u32>>,
    },
    QuotientRing {
        name: Ident,
        base: Ident,
        ideal: Ident,
    },
    Ideal {
        name: Ident,
        gens: Vec<Expr>,
    },
    Module {
        name: Ident,
        ring: Ident,
        rows: Vec<Vec<Expr>>,
        degrees: Option<Vec<i64>>,
    },
    Command(Command),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CampaignOptions {
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub vars: Option<usize>,
    pub degree: Option<u32>,
    pub style: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Invariants { m: Ident, vs: Option<Ident> },
    Ext { i: usize, m: Ident, n: Ident },
    Tor { i: usize, m: Ident, n: Ident },
    Grade { m: Ident, n: Ident },
    Serre { m: Ident, k: usize },
    Gdim { m: Ident },
    Canonical { ring: Ident },
    Check { id: Ident, m: Ident, n: Option<Ident>, param_n: Option<usize> },
    Campaign { ids: Vec<Ident>, options: CampaignOptions },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Spanned<Statement>>,
}

impl Script {
    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.statements.iter().filter_map(|s| match &s.node {
            Statement::Command(c) => Some(c),
            _ => None,
        })
    }
}

// Printing. Parentheses are emitted exactly where re-parsing needs them
// to rebuild the same tree.

fn prec(e: &ExprKind) -> u8 {
    match e {
        ExprKind::Add(..) | ExprKind::Sub(..) => 1,
        ExprKind::Mul(..) => 2,
        ExprKind::Neg(_) => 3,
        ExprKind::Pow(..) => 4,
        ExprKind::Num { den: Some(_), .. } => 4,
        ExprKind::Num { .. } | ExprKind::Var(_) => 5,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(&e.node) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Spanned<ExprKind> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            ExprKind::Num { num, den: None } => f.write_str(num),
            ExprKind::Num { num, den: Some(d) } => write!(f, "{num}/{d}"),
            ExprKind::Var(v) => f.write_str(v),
            ExprKind::Neg(a) => {
                f.write_str("-")?;
                write_at(f, a, 3)
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                write_at(f, a, 1)?;
                f.write_str(if matches!(self.node, ExprKind::Add(..)) { " + " } else { " - " })?;
                write_at(f, b, 2)
            }
            ExprKind::Mul(a, b) => {
                write_at(f, a, 2)?;
                f.write_str("*")?;
                write_at(f, b, 3)
            }
            ExprKind::Pow(a, k) => {
                write_at(f, a, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn names(items: &[Ident]) -> String {
    items.iter().map(|x| x.node.as_str()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => f.write_str("Q"),
            FieldSpec::Fp(p) => write!(f, "Fp({p})"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Invariants { m, vs } => {
                write!(f, "invariants {}", m.node)?;
                if let Some(n) = vs {
                    write!(f, " vs {}", n.node)?;
                }
                Ok(())
            }
            Command::Ext { i, m, n } => write!(f, "ext {i} {} {}", m.node, n.node),
            Command::Tor { i, m, n } => write!(f, "tor {i} {} {}", m.node, n.node),
            Command::Grade { m, n } => write!(f, "grade {} {}", m.node, n.node),
            Command::Serre { m, k } => write!(f, "serre {} {k}", m.node),
            Command::Gdim { m } => write!(f, "gdim {}", m.node),
            Command::Canonical { ring } => write!(f, "canonical {}", ring.node),
            Command::Check { id, m, n, param_n } => {
                write!(f, "check {} {}", id.node, m.node)?;
                if let Some(n) = n {
                    write!(f, " {}", n.node)?;
                }
                if let Some(k) = param_n {
                    write!(f, " n={k}")?;
                }
                Ok(())
            }
            Command::Campaign { ids, options: o } => {
                write!(f, "campaign {}", names(ids))?;
                if let Some(v) = o.seed {
                    write!(f, " seed={v}")?;
                }
                if let Some(v) = o.count {
                    write!(f, " count={v}")?;
                }
                if let Some(v) = o.vars {
                    write!(f, " vars={v}")?;
                }
                if let Some(v) = o.degree {
                    write!(f, " degree={v}")?;
                }
                if let Some(v) = &o.style {
                    write!(f, " style={v}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::PolyRing { name, field, vars, order, weights } => {
                write!(f, "ring {} = poly({field}; {})", name.node, names(vars))?;
                if let Some(o) = order {
                    write!(f, " order {}", o.keyword())?;
                }
                if let Some(w) = weights {
                    write!(f, " weights [{}]", join(w, ", "))?;
                }
                f.write_str(";")
            }
            Statement::QuotientRing { name, base, ideal } => {
                write!(f, "ring {} = {} / {};", name.node, base.node, ideal.node)
            }
            Statement::Ideal { name, gens } => write!(f, "ideal {} = ({});", name.node, join(gens, ", ")),
            Statement::Module { name, ring, rows, degrees } => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", join(r, ", "))).collect();
                write!(f, "module {} = coker {} [{}]", name.node, ring.node, rows.join(", "))?;
                if let Some(d) = degrees {
                    write!(f, " degrees [{}]", join(d, ", "))?;
                }
                f.write_str(";")
            }
            Statement::Command(c) => write!(f, "{c};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.node)?;
        }
        Ok(())
    }
}
