//! Lexer and recursive-descent parser for the script language.

use std::fmt;

use crate::ast::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    Binding,
    Semantic,
}

impl ErrorKind {
    pub fn label(self) -> &'static str {
        match self {
            ErrorKind::Lexical => "lexical error",
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Binding => "binding error",
            ErrorKind::Semantic => "semantic error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
    /// Tokens that would have been accepted, for syntax errors.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}: {}", self.pos.line, self.pos.col, self.kind.label(), self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl ParseError {
    pub fn new(kind: ErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ParseError { kind, pos, message: message.into(), expected: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(s) => write!(f, "number `{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: Pos,
    start: usize,
    end: usize,
}

const SYMBOLS: &str = "=;()[],/+-*^";

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let advance = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let (off, c) = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(c, &mut line, &mut col);
            i += 1;
        } else if c == '#' || (c == '/' && chars.get(i + 1).is_some_and(|&(_, d)| d == '/')) {
            while i < chars.len() && chars[i].1 != '\n' {
                advance(chars[i].1, &mut line, &mut col);
                i += 1;
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_' || chars[j].1 == '.') {
                advance(chars[j].1, &mut line, &mut col);
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |&(o, _)| o);
            out.push(Token { tok: Tok::Ident(text[off..end].to_string()), pos, start: off, end });
            i = j;
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                advance(chars[j].1, &mut line, &mut col);
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |&(o, _)| o);
            out.push(Token { tok: Tok::Num(text[off..end].to_string()), pos, start: off, end });
            i = j;
        } else if SYMBOLS.contains(c) {
            advance(c, &mut line, &mut col);
            out.push(Token { tok: Tok::Sym(c), pos, start: off, end: off + 1 });
            i += 1;
        } else {
            return Err(ParseError::new(ErrorKind::Lexical, pos, format!("unexpected character `{c}`")));
        }
    }
    let pos = Pos { line, col };
    out.push(Token { tok: Tok::Eof, pos, start: text.len(), end: text.len() });
    Ok(out)
}

const COMMANDS: [&str; 9] = ["invariants", "ext", "tor", "grade", "serre", "gdim", "canonical", "check", "campaign"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

fn quoted(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| format!("`{s}`")).collect()
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: Vec<String>) -> Result<T, ParseError> {
        let t = self.peek();
        Err(ParseError {
            kind: ErrorKind::Syntax,
            pos: t.pos,
            message: format!("unexpected {}", t.tok),
            expected,
        })
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.fail(vec![format!("`{c}`")])
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn kw(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            self.fail(quoted(&[kw]))
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                let t = self.bump();
                Ok(Spanned::new(s, t.pos))
            }
            _ => self.fail(vec!["identifier".into()]),
        }
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        match &self.peek().tok {
            Tok::Num(s) => {
                let parsed = s.parse::<T>();
                let t = self.bump();
                parsed.map_err(|_| ParseError::new(ErrorKind::Syntax, t.pos, "number out of range"))
            }
            _ => self.fail(vec!["number".into()]),
        }
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat_sym('-');
        let v: i64 = self.number()?;
        Ok(if neg { -v } else { v })
    }

    fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        self.sym(open)?;
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            if !self.eat_sym(',') {
                return self.fail(vec!["`,`".into(), format!("`{close}`")]);
            }
        }
    }

    fn script(&mut self) -> Result<Script, ParseError> {
        let mut statements = Vec::new();
        while self.peek().tok != Tok::Eof {
            let pos = self.peek().pos;
            let node = self.statement()?;
            self.sym(';')?;
            statements.push(Spanned::new(node, pos));
        }
        Ok(Script { statements })
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        if self.is_kw("ring") {
            self.bump();
            return self.ring();
        }
        if self.is_kw("ideal") {
            self.bump();
            let name = self.ident()?;
            self.sym('=')?;
            let gens = self.list('(', ')', |p| p.expr())?;
            return Ok(Statement::Ideal { name, gens });
        }
        if self.is_kw("module") {
            self.bump();
            let name = self.ident()?;
            self.sym('=')?;
            self.kw("coker")?;
            let ring = self.ident()?;
            let rows = self.list('[', ']', |p| p.list('[', ']', |q| q.expr()))?;
            let degrees = if self.is_kw("degrees") {
                self.bump();
                Some(self.list('[', ']', |p| p.signed())?)
            } else {
                None
            };
            return Ok(Statement::Module { name, ring, rows, degrees });
        }
        if let Tok::Ident(s) = &self.peek().tok {
            if COMMANDS.contains(&s.as_str()) {
                return Ok(Statement::Command(self.command()?));
            }
        }
        let mut exp = quoted(&["ring", "ideal", "module"]);
        exp.extend(quoted(&COMMANDS));
        self.fail(exp)
    }

    fn ring(&mut self) -> Result<Statement, ParseError> {
        let name = self.ident()?;
        self.sym('=')?;
        if !self.is_kw("poly") {
            let base = self.ident()?;
            self.sym('/')?;
            let ideal = self.ident()?;
            return Ok(Statement::QuotientRing { name, base, ideal });
        }
        self.bump();
        self.sym('(')?;
        let field = if self.is_kw("Q") {
            self.bump();
            FieldSpec::Q
        } else if self.is_kw("Fp") {
            self.bump();
            self.sym('(')?;
            let p = self.number()?;
            self.sym(')')?;
            FieldSpec::Fp(p)
        } else {
            return self.fail(quoted(&["Q", "Fp"]));
        };
        self.sym(';')?;
        let mut vars = vec![self.ident()?];
        while self.eat_sym(',') {
            vars.push(self.ident()?);
        }
        self.sym(')')?;
        let order = if self.is_kw("order") {
            self.bump();
            let o = match &self.peek().tok {
                Tok::Ident(s) if s == "lex" => OrderSpec::Lex,
                Tok::Ident(s) if s == "grlex" => OrderSpec::Grlex,
                Tok::Ident(s) if s == "grevlex" => OrderSpec::Grevlex,
                _ => return self.fail(quoted(&["lex", "grlex", "grevlex"])),
            };
            self.bump();
            Some(o)
        } else {
            None
        };
        let weights = if self.is_kw("weights") {
            self.bump();
            Some(self.list('[', ']', |p| p.number())?)
        } else {
            None
        };
        if !self.is_sym(';') {
            let mut exp = vec!["`;`".to_string()];
            if order.is_none() {
                exp.push("`order`".into());
            }
            if weights.is_none() {
                exp.push("`weights`".into());
            }
            return self.fail(exp);
        }
        Ok(Statement::PolyRing { name, field, vars, order, weights })
    }

    /// A statement id; `-` joins adjacent pieces, as in `def1.1-equiv`.
    fn stmt_id(&mut self) -> Result<Ident, ParseError> {
        let first = self.ident()?;
        let mut name = first.node.clone();
        let mut end = self.toks[self.at - 1].end;
        while self.is_sym('-')
            && self.peek().start == end
            && matches!(self.toks[self.at + 1].tok, Tok::Ident(_))
            && self.toks[self.at + 1].start == end + 1
        {
            self.bump();
            let next = self.ident()?;
            name.push('-');
            name.push_str(&next.node);
            end = self.toks[self.at - 1].end;
        }
        Ok(Spanned::new(name, first.pos))
    }

    fn command(&mut self) -> Result<Command, ParseError> {
        let head = self.ident()?;
        Ok(match head.node.as_str() {
            "invariants" => {
                let m = self.ident()?;
                let vs = if self.is_kw("vs") {
                    self.bump();
                    Some(self.ident()?)
                } else {
                    None
                };
                Command::Invariants { m, vs }
            }
            "ext" | "tor" => {
                let i = self.number()?;
                let m = self.ident()?;
                let n = self.ident()?;
                if head.node == "ext" {
                    Command::Ext { i, m, n }
                } else {
                    Command::Tor { i, m, n }
                }
            }
            "grade" => Command::Grade { m: self.ident()?, n: self.ident()? },
            "serre" => Command::Serre { m: self.ident()?, k: self.number()? },
            "gdim" => Command::Gdim { m: self.ident()? },
            "canonical" => Command::Canonical { ring: self.ident()? },
            "check" => {
                let id = self.stmt_id()?;
                let m = self.ident()?;
                let mut n = None;
                let mut param_n = None;
                if matches!(&self.peek().tok, Tok::Ident(s) if s != "n") {
                    n = Some(self.ident()?);
                }
                if self.is_kw("n") {
                    self.bump();
                    self.sym('=')?;
                    param_n = Some(self.number()?);
                }
                if !self.is_sym(';') {
                    let mut exp = vec!["`;`".to_string(), "`n`".to_string()];
                    if n.is_none() {
                        exp.insert(0, "identifier".into());
                    }
                    return self.fail(exp);
                }
                Command::Check { id, m, n, param_n }
            }
            "campaign" => {
                let mut ids = vec![self.stmt_id()?];
                while self.eat_sym(',') {
                    ids.push(self.stmt_id()?);
                }
                let mut options = CampaignOptions::default();
                const KEYS: [&str; 5] = ["seed", "count", "vars", "degree", "style"];
                while let Tok::Ident(key) = &self.peek().tok {
                    let key = key.clone();
                    if !KEYS.contains(&key.as_str()) {
                        let mut exp = vec!["`;`".to_string()];
                        exp.extend(quoted(&KEYS));
                        return self.fail(exp);
                    }
                    let kpos = self.bump().pos;
                    self.sym('=')?;
                    let dup = match key.as_str() {
                        "seed" => options.seed.replace(self.number()?).is_some(),
                        "count" => options.count.replace(self.number()?).is_some(),
                        "vars" => options.vars.replace(self.number()?).is_some(),
                        "degree" => options.degree.replace(self.number()?).is_some(),
                        _ => options.style.replace(self.ident()?.node).is_some(),
                    };
                    if dup {
                        return Err(ParseError::new(ErrorKind::Syntax, kpos, format!("option `{key}` given twice")));
                    }
                }
                Command::Campaign { ids, options }
            }
            _ => unreachable!("dispatched on COMMANDS"),
        })
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.peek().pos;
            if self.eat_sym('+') {
                let rhs = self.term()?;
                lhs = Spanned::new(ExprKind::Add(Box::new(lhs), Box::new(rhs)), pos);
            } else if self.eat_sym('-') {
                let rhs = self.term()?;
                lhs = Spanned::new(ExprKind::Sub(Box::new(lhs), Box::new(rhs)), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    // term := unary ('*' unary)*
    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.peek().pos;
            if !self.eat_sym('*') {
                return Ok(lhs);
            }
            let rhs = self.unary()?;
            lhs = Spanned::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos);
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.peek().pos;
        if self.eat_sym('-') {
            let a = self.unary()?;
            return Ok(Spanned::new(ExprKind::Neg(Box::new(a)), pos));
        }
        self.power()
    }

    // power := atom ('^' number)?
    fn power(&mut self) -> Result<Expr, ParseError> {
        let pos = self.peek().pos;
        let base = self.atom()?;
        if self.eat_sym('^') {
            let k = self.number()?;
            return Ok(Spanned::new(ExprKind::Pow(Box::new(base), k), pos));
        }
        Ok(base)
    }

    // atom := number ('/' number)? | identifier | '(' expr ')'
    fn atom(&mut self) -> Result<Expr, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(num) => {
                self.bump();
                let den = if self.eat_sym('/') {
                    match &self.peek().tok {
                        Tok::Num(d) => {
                            let d = d.clone();
                            self.bump();
                            Some(d)
                        }
                        _ => return self.fail(vec!["number".into()]),
                    }
                } else {
                    None
                };
                Ok(Spanned::new(ExprKind::Num { num, den }, t.pos))
            }
            Tok::Ident(v) => {
                self.bump();
                Ok(Spanned::new(ExprKind::Var(v), t.pos))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.sym(')')?;
                Ok(e)
            }
            _ => self.fail(vec!["number".into(), "identifier".into(), "`(`".into(), "`-`".into()]),
        }
    }
}

/// Syntax only: tokens to tree.
pub fn parse_syntax(text: &str) -> Result<Script, ParseError> {
    let toks = lex(text)?;
    Parser { toks, at: 0 }.script()
}

/// Full front end: syntax, then name binding and semantic validation.
pub fn parse(text: &str) -> Result<Script, ParseError> {
    let script = parse_syntax(text)?;
    crate::compile::compile(&script)?;
    Ok(script)
}

/// Parses and compiles in one go.
pub fn load(text: &str) -> Result<crate::compile::Program, ParseError> {
    crate::compile::compile(&parse_syntax(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{Command, Statement};

    #[test]
    fn three_statement_script() {
        let s = parse("ring S = poly(Q; x, y) order grevlex; module M = coker S [[x^2, x*y]]; invariants M;").unwrap();
        assert_eq!(s.statements.len(), 3);
        assert!(matches!(s.statements[2].node, Statement::Command(Command::Invariants { .. })));
    }

    #[test]
    fn unbound_ring_is_a_binding_error_at_the_use() {
        let e = parse("module M = coker T [[x]];").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Binding);
        assert_eq!((e.pos.line, e.pos.col), (1, 18));
    }

    #[test]
    fn inhomogeneous_generator_is_semantic() {
        let e = parse("ring S = poly(Q; x, y, z); ideal I = (x*y - z);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic);
        assert!(e.message.contains("inhomogeneous generator (degree 2 vs 1)"), "{}", e.message);
    }

    #[test]
    fn syntax_errors_list_expected_tokens() {
        let e = parse_syntax("ring S = poly(Q; x y);").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert!(!e.expected.is_empty());
        assert!(e.to_string().starts_with("line 1, column 20"), "{e}");
    }

    #[test]
    fn lexical_errors() {
        let e = parse_syntax("ring S = poly(Q; x) $").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Lexical);
    }

    #[test]
    fn statement_ids_may_contain_dashes_and_dots() {
        let s = parse_syntax("check def1.1-equiv M;").unwrap();
        match &s.statements[0].node {
            Statement::Command(Command::Check { id, .. }) => assert_eq!(id.node, "def1.1-equiv"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn comments_and_empty_input() {
        assert!(parse("").unwrap().statements.is_empty());
        assert!(parse("# nothing\n// here\n").unwrap().statements.is_empty());
    }

    #[test]
    fn printing_round_trips() {
        let text = "ring S = poly(Fp(7); x, y, z) order lex weights [1, 2, 1];\n\
                    ideal I = (x^2*z - y, -(x + z)*x*z);\n\
                    ring R = S / I;\n\
                    module M = coker R [[x, y], [z, 0]] degrees [0, 1];\n\
                    check thm2.1 M M n=2;\n\
                    campaign T2, cor1.5 seed=4 count=3 style=binomial;\n";
        let a = parse_syntax(text).unwrap();
        let b = parse_syntax(&a.to_string()).unwrap();
        assert_eq!(a, b);
    }
}
