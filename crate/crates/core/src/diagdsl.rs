//! A small textual diagram language compiled to sparse-operator
//! evaluations. `;` is vertical composition read bottom-to-top, `|` is the
//! horizontal tensor product; crossings enter only through named R-matrix
//! operators, so every expression denotes a morphism.
//!
//! Grammar:
//!   expr   := term (';' term)*
//!   term   := factor ('|' factor)*
//!   factor := PRIM '(' args ')' | NAME | '(' expr ')'

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::qarith::{RatFunc, Rational};
use crate::scalar::{Mode, QScalar};
use crate::tensornet::{
    weighted_cap, weighted_cup, MIdx, SlotKind, SlotSig, SparseOp, TracePreset,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiagError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown primitive or name `{0}`")]
    Unknown(String),
    #[error("signature mismatch at {0}: {1}")]
    Type(String, String),
    #[error("identity file: {0}")]
    File(String),
}

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    /// Composition, outermost (last applied) first.
    Compose(Vec<Ast>),
    Tensor(Vec<Ast>),
    Prim(String, Vec<String>),
    Named(String),
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::Compose(parts) => {
                // printed bottom-to-top, the reverse of application order
                let mut first = true;
                for p in parts.iter().rev() {
                    if !first {
                        write!(f, " ; ")?;
                    }
                    first = false;
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Ast::Tensor(parts) => {
                let mut first = true;
                for p in parts {
                    if !first {
                        write!(f, " | ")?;
                    }
                    first = false;
                    match p {
                        Ast::Compose(_) => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
            Ast::Prim(name, args) => {
                if args.is_empty() {
                    write!(f, "{name}()")
                } else {
                    write!(f, "{name}({})", args.join(","))
                }
            }
            Ast::Named(n) => write!(f, "{n}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Semi,
    Bar,
    LPar,
    RPar,
    Comma,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0, line: 1, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> DiagError {
        DiagError::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, DiagError> {
        let bytes = self.src.as_bytes();
        let mut out = Vec::new();
        while self.pos < bytes.len() {
            let c = bytes[self.pos] as char;
            let (line, col) = (self.line, self.col);
            match c {
                ' ' | '\t' => {
                    self.pos += 1;
                    self.col += 1;
                }
                '\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.col = 1;
                }
                ';' => {
                    out.push((Tok::Semi, line, col));
                    self.pos += 1;
                    self.col += 1;
                }
                '|' => {
                    out.push((Tok::Bar, line, col));
                    self.pos += 1;
                    self.col += 1;
                }
                '(' => {
                    out.push((Tok::LPar, line, col));
                    self.pos += 1;
                    self.col += 1;
                }
                ')' => {
                    out.push((Tok::RPar, line, col));
                    self.pos += 1;
                    self.col += 1;
                }
                ',' => {
                    out.push((Tok::Comma, line, col));
                    self.pos += 1;
                    self.col += 1;
                }
                c if c.is_ascii_alphanumeric() || c == '*' || c == '_' => {
                    let start = self.pos;
                    while self.pos < bytes.len() {
                        let d = bytes[self.pos] as char;
                        if d.is_ascii_alphanumeric() || d == '*' || d == '_' {
                            self.pos += 1;
                            self.col += 1;
                        } else {
                            break;
                        }
                    }
                    out.push((Tok::Name(self.src[start..self.pos].to_string()), line, col));
                }
                other => return Err(self.error(format!("unexpected character `{other}`"))),
            }
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _, _)| t)
    }

    fn pos(&self) -> (usize, usize) {
        self.toks
            .get(self.at.min(self.toks.len().saturating_sub(1)))
            .map(|(_, l, c)| (*l, *c))
            .unwrap_or((1, 1))
    }

    fn error(&self, msg: impl Into<String>) -> DiagError {
        let (line, col) = self.pos();
        DiagError::Syntax { line, col, msg: msg.into() }
    }

    fn expect(&mut self, t: Tok) -> Result<(), DiagError> {
        if self.peek() == Some(&t) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {t:?}")))
        }
    }

    fn expr(&mut self) -> Result<Ast, DiagError> {
        let mut parts = vec![self.term()?];
        while self.peek() == Some(&Tok::Semi) {
            self.at += 1;
            parts.push(self.term()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            // written bottom-first, stored outermost-first
            parts.reverse();
            Ok(Ast::Compose(parts))
        }
    }

    fn term(&mut self) -> Result<Ast, DiagError> {
        let mut parts = vec![self.factor()?];
        while self.peek() == Some(&Tok::Bar) {
            self.at += 1;
            parts.push(self.factor()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(Ast::Tensor(parts))
        }
    }

    fn factor(&mut self) -> Result<Ast, DiagError> {
        match self.peek().cloned() {
            Some(Tok::LPar) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(Tok::RPar)?;
                Ok(e)
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                if self.peek() == Some(&Tok::LPar) {
                    self.at += 1;
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RPar) {
                        loop {
                            match self.peek().cloned() {
                                Some(Tok::Name(a)) => {
                                    self.at += 1;
                                    args.push(a);
                                }
                                _ => return Err(self.error("expected argument")),
                            }
                            if self.peek() == Some(&Tok::Comma) {
                                self.at += 1;
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RPar)?;
                    Ok(Ast::Prim(name, args))
                } else {
                    Ok(Ast::Named(name))
                }
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

/// Parse an expression into its tree.
pub fn parse(text: &str) -> Result<Ast, DiagError> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(DiagError::Syntax { line: 1, col: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0 };
    let ast = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(ast)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Named-operator environment for a fixed N.
pub struct Env {
    pub n: usize,
    ops: BTreeMap<String, SparseOp<RatFunc>>,
}

impl Env {
    pub fn new(n: usize) -> Self {
        let ops = crate::rmat::named_ops(n).into_iter().collect();
        Env { n, ops }
    }

    pub fn with_ops(n: usize, extra: Vec<(String, SparseOp<RatFunc>)>) -> Self {
        let mut env = Env::new(n);
        for (k, v) in extra {
            env.ops.insert(k, v);
        }
        env
    }

    fn lookup(&self, name: &str, args: &[String]) -> Option<SparseOp<RatFunc>> {
        let key = if args.is_empty() {
            name.to_string()
        } else {
            format!("{}({})", name, args.join(","))
        };
        self.ops.get(&key).or_else(|| self.ops.get(name)).cloned()
    }
}

fn parse_slots(n: usize, args: &[String]) -> Result<SlotSig, DiagError> {
    let mut slots = Vec::new();
    for a in args {
        slots.push(SlotKind::parse(a).map_err(|_| DiagError::Unknown(format!("slot `{a}`")))?);
    }
    Ok(SlotSig::new(n, slots))
}

/// Typecheck and evaluate an expression against the environment.
pub fn typecheck_eval(ast: &Ast, env: &Env) -> Result<SparseOp<RatFunc>, DiagError> {
    match ast {
        Ast::Named(name) => env
            .lookup(name, &[])
            .ok_or_else(|| DiagError::Unknown(name.clone())),
        Ast::Prim(name, args) => match name.as_str() {
            "id" => {
                let sig = parse_slots(env.n, args)?;
                Ok(SparseOp::identity(&sig))
            }
            "cap" | "cup" => {
                let preset = args
                    .first()
                    .and_then(|a| TracePreset::parse(a))
                    .ok_or_else(|| DiagError::Unknown(format!("{name} preset")))?;
                if name == "cap" {
                    Ok(weighted_cap(env.n, preset))
                } else {
                    Ok(weighted_cup(env.n, preset))
                }
            }
            _ => env
                .lookup(name, args)
                .ok_or_else(|| DiagError::Unknown(format!("{name}({})", args.join(",")))),
        },
        Ast::Tensor(parts) => {
            let mut acc: Option<SparseOp<RatFunc>> = None;
            for p in parts {
                let op = typecheck_eval(p, env)?;
                acc = Some(match acc {
                    None => op,
                    Some(a) => a.tensor(&op),
                });
            }
            Ok(acc.expect("nonempty tensor"))
        }
        Ast::Compose(parts) => {
            // stored outermost first; apply right-to-left
            let mut acc: Option<SparseOp<RatFunc>> = None;
            for p in parts.iter().rev() {
                let op = typecheck_eval(p, env)?;
                acc = Some(match acc {
                    None => op,
                    Some(below) => {
                        if op.dom != below.cod {
                            return Err(DiagError::Type(
                                format!("{p}"),
                                format!(
                                    "needs {} but receives {}",
                                    op.dom.token(),
                                    below.cod.token()
                                ),
                            ));
                        }
                        op.compose(&below).unwrap()
                    }
                });
            }
            Ok(acc.expect("nonempty composition"))
        }
    }
}

// ---------------------------------------------------------------------------
// Identity checking
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub pass: bool,
    pub sampled: bool,
    /// First differing (out, in) entry with both values, if any.
    pub witness: Option<(MIdx, MIdx, String, String)>,
}

fn compare_ops<F: QScalar>(
    lhs: &SparseOp<F>,
    rhs: &SparseOp<F>,
    show: impl Fn(&F) -> String,
) -> Option<(MIdx, MIdx, String, String)> {
    let mut keys: Vec<(MIdx, MIdx)> = Vec::new();
    for (o, i, _) in lhs.entries() {
        keys.push((o.clone(), i.clone()));
    }
    for (o, i, _) in rhs.entries() {
        keys.push((o.clone(), i.clone()));
    }
    keys.sort();
    keys.dedup();
    for (o, i) in keys {
        let a = lhs.entry(&o, &i);
        let b = rhs.entry(&o, &i);
        if a != b {
            return Some((o, i, show(&a), show(&b)));
        }
    }
    None
}

/// Verify eval(lhs) = scale * eval(rhs) in the given mode.
pub fn check_identity(
    lhs: &str,
    rhs: &str,
    scale: &RatFunc,
    env: &Env,
    mode: &Mode,
) -> Result<IdentityReport, DiagError> {
    let la = parse(lhs)?;
    let ra = parse(rhs)?;
    let lop = typecheck_eval(&la, env)?;
    let rop = typecheck_eval(&ra, env)?.scale(scale);
    if lop.dom != rop.dom || lop.cod != rop.cod {
        return Err(DiagError::Type(
            "identity".into(),
            format!(
                "sides have signatures {} -> {} and {} -> {}",
                lop.dom.token(),
                lop.cod.token(),
                rop.dom.token(),
                rop.cod.token()
            ),
        ));
    }
    match mode {
        Mode::Symbolic => {
            let witness = compare_ops(&lop, &rop, |f: &RatFunc| f.to_string());
            Ok(IdentityReport { pass: witness.is_none(), sampled: false, witness })
        }
        Mode::Sampled(points) => {
            for q0 in points {
                let l: SparseOp<Rational> = lop.specialize(q0);
                let r: SparseOp<Rational> = rop.specialize(q0);
                let witness = compare_ops(&l, &r, |f: &Rational| f.to_string());
                if witness.is_some() {
                    return Ok(IdentityReport { pass: false, sampled: true, witness });
                }
            }
            Ok(IdentityReport { pass: true, sampled: true, witness: None })
        }
    }
}

// ---------------------------------------------------------------------------
// .qd identity files
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct QdStanza {
    pub lhs: String,
    pub rhs: String,
    pub scale: RatFunc,
    pub n: usize,
}

/// Parse a `.qd` file: stanzas of "LHS:", "RHS:", "SCALE:", "N:" lines
/// separated by blank lines; `#` starts a comment.
pub fn parse_qd(text: &str) -> Result<Vec<QdStanza>, DiagError> {
    let mut stanzas = Vec::new();
    let mut cur: BTreeMap<String, String> = BTreeMap::new();
    let mut flush = |cur: &mut BTreeMap<String, String>| -> Result<(), DiagError> {
        if cur.is_empty() {
            return Ok(());
        }
        let get = |k: &str| {
            cur.get(k)
                .cloned()
                .ok_or_else(|| DiagError::File(format!("stanza missing {k}")))
        };
        let scale = RatFunc::parse(&get("SCALE")?)
            .map_err(|e| DiagError::File(format!("bad SCALE: {e}")))?;
        let n: usize = get("N")?
            .trim()
            .parse()
            .map_err(|_| DiagError::File("bad N".into()))?;
        stanzas.push(QdStanza { lhs: get("LHS")?, rhs: get("RHS")?, scale, n });
        cur.clear();
        Ok(())
    };
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim_end();
        if line.trim().is_empty() {
            flush(&mut cur)?;
            continue;
        }
        let (key, val) = line
            .split_once(':')
            .ok_or_else(|| DiagError::File(format!("bad line `{line}`")))?;
        cur.insert(key.trim().to_string(), val.trim().to_string());
    }
    flush(&mut cur)?;
    Ok(stanzas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qnum;
    use crate::tensornet::midx;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("id(V)").unwrap(), Ast::Prim("id".into(), vec!["V".into()]));
        assert_eq!(
            parse("R ; Rinv").unwrap(),
            Ast::Compose(vec![Ast::Named("Rinv".into()), Ast::Named("R".into())])
        );
        assert!(parse("R |").is_err());
        assert!(parse("").is_err());
        assert!(parse("R ; (Rinv").is_err());
    }

    #[test]
    fn roundtrip_corpus() {
        let corpus = [
            "id(V)",
            "R",
            "Rinv",
            "R ; Rinv",
            "R | id(V)",
            "id(V) | R",
            "(R | id(V)) ; (id(V) | R)",
            "(R | id(V)) ; (id(V) | R) ; (R | id(V))",
            "A(2)",
            "A(2) ; A(2)",
            "cup(plain)",
            "cap(qtr)",
            "cup(plain) ; cap(qtr)",
            "Rc ; Rcinv",
            "Ra",
            "Rg ; Rainv",
            "id(V,V*)",
            "id(W2)",
            "(Rc | id(V)) ; (id(V*) | Ra)",
            "J(1)",
            "R ; R ; R",
            "(A(2) | A(2)) ; A(2)",
        ];
        for src in corpus {
            let ast = parse(src).unwrap();
            let printed = ast.to_string();
            assert_eq!(parse(&printed).unwrap(), ast, "{src} -> {printed}");
        }
    }

    #[test]
    fn eval_inverse_pair() {
        let env = Env::new(2);
        let op = typecheck_eval(&parse("R ; Rinv").unwrap(), &env).unwrap();
        assert_eq!(op, SparseOp::identity(&SlotSig::v_pow(2, 2)));
    }

    #[test]
    fn eval_braid_identity() {
        let env = Env::new(2);
        let r = check_identity(
            "(R | id(V)) ; (id(V) | R) ; (R | id(V))",
            "(id(V) | R) ; (R | id(V)) ; (id(V) | R)",
            &RatFunc::one(),
            &env,
            &Mode::Symbolic,
        )
        .unwrap();
        assert!(r.pass);
    }

    #[test]
    fn eval_loop_value() {
        for n in 2..=3 {
            let env = Env::new(n);
            let op = typecheck_eval(&parse("cup(plain) ; cap(qtr)").unwrap(), &env).unwrap();
            let expect = qnum(n as i64).mul(&RatFunc::q_pow(-(n as i64)));
            assert_eq!(op.entry(&midx(&[]), &midx(&[])), expect);
        }
    }

    #[test]
    fn eval_compositional() {
        let env = Env::new(2);
        for (a, b) in [("R", "Rinv"), ("A(2)", "R"), ("Rinv", "A(2)")] {
            let combined = typecheck_eval(&parse(&format!("{a} ; {b}")).unwrap(), &env).unwrap();
            let fa = typecheck_eval(&parse(a).unwrap(), &env).unwrap();
            let fb = typecheck_eval(&parse(b).unwrap(), &env).unwrap();
            assert_eq!(combined, fb.compose(&fa).unwrap());
        }
    }

    #[test]
    fn idempotence_check() {
        let env = Env::new(3);
        let r =
            check_identity("A(2) ; A(2)", "A(2)", &RatFunc::one(), &env, &Mode::Symbolic).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn hecke_rearranged() {
        // R ; R minus (q - q^-1) R equals the identity
        let env = Env::new(3);
        let lhs = typecheck_eval(&parse("R ; R").unwrap(), &env).unwrap();
        let r = typecheck_eval(&parse("R").unwrap(), &env).unwrap();
        let coef = RatFunc::q_pow(1).sub(&RatFunc::q_pow(-1));
        let diff = lhs.sub(&r.scale(&coef)).unwrap();
        assert_eq!(diff, SparseOp::identity(&SlotSig::v_pow(3, 2)));
    }

    #[test]
    fn wrong_scale_fails_with_witness() {
        let env = Env::new(2);
        let r = check_identity("A(2) ; A(2)", "A(2)", &RatFunc::q_pow(2), &env, &Mode::Symbolic)
            .unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }

    #[test]
    fn type_errors_reported() {
        let env = Env::new(2);
        // Rc acts on duals; composing with R is a junction mismatch
        let err = check_identity("R ; Rc", "R ; Rc", &RatFunc::one(), &env, &Mode::Symbolic);
        assert!(matches!(err, Err(DiagError::Type(_, _))));
        let err = typecheck_eval(&parse("nosuch").unwrap(), &env);
        assert!(matches!(err, Err(DiagError::Unknown(_))));
    }

    #[test]
    fn sampled_mode_check() {
        let env = Env::new(3);
        let r = check_identity(
            "R ; Rinv",
            "id(V,V)",
            &RatFunc::one(),
            &env,
            &Mode::sampled_default(),
        )
        .unwrap();
        assert!(r.pass);
        assert!(r.sampled);
    }

    #[test]
    fn qd_parsing() {
        let text = "\
# braid relation
LHS: (R | id(V)) ; (id(V) | R) ; (R | id(V))
RHS: (id(V) | R) ; (R | id(V)) ; (id(V) | R)
SCALE: 0:1|0:1
N: 2

LHS: A(2) ; A(2)
RHS: A(2)
SCALE: 0:1|0:1
N: 3
";
        let stanzas = parse_qd(text).unwrap();
        assert_eq!(stanzas.len(), 2);
        assert_eq!(stanzas[0].n, 2);
        assert_eq!(stanzas[1].scale, RatFunc::one());
        for st in &stanzas {
            let env = Env::new(st.n);
            let rep = check_identity(&st.lhs, &st.rhs, &st.scale, &env, &Mode::Symbolic).unwrap();
            assert!(rep.pass, "{}", st.lhs);
        }
    }
}
