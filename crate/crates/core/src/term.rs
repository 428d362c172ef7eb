//! Ortholattice terms: parsing, printing and expansion into the primitive
//! signature `{meet, join, complement, 0, 1}`.
//!
//! The ASCII grammar, loosest binding first:
//!
//! ```text
//! expr    := join [ binop join ]        binop: ->i  ==i  ==  nabla delta +l +r +lp +rp
//! join    := meet { 'v' meet }
//! meet    := unary { '^' unary }
//! unary   := '-' unary | primary { '\'' }
//! primary := ident | '0' | '1' | '(' expr ')'
//! ```
//!
//! Implications, equivalences and symmetric differences do not associate:
//! `a ==1 b ==1 c` is rejected with [`ParseError::Ambiguity`].
//! Unicode connectives (`∩ ∧ ∪ ∨ ≡ → ¬ ′ ∇ △ ≤`) are accepted as aliases and
//! `≡`/`→` take an index as `≡1`, `≡_1` or `≡₁`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Index of a quantum implication or equivalence, always in `0..=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnIndex(u8);

impl ConnIndex {
    pub const ALL: [ConnIndex; 6] = [
        ConnIndex(0),
        ConnIndex(1),
        ConnIndex(2),
        ConnIndex(3),
        ConnIndex(4),
        ConnIndex(5),
    ];

    pub fn new(i: u8) -> Option<Self> {
        (i <= 5).then_some(ConnIndex(i))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for ConnIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The six symmetric differences; each is the complement of one equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymDiffKind {
    Nabla,
    Delta,
    PlusL,
    PlusR,
    PlusLp,
    PlusRp,
}

impl SymDiffKind {
    pub const ALL: [SymDiffKind; 6] = [
        SymDiffKind::Nabla,
        SymDiffKind::Delta,
        SymDiffKind::PlusL,
        SymDiffKind::PlusR,
        SymDiffKind::PlusLp,
        SymDiffKind::PlusRp,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SymDiffKind::Nabla => "nabla",
            SymDiffKind::Delta => "delta",
            SymDiffKind::PlusL => "+l",
            SymDiffKind::PlusR => "+r",
            SymDiffKind::PlusLp => "+lp",
            SymDiffKind::PlusRp => "+rp",
        }
    }

    /// The equivalence whose complement this difference is.
    pub fn equivalence(self) -> ConnIndex {
        let i = match self {
            SymDiffKind::Nabla => 0,
            SymDiffKind::Delta => 5,
            SymDiffKind::PlusL => 1,
            SymDiffKind::PlusR => 4,
            SymDiffKind::PlusLp => 3,
            SymDiffKind::PlusRp => 2,
        };
        ConnIndex(i)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Complement(Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Implication(ConnIndex, Box<Term>, Box<Term>),
    Equivalence(ConnIndex, Box<Term>, Box<Term>),
    SymDiff(SymDiffKind, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn complement(t: Term) -> Term {
        Term::Complement(Box::new(t))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    pub fn implies(i: ConnIndex, l: Term, r: Term) -> Term {
        Term::Implication(i, Box::new(l), Box::new(r))
    }

    pub fn equiv(i: ConnIndex, l: Term, r: Term) -> Term {
        Term::Equivalence(i, Box::new(l), Box::new(r))
    }

    pub fn symdiff(kind: SymDiffKind, l: Term, r: Term) -> Term {
        Term::SymDiff(kind, Box::new(l), Box::new(r))
    }

    /// Parses a term; see the module docs for the grammar.
    pub fn parse(text: &str) -> Result<Term, ParseError> {
        let mut p = Parser::new(text)?;
        let t = p.expr()?;
        p.expect_end()?;
        Ok(t)
    }

    /// Distinct variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(name) => {
                if !out.iter().any(|n| n == name) {
                    out.push(name.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::Complement(t) => t.collect_vars(out),
            Term::Meet(l, r)
            | Term::Join(l, r)
            | Term::Implication(_, l, r)
            | Term::Equivalence(_, l, r)
            | Term::SymDiff(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of connectives (every non-leaf node counts once).
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 0,
            Term::Complement(t) => 1 + t.size(),
            Term::Meet(l, r)
            | Term::Join(l, r)
            | Term::Implication(_, l, r)
            | Term::Equivalence(_, l, r)
            | Term::SymDiff(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// True when the term uses only variables, constants, complement, meet and join.
    pub fn is_primitive(&self) -> bool {
        match self {
            Term::Var(_) | Term::Zero | Term::One => true,
            Term::Complement(t) => t.is_primitive(),
            Term::Meet(l, r) | Term::Join(l, r) => l.is_primitive() && r.is_primitive(),
            _ => false,
        }
    }

    /// Rewrites every derived connective into meet, join and complement.
    pub fn expand(&self) -> Term {
        match self {
            Term::Var(_) | Term::Zero | Term::One => self.clone(),
            Term::Complement(t) => Term::complement(t.expand()),
            Term::Meet(l, r) => Term::meet(l.expand(), r.expand()),
            Term::Join(l, r) => Term::join(l.expand(), r.expand()),
            Term::Implication(i, l, r) => implication(*i, &l.expand(), &r.expand()),
            Term::Equivalence(i, l, r) => equivalence(*i, &l.expand(), &r.expand()),
            Term::SymDiff(k, l, r) => {
                Term::complement(equivalence(k.equivalence(), &l.expand(), &r.expand()))
            }
        }
    }
}

fn n(t: &Term) -> Term {
    Term::complement(t.clone())
}

fn m(l: Term, r: Term) -> Term {
    Term::meet(l, r)
}

fn j(l: Term, r: Term) -> Term {
    Term::join(l, r)
}

/// `a ≡ᵢ b` over already-expanded operands.
pub fn equivalence(i: ConnIndex, a: &Term, b: &Term) -> Term {
    let (a, b, na, nb) = (a.clone(), b.clone(), n(a), n(b));
    match i.0 {
        0 => m(j(na, b), j(a, nb)),
        1 => m(j(a.clone(), nb), j(na, m(a, b))),
        2 => m(j(a, nb.clone()), j(b, m(na, nb))),
        3 => m(j(na.clone(), b), j(a, m(na, nb))),
        4 => m(j(na, b.clone()), j(nb, m(a, b))),
        _ => j(m(a, b), m(na, nb)),
    }
}

/// `a →ᵢ b` over already-expanded operands.
pub fn implication(i: ConnIndex, a: &Term, b: &Term) -> Term {
    let (a, b, na, nb) = (a.clone(), b.clone(), n(a), n(b));
    match i.0 {
        0 => j(na, b),
        1 => j(na, m(a, b)),
        2 => j(b, m(na, nb)),
        3 => j(
            j(m(na.clone(), b.clone()), m(na.clone(), nb)),
            m(a, j(na, b)),
        ),
        4 => j(
            j(m(a, b.clone()), m(na.clone(), b.clone())),
            m(j(na, b), nb),
        ),
        _ => j(j(m(a, b.clone()), m(na.clone(), b)), m(na, nb)),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => f.write_str(name),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Complement(t) => write!(f, "{t}'"),
            Term::Meet(l, r) => write!(f, "({l} ^ {r})"),
            Term::Join(l, r) => write!(f, "({l} v {r})"),
            Term::Implication(i, l, r) => write!(f, "({l} ->{i} {r})"),
            Term::Equivalence(i, l, r) => write!(f, "({l} =={i} {r})"),
            Term::SymDiff(k, l, r) => write!(f, "({l} {} {r})", k.token()),
        }
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Term::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("ambiguous expression at column {pos}: `{first}` followed by `{second}` needs parentheses")]
    Ambiguity {
        pos: usize,
        first: String,
        second: String,
    },
}

/// Relation symbol of an equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Le,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Prime,
    Minus,
    Meet,
    Join,
    Imp(ConnIndex),
    Equiv(ConnIndex),
    Sym(SymDiffKind),
    LParen,
    RParen,
    Rel(Relation),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Zero => "0".into(),
            Tok::One => "1".into(),
            Tok::Prime => "'".into(),
            Tok::Minus => "-".into(),
            Tok::Meet => "^".into(),
            Tok::Join => "v".into(),
            Tok::Imp(i) => format!("->{i}"),
            Tok::Equiv(i) => format!("=={i}"),
            Tok::Sym(k) => k.token().into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Rel(r) => r.to_string(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '\'' | '′' => Tok::Prime,
            '¬' => Tok::Minus,
            '^' | '∩' | '∧' => Tok::Meet,
            '∪' | '∨' => Tok::Join,
            '∇' => Tok::Sym(SymDiffKind::Nabla),
            '△' | 'Δ' => Tok::Sym(SymDiffKind::Delta),
            '≤' => Tok::Rel(Relation::Le),
            '0' | '1' if !chars.get(i).is_some_and(|c| c.is_ascii_digit()) => {
                if c == '0' {
                    Tok::Zero
                } else {
                    Tok::One
                }
            }
            '-' if chars.get(i) == Some(&'>') => {
                i += 1;
                match lex_index(&chars, &mut i)? {
                    Some(ix) => Tok::Imp(ix),
                    None => return Err(syntax(start, "implication needs an index 0..5")),
                }
            }
            '-' => Tok::Minus,
            '→' => match lex_index(&chars, &mut i)? {
                Some(ix) => Tok::Imp(ix),
                None => return Err(syntax(start, "implication needs an index 0..5")),
            },
            '=' if chars.get(i) == Some(&'=') => {
                i += 1;
                Tok::Equiv(lex_index(&chars, &mut i)?.unwrap_or(ConnIndex(5)))
            }
            '=' => Tok::Rel(Relation::Eq),
            '≡' => Tok::Equiv(lex_index(&chars, &mut i)?.unwrap_or(ConnIndex(5))),
            '<' if chars.get(i) == Some(&'=') => {
                i += 1;
                Tok::Rel(Relation::Le)
            }
            '+' => {
                let from = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word: String = chars[from..i].iter().collect();
                match word.as_str() {
                    "l" => Tok::Sym(SymDiffKind::PlusL),
                    "r" => Tok::Sym(SymDiffKind::PlusR),
                    "lp" => Tok::Sym(SymDiffKind::PlusLp),
                    "rp" => Tok::Sym(SymDiffKind::PlusRp),
                    _ => return Err(syntax(start, format!("unknown operator `+{word}`"))),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "v" => Tok::Join,
                    "nabla" => Tok::Sym(SymDiffKind::Nabla),
                    "delta" => Tok::Sym(SymDiffKind::Delta),
                    _ => Tok::Ident(word),
                }
            }
            other => return Err(syntax(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// Reads an optional connective index written as `3`, `_3` or `₃`.
fn lex_index(chars: &[char], i: &mut usize) -> Result<Option<ConnIndex>, ParseError> {
    let at = *i;
    let mut k = *i;
    if chars.get(k) == Some(&'_') {
        k += 1;
    }
    let digit = match chars.get(k) {
        Some(c @ '0'..='9') => *c as u32 - '0' as u32,
        Some(c @ '₀'..='₉') => *c as u32 - '₀' as u32,
        _ if k > at => return Err(syntax(at, "expected an index after `_`")),
        _ => return Ok(None),
    };
    let ix = u8::try_from(digit)
        .ok()
        .and_then(ConnIndex::new)
        .ok_or_else(|| syntax(k, format!("connective index {digit} is outside 0..5")))?;
    *i = k + 1;
    Ok(Some(ix))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        Err(syntax(
            self.pos(),
            format!("expected {wanted}, found `{}`", self.peek().describe()),
        ))
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            _ => self.unexpected("end of input"),
        }
    }

    fn binop(tok: &Tok) -> bool {
        matches!(tok, Tok::Imp(_) | Tok::Equiv(_) | Tok::Sym(_))
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let lhs = self.join()?;
        if !Self::binop(self.peek()) {
            return Ok(lhs);
        }
        let op = self.bump();
        let rhs = self.join()?;
        if Self::binop(self.peek()) {
            return Err(ParseError::Ambiguity {
                pos: self.pos(),
                first: op.describe(),
                second: self.peek().describe(),
            });
        }
        Ok(match op {
            Tok::Imp(i) => Term::implies(i, lhs, rhs),
            Tok::Equiv(i) => Term::equiv(i, lhs, rhs),
            Tok::Sym(k) => Term::symdiff(k, lhs, rhs),
            _ => unreachable!("binop checked above"),
        })
    }

    fn join(&mut self) -> Result<Term, ParseError> {
        let mut t = self.meet()?;
        while *self.peek() == Tok::Join {
            self.bump();
            t = Term::join(t, self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        while *self.peek() == Tok::Meet {
            self.bump();
            t = Term::meet(t, self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Term::complement(self.unary()?));
        }
        let mut t = self.primary()?;
        while *self.peek() == Tok::Prime {
            self.bump();
            t = Term::complement(t);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(Term::One)
            }
            Tok::LParen => {
                self.bump();
                let t = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.unexpected("`)`");
                }
                self.bump();
                Ok(t)
            }
            _ => self.unexpected("a variable, constant or `(`"),
        }
    }
}

/// An equation or inequation between two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rel: Relation,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rel: Relation, rhs: Term) -> Self {
        Equation { lhs, rel, rhs }
    }

    /// Parses `lhs = rhs` or `lhs <= rhs`.
    pub fn parse(text: &str) -> Result<Equation, ParseError> {
        let mut p = Parser::new(text)?;
        let lhs = p.expr()?;
        let rel = match p.peek() {
            Tok::Rel(r) => *r,
            _ => return p.unexpected("`=` or `<=`"),
        };
        p.bump();
        let rhs = p.expr()?;
        p.expect_end()?;
        Ok(Equation { lhs, rel, rhs })
    }

    /// Variables of both sides, left side first.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.lhs.collect_vars(&mut out);
        self.rhs.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    fn ix(i: u8) -> ConnIndex {
        ConnIndex::new(i).unwrap()
    }

    #[test]
    fn parses_nested_complemented_equivalence() {
        let t = Term::parse("-(-(x ==1 y) ==1 y)").unwrap();
        let inner = Term::complement(Term::equiv(ix(1), v("x"), v("y")));
        assert_eq!(t, Term::complement(Term::equiv(ix(1), inner, v("y"))));
    }

    #[test]
    fn unicode_spelling_matches_ascii() {
        let a = Term::parse("-(-(x≡_1y)≡_1y)").unwrap();
        let b = Term::parse("-(-(x ==1 y) ==1 y)").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            Term::parse("a ∩ b ∪ c′").unwrap(),
            Term::parse("a ^ b v c'").unwrap()
        );
        assert_eq!(
            Term::parse("a →₂ b").unwrap(),
            Term::parse("a ->2 b").unwrap()
        );
    }

    #[test]
    fn constants_and_precedence() {
        assert_eq!(Term::parse("0").unwrap(), Term::Zero);
        assert_eq!(
            Term::parse("a ^ b v c").unwrap(),
            Term::join(Term::meet(v("a"), v("b")), v("c"))
        );
        assert_eq!(
            Term::parse("a v b ^ c").unwrap(),
            Term::join(v("a"), Term::meet(v("b"), v("c")))
        );
        assert_eq!(
            Term::parse("-a'").unwrap(),
            Term::complement(Term::complement(v("a")))
        );
    }

    #[test]
    fn bare_double_equals_is_index_five() {
        assert_eq!(
            Term::parse("a == b").unwrap(),
            Term::equiv(ix(5), v("a"), v("b"))
        );
        // a space separates the constant from the operator
        assert_eq!(
            Term::parse("a == 0").unwrap(),
            Term::equiv(ix(5), v("a"), Term::Zero)
        );
    }

    #[test]
    fn chained_binops_are_ambiguous() {
        for text in ["a ==1 b ==1 c", "a ->0 b == c", "a nabla b +l c"] {
            assert!(
                matches!(Term::parse(text), Err(ParseError::Ambiguity { .. })),
                "{text}"
            );
        }
        assert!(Term::parse("(a ->0 b) == c").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("a ^", 3),
            ("(a v b", 6),
            ("a -> b", 2),
            ("a ==7 b", 4),
            ("a # b", 2),
            ("a +q b", 2),
        ];
        for (text, pos) in cases {
            match Term::parse(text) {
                Err(ParseError::Syntax { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn prints_fully_parenthesized() {
        assert_eq!(Term::join(Term::complement(v("a")), v("b")).to_string(), "(a' v b)");
        assert_eq!(Term::Zero.to_string(), "0");
        assert_eq!(
            Term::equiv(ix(5), v("a"), v("b")).to_string(),
            "(a ==5 b)"
        );
        assert_eq!(
            Term::symdiff(SymDiffKind::PlusLp, v("a"), v("b")).to_string(),
            "(a +lp b)"
        );
    }

    #[test]
    fn variables_in_first_occurrence_order() {
        assert_eq!(Term::parse("b v a").unwrap().variables(), ["b", "a"]);
        assert_eq!(Term::parse("x ==1 y").unwrap().variables(), ["x", "y"]);
        assert!(Term::parse("0").unwrap().variables().is_empty());
        assert_eq!(
            Term::parse("(a ^ b) v (b ^ c) v a").unwrap().variables(),
            ["a", "b", "c"]
        );
    }

    #[test]
    fn expansion_table_entries() {
        let (a, b) = (v("a"), v("b"));
        assert_eq!(
            Term::equiv(ix(0), a.clone(), b.clone()).expand(),
            Term::parse("(a' v b) ^ (a v b')").unwrap()
        );
        assert_eq!(
            Term::implies(ix(0), a.clone(), b.clone()).expand(),
            Term::parse("a' v b").unwrap()
        );
        assert_eq!(
            Term::symdiff(SymDiffKind::PlusL, a.clone(), b.clone()).expand(),
            Term::complement(Term::equiv(ix(1), a.clone(), b.clone()).expand())
        );
        assert_eq!(
            Term::equiv(ix(5), a, b).expand(),
            Term::parse("(a ^ b) v (a' ^ b')").unwrap()
        );
    }

    #[test]
    fn equation_parsing() {
        let e = Equation::parse("(a == b) ->0 ((a == c) == (b == c)) = 1").unwrap();
        assert_eq!(e.rel, Relation::Eq);
        assert_eq!(e.rhs, Term::One);
        assert_eq!(e.variables(), ["a", "b", "c"]);
        let le = Equation::parse("a ^ b <= a").unwrap();
        assert_eq!(le.rel, Relation::Le);
        assert!(Equation::parse("a ^ b").is_err());
        assert!(Equation::parse("a = b = c").is_err());
    }
}
