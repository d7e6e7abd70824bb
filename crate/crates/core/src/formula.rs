//! Formula AST for intuitionistic propositional logic, with a concrete
//! syntax parser, a minimal-parenthesization printer, and structural
//! measures.
//!
//! Grammar (ASCII), loosest to tightest: `->` (right-associative), `|`,
//! `&`, `~`. Negation is surface sugar only: `~f` parses to `f -> bot`;
//! there is no negation node in the AST.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Tokens that can never be atom names.
pub const RESERVED: &[&str] = &["bot", "top"];

/// A finite ordered set of atom names.
///
/// Names must be non-empty, pairwise distinct, and distinct from the
/// reserved tokens. Names outside the identifier grammar accepted by the
/// parser (for example the `q+_w` atoms produced by model tagging) are
/// permitted as data but cannot be referenced from formula text.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Vocabulary {
    atoms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VocabError {
    EmptyName,
    Reserved(String),
    Duplicate(String),
}

impl fmt::Display for VocabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VocabError::EmptyName => write!(f, "empty atom name"),
            VocabError::Reserved(a) => write!(f, "atom name `{a}` is a reserved token"),
            VocabError::Duplicate(a) => write!(f, "duplicate atom name `{a}`"),
        }
    }
}

impl core::error::Error for VocabError {}

impl Vocabulary {
    pub fn new<I, S>(atoms: I) -> Result<Self, VocabError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for atom in atoms {
            let atom = atom.into();
            if atom.is_empty() {
                return Err(VocabError::EmptyName);
            }
            if RESERVED.contains(&atom.as_str()) {
                return Err(VocabError::Reserved(atom));
            }
            if !seen.insert(atom.clone()) {
                return Err(VocabError::Duplicate(atom));
            }
            list.push(atom);
        }
        Ok(Vocabulary { atoms: list })
    }

    pub fn empty() -> Self {
        Vocabulary { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.atoms.iter().any(|a| a == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Set equality: same atoms, order ignored.
    pub fn same_atoms(&self, other: &Vocabulary) -> bool {
        self.atoms.len() == other.atoms.len() && self.atoms.iter().all(|a| other.contains(a))
    }
}

/// An intuitionistic propositional formula over the connectives
/// bot, top, `&`, `|`, `->`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(String),
    Bot,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    /// `~f` desugared: `f -> bot`.
    pub fn neg(f: Formula) -> Formula {
        Formula::imp(f, Formula::Bot)
    }

    /// Implication nesting depth: the rank measure. `&`/`|` do not consume
    /// refinement rounds, only `->` does.
    pub fn impl_depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bot | Formula::Top => 0,
            Formula::And(l, r) | Formula::Or(l, r) => l.impl_depth().max(r.impl_depth()),
            Formula::Imp(l, r) => 1 + l.impl_depth().max(r.impl_depth()),
        }
    }

    /// Node count of the AST.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bot | Formula::Top => 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Exactly the atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Bot | Formula::Top => {}
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Imp(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Binding level: `->` loosest (0), then `|` (1), `&` (2), leaves (3).
    fn level(&self) -> u8 {
        match self {
            Formula::Imp(..) => 0,
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        let paren = self.level() < min_level;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(a) => write!(f, "{a}")?,
            Formula::Bot => write!(f, "bot")?,
            Formula::Top => write!(f, "top")?,
            Formula::And(l, r) => {
                l.fmt_at(f, 2)?;
                write!(f, " & ")?;
                r.fmt_at(f, 3)?;
            }
            Formula::Or(l, r) => {
                l.fmt_at(f, 1)?;
                write!(f, " | ")?;
                r.fmt_at(f, 2)?;
            }
            Formula::Imp(l, r) => {
                l.fmt_at(f, 1)?;
                write!(f, " -> ")?;
                r.fmt_at(f, 0)?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Renders with minimal parenthesization; `parse(print(f))` returns `f`
/// whenever every atom of `f` lies in the parser's identifier grammar.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Arrow,
    Pipe,
    Amp,
    Tilde,
    LParen,
    RParen,
    Ident(String),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut toks = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                it.next();
            }
            '(' => {
                it.next();
                toks.push((i, Tok::LParen));
            }
            ')' => {
                it.next();
                toks.push((i, Tok::RParen));
            }
            '&' => {
                it.next();
                toks.push((i, Tok::Amp));
            }
            '|' => {
                it.next();
                toks.push((i, Tok::Pipe));
            }
            '~' => {
                it.next();
                toks.push((i, Tok::Tilde));
            }
            '-' => {
                it.next();
                match it.peek() {
                    Some(&(_, '>')) => {
                        it.next();
                        toks.push((i, Tok::Arrow));
                    }
                    _ => return Err(ParseError::new(i, "expected `->`")),
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                let mut name = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                toks.push((start, Tok::Ident(name)));
            }
            c => return Err(ParseError::new(i, alloc::format!("unknown token `{c}`"))),
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(i, _)| *i)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.and()?;
        while self.peek() == Some(&Tok::Pipe) {
            self.bump();
            f = Formula::or(f, self.and()?);
        }
        Ok(f)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.peek() == Some(&Tok::Amp) {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Tilde) => Ok(Formula::neg(self.unary()?)),
            Some(Tok::LParen) => {
                let f = self.imp()?;
                let pos = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(f),
                    _ => Err(ParseError::new(pos, "expected `)`")),
                }
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "bot" => Ok(Formula::Bot),
                "top" => Ok(Formula::Top),
                _ => Ok(Formula::Atom(name)),
            },
            Some(_) => Err(ParseError::new(pos, "expected a formula")),
            None => Err(ParseError::new(pos, "unexpected end of input")),
        }
    }
}

/// Parses the concrete syntax. Inverse of [`Formula`]'s `Display`.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let f = p.imp()?;
    if p.peek().is_some() {
        return Err(ParseError::new(p.here(), "trailing input after formula"));
    }
    Ok(f)
}

/// The concrete-syntax rendering; same as `format!("{f}")`.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    #[test]
    fn arrow_binds_loosest() {
        assert_eq!(
            p("p -> q | r"),
            Formula::imp(
                Formula::atom("p"),
                Formula::or(Formula::atom("q"), Formula::atom("r"))
            )
        );
    }

    #[test]
    fn reserved_tokens() {
        assert_eq!(p("top"), Formula::Top);
        assert_eq!(p("bot"), Formula::Bot);
    }

    #[test]
    fn negation_desugars_to_implication() {
        assert_eq!(p("~p"), Formula::imp(Formula::atom("p"), Formula::Bot));
        assert_eq!(p("~~p"), Formula::neg(Formula::neg(Formula::atom("p"))));
    }

    #[test]
    fn arrow_is_right_associative() {
        assert_eq!(
            p("p -> q -> r"),
            Formula::imp(
                Formula::atom("p"),
                Formula::imp(Formula::atom("q"), Formula::atom("r"))
            )
        );
    }

    #[test]
    fn amp_binds_tighter_than_pipe() {
        assert_eq!(
            p("p | q & r"),
            Formula::or(
                Formula::atom("p"),
                Formula::and(Formula::atom("q"), Formula::atom("r"))
            )
        );
    }

    #[test]
    fn print_examples() {
        assert_eq!(
            Formula::imp(Formula::atom("p"), Formula::Bot).to_string(),
            "p -> bot"
        );
        assert_eq!(
            Formula::and(
                Formula::atom("p"),
                Formula::or(Formula::atom("q"), Formula::atom("r"))
            )
            .to_string(),
            "p & (q | r)"
        );
        assert_eq!(Formula::Top.to_string(), "top");
    }

    #[test]
    fn print_parenthesizes_left_nested_arrow() {
        let f = Formula::imp(
            Formula::imp(Formula::atom("p"), Formula::atom("q")),
            Formula::atom("r"),
        );
        assert_eq!(f.to_string(), "(p -> q) -> r");
        assert_eq!(p(&f.to_string()), f);
    }

    #[test]
    fn print_right_nested_or_keeps_structure() {
        let f = Formula::or(
            Formula::atom("a"),
            Formula::or(Formula::atom("b"), Formula::atom("c")),
        );
        assert_eq!(f.to_string(), "a | (b | c)");
        assert_eq!(p(&f.to_string()), f);
    }

    #[test]
    fn impl_depth_examples() {
        assert_eq!(Formula::atom("p").impl_depth(), 0);
        assert_eq!(p("p -> q").impl_depth(), 1);
        assert_eq!(p("(p -> bot) -> q").impl_depth(), 2);
        assert_eq!(p("p & (q -> r)").impl_depth(), 1);
    }

    #[test]
    fn atoms_of_examples() {
        let names = p("p -> q").atoms();
        assert_eq!(names, BTreeSet::from(["p".into(), "q".into()]));
        assert!(Formula::Bot.atoms().is_empty());
        assert_eq!(p("p & p").atoms().len(), 1);
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse("p -> ").unwrap_err();
        assert_eq!(err.pos, 5);
        let err = parse("p @ q").unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(err.message.contains("unknown token"));
        let err = parse("(p -> q").unwrap_err();
        assert_eq!(err.pos, 7);
    }

    #[test]
    fn trailing_input_rejected() {
        assert!(parse("p q").is_err());
    }

    #[test]
    fn vocabulary_rejects_bad_names() {
        assert!(Vocabulary::new(vec!["p", "q"]).is_ok());
        assert!(matches!(
            Vocabulary::new(vec!["p", "p"]),
            Err(VocabError::Duplicate(_))
        ));
        assert!(matches!(
            Vocabulary::new(vec!["bot"]),
            Err(VocabError::Reserved(_))
        ));
        assert!(matches!(
            Vocabulary::new(vec![""]),
            Err(VocabError::EmptyName)
        ));
    }

    #[test]
    fn vocabulary_set_equality_ignores_order() {
        let a = Vocabulary::new(vec!["p", "q"]).unwrap();
        let b = Vocabulary::new(vec!["q", "p"]).unwrap();
        assert!(a.same_atoms(&b));
        assert_ne!(a, b);
    }
}
