//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := disj [ ("->" | "<->") formula ]
//! disj    := conj { "|" conj }
//! conj    := until { "&" until }
//! until   := unary [ ("U" | "W") until ]
//! unary   := ("~" | "X" | "F" | "G") unary | atom
//! atom    := "true" | "false" | ident | "(" formula ")"
//! ```

use super::{Formula, PropSymbol, RENAMING_PREFIX, WAITING_PREFIX};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    True,
    False,
    Start,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Clause,
    Next,
    Sometime,
    Always,
    Until,
    Unless,
    LParen,
    RParen,
    Ident(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Start => "`start`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Implies => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Clause => "`=>`".into(),
            Tok::Next => "`X`".into(),
            Tok::Sometime => "`F`".into(),
            Tok::Always => "`G`".into(),
            Tok::Until => "`U`".into(),
            Tok::Unless => "`W`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `text` into tokens, dropping whitespace and `#` comments.
/// Line and column numbers are 1-based; columns count characters.
pub(crate) fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let line = li + 1;
            let err = |message: String| Error::Syntax {
                line,
                column,
                message,
            };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let (tok, width) = match c {
                '~' => (Tok::Not, 1),
                '&' => (Tok::And, 1),
                '|' => (Tok::Or, 1),
                '(' => (Tok::LParen, 1),
                ')' => (Tok::RParen, 1),
                '-' if chars.get(i + 1) == Some(&'>') => (Tok::Implies, 2),
                '=' if chars.get(i + 1) == Some(&'>') => (Tok::Clause, 2),
                '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                    (Tok::Iff, 3)
                }
                c if is_ident_start(c) => {
                    let mut j = i;
                    while j < chars.len() && is_ident_char(chars[j]) {
                        j += 1;
                    }
                    let word: String = chars[i..j].iter().collect();
                    let tok = match word.as_str() {
                        "true" => Tok::True,
                        "false" => Tok::False,
                        "start" => Tok::Start,
                        "X" => Tok::Next,
                        "F" => Tok::Sometime,
                        "G" => Tok::Always,
                        "U" => Tok::Until,
                        "W" => Tok::Unless,
                        _ => Tok::Ident(word),
                    };
                    (tok, j - i)
                }
                other => return Err(err(format!("unexpected character `{other}`"))),
            };
            out.push(Spanned { tok, line, column });
            i += width;
        }
    }
    Ok(out)
}

/// Cursor over a token slice shared by the formula and clause-file parsers.
pub(crate) struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    /// Position reported for errors at end of input.
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Spanned], end: (usize, usize)) -> Self {
        Cursor { toks, pos: 0, end }
    }

    pub fn peek(&self) -> Option<&'a Spanned> {
        self.toks.get(self.pos)
    }

    pub fn next(&mut self) -> Option<&'a Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|s| &s.tok) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn error_here(&self, message: impl Into<String>) -> Error {
        let (line, column) = self
            .peek()
            .map(|s| (s.line, s.column))
            .unwrap_or(self.end);
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(s) => self.error_here(format!("expected {wanted}, found {}", s.tok.describe())),
            None => self.error_here(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }
}

pub(crate) fn end_position(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.lines().collect();
    match lines.last() {
        Some(l) => (lines.len(), l.chars().count() + 1),
        None => (1, 1),
    }
}

/// Parses a formula. All propositions get the `user` origin; identifiers
/// with a reserved prefix and the keyword `start` are rejected.
pub fn parse(text: &str) -> Result<Formula> {
    let toks = lex(text)?;
    let mut cur = Cursor::new(&toks, end_position(text));
    if cur.at_end() {
        return Err(cur.error_here("empty formula"));
    }
    let f = formula(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    Ok(f)
}

fn formula(cur: &mut Cursor) -> Result<Formula> {
    let lhs = disj(cur)?;
    if cur.eat(&Tok::Implies) {
        let rhs = formula(cur)?;
        Ok(Formula::implies(lhs, rhs))
    } else if cur.eat(&Tok::Iff) {
        let rhs = formula(cur)?;
        Ok(Formula::iff(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn disj(cur: &mut Cursor) -> Result<Formula> {
    let mut f = conj(cur)?;
    while cur.eat(&Tok::Or) {
        f = Formula::or(f, conj(cur)?);
    }
    Ok(f)
}

fn conj(cur: &mut Cursor) -> Result<Formula> {
    let mut f = until(cur)?;
    while cur.eat(&Tok::And) {
        f = Formula::and(f, until(cur)?);
    }
    Ok(f)
}

fn until(cur: &mut Cursor) -> Result<Formula> {
    let lhs = unary(cur)?;
    if cur.eat(&Tok::Until) {
        Ok(Formula::until(lhs, until(cur)?))
    } else if cur.eat(&Tok::Unless) {
        Ok(Formula::unless(lhs, until(cur)?))
    } else {
        Ok(lhs)
    }
}

fn unary(cur: &mut Cursor) -> Result<Formula> {
    if cur.eat(&Tok::Not) {
        Ok(Formula::not(unary(cur)?))
    } else if cur.eat(&Tok::Next) {
        Ok(Formula::next(unary(cur)?))
    } else if cur.eat(&Tok::Sometime) {
        Ok(Formula::sometime(unary(cur)?))
    } else if cur.eat(&Tok::Always) {
        Ok(Formula::always(unary(cur)?))
    } else {
        atom(cur)
    }
}

fn atom(cur: &mut Cursor) -> Result<Formula> {
    let Some(s) = cur.peek() else {
        return Err(cur.unexpected("a formula"));
    };
    match &s.tok {
        Tok::True => {
            cur.next();
            Ok(Formula::True)
        }
        Tok::False => {
            cur.next();
            Ok(Formula::False)
        }
        Tok::Ident(name) => {
            if name.starts_with(RENAMING_PREFIX) || name.starts_with(WAITING_PREFIX) {
                return Err(Error::ReservedIdentifier {
                    name: name.clone(),
                    line: s.line,
                    column: s.column,
                });
            }
            cur.next();
            Ok(Formula::Prop(PropSymbol::user(name)))
        }
        Tok::Start => Err(Error::ReservedIdentifier {
            name: "start".into(),
            line: s.line,
            column: s.column,
        }),
        Tok::LParen => {
            cur.next();
            let f = formula(cur)?;
            cur.expect(Tok::RParen)?;
            Ok(f)
        }
        _ => Err(cur.unexpected("a formula")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: &str) -> Formula {
        Formula::prop(n)
    }

    #[test]
    fn parses_box_and_diamond() {
        let f = parse("G a & F ~a").unwrap();
        assert_eq!(
            f,
            Formula::and(
                Formula::always(p("a")),
                Formula::sometime(Formula::not(p("a")))
            )
        );
    }

    #[test]
    fn parses_constants() {
        assert_eq!(parse("true").unwrap(), Formula::True);
        assert_eq!(parse(" false # trailing").unwrap(), Formula::False);
    }

    #[test]
    fn parses_larger_example() {
        let f = parse("(F p & G(p -> X p)) -> F G p").unwrap();
        let expect = Formula::implies(
            Formula::and(
                Formula::sometime(p("p")),
                Formula::always(Formula::implies(p("p"), Formula::next(p("p")))),
            ),
            Formula::sometime(Formula::always(p("p"))),
        );
        assert_eq!(f, expect);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("a | b & c").unwrap(),
            Formula::or(p("a"), Formula::and(p("b"), p("c")))
        );
        assert_eq!(
            parse("a -> b -> c").unwrap(),
            Formula::implies(p("a"), Formula::implies(p("b"), p("c")))
        );
        assert_eq!(
            parse("a U b U c").unwrap(),
            Formula::until(p("a"), Formula::until(p("b"), p("c")))
        );
        assert_eq!(
            parse("a & b U c").unwrap(),
            Formula::and(p("a"), Formula::until(p("b"), p("c")))
        );
        assert_eq!(
            parse("a | b | c").unwrap(),
            Formula::or(Formula::or(p("a"), p("b")), p("c"))
        );
        assert_eq!(
            parse("~a W X b").unwrap(),
            Formula::unless(Formula::not(p("a")), Formula::next(p("b")))
        );
    }

    #[test]
    fn iff_is_expanded() {
        assert_eq!(
            parse("a <-> b").unwrap(),
            Formula::and(
                Formula::implies(p("a"), p("b")),
                Formula::implies(p("b"), p("a"))
            )
        );
    }

    #[test]
    fn keywords_must_stand_alone() {
        assert_eq!(parse("Xp").unwrap(), p("Xp"));
        assert_eq!(parse("X(p)").unwrap(), Formula::next(p("p")));
    }

    #[test]
    fn reserved_prefixes_are_rejected() {
        assert!(matches!(
            parse("p & _r0"),
            Err(Error::ReservedIdentifier { column: 5, .. })
        ));
        assert!(matches!(
            parse("_wx"),
            Err(Error::ReservedIdentifier { .. })
        ));
        assert!(matches!(
            parse("start"),
            Err(Error::ReservedIdentifier { .. })
        ));
        assert_eq!(parse("_x").unwrap(), p("_x"));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse("a &\n  | b") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("(a") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("a $ b"), Err(Error::Syntax { column: 3, .. })));
        assert!(parse("").is_err());
        assert!(parse("a b").is_err());
    }

    #[test]
    fn start_never_produced() {
        for s in ["a", "G (a -> X a)", "a U ~b W c"] {
            assert!(!parse(s).unwrap().contains_start());
        }
    }
}
