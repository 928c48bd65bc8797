//! The clause-file format: one clause per line.
//!
//! ```text
//! start => a | ~b
//! a & b => X (c | ~d)
//! a => F ~p
//! true => X ~f      # comments run to end of line
//! ```
//!
//! Names with the renaming or waiting prefixes are accepted here so that
//! translated clause sets can be read back in.

use super::{ClauseSet, Conjunction, Disjunction, SnfClause};
use crate::error::{Error, Result};
use crate::formula::parse::{lex, Cursor, Spanned, Tok};
use crate::formula::{Literal, PropSymbol};

/// Whether `text` looks like a clause file rather than a formula.
pub fn is_clause_text(text: &str) -> bool {
    lex(text)
        .map(|toks| toks.iter().any(|t| t.tok == Tok::Clause))
        .unwrap_or(false)
}

pub fn parse_clause_set(text: &str) -> Result<ClauseSet> {
    let toks = lex(text).map_err(|e| match e {
        Error::Syntax { line, message, .. } => Error::ClauseFile { line, message },
        other => other,
    })?;
    let mut cs = ClauseSet::new();
    let mut i = 0;
    while i < toks.len() {
        let line = toks[i].line;
        let mut j = i;
        while j < toks.len() && toks[j].line == line {
            j += 1;
        }
        let clause = parse_clause_line(&toks[i..j], line)?;
        cs.insert(clause);
        i = j;
    }
    Ok(cs)
}

pub fn parse_clause(text: &str) -> Result<SnfClause> {
    let cs = parse_clause_set(text)?;
    match cs.clauses() {
        [c] => Ok(c.clone()),
        _ => Err(Error::ClauseFile {
            line: 1,
            message: "expected exactly one clause".into(),
        }),
    }
}

fn parse_clause_line(toks: &[Spanned], line: usize) -> Result<SnfClause> {
    let end = toks.last().map(|t| (t.line, t.column + 1)).unwrap_or((line, 1));
    let mut cur = Cursor::new(toks, end);
    clause(&mut cur).map_err(|e| match e {
        Error::Syntax { line, column, message } => Error::ClauseFile {
            line,
            message: format!("column {column}: {message}"),
        },
        other => other,
    })
}

fn clause(cur: &mut Cursor) -> Result<SnfClause> {
    let c = if cur.eat(&Tok::Start) {
        cur.expect(Tok::Clause)?;
        SnfClause::initial(disjunction(cur)?)
    } else {
        let lhs = conjunction(cur)?;
        cur.expect(Tok::Clause)?;
        if cur.eat(&Tok::Next) {
            let rhs = if cur.eat(&Tok::LParen) {
                let d = disjunction(cur)?;
                cur.expect(Tok::RParen)?;
                d
            } else {
                single(cur)?
            };
            SnfClause::step(lhs, rhs)
        } else if cur.eat(&Tok::Sometime) {
            SnfClause::sometime(lhs, literal(cur)?)
        } else {
            return Err(cur.unexpected("`X` or `F`"));
        }
    };
    if !cur.at_end() {
        return Err(cur.unexpected("end of line"));
    }
    Ok(c)
}

fn literal(cur: &mut Cursor) -> Result<Literal> {
    let positive = !cur.eat(&Tok::Not);
    match cur.peek().map(|s| &s.tok) {
        Some(Tok::Ident(name)) => {
            let sym = PropSymbol::infer(name);
            cur.next();
            Ok(Literal::new(sym, positive))
        }
        _ => Err(cur.unexpected("a literal")),
    }
}

/// A literal or a constant, as a one-element disjunction.
fn single(cur: &mut Cursor) -> Result<Disjunction> {
    if cur.eat(&Tok::True) {
        Ok(Disjunction::valid())
    } else if cur.eat(&Tok::False) {
        Ok(Disjunction::falsity())
    } else {
        Ok(Disjunction::new([literal(cur)?]))
    }
}

fn disjunction(cur: &mut Cursor) -> Result<Disjunction> {
    let mut d = single(cur)?;
    while cur.eat(&Tok::Or) {
        d = d.union(&single(cur)?);
    }
    Ok(d)
}

fn conjunction(cur: &mut Cursor) -> Result<Conjunction> {
    let item = |cur: &mut Cursor| -> Result<Conjunction> {
        if cur.eat(&Tok::True) {
            Ok(Conjunction::truth())
        } else if cur.eat(&Tok::False) {
            Ok(Conjunction::falsity())
        } else {
            Ok(Conjunction::new([literal(cur)?]))
        }
    };
    let mut c = item(cur)?;
    while cur.eat(&Tok::And) {
        c = c.union(&item(cur)?);
    }
    Ok(c)
}

/// Renders a clause set in the clause-file format.
pub fn to_text(cs: &ClauseSet) -> String {
    cs.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Origin;

    #[test]
    fn parses_all_three_kinds() {
        let cs = parse_clause_set(
            "# header\nstart => a | ~b\na & b => X (c | ~d)\na => F ~p\ntrue => X ~f\n",
        )
        .unwrap();
        let rendered: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            rendered,
            vec![
                "start => a | ~b",
                "a & b => X (c | ~d)",
                "a => F ~p",
                "true => X ~f"
            ]
        );
    }

    #[test]
    fn constants_on_the_right() {
        assert_eq!(
            parse_clause("f => X false").unwrap().to_string(),
            "f => X false"
        );
        assert!(parse_clause("start => false").unwrap().is_contradiction());
    }

    #[test]
    fn round_trips_through_text() {
        let src = "start => _r0\n_r0 => F p\n_w0 => X (_w0 | p)\n";
        let cs = parse_clause_set(src).unwrap();
        assert_eq!(to_text(&cs), src);
        let w = cs.universe().iter().find(|p| p.name() == "_w0").unwrap();
        assert_eq!(w.origin(), Origin::Waiting);
    }

    #[test]
    fn reports_bad_lines() {
        match parse_clause_set("start => a\na => b\n") {
            Err(Error::ClauseFile { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_clause_set("a => F (p | q)").is_err());
        assert!(parse_clause_set("start => a b").is_err());
    }

    #[test]
    fn detects_clause_files() {
        assert!(is_clause_text("start => p"));
        assert!(!is_clause_text("G p -> F p"));
    }
}
