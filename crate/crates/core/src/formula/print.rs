//! Printer producing the concrete syntax accepted by [`super::parse`], with
//! the minimum number of parentheses.

use std::fmt;

use super::Formula;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => 0,
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Until(..) | Formula::Unless(..) => 3,
        Formula::Not(_) | Formula::Next(_) | Formula::Sometime(_) | Formula::Always(_) => 4,
        Formula::True | Formula::False | Formula::Prop(_) | Formula::Start => 5,
    }
}

fn write_at(out: &mut fmt::Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        write_formula(out, f)?;
        out.write_str(")")
    } else {
        write_formula(out, f)
    }
}

fn write_formula(out: &mut fmt::Formatter<'_>, f: &Formula) -> fmt::Result {
    match f {
        Formula::True => out.write_str("true"),
        Formula::False => out.write_str("false"),
        Formula::Start => out.write_str("start"),
        Formula::Prop(p) => write!(out, "{p}"),
        Formula::Not(a) => {
            out.write_str("~")?;
            write_at(out, a, 4)
        }
        Formula::Next(a) => {
            out.write_str("X ")?;
            write_at(out, a, 4)
        }
        Formula::Sometime(a) => {
            out.write_str("F ")?;
            write_at(out, a, 4)
        }
        Formula::Always(a) => {
            out.write_str("G ")?;
            write_at(out, a, 4)
        }
        Formula::Until(a, b) | Formula::Unless(a, b) => {
            write_at(out, a, 4)?;
            out.write_str(if matches!(f, Formula::Until(..)) {
                " U "
            } else {
                " W "
            })?;
            write_at(out, b, 3)
        }
        Formula::And(a, b) => {
            write_at(out, a, 2)?;
            out.write_str(" & ")?;
            write_at(out, b, 3)
        }
        Formula::Or(a, b) => {
            write_at(out, a, 1)?;
            out.write_str(" | ")?;
            write_at(out, b, 2)
        }
        Formula::Implies(a, b) => {
            write_at(out, a, 1)?;
            out.write_str(" -> ")?;
            write_at(out, b, 0)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self)
    }
}

pub fn print(f: &Formula) -> String {
    f.to_string()
}
