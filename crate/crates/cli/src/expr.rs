//! The space expression language.
//!
//! Expressions are prefix constructors over integers, group literals, and
//! file paths:
//!
//! ```text
//! expr  := Fin(INT)                 discrete space on INT points
//!        | B(GROUP)                 classifying space
//!        | K(GROUP, INT)            Eilenberg-MacLane space, abelian for INT >= 2
//!        | Nerve(PATH)              nerve of a groupoid file
//!        | Prod(expr, expr)         product
//!        | Sum(expr, expr)          disjoint sum
//!        | Omega(expr)              loops at vertex 0
//!        | Trunc(INT, expr)         INT-truncation
//!        | Hom(expr, expr)          function complex
//!        | PointedHom(expr, expr)   basepoint preserving maps, vertices 0 and 0
//!        | Pullback(PATH, PATH)     homotopy pullback of two map files
//!        | Quotient(PATH)           homotopy quotient of an action file
//!        | Pi(PATH, PATH)           sections of a fibration file along a map file
//!        | SymUniverse(INT)         sets of size at most INT and their bijections
//! GROUP := Z/INT | S_INT | A_INT | D_INT | file(PATH)
//! ```
//!
//! Whitespace is free everywhere except inside names and paths. A path
//! runs to the next `,` or `)`, so paths containing either character
//! cannot be written; everything else, including `/`, is fine.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Fin(usize),
    Classifying(GroupLit),
    EilenbergMacLane(GroupLit, usize),
    Nerve(String),
    Prod(Box<Expr>, Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Omega(Box<Expr>),
    Trunc(usize, Box<Expr>),
    Hom(Box<Expr>, Box<Expr>),
    PointedHom(Box<Expr>, Box<Expr>),
    Pullback(String, String),
    Quotient(String),
    Sections(String, String),
    SymUniverse(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupLit {
    Cyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Dihedral(usize),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.fail(format!("unexpected `{c}` after the expression")));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    at: usize,
    line: usize,
    column: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser { chars: text.chars().collect(), at: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.at += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn fail(&self, message: String) -> SyntaxError {
        SyntaxError { line: self.line, column: self.column, message }
    }

    fn expect(&mut self, want: char) -> Result<(), SyntaxError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.fail(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.fail(format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> Result<String, SyntaxError> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            Err(match self.peek() {
                Some(c) => self.fail(format!("expected a name, found `{c}`")),
                None => self.fail("expected a name, found end of input".into()),
            })
        } else {
            Ok(s)
        }
    }

    fn number(&mut self) -> Result<usize, SyntaxError> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.bump().unwrap());
        }
        if s.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.fail(format!("expected a number, found `{c}`")),
                None => self.fail("expected a number, found end of input".into()),
            });
        }
        s.parse().map_err(|_| self.fail(format!("number `{s}` is too large")))
    }

    fn positive(&mut self) -> Result<usize, SyntaxError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let n = self.number()?;
        if n == 0 {
            return Err(SyntaxError { line, column, message: "expected a positive number".into() });
        }
        Ok(n)
    }

    fn path(&mut self) -> Result<String, SyntaxError> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.peek(), Some(c) if c != ')' && c != ',') {
            s.push(self.bump().unwrap());
        }
        let s = s.trim_end().to_string();
        if s.is_empty() {
            return Err(self.fail("expected a file path".into()));
        }
        Ok(s)
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let head = self.word()?;
        match head.as_str() {
            "Fin" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(')')?;
                Ok(Expr::Fin(n))
            }
            "B" => {
                self.expect('(')?;
                let g = self.group()?;
                self.expect(')')?;
                Ok(Expr::Classifying(g))
            }
            "K" => {
                self.expect('(')?;
                let g = self.group()?;
                self.expect(',')?;
                let n = self.positive()?;
                self.expect(')')?;
                Ok(Expr::EilenbergMacLane(g, n))
            }
            "Nerve" => {
                self.expect('(')?;
                let p = self.path()?;
                self.expect(')')?;
                Ok(Expr::Nerve(p))
            }
            "Prod" | "Sum" | "Hom" | "PointedHom" => {
                self.expect('(')?;
                let a = Box::new(self.expr()?);
                self.expect(',')?;
                let b = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(match head.as_str() {
                    "Prod" => Expr::Prod(a, b),
                    "Sum" => Expr::Sum(a, b),
                    "Hom" => Expr::Hom(a, b),
                    _ => Expr::PointedHom(a, b),
                })
            }
            "Omega" => {
                self.expect('(')?;
                let e = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(Expr::Omega(e))
            }
            "Trunc" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(',')?;
                let e = Box::new(self.expr()?);
                self.expect(')')?;
                Ok(Expr::Trunc(n, e))
            }
            "Pullback" => {
                self.expect('(')?;
                let f = self.path()?;
                self.expect(',')?;
                let g = self.path()?;
                self.expect(')')?;
                Ok(Expr::Pullback(f, g))
            }
            "Quotient" => {
                self.expect('(')?;
                let p = self.path()?;
                self.expect(')')?;
                Ok(Expr::Quotient(p))
            }
            "Pi" => {
                self.expect('(')?;
                let p = self.path()?;
                self.expect(',')?;
                let f = self.path()?;
                self.expect(')')?;
                Ok(Expr::Sections(p, f))
            }
            "SymUniverse" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(')')?;
                Ok(Expr::SymUniverse(n))
            }
            _ => Err(SyntaxError {
                line,
                column,
                message: format!("unknown constructor `{head}`"),
            }),
        }
    }

    fn group(&mut self) -> Result<GroupLit, SyntaxError> {
        self.skip_ws();
        let (line, column) = (self.line, self.column);
        let head = self.word()?;
        if head == "Z" {
            self.expect('/')?;
            return Ok(GroupLit::Cyclic(self.positive()?));
        }
        if head == "file" {
            self.expect('(')?;
            let p = self.path()?;
            self.expect(')')?;
            return Ok(GroupLit::File(p));
        }
        // S_3, A_4, D_5 tokenize as single words
        for (prefix, make) in [
            ("S_", GroupLit::Symmetric as fn(usize) -> GroupLit),
            ("A_", GroupLit::Alternating),
            ("D_", GroupLit::Dihedral),
        ] {
            if let Some(rest) = head.strip_prefix(prefix) {
                if let Ok(n) = rest.parse() {
                    if n == 0 && prefix == "D_" {
                        break;
                    }
                    return Ok(make(n));
                }
            }
        }
        Err(SyntaxError { line, column, message: format!("unknown group `{head}`") })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Fin(n) => write!(f, "Fin({n})"),
            Expr::Classifying(g) => write!(f, "B({g})"),
            Expr::EilenbergMacLane(g, n) => write!(f, "K({g}, {n})"),
            Expr::Nerve(p) => write!(f, "Nerve({p})"),
            Expr::Prod(a, b) => write!(f, "Prod({a}, {b})"),
            Expr::Sum(a, b) => write!(f, "Sum({a}, {b})"),
            Expr::Omega(e) => write!(f, "Omega({e})"),
            Expr::Trunc(n, e) => write!(f, "Trunc({n}, {e})"),
            Expr::Hom(a, b) => write!(f, "Hom({a}, {b})"),
            Expr::PointedHom(a, b) => write!(f, "PointedHom({a}, {b})"),
            Expr::Pullback(a, b) => write!(f, "Pullback({a}, {b})"),
            Expr::Quotient(p) => write!(f, "Quotient({p})"),
            Expr::Sections(p, q) => write!(f, "Pi({p}, {q})"),
            Expr::SymUniverse(n) => write!(f, "SymUniverse({n})"),
        }
    }
}

impl fmt::Display for GroupLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLit::Cyclic(n) => write!(f, "Z/{n}"),
            GroupLit::Symmetric(n) => write!(f, "S_{n}"),
            GroupLit::Alternating(n) => write!(f, "A_{n}"),
            GroupLit::Dihedral(n) => write!(f, "D_{n}"),
            GroupLit::File(p) => write!(f, "file({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrips(text: &str) {
        let e = parse(text).unwrap();
        assert_eq!(e.to_string(), text);
        assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn plain_constructors_roundtrip() {
        roundtrips("Fin(3)");
        roundtrips("B(Z/2)");
        roundtrips("K(Z/3, 2)");
        roundtrips("B(S_3)");
        roundtrips("B(A_4)");
        roundtrips("B(D_5)");
        roundtrips("B(file(my.group))");
        roundtrips("SymUniverse(2)");
        roundtrips("Nerve(fixtures/two.groupoid)");
        roundtrips("Quotient(swap.action)");
        roundtrips("Pullback(f.map, g.map)");
        roundtrips("Pi(family.map, leg.map)");
    }

    #[test]
    fn nesting_and_whitespace() {
        let e = parse("  Hom( Sum(Fin(1) , B(Z/2)) ,\n Trunc(1, Omega(K(Z/2, 2))) )  ").unwrap();
        assert_eq!(e.to_string(), "Hom(Sum(Fin(1), B(Z/2)), Trunc(1, Omega(K(Z/2, 2))))");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("Prod(Fin(2), Fan(2))").unwrap_err();
        assert_eq!((err.line, err.column), (1, 14));
        assert!(err.message.contains("Fan"));

        let err = parse("B(Z/2) trailing").unwrap_err();
        assert_eq!(err.line, 1);
        assert!(err.message.contains("after the expression"));

        let err = parse("Prod(Fin(2),\n  Fin())").unwrap_err();
        assert_eq!(err.line, 2);

        assert!(parse("").is_err());
        assert!(parse("K(Z/2, 0)").is_err());
        assert!(parse("B(Z/0)").is_err());
        assert!(parse("B(E_7)").is_err());
        assert!(parse("Fin(99999999999999999999)").is_err());
    }

    #[test]
    fn paths_stop_at_delimiters() {
        let e = parse("Pullback( maps/f v2.map , maps/g.map )").unwrap();
        assert_eq!(e, Expr::Pullback("maps/f v2.map".into(), "maps/g.map".into()));
    }
}
