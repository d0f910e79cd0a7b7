//! The ring-construction expression language: a small LL(1) grammar over
//! constructor calls with integer arguments, nested expressions, bracketed
//! integer grids, quoted paths, and gallery names.
//!
//! ```text
//! Zmod(8)   GF(3)   Matrix(2, GF(2))   Triangular(3, Zmod(4))
//! Product(GF(2), GF(2))   SubMatrix(3, 8, [[1,4,2],[2,1,2],[2,2,1]])
//! Example(warning2_3x3)   GenMatrixRef("spec.json")
//! ```

use crate::construct::{direct_product, matrix_ring, submatrix_ring, triangular_ring};
use crate::error::RingError;
use crate::ring::{factorize, zmod, FiniteRing, MAX_ORDER};
use std::fmt;

/// Abstract syntax of a ring construction.  `GF(p)` normalizes to `Zmod(p)`
/// after the primality check, so the AST needs no separate field case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(u64),
    Matrix(usize, Box<RingExpr>),
    Triangular(usize, Box<RingExpr>),
    Product(Vec<RingExpr>),
    SubMatrix {
        n: usize,
        modulus: u64,
        grid: Vec<Vec<u64>>,
    },
    Example(String),
    GenMatrixRef(String),
}

/// Parse diagnostic with position and the token set that would have been
/// accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at {}:{}: expected {}, found {}",
            self.line,
            self.col,
            self.expected.join(" | "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Str(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, expected: &[&str], found: String) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn next_token(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(&c) = self.chars.peek() else {
            return Ok((Tok::Eof, line, col));
        };
        let tok = match c {
            '(' => {
                self.bump();
                Tok::LParen
            }
            ')' => {
                self.bump();
                Tok::RParen
            }
            '[' => {
                self.bump();
                Tok::LBracket
            }
            ']' => {
                self.bump();
                Tok::RBracket
            }
            ',' => {
                self.bump();
                Tok::Comma
            }
            '"' => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some(c) => s.push(c),
                        None => {
                            return Err(self.error(&["closing '\"'"], "end of input".into()))
                        }
                    }
                }
                Tok::Str(s)
            }
            c if c.is_ascii_digit() => {
                let mut n: u64 = 0;
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
                    let d = self.bump().unwrap() as u64 - '0' as u64;
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d))
                        .ok_or_else(|| self.error(&["integer"], "integer overflow".into()))?;
                }
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                {
                    s.push(self.bump().unwrap());
                }
                Tok::Ident(s)
            }
            other => return Err(self.error(&["a token"], format!("character {other:?}"))),
        };
        Ok((tok, line, col))
    }
}

struct Parser {
    tokens: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize, usize) {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> (Tok, usize, usize) {
        let t = self.tokens[self.pos.min(self.tokens.len() - 1)].clone();
        if self.pos < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let (tok, line, col) = self.peek();
        Err(ParseError {
            line: *line,
            col: *col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.to_string(),
        })
    }

    fn expect(&mut self, want: Tok, name: &str) -> Result<(), ParseError> {
        if self.peek().0 == want {
            self.bump();
            Ok(())
        } else {
            self.fail(&[name])
        }
    }

    fn int(&mut self) -> Result<(u64, usize, usize), ParseError> {
        match self.peek().clone() {
            (Tok::Int(n), line, col) => {
                self.bump();
                Ok((n, line, col))
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn range_error<T>(&self, line: usize, col: usize, msg: String) -> Result<T, ParseError> {
        Err(ParseError {
            line,
            col,
            expected: vec![msg],
            found: "out-of-range value".into(),
        })
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        let (tok, _line, _col) = self.bump();
        let Tok::Ident(head) = tok else {
            self.pos -= 1;
            return self.fail(&[
                "Zmod", "GF", "Matrix", "Triangular", "Product", "SubMatrix", "Example",
                "GenMatrixRef",
            ]);
        };
        match head.as_str() {
            "Zmod" => {
                self.expect(Tok::LParen, "'('")?;
                let (m, l, c) = self.int()?;
                if m < 2 || m > MAX_ORDER {
                    return self.range_error(l, c, format!("modulus in 2..={MAX_ORDER}"));
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::Zmod(m))
            }
            "GF" => {
                self.expect(Tok::LParen, "'('")?;
                let (p, l, c) = self.int()?;
                let f = factorize(p);
                if p < 2 || f.len() != 1 || f[0].1 != 1 {
                    return self.range_error(l, c, format!("a prime (got {p})"));
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::Zmod(p))
            }
            "Matrix" | "Triangular" => {
                self.expect(Tok::LParen, "'('")?;
                let (n, l, c) = self.int()?;
                if n < 1 || n > 16 {
                    return self.range_error(l, c, "block count in 1..=16".into());
                }
                self.expect(Tok::Comma, "','")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(if head == "Matrix" {
                    RingExpr::Matrix(n as usize, Box::new(inner))
                } else {
                    RingExpr::Triangular(n as usize, Box::new(inner))
                })
            }
            "Product" => {
                self.expect(Tok::LParen, "'('")?;
                let mut factors = vec![self.expr()?];
                while self.peek().0 == Tok::Comma {
                    self.bump();
                    factors.push(self.expr()?);
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::Product(factors))
            }
            "SubMatrix" => {
                self.expect(Tok::LParen, "'('")?;
                let (n, l, c) = self.int()?;
                if n < 1 || n > 16 {
                    return self.range_error(l, c, "block count in 1..=16".into());
                }
                self.expect(Tok::Comma, "','")?;
                let (m, l, c) = self.int()?;
                if m < 2 || m > MAX_ORDER {
                    return self.range_error(l, c, format!("modulus in 2..={MAX_ORDER}"));
                }
                self.expect(Tok::Comma, "','")?;
                let grid = self.grid(n as usize)?;
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::SubMatrix {
                    n: n as usize,
                    modulus: m,
                    grid,
                })
            }
            "Example" => {
                self.expect(Tok::LParen, "'('")?;
                let name = match self.bump() {
                    (Tok::Ident(s), ..) => s,
                    _ => {
                        self.pos -= 1;
                        return self.fail(&["gallery name"]);
                    }
                };
                let full = if self.peek().0 == Tok::LParen {
                    self.bump();
                    let (arg, ..) = self.int()?;
                    self.expect(Tok::RParen, "')'")?;
                    format!("{name}({arg})")
                } else {
                    name
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::Example(full))
            }
            "GenMatrixRef" => {
                self.expect(Tok::LParen, "'('")?;
                let path = match self.bump() {
                    (Tok::Str(s), ..) => s,
                    _ => {
                        self.pos -= 1;
                        return self.fail(&["quoted path"]);
                    }
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(RingExpr::GenMatrixRef(path))
            }
            other => {
                self.pos -= 1;
                let _ = other;
                self.fail(&[
                    "Zmod", "GF", "Matrix", "Triangular", "Product", "SubMatrix", "Example",
                    "GenMatrixRef",
                ])
            }
        }
    }

    fn grid(&mut self, n: usize) -> Result<Vec<Vec<u64>>, ParseError> {
        self.expect(Tok::LBracket, "'['")?;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBracket, "'['")?;
            let mut row = Vec::new();
            loop {
                let (v, ..) = self.int()?;
                row.push(v);
                if self.peek().0 == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
            self.expect(Tok::RBracket, "']'")?;
            rows.push(row);
            if self.peek().0 == Tok::Comma {
                self.bump();
            } else {
                break;
            }
        }
        self.expect(Tok::RBracket, "']'")?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return self.fail(&[&format!("{n}×{n} grid")]);
        }
        Ok(rows)
    }
}

/// Parses an expression, consuming the whole input.
pub fn parse_expr(text: &str) -> Result<RingExpr, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    loop {
        let t = lexer.next_token()?;
        let done = t.0 == Tok::Eof;
        tokens.push(t);
        if done {
            break;
        }
    }
    let mut parser = Parser { tokens, pos: 0 };
    let e = parser.expr()?;
    if parser.peek().0 != Tok::Eof {
        return parser.fail(&["end of input"]);
    }
    Ok(e)
}

/// Canonical printer; `parse_expr(print(e))` reparses to an equal AST.
pub fn print_expr(e: &RingExpr) -> String {
    match e {
        RingExpr::Zmod(m) => format!("Zmod({m})"),
        RingExpr::Matrix(n, inner) => format!("Matrix({n}, {})", print_expr(inner)),
        RingExpr::Triangular(n, inner) => format!("Triangular({n}, {})", print_expr(inner)),
        RingExpr::Product(factors) => format!(
            "Product({})",
            factors.iter().map(print_expr).collect::<Vec<_>>().join(", ")
        ),
        RingExpr::SubMatrix { n, modulus, grid } => format!(
            "SubMatrix({n}, {modulus}, [{}])",
            grid.iter()
                .map(|row| format!(
                    "[{}]",
                    row.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                ))
                .collect::<Vec<_>>()
                .join(",")
        ),
        RingExpr::Example(name) => format!("Example({name})"),
        RingExpr::GenMatrixRef(path) => format!("GenMatrixRef({path:?})"),
    }
}

/// Builds the ring an expression denotes.  `GenMatrixRef` paths resolve
/// relative to the process working directory.
pub fn build(e: &RingExpr) -> Result<FiniteRing, RingError> {
    match e {
        RingExpr::Zmod(m) => Ok(zmod(*m)),
        RingExpr::Matrix(n, inner) => matrix_ring(*n, &build(inner)?),
        RingExpr::Triangular(n, inner) => triangular_ring(*n, &build(inner)?),
        RingExpr::Product(factors) => {
            let parts: Result<Vec<FiniteRing>, RingError> = factors.iter().map(build).collect();
            direct_product(&parts?)
        }
        RingExpr::SubMatrix { n, modulus, grid } => submatrix_ring(*n, *modulus, grid),
        RingExpr::Example(name) => Ok(crate::gallery::gallery(name)?.ring),
        RingExpr::GenMatrixRef(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| RingError::Structure(format!("cannot read {path}: {e}")))?;
            let spec = crate::io::parse_gen_matrix_spec(&text)?;
            crate::construct::gen_matrix(&spec)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_forms() {
        assert_eq!(
            parse_expr("Triangular(2, GF(2))").unwrap(),
            RingExpr::Triangular(2, Box::new(RingExpr::Zmod(2)))
        );
        assert_eq!(
            parse_expr("SubMatrix(3, 8, [[1,4,2],[2,1,2],[2,2,1]])").unwrap(),
            RingExpr::SubMatrix {
                n: 3,
                modulus: 8,
                grid: vec![vec![1, 4, 2], vec![2, 1, 2], vec![2, 2, 1]],
            }
        );
        assert_eq!(
            parse_expr("Example(t2_field(3))").unwrap(),
            RingExpr::Example("t2_field(3)".into())
        );
        assert_eq!(
            parse_expr("GenMatrixRef(\"spec.json\")").unwrap(),
            RingExpr::GenMatrixRef("spec.json".into())
        );
    }

    #[test]
    fn range_errors_have_positions() {
        let err = parse_expr("Matrix(0, GF(2))").unwrap_err();
        assert_eq!((err.line, err.col), (1, 8));

        let err = parse_expr("GF(6)").unwrap_err();
        assert!(err.expected[0].contains("prime"));

        let err = parse_expr("Zmod(1)").unwrap_err();
        assert!(err.expected[0].contains("modulus"));
    }

    #[test]
    fn diagnostics_name_expected_tokens() {
        let err = parse_expr("Matrix(2 GF(2))").unwrap_err();
        assert!(err.expected.contains(&"','".to_string()));
        let err = parse_expr("Bogus(2)").unwrap_err();
        assert!(err.expected.iter().any(|s| s == "Zmod"));
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "Zmod(8)",
            "Matrix(2, Zmod(2))",
            "Product(Zmod(2), Zmod(3), Triangular(2, Zmod(2)))",
            "SubMatrix(2, 4, [[1,1],[2,1]])",
            "Example(warning2_3x3)",
            "Example(m2_field(5))",
            "GenMatrixRef(\"x/y.json\")",
        ] {
            let ast = parse_expr(text).unwrap();
            let printed = print_expr(&ast);
            assert_eq!(parse_expr(&printed).unwrap(), ast, "round trip for {text}");
        }
    }

    #[test]
    fn gf_normalizes_to_zmod() {
        let a = parse_expr("GF(5)").unwrap();
        let b = parse_expr("Zmod(5)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn builds_rings() {
        let r = build(&parse_expr("Matrix(2, GF(2))").unwrap()).unwrap();
        assert_eq!(r.size(), 16);
        let r = build(&parse_expr("Product(Zmod(2), Zmod(2))").unwrap()).unwrap();
        assert_eq!(r.size(), 4);
    }
}
