use super::{Formula, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Not,
    Box,
    Dia,
    Circ,
    Bullet,
    CircT,
    Imp,
    Or,
    And,
    LParen,
    RParen,
    Atom(String),
    Meta(String),
    End,
}

const START: &[&str] = &[
    "atom",
    "metavariable",
    "\"(\"",
    "\"~\"",
    "\"[]\"",
    "\"<>\"",
    "\"circ\"",
    "\"bullet\"",
    "\"circt\"",
];

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let rest = &text[i..];
        let fixed: &[(&str, Tok)] = &[
            ("->", Tok::Imp),
            ("[]", Tok::Box),
            ("<>", Tok::Dia),
            ("∘'", Tok::CircT),
            ("∘′", Tok::CircT),
            ("~", Tok::Not),
            ("¬", Tok::Not),
            ("□", Tok::Box),
            ("◇", Tok::Dia),
            ("◊", Tok::Dia),
            ("→", Tok::Imp),
            ("|", Tok::Or),
            ("∨", Tok::Or),
            ("&", Tok::And),
            ("∧", Tok::And),
            ("∘", Tok::Circ),
            ("•", Tok::Bullet),
            ("(", Tok::LParen),
            (")", Tok::RParen),
        ];
        if let Some((sym, tok)) = fixed.iter().find(|(sym, _)| rest.starts_with(sym)) {
            out.push((tok.clone(), i));
            for _ in 0..sym.chars().count() {
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            let word = &rest[..len];
            let tok = match word {
                "circ" => Tok::Circ,
                "bullet" => Tok::Bullet,
                "circt" => Tok::CircT,
                _ if c.is_ascii_uppercase() => Tok::Meta(word.to_string()),
                _ => Tok::Atom(word.to_string()),
            };
            out.push((tok, i));
            while chars.peek().is_some_and(|&(j, _)| j < i + len) {
                chars.next();
            }
            continue;
        }
        return Err(SyntaxError::Unexpected {
            offset: i,
            expected: START.to_vec(),
        });
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        SyntaxError::Unexpected {
            offset: self.offset(),
            expected: expected.to_vec(),
        }
    }

    fn imp(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let right = self.imp()?;
            return Ok(Formula::imp(left, right));
        }
        Ok(left)
    }

    fn or(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.and()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula, SyntaxError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, SyntaxError> {
        let wrap: fn(Formula) -> Formula = match self.peek() {
            Tok::Not => Formula::neg,
            Tok::Box => Formula::boxed,
            Tok::Dia => Formula::dia,
            Tok::Circ => Formula::circ,
            Tok::Bullet => Formula::bullet,
            Tok::CircT => Formula::circ_prime,
            Tok::Atom(_) | Tok::Meta(_) => {
                return Ok(match self.bump() {
                    Tok::Atom(name) => Formula::atom(&name),
                    Tok::Meta(name) => Formula::meta(&name),
                    _ => unreachable!(),
                });
            }
            Tok::LParen => {
                self.bump();
                let inner = self.imp()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["\"->\"", "\"|\"", "\"&\"", "\")\""]));
                }
                self.bump();
                return Ok(inner);
            }
            _ => return Err(self.error(START)),
        };
        self.bump();
        Ok(wrap(self.unary()?))
    }
}

/// Parses a formula, expanding `|`, `&`, `circ`, `bullet` and `circt`.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = parser.imp()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(&["\"->\"", "\"|\"", "\"&\"", "end of input"]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Formula {
        Formula::atom(n)
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("[]p -> <>p").unwrap(),
            Formula::imp(Formula::boxed(a("p")), Formula::dia(a("p")))
        );
        assert_eq!(parse("p | q").unwrap(), Formula::imp(Formula::neg(a("p")), a("q")));
        assert_eq!(
            parse("circ p").unwrap(),
            Formula::imp(Formula::boxed(a("p")), Formula::dia(a("p")))
        );
    }

    #[test]
    fn macros() {
        assert_eq!(
            parse("p & q").unwrap(),
            Formula::neg(Formula::imp(a("p"), Formula::neg(a("q"))))
        );
        assert_eq!(parse("bullet p").unwrap(), parse("~([]p -> <>p)").unwrap());
        assert_eq!(
            parse("circt p").unwrap(),
            parse("~(([]p -> p) -> ~([]~p -> ~p))").unwrap()
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(parse("p -> q -> r").unwrap(), parse("p -> (q -> r)").unwrap());
        assert_eq!(parse("p | q | r").unwrap(), parse("(p | q) | r").unwrap());
        assert_eq!(parse("p & q | r").unwrap(), parse("(p & q) | r").unwrap());
        assert_eq!(parse("p | q & r -> s").unwrap(), parse("(p | (q & r)) -> s").unwrap());
        assert_eq!(parse("~[]p -> q").unwrap(), parse("(~([]p)) -> q").unwrap());
    }

    #[test]
    fn unicode_aliases() {
        assert_eq!(parse("□(p → q) → (◇p ∨ ¬q)").unwrap(), parse("[](p -> q) -> (<>p | ~q)").unwrap());
        assert_eq!(parse("∘p ∧ •q").unwrap(), parse("circ p & bullet q").unwrap());
        assert_eq!(parse("∘'p").unwrap(), parse("circt p").unwrap());
    }

    #[test]
    fn metavariables_and_indexed_atoms() {
        assert_eq!(parse("A -> p1").unwrap(), Formula::imp(Formula::meta("A"), a("p1")));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse("p -> ").unwrap_err();
        assert_eq!(e.offset(), Some(5));
        let e = parse("(p -> q").unwrap_err();
        assert_eq!(e.offset(), Some(7));
        match parse("p q").unwrap_err() {
            SyntaxError::Unexpected { offset, expected } => {
                assert_eq!(offset, 2);
                assert!(expected.contains(&"end of input"));
            }
            other => panic!("{other}"),
        }
        assert_eq!(parse("p $ q").unwrap_err().offset(), Some(2));
        assert_eq!(parse("").unwrap_err().offset(), Some(0));
    }
}
