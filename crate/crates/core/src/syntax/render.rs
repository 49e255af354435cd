use super::Formula;

// Binding levels, loosest first.
const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// Plain ASCII rendering with the fewest parentheses that reparse to the
/// same tree.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write(f, false, 0, &mut out);
    out
}

/// Like [`render`], but shows `¬(a → ¬b)` as `a & b` and `¬a → b` as `a | b`.
pub fn render_sugared(f: &Formula) -> String {
    let mut out = String::new();
    write(f, true, 0, &mut out);
    out
}

enum View<'a> {
    Leaf(&'a str),
    Prefix(&'static str, &'a Formula),
    Infix(&'static str, u8, &'a Formula, &'a Formula),
}

fn view(f: &Formula, sugar: bool) -> View<'_> {
    if sugar {
        if let Formula::Neg(inner) = f {
            if let Formula::Imp(a, b) = inner.as_ref() {
                if let Formula::Neg(b) = b.as_ref() {
                    return View::Infix("&", AND, a, b);
                }
            }
        }
        if let Formula::Imp(a, b) = f {
            if let Formula::Neg(a) = a.as_ref() {
                return View::Infix("|", OR, a, b);
            }
        }
    }
    match f {
        Formula::Atom(n) | Formula::Meta(n) => View::Leaf(n),
        Formula::Neg(a) => View::Prefix("~", a),
        Formula::Box(a) => View::Prefix("[]", a),
        Formula::Dia(a) => View::Prefix("<>", a),
        Formula::Imp(a, b) => View::Infix("->", IMP, a, b),
    }
}

fn level(v: &View<'_>) -> u8 {
    match v {
        View::Leaf(_) | View::Prefix(..) => UNARY,
        View::Infix(_, l, ..) => *l,
    }
}

fn write(f: &Formula, sugar: bool, min_level: u8, out: &mut String) {
    let v = view(f, sugar);
    let paren = level(&v) < min_level;
    if paren {
        out.push('(');
    }
    match v {
        View::Leaf(n) => out.push_str(n),
        View::Prefix(op, a) => {
            out.push_str(op);
            write(a, sugar, UNARY, out);
        }
        View::Infix(op, l, a, b) => {
            // `->` is right-associative, `|` and `&` are left-associative.
            let (left_min, right_min) = if l == IMP { (l + 1, l) } else { (l, l + 1) };
            write(a, sugar, left_min, out);
            out.push(' ');
            out.push_str(op);
            out.push(' ');
            write(b, sugar, right_min, out);
        }
    }
    if paren {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse;

    #[test]
    fn minimal_parentheses() {
        let p = Formula::atom("p");
        assert_eq!(render(&Formula::imp(Formula::boxed(p.clone()), p.clone())), "[]p -> p");
        assert_eq!(render(&Formula::neg(Formula::neg(p.clone()))), "~~p");
        assert_eq!(render(&parse("(p -> q) -> r").unwrap()), "(p -> q) -> r");
        assert_eq!(render(&parse("p -> (q -> r)").unwrap()), "p -> q -> r");
        assert_eq!(render(&parse("[](p -> q)").unwrap()), "[](p -> q)");
        assert_eq!(render(&parse("p | q").unwrap()), "~p -> q");
    }

    #[test]
    fn sugared_forms() {
        assert_eq!(render_sugared(&parse("p | q | r").unwrap()), "p | q | r");
        assert_eq!(render_sugared(&parse("p | (q | r)").unwrap()), "p | (q | r)");
        assert_eq!(render_sugared(&parse("p & q | r").unwrap()), "p & q | r");
        assert_eq!(render_sugared(&parse("(p | q) & r").unwrap()), "(p | q) & r");
        assert_eq!(render_sugared(&parse("[](p | q) -> r").unwrap()), "[](p | q) -> r");
    }
}
