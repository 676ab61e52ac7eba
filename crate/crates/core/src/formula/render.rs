use super::{ClassicalSequent, Formula, IntSequent, Multiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Ascii,
    Latex,
}

// Binding strength, loosest first.
const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

struct Tokens {
    bot: &'static str,
    star: &'static str,
    not: &'static str,
    not_star: Option<&'static str>,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
}

const ASCII: Tokens = Tokens {
    bot: "bot",
    star: "*",
    not: "~",
    not_star: None,
    and: " & ",
    or: " | ",
    imp: " -> ",
};

const LATEX: Tokens = Tokens {
    bot: "\\bot",
    star: "\\ast",
    not: "\\lnot ",
    not_star: Some("\\lnot_{\\ast} "),
    and: " \\land ",
    or: " \\lor ",
    imp: " \\to ",
};

fn go(f: &Formula, ctx: u8, t: &Tokens, out: &mut String) {
    let wrap = |prec: u8, out: &mut String, body: &dyn Fn(&mut String)| {
        if prec < ctx {
            out.push('(');
            body(out);
            out.push(')');
        } else {
            body(out);
        }
    };
    match f {
        Formula::Atom(p) => out.push_str(p),
        Formula::Star => out.push_str(t.star),
        Formula::Bot => out.push_str(t.bot),
        Formula::Imp(a, b) if **b == Formula::Bot => {
            out.push_str(t.not);
            go(a, UNARY, t, out);
        }
        Formula::Imp(a, b) if **b == Formula::Star && t.not_star.is_some() => {
            out.push_str(t.not_star.unwrap());
            go(a, UNARY, t, out);
        }
        Formula::Imp(a, b) => wrap(IMP, out, &|out| {
            go(a, OR, t, out);
            out.push_str(t.imp);
            go(b, IMP, t, out);
        }),
        Formula::Or(a, b) => wrap(OR, out, &|out| {
            go(a, OR, t, out);
            out.push_str(t.or);
            go(b, AND, t, out);
        }),
        Formula::And(a, b) => wrap(AND, out, &|out| {
            go(a, AND, t, out);
            out.push_str(t.and);
            go(b, UNARY, t, out);
        }),
    }
}

/// Prints a formula with minimal parentheses. In ASCII style the output
/// parses back to the same formula.
pub fn render(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    let t = match style {
        Style::Ascii => &ASCII,
        Style::Latex => &LATEX,
    };
    go(f, IMP, t, &mut out);
    out
}

fn list(m: &Multiset, style: Style) -> String {
    let mut v: Vec<String> = m.iter().map(|f| render(f, style)).collect();
    v.sort();
    v.join(", ")
}

fn arrow(style: Style) -> &'static str {
    match style {
        Style::Ascii => "=>",
        Style::Latex => "\\Rightarrow",
    }
}

fn join(ante: String, succ: String, style: Style) -> String {
    match (ante.is_empty(), succ.is_empty()) {
        (true, true) => arrow(style).to_string(),
        (true, false) => format!("{} {succ}", arrow(style)),
        (false, true) => format!("{ante} {}", arrow(style)),
        (false, false) => format!("{ante} {} {succ}", arrow(style)),
    }
}

pub fn render_sequent(s: &IntSequent, style: Style) -> String {
    join(list(&s.ante, style), render(&s.succ, style), style)
}

pub fn render_classical(s: &ClassicalSequent, style: Style) -> String {
    join(list(&s.ante, style), list(&s.succ, style), style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, Parser};
    use proptest::prelude::*;

    fn p() -> Formula {
        Formula::atom("p")
    }
    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn examples() {
        let f = Formula::imp(Formula::imp(p(), q()), p());
        assert_eq!(render(&f, Style::Ascii), "(p -> q) -> p");
        assert_eq!(render(&Formula::not(p()), Style::Ascii), "~p");
        assert_eq!(render(&Formula::excluded_middle(p()), Style::Ascii), "p | ~p");
        assert_eq!(
            render(&Formula::not(Formula::and(p(), q())), Style::Ascii),
            "~(p & q)"
        );
        assert_eq!(
            render(&Formula::not_star(Formula::not(p())), Style::Ascii),
            "~p -> *"
        );
        assert_eq!(
            render(&Formula::not_star(Formula::not(p())), Style::Latex),
            "\\lnot_{\\ast} \\lnot p"
        );
        assert_eq!(
            render(&Formula::and(p(), Formula::and(q(), p())), Style::Ascii),
            "p & (q & p)"
        );
    }

    #[test]
    fn sequent_rendering_is_sorted() {
        let s = IntSequent::new(vec![q(), p()], p());
        assert_eq!(render_sequent(&s, Style::Ascii), "p, q => p");
        let s = IntSequent::new(Multiset::new(), p());
        assert_eq!(render_sequent(&s, Style::Ascii), "=> p");
        assert_eq!(render_sequent(&s, Style::Latex), "\\Rightarrow p");
    }

    pub(crate) fn arb_formula(star: bool) -> impl Strategy<Value = Formula> {
        let leaf = if star {
            prop_oneof![
                Just(Formula::atom("p")),
                Just(Formula::atom("q")),
                Just(Formula::atom("r1")),
                Just(Formula::Bot),
                Just(Formula::Star),
            ]
            .boxed()
        } else {
            prop_oneof![
                Just(Formula::atom("p")),
                Just(Formula::atom("q")),
                Just(Formula::atom("r1")),
                Just(Formula::Bot),
            ]
            .boxed()
        };
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn ascii_round_trip(f in arb_formula(false)) {
            prop_assert_eq!(parse_formula(&render(&f, Style::Ascii)).unwrap(), f);
        }

        #[test]
        fn ascii_round_trip_with_star(f in arb_formula(true)) {
            let text = render(&f, Style::Ascii);
            prop_assert_eq!(Parser::new(&text).unwrap().allow_star().formula().unwrap(), f);
        }

        #[test]
        fn subst_star_laws(f in arb_formula(true), c in arb_formula(false)) {
            prop_assert_eq!(f.subst_star(&Formula::Star), f.clone());
            let g = f.subst_star(&c);
            prop_assert!(!g.contains_star());
            if !f.contains_star() {
                prop_assert_eq!(g.clone(), f.clone());
            }
            match (&f, &g) {
                (Formula::And(a, b), Formula::And(x, y))
                | (Formula::Or(a, b), Formula::Or(x, y))
                | (Formula::Imp(a, b), Formula::Imp(x, y)) => {
                    prop_assert_eq!(&a.subst_star(&c), &**x);
                    prop_assert_eq!(&b.subst_star(&c), &**y);
                }
                (Formula::Star, _) => prop_assert_eq!(g, c),
                _ => prop_assert_eq!(g, f),
            }
        }
    }
}
