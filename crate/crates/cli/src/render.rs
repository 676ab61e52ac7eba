//! Text renderings of derivation trees.

use std::fmt::Write;

use decvar_core::formula::{render_classical, render_sequent, Style};
use decvar_core::g3cp::ClassicalProof;
use decvar_core::g3ip::IntProof;

/// A rendering-only view of a node.
struct View {
    sequent: String,
    rule: &'static str,
    premises: Vec<View>,
}

fn int_view(p: &IntProof, style: Style) -> View {
    View {
        sequent: render_sequent(&p.conclusion, style),
        rule: p.rule.name(),
        premises: p.premises.iter().map(|q| int_view(q, style)).collect(),
    }
}

fn classical_view(p: &ClassicalProof, style: Style) -> View {
    View {
        sequent: render_classical(&p.conclusion, style),
        rule: p.rule.name(),
        premises: p.premises.iter().map(|q| classical_view(q, style)).collect(),
    }
}

fn ascii(v: &View, depth: usize, out: &mut String) {
    let _ = writeln!(out, "{:indent$}{}   [{}]", "", v.sequent, v.rule, indent = 2 * depth);
    for q in &v.premises {
        ascii(q, depth + 1, out);
    }
}

fn latex_rule(rule: &str) -> String {
    match rule.strip_prefix('L').or_else(|| rule.strip_prefix('R')) {
        Some(rest) if !rest.is_empty() && rule != "LW" && rule != "LC" => {
            let conn = match rest.trim_end_matches(['1', '2']) {
                "And" => r"\land",
                "Or" => r"\lor",
                "Imp" => r"\to",
                "Bot" => r"\bot",
                _ => return format!(r"\mathrm{{{rule}}}"),
            };
            let side = &rule[..1];
            let idx = rest.trim_start_matches(char::is_alphabetic);
            if idx.is_empty() {
                format!(r"{side}{{{conn}}}")
            } else {
                format!(r"{side}{{{conn}}}_{{{idx}}}")
            }
        }
        _ => format!(r"\mathrm{{{rule}}}"),
    }
}

fn latex(v: &View, out: &mut String) {
    for q in &v.premises {
        latex(q, out);
    }
    let infer = match v.premises.len() {
        0 => {
            out.push_str("  \\AxiomC{}\n");
            "UnaryInfC"
        }
        1 => "UnaryInfC",
        2 => "BinaryInfC",
        _ => "TrinaryInfC",
    };
    let _ = writeln!(out, "  \\RightLabel{{\\scriptsize ${}$}}", latex_rule(v.rule));
    let _ = writeln!(out, "  \\{infer}{{${}$}}", v.sequent);
}

fn finish(v: &View, style: Style) -> String {
    let mut out = String::new();
    match style {
        Style::Ascii => ascii(v, 0, &mut out),
        Style::Latex => {
            out.push_str("\\begin{prooftree}\n");
            latex(v, &mut out);
            out.push_str("\\end{prooftree}\n");
        }
    }
    out
}

/// One line per node, premises indented under their conclusion.
pub fn int_tree(p: &IntProof, style: Style) -> String {
    finish(&int_view(p, style), style)
}

pub fn classical_tree(p: &ClassicalProof, style: Style) -> String {
    finish(&classical_view(p, style), style)
}

#[cfg(test)]
mod tests {
    use super::*;
    use decvar_core::formula::{parse_classical_sequent, parse_int_sequent};
    use decvar_core::g3cp::search_c;
    use decvar_core::g3ip::search_i;

    #[test]
    fn ascii_outline() {
        let p = search_i(&parse_int_sequent("p & q => q & p").unwrap()).unwrap();
        let text = int_tree(&p, Style::Ascii);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p & q => q & p   [LAnd]");
        assert_eq!(lines[1], "  p, q => q & p   [RAnd]");
        assert_eq!(lines.len(), p.size());
    }

    #[test]
    fn latex_tree() {
        let p = search_c(&parse_classical_sequent("p => p | q").unwrap()).proof().unwrap();
        let text = classical_tree(&p, Style::Latex);
        assert!(text.starts_with("\\begin{prooftree}\n"));
        assert!(text.ends_with("\\end{prooftree}\n"));
        assert_eq!(text.matches("InfC").count(), p.size());
        assert!(text.contains(r"R{\lor}"));
        assert!(text.contains(r"\Rightarrow"));
    }

    #[test]
    fn rule_labels() {
        assert_eq!(latex_rule("LImp"), r"L{\to}");
        assert_eq!(latex_rule("ROr2"), r"R{\lor}_{2}");
        assert_eq!(latex_rule("LBot"), r"L{\bot}");
        assert_eq!(latex_rule("Ax"), r"\mathrm{Ax}");
        assert_eq!(latex_rule("LW"), r"\mathrm{LW}");
        assert_eq!(latex_rule("Cut"), r"\mathrm{Cut}");
    }
}
