//! Argument handling and the subcommands.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use decvar_core::formula::{parse, render, render_sequent, Parsed, Parser, Style};
use decvar_core::g3cp::{check_c, search_c, SearchOutcome};
use decvar_core::g3ip::{check_i, decide_i, eliminate_structural, search_i, IntProof};
use decvar_core::lemmas::{build_lemma, LemmaId};
use decvar_core::polarity::{em_set_general, pi, polarity, polarity_multiset, PolarityReport, VarSet};
use decvar_core::translate::{prop_target, translate_prop, translate_theorem, Partition, PartitionTag};
use decvar_core::{ClassicalSequent, Formula, IntSequent, Multiset};
use serde_json::{json, Value};

use crate::batch::run_batch;
use crate::json::{classical_to_json, int_to_json, parse_proof, AnyProof};
use crate::render::{classical_tree, int_tree};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Tags {
    Gamma,
    Delta,
}

#[derive(ClapParser, Debug)]
#[command(name = "decvar", version, about = "Classical sequents, polarity sets and translated intuitionistic proofs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Polarity sets of a formula, or of both sides of a sequent.
    Polarity { input: String },
    /// Decide a classical sequent.
    ProveC {
        sequent: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Decide an intuitionistic sequent.
    ProveI {
        sequent: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// The excluded middle set V and its instances.
    EmSet { sequent: String },
    /// Translate a classical derivation into an intuitionistic one.
    Translate {
        sequent: String,
        /// Print the derivation with its LW, LC and Cut nodes.
        #[arg(long)]
        keep_structural: bool,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Which part the antecedent goes to. `delta` prints the `*`-form.
        #[arg(long, value_enum, default_value_t = Tags::Gamma)]
        tags: Tags,
    },
    /// Check a proof in JSON form; `-` reads standard input.
    Check {
        file: String,
        #[arg(long)]
        allow_structural: bool,
    },
    /// Build one of the nine fixed lemma derivations.
    Lemma {
        id: u8,
        /// Comma-separated formulas; `*` is allowed.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Run the whole pipeline over all small sequents.
    Batch {
        #[arg(long, default_value = "p,q", value_delimiter = ',')]
        atoms: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_weight: usize,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Outcome {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

fn line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn style(f: Format) -> Style {
    match f {
        Format::Latex => Style::Latex,
        _ => Style::Ascii,
    }
}

fn text(f: &Formula) -> String {
    render(f, Style::Ascii)
}

fn vars(v: &VarSet) -> Value {
    json!(v.to_vec())
}

fn pi_json(v: &VarSet) -> Value {
    json!(pi(v).iter().map(text).collect::<Vec<_>>())
}

fn report_json(r: &PolarityReport) -> Value {
    json!({ "vpos": vars(&r.vpos), "vneg": vars(&r.vneg), "vpos_ns": vars(&r.vpos_ns) })
}

fn classical(input: &str) -> Result<ClassicalSequent, Outcome> {
    decvar_core::formula::parse_classical_sequent(input)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("parse error: {e}")))
}

fn single(s: &ClassicalSequent) -> Result<Formula, Outcome> {
    match s.succ.as_slice() {
        [a] => Ok(a.clone()),
        other => Err(Outcome::fail(
            EXIT_USAGE,
            format!("expected exactly one succedent formula, got {}", other.len()),
        )),
    }
}

fn proof_out(p: &IntProof, format: Format, header: Value) -> String {
    match format {
        Format::Json => {
            let mut doc = header;
            doc["proof"] = serde_json::to_value(int_to_json(p)).expect("serializable");
            line(doc)
        }
        f => int_tree(p, style(f)),
    }
}

fn cmd_polarity(input: &str) -> Outcome {
    match parse(input) {
        Err(e) => Outcome::fail(EXIT_USAGE, format!("parse error: {e}")),
        Ok(Parsed::Formula(f)) => Outcome::ok(line(report_json(&polarity(&f)))),
        Ok(Parsed::Sequent(s)) => {
            let v = em_set_general(&s.ante, &Multiset::new(), &s.succ);
            Outcome::ok(line(json!({
                "antecedent": report_json(&polarity_multiset(&s.ante)),
                "succedent": report_json(&polarity_multiset(&s.succ)),
                "V": vars(&v),
                "Pi": pi_json(&v),
            })))
        }
    }
}

fn cmd_prove_c(input: &str, format: Format) -> Outcome {
    let s = match classical(input) {
        Ok(s) => s,
        Err(o) => return o,
    };
    match search_c(&s) {
        SearchOutcome::Proof(p) => {
            if let Err(e) = check_c(&p) {
                return Outcome::fail(EXIT_INTERNAL, format!("internal: classical proof fails its check: {e}"));
            }
            Outcome::ok(match format {
                Format::Json => line(json!({ "valid": true, "proof": classical_to_json(&p) })),
                f => classical_tree(&p, style(f)),
            })
        }
        SearchOutcome::Countermodel(v) => Outcome {
            code: EXIT_INVALID,
            stdout: match format {
                Format::Json => line(json!({ "valid": false, "countermodel": v })),
                _ => {
                    let vals: Vec<String> = v.iter().map(|(k, b)| format!("{k}={}", u8::from(*b))).collect();
                    format!("countermodel: {}\n", vals.join(" "))
                }
            },
            stderr: "not classically valid\n".into(),
        },
    }
}

fn cmd_prove_i(input: &str, format: Format) -> Outcome {
    let s: IntSequent = match decvar_core::formula::parse_int_sequent(input) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("parse error: {e}")),
    };
    if !decide_i(&s) {
        return Outcome {
            code: EXIT_INVALID,
            stdout: match format {
                Format::Json => line(json!({ "provable": false })),
                _ => "not intuitionistically provable\n".into(),
            },
            stderr: "not intuitionistically provable\n".into(),
        };
    }
    match search_i(&s) {
        Some(p) if check_i(&p, false).is_ok() => {
            Outcome::ok(proof_out(&p, format, json!({ "provable": true })))
        }
        _ => Outcome::fail(EXIT_INTERNAL, "internal: the two intuitionistic procedures disagree"),
    }
}

fn cmd_em_set(input: &str) -> Outcome {
    let s = match classical(input) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let v = em_set_general(&s.ante, &Multiset::new(), &s.succ);
    Outcome::ok(line(json!({ "V": vars(&v), "Pi": pi_json(&v) })))
}

fn cmd_translate(input: &str, keep: bool, format: Format, tags: Tags) -> Outcome {
    let s = match classical(input) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let a = match single(&s) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let cp = match search_c(&s) {
        SearchOutcome::Proof(cp) => cp,
        SearchOutcome::Countermodel(_) => return Outcome::fail(EXIT_INVALID, "not classically valid"),
    };
    let (v, proof, pure) = match tags {
        Tags::Gamma => match translate_theorem(&cp) {
            Ok(r) => (r.v, r.proof, r.pure_proof),
            Err(e) => return Outcome::fail(EXIT_INTERNAL, format!("internal: {e}")),
        },
        Tags::Delta => {
            let part = Partition::uniform(&s.ante, PartitionTag::DeltaPart);
            let v = em_set_general(&part.gamma, &part.delta, &s.succ);
            match translate_prop(&cp, &part, &v) {
                Ok(p) => {
                    let pure = eliminate_structural(&p);
                    (v, p, pure)
                }
                Err(e) => return Outcome::fail(EXIT_INTERNAL, format!("internal: {e}")),
            }
        }
    };
    let expected = match tags {
        Tags::Gamma => IntSequent::new(decvar_core::polarity::pi_multiset(&v).sum(&s.ante), a),
        Tags::Delta => prop_target(&s, &Partition::uniform(&s.ante, PartitionTag::DeltaPart), &v),
    };
    for (p, structural) in [(&proof, true), (&pure, false)] {
        if p.conclusion != expected {
            return Outcome::fail(EXIT_INTERNAL, format!("internal: wrong conclusion {}", p.conclusion));
        }
        if let Err(e) = check_i(p, structural) {
            return Outcome::fail(EXIT_INTERNAL, format!("internal: produced proof fails its check: {e}"));
        }
    }
    let shown = if keep { &proof } else { &pure };
    let header = json!({ "V": vars(&v), "Pi": pi_json(&v), "conclusion": render_sequent(&expected, Style::Ascii) });
    Outcome::ok(match format {
        Format::Json => proof_out(shown, format, header),
        f => format!("V = {{{}}}\n{}", v.to_vec().join(", "), proof_out(shown, f, header)),
    })
}

fn cmd_check(file: &str, allow_structural: bool, stdin: &mut dyn Read) -> Outcome {
    let mut text = String::new();
    let read = if file == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(file).map(|t| text = t)
    };
    if let Err(e) = read {
        return Outcome::fail(EXIT_USAGE, format!("cannot read {file}: {e}"));
    }
    let (result, conclusion) = match parse_proof(&text) {
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
        Ok(AnyProof::Classical(p)) => (check_c(&p), p.conclusion.to_string()),
        Ok(AnyProof::Int(p)) => (check_i(&p, allow_structural), p.conclusion.to_string()),
    };
    match result {
        Ok(()) => Outcome::ok(format!("ok: {conclusion}\n")),
        Err(e) => Outcome::fail(EXIT_USAGE, format!("check failed {e}")),
    }
}

fn cmd_lemma(id: u8, params: &str) -> Outcome {
    let mut fs = Vec::new();
    for part in params.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match Parser::new(part).and_then(|p| p.allow_star().formula()) {
            Ok(f) => fs.push(f),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("parse error in `{part}`: {e}")),
        }
    }
    let lemma = match LemmaId::from_params(id, fs) {
        Ok(l) => l,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    let p = build_lemma(&lemma);
    if p.conclusion != lemma.statement() || check_i(&p, false).is_err() {
        return Outcome::fail(EXIT_INTERNAL, "internal: lemma derivation fails its check");
    }
    Outcome::ok(line(json!({
        "lemma": id,
        "statement": render_sequent(&p.conclusion, Style::Ascii),
        "proof": int_to_json(&p),
    })))
}

fn cmd_batch(atoms: &[String], max_weight: usize) -> Outcome {
    let names: Vec<&str> = atoms.iter().map(String::as_str).collect();
    let rows = match run_batch(&names, max_weight) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    let mut out = Outcome::default();
    let (mut total, mut valid, mut bad) = (0usize, 0usize, 0usize);
    for row in rows {
        total += 1;
        valid += usize::from(row.valid);
        if !row.is_ok() {
            bad += 1;
        }
        out.stdout.push_str(&line(serde_json::to_value(&row).expect("serializable")));
    }
    out.stderr = format!("{total} sequents, {valid} classically valid, {bad} failures\n");
    if bad > 0 {
        out.code = EXIT_INTERNAL;
    }
    out
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome::fail(code, rendered)
            };
        }
    };
    match cli.cmd {
        Cmd::Polarity { input } => cmd_polarity(&input),
        Cmd::ProveC { sequent, format } => cmd_prove_c(&sequent, format),
        Cmd::ProveI { sequent, format } => cmd_prove_i(&sequent, format),
        Cmd::EmSet { sequent } => cmd_em_set(&sequent),
        Cmd::Translate { sequent, keep_structural, format, tags } => {
            cmd_translate(&sequent, keep_structural, format, tags)
        }
        Cmd::Check { file, allow_structural } => cmd_check(&file, allow_structural, stdin),
        Cmd::Lemma { id, params } => cmd_lemma(id, &params),
        Cmd::Batch { atoms, max_weight } => cmd_batch(&atoms, max_weight),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        let mut argv = vec!["decvar"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn em_set_line() {
        let o = call(&["em-set", "(p->q)->p => p"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "{\"V\":[\"p\"],\"Pi\":[\"p | ~p\"]}\n");
    }

    #[test]
    fn not_valid_is_exit_2() {
        let o = call(&["translate", "p -> q => q"]);
        assert_eq!(o.code, EXIT_INVALID);
        assert_eq!(o.stderr, "not classically valid\n");
        assert!(o.stdout.is_empty());
    }

    #[test]
    fn failures_end_with_newline() {
        let o = Outcome::fail(EXIT_USAGE, "bad");
        assert_eq!(o.stderr, "bad\n");
        assert_eq!(Outcome::fail(EXIT_USAGE, "bad\n").stderr, "bad\n");
    }

    #[test]
    fn json_lines_are_compact() {
        assert_eq!(line(json!({"a": [1, 2]})), "{\"a\":[1,2]}\n");
    }
}
