//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use decvar::enumerate::enumerate;
use decvar_core::formula::{parse_classical_sequent, parse_formula, parse_int_sequent};
use decvar_core::g3cp::{search_c, taut_oracle, SearchOutcome};
use decvar_core::g3ip::{check_i, cut, decide_i, eliminate_structural, lc, lw, search_i, IntProof};
use decvar_core::lemmas::{build_lemma, subst_star_proof, LemmaId};
use decvar_core::polarity::{em_set, polarity, VarSet};
use decvar_core::translate::{
    corollary_check, translate_prop, translate_sequent, translate_theorem, CorollaryOutcome, Partition,
    PartitionTag,
};
use decvar_core::{ClassicalSequent, Formula, IntSequent, Multiset};

struct Verdict {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict { ok: false, detail: detail.into() }
}

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn vars(names: &[&str]) -> VarSet {
    let mut v = VarSet::new();
    for n in names {
        v.insert(n);
    }
    v
}

fn ns(a: Formula) -> Formula {
    Formula::imp(a, Formula::Star)
}

fn nsn(a: Formula) -> Formula {
    ns(Formula::imp(a, Formula::Bot))
}

fn nn(a: Formula) -> Formula {
    ns(ns(a))
}

/// A random formula of weight at most `budget` (at least 1).
fn random_formula(rng: &mut StdRng, budget: usize, atoms: &[&str], star: bool) -> Formula {
    if budget < 3 || rng.gen_bool(0.25) {
        let k = rng.gen_range(0..atoms.len() + 1 + usize::from(star));
        return match k {
            k if k < atoms.len() => Formula::atom(atoms[k]),
            k if k == atoms.len() => Formula::Bot,
            _ => Formula::Star,
        };
    }
    let left = rng.gen_range(1..budget - 1);
    let a = random_formula(rng, left, atoms, star);
    let b = random_formula(rng, budget - 1 - a.weight(), atoms, star);
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::imp(a, b),
    }
}

fn worked_example(sequent: &str, expected_v: &[&str], expected: &str) -> Verdict {
    let start = Instant::now();
    let s = parse_classical_sequent(sequent).unwrap();
    let r = match translate_sequent(&s) {
        Ok(r) => r,
        Err(e) => return fail(format!("translation failed: {e}")),
    };
    let elapsed = start.elapsed();
    let want = parse_int_sequent(expected).unwrap();
    if r.v != vars(expected_v) {
        return fail(format!("V = {:?}", r.v));
    }
    if r.pure_proof.conclusion != want {
        return fail(format!("concludes {}", r.pure_proof.conclusion));
    }
    if !r.pure_proof.is_pure() {
        return fail("proof has structural nodes");
    }
    if let Err(e) = check_i(&r.pure_proof, false) {
        return fail(format!("check_i: {e}"));
    }
    if elapsed >= Duration::from_secs(1) {
        return fail(format!("took {elapsed:?}"));
    }
    pass(format!("V = {:?}, {} nodes, {elapsed:?}", r.v, r.pure_proof.size()))
}

/// Formula, vpos, vneg, vpos_ns.
type PolarityRow = (&'static str, &'static [&'static str], &'static [&'static str], &'static [&'static str]);

fn criterion_3() -> Verdict {
    // Worked out by hand.
    let table: &[PolarityRow] = &[
        ("p", &["p"], &[], &[]),
        ("bot", &[], &[], &[]),
        ("p & q", &["p", "q"], &[], &[]),
        ("p | ~p", &["p"], &["p"], &[]),
        ("p -> q", &["q"], &["p"], &[]),
        ("~p", &[], &["p"], &[]),
        ("~~p", &["p"], &[], &["p"]),
        ("~~p -> p", &["p"], &["p"], &[]),
        ("bot -> p", &["p"], &[], &[]),
        ("(p -> q) -> p", &["p"], &["q"], &["p"]),
        ("p -> q | r", &["q", "r"], &["p"], &[]),
        ("(p -> q) | (p -> r)", &["q", "r"], &["p"], &[]),
        ("((p -> q) -> p) -> p", &["p", "q"], &["p"], &["q"]),
        ("~~(p | ~p)", &["p"], &["p"], &["p"]),
        ("(q -> ~p) & r", &["r"], &["p", "q"], &[]),
    ];
    for (text, pos, neg, pos_ns) in table {
        let r = polarity(&f(text));
        if r.vpos != vars(pos) || r.vneg != vars(neg) || r.vpos_ns != vars(pos_ns) {
            return fail(format!("{text}: got {r:?}"));
        }
    }
    let empty = Multiset::new();
    let checks: &[(&str, &[&str])] = &[("~~p -> p", &["p"]), ("bot -> p", &[]), ("~~(p | ~p)", &["p"])];
    for (text, v) in checks {
        let got = em_set(&empty, &f(text));
        if got != vars(v) {
            return fail(format!("V(=> {text}) = {got:?}"));
        }
    }
    pass(format!("{} formulas", table.len()))
}

/// Criteria 4 and 5 share one pass over the enumeration.
fn criteria_4_and_5() -> (Verdict, Verdict) {
    let mut n = 0usize;
    let mut valid = 0usize;
    let mut disagree = Vec::new();
    let mut bad = Vec::new();
    let (mut t4, mut t5) = (Duration::ZERO, Duration::ZERO);
    for s in enumerate(&["p", "q"], 10).unwrap() {
        n += 1;
        let c = Instant::now();
        let out = search_c(&s);
        let agree = out.is_proof() == taut_oracle(&s);
        t4 += c.elapsed();
        if !agree {
            disagree.push(s.to_string());
        }
        let SearchOutcome::Proof(cp) = out else { continue };
        valid += 1;
        let c = Instant::now();
        if let Err(e) = translation_holds(&s, &cp) {
            bad.push(format!("{s}: {e}"));
        }
        t5 += c.elapsed();
    }
    let v4 = if disagree.is_empty() {
        pass(format!("{n} sequents, 0 disagreements, {t4:?}"))
    } else {
        fail(format!("{} disagreements, first {}", disagree.len(), disagree[0]))
    };
    let v5 = if bad.is_empty() && valid > 0 {
        pass(format!("{valid}/{valid} valid sequents, {t5:?}"))
    } else {
        fail(format!("{}/{valid} failed, first {}", bad.len(), bad.first().map_or("", String::as_str)))
    };
    (v4, v5)
}

fn translation_holds(s: &ClassicalSequent, cp: &decvar_core::g3cp::ClassicalProof) -> Result<(), String> {
    let a = s.succ.as_slice()[0].clone();
    let v = em_set(&s.ante, &a);
    let mut ante = s.ante.clone();
    for p in v.iter() {
        ante.insert(Formula::or(Formula::atom(p), Formula::not(Formula::atom(p))));
    }
    let target = IntSequent::new(ante, a);
    let r = translate_theorem(cp).map_err(|e| e.to_string())?;
    if r.proof.conclusion != target || r.pure_proof.conclusion != target {
        return Err("wrong conclusion".into());
    }
    check_i(&r.proof, true).map_err(|e| format!("extended: {e}"))?;
    check_i(&r.pure_proof, false).map_err(|e| format!("pure: {e}"))?;
    if !decide_i(&target) {
        return Err("decide_i rejects the target".into());
    }
    Ok(())
}

/// The schema built from its parameters, independently of the library.
fn schema(index: u8, params: &[Formula]) -> IntSequent {
    let x = || params[0].clone();
    let y = || params[1].clone();
    let one = |a: Formula, c: Formula| IntSequent::new(vec![a], c);
    match index {
        1 => {
            let mut ante: Multiset = params[1..].to_vec().into();
            ante.insert(Formula::or(x(), Formula::imp(x(), Formula::Bot)));
            ante.insert(nsn(x()));
            ante.insert(ns(x()));
            IntSequent::new(ante, Formula::Star)
        }
        2 => {
            let mut ante: Multiset = params.to_vec().into();
            ante.insert(nsn(Formula::Bot));
            IntSequent::new(ante, Formula::Star)
        }
        3 => one(nsn(Formula::and(x(), y())), Formula::and(nsn(x()), nsn(y()))),
        4 => one(Formula::and(nn(x()), nn(y())), nn(Formula::and(x(), y()))),
        5 => one(nsn(Formula::or(x(), y())), nn(Formula::or(nsn(x()), nsn(y())))),
        6 => one(ns(Formula::and(ns(x()), ns(y()))), nn(Formula::or(x(), y()))),
        7 => one(nsn(Formula::imp(x(), y())), Formula::imp(nn(x()), nsn(y()))),
        8 => one(Formula::imp(x(), y()), Formula::imp(nn(x()), nn(y()))),
        9 => one(Formula::imp(nsn(x()), nn(y())), nn(Formula::imp(x(), y()))),
        _ => unreachable!(),
    }
}

fn criterion_6(rng: &mut StdRng) -> Verdict {
    let atoms = ["p", "q", "r"];
    let mut passed = 0;
    for index in 1..=9u8 {
        for _ in 0..100 {
            let params: Vec<Formula> = match index {
                1 => {
                    let mut v = vec![Formula::atom(atoms.choose(rng).unwrap())];
                    for _ in 0..rng.gen_range(0..3) {
                        v.push(random_formula(rng, 8, &atoms, true));
                    }
                    v
                }
                2 => (0..rng.gen_range(0..3)).map(|_| random_formula(rng, 8, &atoms, true)).collect(),
                _ => (0..2).map(|_| random_formula(rng, 8, &atoms, true)).collect(),
            };
            let want = schema(index, &params);
            let id = LemmaId::from_params(index, params).unwrap();
            let p = build_lemma(&id);
            if p.conclusion != want {
                return fail(format!("lemma {index}: concludes {} not {want}", p.conclusion));
            }
            if let Err(e) = check_i(&p, true) {
                return fail(format!("lemma {index} {want}: {e}"));
            }
            if let Err(e) = check_i(&eliminate_structural(&p), false) {
                return fail(format!("lemma {index} {want}, pure: {e}"));
            }
            if !taut_oracle(&want.to_classical()) {
                return fail(format!("lemma {index} {want}: not a tautology"));
            }
            passed += 1;
        }
    }
    pass(format!("{passed}/900"))
}

/// A checked proof whose conclusion contains `*`.
fn random_star_proof(rng: &mut StdRng) -> IntProof {
    let atoms = ["p", "q"];
    loop {
        match rng.gen_range(0..3) {
            0 => {
                let g: Vec<Formula> = (0..rng.gen_range(0..3)).map(|_| random_formula(rng, 6, &atoms, true)).collect();
                let s = IntSequent::new(g, random_formula(rng, 6, &atoms, true));
                if !s.to_classical().contains_star() {
                    continue;
                }
                if let Some(p) = search_i(&s) {
                    return p;
                }
            }
            1 => {
                let index = rng.gen_range(3..=9);
                let params = (0..2).map(|_| random_formula(rng, 5, &atoms, true)).collect();
                return build_lemma(&LemmaId::from_params(index, params).unwrap());
            }
            _ => {
                let g: Vec<Formula> = (0..rng.gen_range(0..3)).map(|_| random_formula(rng, 5, &atoms, false)).collect();
                let s = ClassicalSequent::new(g, vec![random_formula(rng, 5, &atoms, false)]);
                let Some(cp) = search_c(&s).proof() else { continue };
                let tag = if rng.gen_bool(0.5) { PartitionTag::GammaPart } else { PartitionTag::DeltaPart };
                let part = Partition::uniform(&s.ante, tag);
                let mut v = VarSet::new();
                v.insert("p");
                v.insert("q");
                return translate_prop(&cp, &part, &v).unwrap();
            }
        }
    }
}

fn criterion_7(rng: &mut StdRng) -> Verdict {
    let mut passed = 0;
    while passed < 200 {
        let p = random_star_proof(rng);
        if !p.contains_star() || check_i(&p, true).is_err() {
            return fail(format!("generator produced a bad proof of {}", p.conclusion));
        }
        let c = random_formula(rng, 6, &["p", "q", "r"], false);
        let q = subst_star_proof(&p, &c);
        if q.conclusion != p.conclusion.subst_star(&c) {
            return fail(format!("{} [{c}/*] gave {}", p.conclusion, q.conclusion));
        }
        if let Err(e) = check_i(&q, true) {
            return fail(format!("{} [{c}/*]: {e}", p.conclusion));
        }
        if p.is_pure() && !q.is_pure() {
            return fail("substitution introduced structural nodes");
        }
        passed += 1;
    }
    pass(format!("{passed}/200"))
}

fn provable(ante: Vec<Formula>, succ: Formula) -> Option<IntProof> {
    search_i(&IntSequent::new(ante, succ))
}

/// Cuts, weakenings and contractions stacked over search results.
fn random_composition(rng: &mut StdRng) -> IntProof {
    let atoms = ["p", "q"];
    loop {
        let a = random_formula(rng, 5, &atoms, false);
        let gamma: Vec<Formula> = (0..rng.gen_range(0..2)).map(|_| random_formula(rng, 4, &atoms, false)).collect();
        let Some(left) = provable(gamma, a.clone()) else { continue };
        let mut rest: Vec<Formula> = vec![a.clone()];
        if rng.gen_bool(0.5) {
            rest.push(a.clone());
        }
        rest.extend((0..rng.gen_range(0..2)).map(|_| random_formula(rng, 4, &atoms, false)));
        let c = random_formula(rng, 5, &atoms, false);
        let Some(right) = provable(rest, c) else { continue };
        let mut p = cut(left, right, &a).unwrap();
        for _ in 0..rng.gen_range(0..3) {
            match rng.gen_range(0..3) {
                0 => p = lw(p, &vec![random_formula(rng, 4, &atoms, false)].into()),
                1 => {
                    let dup = p.ante().as_slice().choose(rng).cloned();
                    if let Some(d) = dup {
                        p = lc(lw(p, &vec![d.clone()].into()), &d).unwrap();
                    }
                }
                _ => {
                    let b = p.succ().clone();
                    let Some(more) = provable(vec![b.clone()], Formula::or(b.clone(), Formula::Bot)) else { continue };
                    p = cut(p, more, &b).unwrap();
                }
            }
        }
        return p;
    }
}

fn criterion_8(rng: &mut StdRng) -> Verdict {
    let atoms = ["p", "q"];
    let mut passed = 0;
    let mut from_translator = 0;
    while passed < 200 {
        let p = if passed % 2 == 0 {
            let g: Vec<Formula> = (0..rng.gen_range(0..3)).map(|_| random_formula(rng, 5, &atoms, false)).collect();
            let s = ClassicalSequent::new(g, vec![random_formula(rng, 5, &atoms, false)]);
            let Some(cp) = search_c(&s).proof() else { continue };
            from_translator += 1;
            translate_theorem(&cp).unwrap().proof
        } else {
            random_composition(rng)
        };
        if let Err(e) = check_i(&p, true) {
            return fail(format!("generator produced a bad proof of {}: {e}", p.conclusion));
        }
        let q = eliminate_structural(&p);
        if q.conclusion != p.conclusion {
            return fail(format!("{} became {}", p.conclusion, q.conclusion));
        }
        if !q.is_pure() {
            return fail(format!("{}: structural nodes remain", p.conclusion));
        }
        if let Err(e) = check_i(&q, false) {
            return fail(format!("{}: {e}", p.conclusion));
        }
        passed += 1;
    }
    pass(format!("{passed}/200 ({from_translator} from the translator)"))
}

fn criterion_9() -> Verdict {
    let empty = Multiset::new();
    match corollary_check(&empty, &f("bot -> p")) {
        CorollaryOutcome::Proof(p) => {
            if p.conclusion != parse_int_sequent("=> bot -> p").unwrap() || !p.is_pure() {
                return fail(format!("proof of {}", p.conclusion));
            }
            if let Err(e) = check_i(&p, false) {
                return fail(format!("bot -> p: {e}"));
            }
        }
        CorollaryOutcome::NotApplicable(r) => return fail(format!("bot -> p: {r}")),
    }
    for text in ["p | ~p", "~~(p | ~p)"] {
        match corollary_check(&empty, &f(text)) {
            CorollaryOutcome::NotApplicable(r) if r.reason() == "V nonempty" => {}
            CorollaryOutcome::NotApplicable(r) => return fail(format!("{text}: {r}")),
            CorollaryOutcome::Proof(_) => return fail(format!("{text}: got a proof")),
        }
    }
    if !decide_i(&parse_int_sequent("=> ~~(p | ~p)").unwrap()) {
        return fail("=> ~~(p | ~p) should be intuitionistically valid");
    }
    pass("bot -> p proved; p | ~p and ~~(p | ~p) not applicable")
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let mut verdicts: Vec<(u8, Verdict)> = vec![
        (1, worked_example("(p->q)->p => p", &["p"], "p | ~p, (p->q)->p => p")),
        (
            2,
            worked_example(
                "p -> q | r => (p -> q) | (p -> r)",
                &["p"],
                "p | ~p, p -> q | r => (p -> q) | (p -> r)",
            ),
        ),
        (3, criterion_3()),
    ];
    let (v4, v5) = criteria_4_and_5();
    verdicts.push((4, v4));
    verdicts.push((5, v5));
    verdicts.push((6, criterion_6(&mut rng)));
    verdicts.push((7, criterion_7(&mut rng)));
    verdicts.push((8, criterion_8(&mut rng)));
    verdicts.push((9, criterion_9()));

    let mut all = true;
    for (i, v) in &verdicts {
        println!("criterion {i}: {} ({})", if v.ok { "PASS" } else { "FAIL" }, v.detail);
        all &= v.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
