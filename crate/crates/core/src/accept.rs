//! The end-to-end acceptance suite.
//!
//! Each criterion returns an [`Outcome`] holding its verdict and a list of
//! `key<TAB>value` records. Records never contain timings, so two runs with
//! the same seed render identical bodies; elapsed time is kept separately.

use std::time::{Duration, Instant};

use crate::check::{CheckResult, Mode};
use crate::equations::alias;
use crate::freeoml::{
    anchor_suite, apply_binary, canonical_term, closure, diff_table, errata, product_table,
    FreeElem, TABLE_1,
};
use crate::hilbert::check_equation_random;
use crate::model::{
    builtin, check_equation, foulis_holland_check, iff_characterization, theta_relation,
    woml20_profile, ElemId, Model,
};
use crate::report::Report;
use crate::term::{ConnIndex, Equation, Term};

pub const DEFAULT_SEED: u64 = 20;
pub const SUBSPACE_TRIALS: u64 = 1000;

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "beran anchors and errata"),
    (2, "product table"),
    (3, "complement symmetry"),
    (4, "equivalence parity closure"),
    (5, "iff characterizations"),
    (6, "orthomodular identities"),
    (7, "woml20 profile"),
    (8, "lemma properties"),
    (9, "theta congruences"),
];

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub records: Report,
    pub elapsed: Duration,
}

/// Collects sub-checks of one criterion.
struct Run {
    passed: bool,
    records: Report,
}

impl Run {
    fn new() -> Run {
        Run {
            passed: true,
            records: Report::new(),
        }
    }

    fn check(&mut self, key: impl std::fmt::Display, ok: bool, detail: impl std::fmt::Display) {
        self.passed &= ok;
        let verdict = if ok { "pass" } else { "FAIL" };
        let detail = detail.to_string();
        if detail.is_empty() {
            self.records.push(key, verdict);
        } else {
            self.records.push(key, format!("{verdict} {detail}"));
        }
    }

    /// Runs `f` and fails the sub-check if it exceeds `limit`.
    fn timed(&mut self, key: &str, limit: Duration, f: impl FnOnce(&mut Run)) {
        let start = Instant::now();
        f(self);
        if start.elapsed() > limit {
            self.passed = false;
            self.records
                .push(format!("{key}.limit"), format!("FAIL exceeded {} s", limit.as_secs()));
        }
    }
}

fn ix(i: u8) -> ConnIndex {
    ConnIndex::new(i).expect("index in 0..=5")
}

fn model(name: &str) -> Model {
    builtin(name).expect("built-in model")
}

fn eq(name: &str) -> Equation {
    alias(name).expect("built-in alias")
}

fn witness(m: &Model, r: &CheckResult<ElemId>) -> String {
    r.witness
        .as_ref()
        .map(|w| w.map(|&e| m.name_of(e).to_string()).to_string())
        .unwrap_or_default()
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn anchors(run: &mut Run) {
    run.timed("anchors", secs(1), |run| {
        for a in anchor_suite() {
            let got = a.computed();
            let shown: Vec<String> = got.iter().map(u8::to_string).collect();
            run.check(format!("anchor.{}", a.label), a.holds(), shown.join(","));
        }
        let list = errata();
        for id in ["equivalence-5-formula", "delta-value", "complement-order"] {
            run.check(format!("erratum.{id}"), list.iter().any(|e| e.id == id), "");
        }
        for e in &list {
            run.records
                .push(format!("errata.{}", e.id), format!("published {}; computed {}", e.published, e.computed));
        }
    });
}

fn table(run: &mut Run) {
    run.timed("table", secs(1), |run| {
        let computed = product_table();
        let diff = diff_table(&computed, &TABLE_1);
        for (i, row) in computed.iter().enumerate() {
            let row: Vec<String> = row.iter().map(u8::to_string).collect();
            run.records.push(format!("row.{i}"), row.join(" "));
        }
        run.check("mismatches", diff.is_empty(), diff.len());
    });
}

fn complement_symmetry(run: &mut Run) {
    let mut bad = Vec::new();
    for n in 1..=96usize {
        let t = canonical_term(n).expect("n in range");
        let value = |t: &Term| {
            apply_binary(t, FreeElem::A, FreeElem::B)
                .map(|e| usize::from(e.beran()))
                .unwrap_or(0)
        };
        if value(&t) != n || value(&Term::complement(t)) != 97 - n {
            bad.push(n);
        }
    }
    run.check("elements", bad.is_empty(), format!("{} of 96 violate", bad.len()));
}

fn parity(run: &mut Run) {
    let (a, b) = (FreeElem::A, FreeElem::B);
    let seeds = [a, b, a.complement(), b.complement(), FreeElem::ZERO, FreeElem::ONE];
    let ops: Vec<Term> = ConnIndex::ALL
        .iter()
        .map(|&i| Term::equiv(i, Term::var("a"), Term::var("b")))
        .collect();
    let reached = closure(&seeds, &ops).expect("ops use a, b");
    let odd: Vec<usize> = FreeElem::all()
        .filter(|e| !e.boolean.is_even())
        .map(|e| usize::from(e.beran()))
        .collect();
    let hits = reached
        .iter()
        .filter(|e| odd.contains(&usize::from(e.beran())))
        .count();
    run.check(
        "equivalence-closure",
        odd.len() == 48 && hits == 0,
        format!("{} reached, {} of {} odd", reached.len(), hits, odd.len()),
    );

    let lattice_ops = [Term::parse("a ^ b").unwrap(), Term::parse("a v b").unwrap()];
    let full = closure(&seeds[..4], &lattice_ops).expect("ops use a, b");
    run.check("lattice-closure", full.len() == 96, format!("{} reached", full.len()));
}

fn iff(run: &mut Run) {
    let free2 = model("free2");
    for i in 1..=5 {
        let r = iff_characterization(&free2, ix(i));
        run.check(format!("free2.{i}"), r.is_holds(), witness(&free2, &r));
    }
    let b4 = model("boolean_4");
    let r = iff_characterization(&b4, ix(0));
    run.check("boolean_4.0", r.is_holds(), witness(&b4, &r));

    let mo2 = model("mo2");
    let r = iff_characterization(&mo2, ix(0));
    run.check("mo2.0", !r.is_holds(), format!("witness {}", witness(&mo2, &r)));

    let o6 = model("o6");
    let failing: Vec<String> = (1..=5)
        .filter_map(|i| {
            let r = iff_characterization(&o6, ix(i));
            (!r.is_holds()).then(|| format!("{i}: {}", witness(&o6, &r)))
        })
        .collect();
    run.check("o6", !failing.is_empty(), format!("fails for {}", failing.join("; ")));
}

fn identities(run: &mut Run, seed: u64) {
    let names = ["EQ1", "EQ2", "EQ3", "EQ4", "EQ5", "EQ6"];
    let mo2 = model("mo2");
    run.timed("mo2", secs(1), |run| {
        for name in names {
            let r = check_equation(&mo2, &eq(name), Mode::Exhaustive);
            run.check(format!("mo2.{name}"), r.is_holds(), r.assignments_checked);
        }
    });

    let free2 = model("free2");
    let (small, large): (Vec<&str>, Vec<&str>) =
        names.iter().partition(|n| eq(n).variables().len() <= 3);
    run.timed("free2.3var", secs(10), |run| {
        for name in &small {
            let r = check_equation(&free2, &eq(name), Mode::Exhaustive);
            run.check(format!("free2.{name}"), r.is_holds(), r.assignments_checked);
        }
    });
    for name in &large {
        run.timed(&format!("free2.{name}"), secs(120), |run| {
            let r = check_equation(&free2, &eq(name), Mode::Exhaustive);
            run.check(format!("free2.{name}"), r.is_holds(), r.assignments_checked);
        });
    }

    run.timed("subspace", secs(60), |run| {
        for dim in [3, 4] {
            for name in names {
                let r = check_equation_random(dim, &eq(name), SUBSPACE_TRIALS, seed);
                let detail = match &r.witness {
                    Some(w) => format!("trial {} {}", r.assignments_checked, w),
                    None => format!("{} trials", r.assignments_checked),
                };
                run.check(format!("subspace.{dim}.{name}"), r.is_holds(), detail);
            }
        }
    });
}

fn woml20(run: &mut Run) {
    let m = model("woml20");
    run.timed("profile", secs(1), |run| {
        for gate in woml20_profile(&m) {
            run.check(format!("gate.{}", gate.name), gate.passed, gate.detail);
        }
    });
}

fn lemmas(run: &mut Run) {
    let free2 = model("free2");
    let transitive = Equation::parse("(a == b) ^ (b == c) <= a == c").unwrap();
    let r = check_equation(&free2, &transitive, Mode::Exhaustive);
    run.check("transitivity.free2", r.is_holds(), r.assignments_checked);

    for name in ["free2", "o6"] {
        let m = model(name);
        let r = foulis_holland_check(&m);
        run.check(
            format!("foulis-holland.{name}"),
            r.is_holds(),
            format!("{} triples {}", r.assignments_checked, witness(&m, &r)).trim_end().to_string(),
        );
    }

    for i in 0..=5 {
        let law = Equation::parse(&format!("a =={i} 0 = a'")).unwrap();
        let r = check_equation(&free2, &law, Mode::Exhaustive);
        run.check(format!("zero-equivalence.{i}"), r.is_holds(), witness(&free2, &r));
    }
}

fn congruences(run: &mut Run) {
    for name in ["o6", "woml20"] {
        let m = model(name);
        for i in ConnIndex::ALL {
            let t = theta_relation(&m, i);
            run.check(
                format!("{name}.{}", i.get()),
                t.is_congruence(),
                format!("{} pairs", t.pairs.len()),
            );
        }
    }
    for (name, indices) in [("free2", 1..=5u8), ("boolean_4", 0..=0)] {
        let m = model(name);
        for i in indices {
            let t = theta_relation(&m, ix(i));
            run.check(format!("{name}.{i}.identity"), t.is_identity(), format!("{} pairs", t.pairs.len()));
        }
    }
}

/// Runs criterion `id` (1 to 9); `seed` drives the subspace trials.
pub fn run_criterion(id: u8, seed: u64) -> Option<Outcome> {
    let title = CRITERIA.iter().find(|(i, _)| *i == id)?.1;
    let start = Instant::now();
    let mut run = Run::new();
    match id {
        1 => anchors(&mut run),
        2 => table(&mut run),
        3 => complement_symmetry(&mut run),
        4 => parity(&mut run),
        5 => iff(&mut run),
        6 => identities(&mut run, seed),
        7 => woml20(&mut run),
        8 => lemmas(&mut run),
        9 => congruences(&mut run),
        _ => return None,
    }
    Some(Outcome {
        id,
        title,
        passed: run.passed,
        records: run.records,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(seed: u64) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .filter_map(|&(id, _)| run_criterion(id, seed))
        .collect()
}
